//! Exact crossing predicate and crossing-pair counting.
//!
//! Two vertex-disjoint simplices cross when their relative interiors share
//! a point. With the supporting vertex sets affinely independent (which
//! general position guarantees for sets of at most d+1 points in R^d), a
//! relative-interior point is a convex combination with all coefficients
//! strictly positive, so the predicate is one exact LP: maximize a slack t
//! with every barycentric coefficient at least t; the simplices cross
//! exactly when the optimum is positive. An optimum of zero means the
//! closures touch but the relative interiors stay disjoint, which does not
//! count as crossing.

use crate::configs::{is_general_position, next_combination, PointConfig};
use crate::error::{Error, Result};
use crate::exact::{lp_max_slack, LpOutcome, LpProblem, Matrix, Rational};
use num::{One, Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Unordered pair of disjoint vertex-index sets, stored sorted with the
/// minimum index in the left set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Bipartition {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Bipartition {
    pub fn new(left: Vec<usize>, right: Vec<usize>) -> Result<Self> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::Contract("bipartition sides must be nonempty".into()));
        }
        let mut left = left;
        let mut right = right;
        left.sort_unstable();
        right.sort_unstable();
        if left.windows(2).any(|w| w[0] == w[1])
            || right.windows(2).any(|w| w[0] == w[1])
            || left.iter().any(|i| right.binary_search(i).is_ok())
        {
            return Err(Error::NotDisjoint);
        }
        if right[0] < left[0] {
            std::mem::swap(&mut left, &mut right);
        }
        Ok(Self { left, right })
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn total_len(&self) -> usize {
        self.left.len() + self.right.len()
    }
}

impl Serialize for Bipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let one_based = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
        let mut st = serializer.serialize_struct("Bipartition", 2)?;
        st.serialize_field("left", &one_based(&self.left))?;
        st.serialize_field("right", &one_based(&self.right))?;
        st.end()
    }
}

/// Counting result for one configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingReport {
    pub dim: usize,
    pub n: usize,
    pub hyperedge_size: usize,
    pub total_pairs: usize,
    pub crossing_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Bipartition>>,
}

impl CrossingReport {
    /// Witness CSV, one bipartition per row, 1-based indices.
    pub fn witnesses_csv(&self) -> String {
        let mut out = String::from("left,right\n");
        if let Some(ws) = &self.witnesses {
            for b in ws {
                let fmt = |v: &[usize]| {
                    v.iter()
                        .map(|i| (i + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                out.push_str(&format!("{},{}\n", fmt(b.left()), fmt(b.right())));
            }
        }
        out
    }
}

/// General position of an explicit point list: affine independence when
/// there are at most d+1 points, otherwise every (d+1)-subset must be
/// affinely independent.
fn points_in_general_position(points: &[&[Rational]], dim: usize) -> Result<bool> {
    let s = points.len();
    let lift = |idx: &[usize]| -> Matrix {
        let mut m = Matrix::zeros(dim + 1, idx.len());
        for (col, &i) in idx.iter().enumerate() {
            for (row, x) in points[i].iter().enumerate() {
                m[(row, col)] = x.clone();
            }
            m[(dim, col)] = Rational::one();
        }
        m
    };
    if s <= dim + 1 {
        let all: Vec<usize> = (0..s).collect();
        return Ok(lift(&all).rank() == s);
    }
    let mut subset: Vec<usize> = (0..=dim).collect();
    loop {
        if lift(&subset).det()?.is_zero() {
            return Ok(false);
        }
        if !next_combination(&mut subset, s) {
            return Ok(true);
        }
    }
}

fn validate_bipartition(c: &PointConfig, b: &Bipartition) -> Result<()> {
    let d = c.dim();
    for &i in b.left().iter().chain(b.right()) {
        if i >= c.len() {
            return Err(Error::Contract(format!(
                "vertex index {} out of range (n = {})",
                i + 1,
                c.len()
            )));
        }
    }
    // a side with s vertices spans an (s-1)-simplex; affine independence
    // caps s at d+1
    if b.left().len() > d + 1 || b.right().len() > d + 1 {
        return Err(Error::Contract(format!(
            "simplex sides must have at most d+1 = {} vertices",
            d + 1
        )));
    }
    let support: Vec<&[Rational]> = b
        .left()
        .iter()
        .chain(b.right())
        .map(|&i| c.point(i))
        .collect();
    if !points_in_general_position(&support, d)? {
        return Err(Error::Degenerate(
            "supporting vertices are not in general position".into(),
        ));
    }
    Ok(())
}

/// Do the simplices spanned by the two index sets cross (share a point of
/// their relative interiors)? Exact; validates the support first.
pub fn simplices_cross(c: &PointConfig, b: &Bipartition) -> Result<bool> {
    validate_bipartition(c, b)?;
    simplices_cross_unchecked(c, b)
}

/// The slack LP, without support validation. Callers must have validated
/// general position of the support (or of the whole configuration).
fn simplices_cross_unchecked(c: &PointConfig, b: &Bipartition) -> Result<bool> {
    let d = c.dim();
    let nu = b.left().len();
    let nv = b.right().len();
    // variables: t, then one surplus per left vertex, one per right vertex;
    // the barycentric coefficients are t + surplus
    let ncols = 1 + nu + nv;
    let mut a = Matrix::zeros(d + 2, ncols);
    let mut rhs = vec![Rational::zero(); d + 2];
    for r in 0..d {
        let mut t_coeff = Rational::zero();
        for (col, &i) in b.left().iter().enumerate() {
            let x = &c.point(i)[r];
            t_coeff += x;
            a[(r, 1 + col)] = x.clone();
        }
        for (col, &j) in b.right().iter().enumerate() {
            let x = &c.point(j)[r];
            t_coeff -= x;
            a[(r, 1 + nu + col)] = -x.clone();
        }
        a[(r, 0)] = t_coeff;
    }
    a[(d, 0)] = Rational::from_integer(nu.into());
    for col in 0..nu {
        a[(d, 1 + col)] = Rational::one();
    }
    rhs[d] = Rational::one();
    a[(d + 1, 0)] = Rational::from_integer(nv.into());
    for col in 0..nv {
        a[(d + 1, 1 + nu + col)] = Rational::one();
    }
    rhs[d + 1] = Rational::one();

    let problem = LpProblem {
        constraints: a,
        rhs,
        objective_var: 0,
    };
    match lp_max_slack(&problem)? {
        LpOutcome::Optimal { optimum, .. } => Ok(optimum.is_positive()),
        LpOutcome::Infeasible => Ok(false),
        // t is at most 1/|left| because the left coefficients sum to one
        LpOutcome::Unbounded => unreachable!("slack objective is bounded"),
    }
}

/// Every unordered pair of disjoint `hyperedge_size`-subsets of the vertex
/// indices, in lexicographic order of the canonical form.
fn enumerate_bipartitions(n: usize, size: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    let mut union: Vec<usize> = (0..2 * size).collect();
    loop {
        // canonical split: the union's minimum stays left
        let rest: Vec<usize> = union[1..].to_vec();
        let mut pick: Vec<usize> = (0..size - 1).collect();
        loop {
            let mut left = vec![union[0]];
            left.extend(pick.iter().map(|&i| rest[i]));
            let right: Vec<usize> = rest
                .iter()
                .enumerate()
                .filter(|(i, _)| !pick.contains(i))
                .map(|(_, &v)| v)
                .collect();
            out.push(Bipartition { left, right });
            if size < 2 || !next_combination(&mut pick, rest.len()) {
                break;
            }
        }
        if !next_combination(&mut union, n) {
            break;
        }
    }
    out
}

/// Counts crossing pairs of hyperedges over all unordered pairs of
/// disjoint `hyperedge_size`-subsets. Requires the configuration to be in
/// validated general position and n >= 2 * hyperedge_size. The bipartition
/// set is evaluated in parallel; the report does not depend on the worker
/// count.
pub fn count_crossing_pairs(
    c: &PointConfig,
    hyperedge_size: usize,
    collect_witnesses: bool,
) -> Result<CrossingReport> {
    let d = c.dim();
    let n = c.len();
    if hyperedge_size == 0 || hyperedge_size > d {
        return Err(Error::Contract(format!(
            "hyperedge size must be in 1..={d}, got {hyperedge_size}"
        )));
    }
    if n < 2 * hyperedge_size {
        return Err(Error::TooFewPoints {
            n,
            need: 2 * hyperedge_size,
        });
    }
    if !is_general_position(c)? {
        return Err(Error::NotGeneralPosition);
    }
    let pairs = enumerate_bipartitions(n, hyperedge_size);
    let flags: Vec<bool> = pairs
        .par_iter()
        .map(|b| simplices_cross_unchecked(c, b))
        .collect::<Result<Vec<bool>>>()?;
    let crossing_count = flags.iter().filter(|&&f| f).count();
    let witnesses = collect_witnesses.then(|| {
        let mut ws: Vec<Bipartition> = pairs
            .iter()
            .zip(&flags)
            .filter(|(_, &f)| f)
            .map(|(b, _)| b.clone())
            .collect();
        ws.sort();
        ws
    });
    Ok(CrossingReport {
        dim: d,
        n,
        hyperedge_size,
        total_pairs: pairs.len(),
        crossing_count,
        witnesses,
    })
}

/// Extends a crossing pair of sub-simplices to full disjoint d-sets in
/// every possible way using the remaining vertices. With the seed pair
/// crossing and at least d+1 general-position vertices involved, every
/// extension is a crossing pair again, so the results are returned
/// without re-running the predicate.
pub fn extension_crossings(c: &PointConfig, b: &Bipartition) -> Result<Vec<Bipartition>> {
    let d = c.dim();
    let n = c.len();
    if n < 2 * d {
        return Err(Error::TooFewPoints { n, need: 2 * d });
    }
    if b.left().len() < 2 || b.right().len() < 2 {
        return Err(Error::Contract(
            "extension requires at least 2 vertices per side".into(),
        ));
    }
    if b.total_len() < d + 1 {
        return Err(Error::Contract(format!(
            "extension requires at least d+1 = {} vertices in total",
            d + 1
        )));
    }
    if b.left().len() > d || b.right().len() > d {
        return Err(Error::Contract(format!(
            "sides must have at most d = {d} vertices"
        )));
    }
    if !simplices_cross(c, b)? {
        return Err(Error::Contract(
            "extension requires a crossing pair as seed".into(),
        ));
    }
    let used: Vec<usize> = b.left().iter().chain(b.right()).copied().collect();
    let remaining: Vec<usize> = (0..n).filter(|i| !used.contains(i)).collect();
    let need_left = d - b.left().len();
    let need_right = d - b.right().len();

    let mut out = Vec::new();
    for left_extra in combinations(&remaining, need_left) {
        let rest: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|i| !left_extra.contains(i))
            .collect();
        for right_extra in combinations(&rest, need_right) {
            let mut left = b.left().to_vec();
            left.extend(&left_extra);
            let mut right = b.right().to_vec();
            right.extend(&right_extra);
            out.push(Bipartition::new(left, right)?);
        }
    }
    out.sort();
    Ok(out)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > items.len() {
        return Vec::new();
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        if !next_combination(&mut idx, items.len()) {
            return out;
        }
    }
}
