//! Linear separations of planar vector sequences by a rotating line.
//!
//! A line through the origin splits a sequence of plane vectors into the
//! two open half-planes on either side. Sweeping the line through a half
//! turn visits every such split: the critical directions are the vector
//! directions themselves (mod pi), and between two consecutive critical
//! directions the split is constant. No angles are ever evaluated as
//! reals; the sweep sorts by quadrant and exact cross products, and each
//! visited line gets a rational direction vector strictly inside its gap
//! (the sum of the two adjacent normalized vectors).
//!
//! For m pairwise non-collinear vectors that do not fit in a closed
//! half-plane (Gale diagrams always qualify: their vectors sum to zero),
//! the sweep yields exactly m distinct separations, and consecutive sweep
//! entries differ in exactly one vector changing sides.

use crate::error::{Error, Result};
use crate::exact::{sign, Rational};
use crate::gale::GaleDiagram;
use num::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// An unordered split of vector indices by a line through the origin.
///
/// The positive side holds the indices with `cross(direction, v) > 0`.
/// Both sides are nonempty and sorted; indices are 0-based internally and
/// 1-based on the JSON wire.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    positive_side: Vec<usize>,
    negative_side: Vec<usize>,
    boundary_direction: [Rational; 2],
}

impl Separation {
    pub fn positive_side(&self) -> &[usize] {
        &self.positive_side
    }

    pub fn negative_side(&self) -> &[usize] {
        &self.negative_side
    }

    pub fn boundary_direction(&self) -> &[Rational; 2] {
        &self.boundary_direction
    }

    pub fn min_side_size(&self) -> usize {
        self.positive_side.len().min(self.negative_side.len())
    }

    /// Proper means the sides have sizes ceil(m/2) and floor(m/2).
    pub fn is_proper(&self) -> bool {
        let m = self.positive_side.len() + self.negative_side.len();
        self.min_side_size() == m / 2
    }

    /// Unordered comparison against an index split.
    pub fn matches_split(&self, a: &[usize], b: &[usize]) -> bool {
        (self.positive_side == a && self.negative_side == b)
            || (self.positive_side == b && self.negative_side == a)
    }
}

impl Serialize for Separation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let one_based = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
        let mut st = serializer.serialize_struct("Separation", 3)?;
        st.serialize_field("positive_side", &one_based(&self.positive_side))?;
        st.serialize_field("negative_side", &one_based(&self.negative_side))?;
        st.serialize_field(
            "boundary_direction",
            &[
                crate::exact::format_rational(&self.boundary_direction[0]),
                crate::exact::format_rational(&self.boundary_direction[1]),
            ],
        )?;
        st.end()
    }
}

fn cross(a: &[Rational], b: &[Rational]) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Normalizes v into the upper half-plane (angle in [0, pi)).
fn half_turn_rep(v: &[Rational]) -> [Rational; 2] {
    let ys = sign(&v[1]);
    let flip = ys < 0 || (ys == 0 && sign(&v[0]) < 0);
    if flip {
        [-v[0].clone(), -v[1].clone()]
    } else {
        [v[0].clone(), v[1].clone()]
    }
}

struct Sweep {
    /// Vector indices sorted by direction mod pi.
    order: Vec<usize>,
    /// Upper-half-plane representative per vector (unsorted, by index).
    reps: Vec<[Rational; 2]>,
}

fn prepare_sweep(g: &GaleDiagram) -> Result<Sweep> {
    if g.k() != 2 {
        return Err(Error::Contract(format!(
            "separation sweep requires a planar diagram (k = 2), got k = {}",
            g.k()
        )));
    }
    let m = g.len();
    if m < 2 {
        return Err(Error::TooFewPoints { n: m, need: 2 });
    }
    for (i, v) in g.vectors().iter().enumerate() {
        if v[0].is_zero() && v[1].is_zero() {
            return Err(Error::Degenerate(format!("vector {} is zero", i + 1)));
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            if cross(g.vector(i), g.vector(j)).is_zero() {
                return Err(Error::Degenerate(format!(
                    "vectors {} and {} are collinear",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let reps: Vec<[Rational; 2]> = g.vectors().iter().map(|v| half_turn_rep(v)).collect();
    let mut order: Vec<usize> = (0..m).collect();
    // all representatives lie in [0, pi), so one cross product orders them
    order.sort_by(|&a, &b| {
        let c = cross(&reps[a], &reps[b]);
        if c.is_zero() {
            unreachable!("collinear representatives survived the degeneracy check");
        } else if sign(&c) > 0 {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    Ok(Sweep { order, reps })
}

/// The line direction strictly inside sweep gap `idx` (between sorted
/// vectors idx and idx+1, wrapping past pi at the end).
fn gap_direction(sweep: &Sweep, idx: usize) -> [Rational; 2] {
    let m = sweep.order.len();
    let a = &sweep.reps[sweep.order[idx]];
    if idx + 1 < m {
        let b = &sweep.reps[sweep.order[idx + 1]];
        [&a[0] + &b[0], &a[1] + &b[1]]
    } else {
        let b = &sweep.reps[sweep.order[0]];
        [&a[0] - &b[0], &a[1] - &b[1]]
    }
}

fn partition_at(g: &GaleDiagram, dir: &[Rational; 2]) -> (Vec<usize>, Vec<usize>) {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (i, v) in g.vectors().iter().enumerate() {
        match sign(&cross(dir, v)) {
            1 => pos.push(i),
            -1 => neg.push(i),
            _ => unreachable!("gap direction is collinear with an input vector"),
        }
    }
    (pos, neg)
}

/// All distinct separations induced by lines through the origin, in sweep
/// order. Sweep positions whose partition has an empty side (possible only
/// when all vectors fit in a closed half-plane) are not separations and
/// are skipped.
pub fn enumerate_separations(g: &GaleDiagram) -> Result<Vec<Separation>> {
    let sweep = prepare_sweep(g)?;
    let mut out = Vec::with_capacity(g.len());
    for idx in 0..sweep.order.len() {
        let dir = gap_direction(&sweep, idx);
        let (pos, neg) = partition_at(g, &dir);
        if pos.is_empty() || neg.is_empty() {
            continue;
        }
        out.push(Separation {
            positive_side: pos,
            negative_side: neg,
            boundary_direction: dir,
        });
    }
    Ok(out)
}

/// Number of separations with balanced side sizes.
pub fn count_proper_separations(g: &GaleDiagram) -> Result<usize> {
    Ok(enumerate_separations(g)?
        .iter()
        .filter(|s| s.is_proper())
        .count())
}

/// The full cyclic sequence of partitions visited by a half-turn sweep,
/// each with its smaller side size. Consecutive entries (cyclically)
/// differ in exactly one vector changing sides. Errors if some sweep
/// position has an empty side, which cannot happen for Gale diagrams of
/// full-dimensional configurations.
pub fn sweep_partition_sequence(g: &GaleDiagram) -> Result<Vec<(Separation, usize)>> {
    let sweep = prepare_sweep(g)?;
    let mut out = Vec::with_capacity(g.len());
    for idx in 0..sweep.order.len() {
        let dir = gap_direction(&sweep, idx);
        let (pos, neg) = partition_at(g, &dir);
        if pos.is_empty() || neg.is_empty() {
            return Err(Error::Degenerate(
                "sweep position with an empty side: vectors lie in a closed half-plane".into(),
            ));
        }
        let min = pos.len().min(neg.len());
        out.push((
            Separation {
                positive_side: pos,
                negative_side: neg,
                boundary_direction: dir,
            },
            min,
        ));
    }
    Ok(out)
}
