//! Combinatorics of crossings on the moment curve and the bound
//! evaluators.
//!
//! For 2d vertices on the moment curve, color one hyperedge red and its
//! complement blue in parameter order. The pair crosses exactly when the
//! color sequence has at least d+2 maximal blocks (equivalently, an
//! alternating subsequence of length d+2). That single combinatorial fact
//! turns the geometric count into block counting, which this module does
//! three ways: by direct enumeration of all canonical colorings, by the
//! closed-form formula, and (in tests) against the exact LP predicate.

use crate::crossing::Bipartition;
use crate::error::{Error, Result};
use crate::exact::Rational;
use num::bigint::BigUint;
use num::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Red,
    Blue,
}

/// A coloring of 2d moment-curve vertices in parameter order, exactly d
/// red and d blue, with the first vertex red (the canonical form that
/// counts each unordered hyperedge pair once).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredSequence {
    colors: Vec<Color>,
    d: usize,
}

impl ColoredSequence {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        let len = colors.len();
        if len < 4 || !len.is_multiple_of(2) {
            return Err(Error::Contract(format!(
                "coloring length must be even and at least 4, got {len}"
            )));
        }
        let d = len / 2;
        let reds = colors.iter().filter(|&&c| c == Color::Red).count();
        if reds != d {
            return Err(Error::Contract(format!(
                "expected {d} red vertices, got {reds}"
            )));
        }
        if colors[0] != Color::Red {
            return Err(Error::Contract("first vertex must be red".into()));
        }
        Ok(Self { colors, d })
    }

    /// Canonical coloring of a full bipartition of {0..2d-1}: the side
    /// containing vertex 0 is red.
    pub fn from_bipartition(b: &Bipartition) -> Result<Self> {
        let n = b.total_len();
        let mut colors = vec![Color::Blue; n];
        for &i in b.left() {
            if i >= n {
                return Err(Error::Contract(
                    "bipartition must cover exactly the vertex range".into(),
                ));
            }
            colors[i] = Color::Red;
        }
        Self::new(colors)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// The corresponding bipartition (red side left).
    pub fn to_bipartition(&self) -> Bipartition {
        let red: Vec<usize> = (0..self.colors.len())
            .filter(|&i| self.colors[i] == Color::Red)
            .collect();
        let blue: Vec<usize> = (0..self.colors.len())
            .filter(|&i| self.colors[i] == Color::Blue)
            .collect();
        Bipartition::new(red, blue).expect("sides are disjoint and nonempty")
    }

    fn block_count(&self) -> usize {
        1 + self.colors.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

/// Crossing criterion on the moment curve: at least d+2 maximal
/// same-color blocks.
pub fn alternation_crosses(s: &ColoredSequence) -> bool {
    s.block_count() >= s.d + 2
}

/// Number of maximal blocks of a color mask (bit i = vertex i blue) of
/// the given length.
fn mask_block_count(mask: u64, len: usize) -> usize {
    let transitions = ((mask ^ (mask >> 1)) & ((1u64 << (len - 1)) - 1)).count_ones();
    transitions as usize + 1
}

/// Counts crossing pairs of hyperedges for 2d vertices on the moment
/// curve by enumerating all C(2d-1, d-1) canonical colorings.
///
/// Practical ceiling is around d = 14 (20 million colorings); above d = 31
/// the bitmask enumeration does not fit u64 and is rejected.
pub fn count_moment_crossings_enum(d: usize) -> Result<u64> {
    if d < 2 {
        return Err(Error::Contract(format!("d must be at least 2, got {d}")));
    }
    if d > 31 {
        return Err(Error::Contract(format!(
            "enumeration supports d <= 31, got {d}"
        )));
    }
    let len = 2 * d;
    let universe = len - 1; // positions 1..2d-1 hold the d blue vertices
    let mut mask: u64 = (1u64 << d) - 1;
    let limit: u64 = 1u64 << universe;
    let mut count = 0u64;
    while mask < limit {
        let colors = mask << 1; // vertex 0 stays red
        if mask_block_count(colors, len) >= d + 2 {
            count += 1;
        }
        // Gosper's hack: next mask with the same popcount
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    Ok(count)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 0..k {
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}

/// Closed-form crossing count for 2d moment-curve vertices:
/// C(2d-1, d-1) minus the non-crossing colorings, with separate even- and
/// odd-d forms.
pub fn closed_form_cdm(d: usize) -> Result<BigUint> {
    if d < 2 {
        return Err(Error::Contract(format!("d must be at least 2, got {d}")));
    }
    let d64 = d as u64;
    let total = binomial(2 * d64 - 1, d64 - 1);
    let subtracted = if d.is_multiple_of(2) {
        let mut sum = BigUint::zero();
        for i in 1..=d64 / 2 {
            sum += binomial(d64, i) * binomial(d64 - 1, i - 1);
        }
        sum
    } else {
        let mut sum = BigUint::one();
        for i in 1..=d64 / 2 {
            sum += binomial(d64 - 1, i) * binomial(d64, i);
        }
        sum
    };
    Ok(total - subtracted)
}

/// The non-crossing count subtracted in the closed form, evaluated from
/// the block-distribution side: for even d the number of ways to spread d
/// blue vertices over at most d/2 of the d red-bounded gaps; for odd d the
/// same with the last gap handled separately, which yields the form
/// `1 + sum_i C(d-1,i) (C(d-1,i-1) + C(d-1,i))`.
pub fn noncrossing_distribution_count(d: usize) -> Result<BigUint> {
    if d < 2 {
        return Err(Error::Contract(format!("d must be at least 2, got {d}")));
    }
    let d64 = d as u64;
    if d.is_multiple_of(2) {
        let mut sum = BigUint::zero();
        for i in 1..=d64 / 2 {
            sum += binomial(d64, i) * binomial(d64 - 1, i - 1);
        }
        Ok(sum)
    } else {
        let mut sum = BigUint::one();
        for i in 1..=d64 / 2 {
            sum += binomial(d64 - 1, i) * (binomial(d64 - 1, i - 1) + binomial(d64 - 1, i));
        }
        Ok(sum)
    }
}

/// A bound evaluator result; `degenerate` marks d below the range where
/// the underlying sweep argument applies (d <= 3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValue {
    pub value: BigUint,
    pub degenerate: bool,
}

impl BoundValue {
    fn ok(value: BigUint) -> Self {
        Self {
            value,
            degenerate: false,
        }
    }

    fn degenerate() -> Self {
        Self {
            value: BigUint::zero(),
            degenerate: true,
        }
    }
}

/// Rotating-sweep lower bound: the sum of one binomial per sweep step,
/// C(d-3, floor((d-2k-3)/2)) for k = 0, 1, ...; the series runs down to
/// C(d-3, 1), with the single first term for d in {4, 5, 6}.
pub fn sweep_lower_bound(d: usize) -> BoundValue {
    if d < 4 {
        return BoundValue::degenerate();
    }
    let d64 = d as u64;
    let terms = (((d - 3) / 2).max(1)) as u64;
    let mut sum = BigUint::zero();
    for k in 0..terms {
        let idx = (d64 - 2 * k - 3) / 2;
        sum += binomial(d64 - 3, idx);
    }
    BoundValue::ok(sum)
}

/// Balanced-sweep lower bound: 2 * floor((d+3)/2) * C(d-3, ceil((d-5)/2)).
pub fn balanced_sweep_lower_bound(d: usize) -> BoundValue {
    if d < 4 {
        return BoundValue::degenerate();
    }
    let d64 = d as u64;
    let partitions = BigUint::from(2 * ((d64 + 3) / 2));
    let ceil_idx = ((d as i64 - 5) + 1).div_euclid(2).max(0) as u64;
    BoundValue::ok(partitions * binomial(d64 - 3, ceil_idx))
}

/// Per-2d-subset lower bound scaled to n vertices: c_value * C(n, 2d).
pub fn cr_lower_nd(d: usize, n: usize, c_value: &BigUint) -> Result<BigUint> {
    if n < 2 * d {
        return Err(Error::TooFewPoints { n, need: 2 * d });
    }
    Ok(c_value * binomial(n as u64, 2 * d as u64))
}

/// Interleaving criterion for one half-sized simplex pair on the moment
/// curve: sequences of floor(d/2)+1 and ceil(d/2)+1 parameters cross
/// exactly when every open interval between consecutive members of one
/// sequence contains exactly one member of the other, both ways.
pub fn subsimplex_interleaving_cross(p: &[Rational], q: &[Rational], d: usize) -> Result<bool> {
    let expected_p = d / 2 + 1;
    let expected_q = d.div_ceil(2) + 1;
    if p.len() != expected_p {
        return Err(Error::WrongPointCount {
            expected: expected_p,
            got: p.len(),
        });
    }
    if q.len() != expected_q {
        return Err(Error::WrongPointCount {
            expected: expected_q,
            got: q.len(),
        });
    }
    let mut ps = p.to_vec();
    let mut qs = q.to_vec();
    ps.sort();
    qs.sort();
    if ps.windows(2).any(|w| w[0] == w[1]) || qs.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NotDisjoint);
    }
    if ps.iter().any(|x| qs.binary_search(x).is_ok()) {
        return Err(Error::NotDisjoint);
    }
    let one_inside = |lo: &Rational, hi: &Rational, xs: &[Rational]| {
        xs.iter().filter(|x| *x > lo && *x < hi).count() == 1
    };
    for w in qs.windows(2) {
        if !one_inside(&w[0], &w[1], &ps) {
            return Ok(false);
        }
    }
    for w in ps.windows(2) {
        if !one_inside(&w[0], &w[1], &qs) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One row of the bound table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub d: usize,
    pub cdm: BigUint,
    pub thm1: BoundValue,
    pub lemma8: BoundValue,
    pub binom_2d_d: BigUint,
}

impl BoundRow {
    pub fn compute(d: usize) -> Result<Self> {
        Ok(Self {
            d,
            cdm: closed_form_cdm(d)?,
            thm1: sweep_lower_bound(d),
            lemma8: balanced_sweep_lower_bound(d),
            binom_2d_d: binomial(2 * d as u64, d as u64),
        })
    }

    /// Lower bound on the n-vertex crossing count scaled from this row's
    /// exact moment-curve value.
    pub fn cr_lower(&self, n: usize) -> Result<BigUint> {
        cr_lower_nd(self.d, n, &self.cdm)
    }

    pub const CSV_HEADER: &'static str = "d,cdm,thm1,lemma8,binom_2d_d";

    /// CSV cells in header order; degenerate bounds render as NA.
    pub fn csv_row(&self) -> String {
        let bound = |b: &BoundValue| {
            if b.degenerate {
                "NA".to_string()
            } else {
                b.value.to_string()
            }
        };
        format!(
            "{},{},{},{},{}",
            self.d,
            self.cdm,
            bound(&self.thm1),
            bound(&self.lemma8),
            self.binom_2d_d
        )
    }
}

impl Serialize for BoundRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let bound = |b: &BoundValue| -> Option<String> {
            if b.degenerate {
                None
            } else {
                Some(b.value.to_string())
            }
        };
        let mut st = serializer.serialize_struct("BoundRow", 5)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("cdm", &self.cdm.to_string())?;
        st.serialize_field("thm1", &bound(&self.thm1))?;
        st.serialize_field("lemma8", &bound(&self.lemma8))?;
        st.serialize_field("binom_2d_d", &self.binom_2d_d.to_string())?;
        st.end()
    }
}
