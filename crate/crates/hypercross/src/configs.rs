//! Point configurations and position predicates.
//!
//! A configuration is an ordered list of n points with exact rational
//! coordinates in dimension d. General position means no d+1 points on a
//! common hyperplane; convex position means every point is a vertex of the
//! convex hull. Both predicates are decided exactly, the first by lifted
//! determinants, the second by LP membership queries.

use crate::error::{Error, Result};
use crate::exact::{lp_feasible, parse_rational, rat_int, Matrix, Rational};
use num::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Ordered sequence of points in R^d, all coordinates exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl PointConfig {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Contract(format!(
                "dimension must be >= 2, got {dim}"
            )));
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
        }
        Ok(Self { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &[Rational] {
        &self.points[i]
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// The lifted coordinate matrix: one column per point, its d
    /// coordinates stacked over a final row of ones.
    pub fn lifted_matrix(&self) -> Matrix {
        lifted_matrix_of(&self.points, self.dim)
    }
}

fn lifted_matrix_of(points: &[Vec<Rational>], dim: usize) -> Matrix {
    let m = points.len();
    let mut out = Matrix::zeros(dim + 1, m);
    for (j, p) in points.iter().enumerate() {
        for (i, x) in p.iter().enumerate() {
            out[(i, j)] = x.clone();
        }
        out[(dim, j)] = Rational::one();
    }
    out
}

/// Strictly increasing parameters for a moment-curve embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentParams {
    dim: usize,
    ts: Vec<Rational>,
}

impl MomentParams {
    pub fn new(dim: usize, ts: Vec<Rational>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Contract(format!(
                "dimension must be >= 2, got {dim}"
            )));
        }
        if ts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing);
        }
        Ok(Self { dim, ts })
    }

    /// Integer parameters 1, 2, ..., n.
    pub fn integer_range(dim: usize, n: usize) -> Result<Self> {
        Self::new(dim, (1..=n as i64).map(rat_int).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.ts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ts.is_empty()
    }

    pub fn ts(&self) -> &[Rational] {
        &self.ts
    }
}

/// Places each parameter t at (t, t^2, ..., t^d).
pub fn moment_config(params: &MomentParams) -> PointConfig {
    let points = params
        .ts
        .iter()
        .map(|t| {
            let mut coords = Vec::with_capacity(params.dim);
            let mut pow = t.clone();
            for _ in 0..params.dim {
                coords.push(pow.clone());
                pow *= t;
            }
            coords
        })
        .collect();
    PointConfig::new(params.dim, points).expect("moment points have dim coordinates")
}

/// True iff no d+1 points lie on a common hyperplane, i.e. every
/// (d+1)-subset has a nonzero lifted determinant.
///
/// Queries with n <= d are flagged as degenerate rather than answered.
pub fn is_general_position(c: &PointConfig) -> Result<bool> {
    let d = c.dim();
    let n = c.len();
    if n <= d {
        return Err(Error::DegenerateQuery { n, dim: d });
    }
    let mut subset: Vec<usize> = (0..=d).collect();
    loop {
        let pts: Vec<Vec<Rational>> = subset.iter().map(|&i| c.point(i).to_vec()).collect();
        let det = lifted_matrix_of(&pts, d).det()?;
        if det.is_zero() {
            return Ok(false);
        }
        if !next_combination(&mut subset, n) {
            return Ok(true);
        }
    }
}

/// Advances `subset` to the next k-combination of {0..n-1} in
/// lexicographic order; false when exhausted.
pub(crate) fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] != i + n - k {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// True iff every point is a vertex of the convex hull of the whole set,
/// decided per point by LP: the point must not be a convex combination of
/// the others. Requires validated general position.
pub fn is_convex_position(c: &PointConfig) -> Result<bool> {
    if !is_general_position(c)? {
        return Err(Error::NotGeneralPosition);
    }
    for i in 0..c.len() {
        if in_convex_hull_of_others(c, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn in_convex_hull_of_others(c: &PointConfig, i: usize) -> Result<bool> {
    let d = c.dim();
    let others: Vec<&[Rational]> = (0..c.len())
        .filter(|&j| j != i)
        .map(|j| c.point(j))
        .collect();
    // lambda >= 0 with sum lambda_j q_j = p_i and sum lambda_j = 1
    let mut a = Matrix::zeros(d + 1, others.len());
    for (col, q) in others.iter().enumerate() {
        for (row, x) in q.iter().enumerate() {
            a[(row, col)] = x.clone();
        }
        a[(d, col)] = Rational::one();
    }
    let mut b: Vec<Rational> = c.point(i).to_vec();
    b.push(Rational::one());
    Ok(lp_feasible(&a, &b)?.is_some())
}

/// Default integer coordinate box for random generation.
pub fn default_coordinate_bound(dim: usize, n: usize) -> u64 {
    4 * (n as u64) * (dim as u64)
}

const GENERATION_RETRY_BUDGET: usize = 10_000;

/// Integer-coordinate points sampled uniformly in a box, resampled until
/// they are in general position. Deterministic per seed.
pub fn random_general_config(
    dim: usize,
    n: usize,
    seed: u64,
    coordinate_bound: u64,
) -> Result<PointConfig> {
    if n < dim + 1 {
        return Err(Error::TooFewPoints { n, need: dim + 1 });
    }
    if coordinate_bound < n as u64 {
        return Err(Error::Contract(format!(
            "coordinate bound {coordinate_bound} too small for {n} points"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GENERATION_RETRY_BUDGET {
        let points: Vec<Vec<Rational>> = (0..n)
            .map(|_| {
                (0..dim)
                    .map(|_| Rational::from_integer(rng.gen_range(0..=coordinate_bound).into()))
                    .collect()
            })
            .collect();
        let c = PointConfig::new(dim, points)?;
        if is_general_position(&c)? {
            return Ok(c);
        }
    }
    Err(Error::GenerationExhausted {
        attempts: GENERATION_RETRY_BUDGET,
    })
}

/// Rational points exactly on the unit sphere in R^3, in convex and
/// general position. Uses the stereographic image of integer grid points
/// (u, v) -> (2u, 2v, u^2 + v^2 - 1) / (u^2 + v^2 + 1), which keeps all
/// coordinates rational; distinct sphere points are automatically in
/// convex position, so only general position needs re-validation.
pub fn random_convex_config_3d(n: usize, seed: u64) -> Result<PointConfig> {
    if n < 4 {
        return Err(Error::TooFewPoints { n, need: 4 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid = 20 * n as i64;
    for _ in 0..GENERATION_RETRY_BUDGET {
        let mut params: Vec<(i64, i64)> = Vec::with_capacity(n);
        while params.len() < n {
            let uv = (rng.gen_range(-grid..=grid), rng.gen_range(-grid..=grid));
            if !params.contains(&uv) {
                params.push(uv);
            }
        }
        let points: Vec<Vec<Rational>> = params
            .iter()
            .map(|&(u, v)| {
                let denom = rat_int(u * u + v * v + 1);
                vec![
                    rat_int(2 * u) / &denom,
                    rat_int(2 * v) / &denom,
                    rat_int(u * u + v * v - 1) / &denom,
                ]
            })
            .collect();
        let c = PointConfig::new(3, points)?;
        if is_general_position(&c)? {
            return Ok(c);
        }
    }
    Err(Error::GenerationExhausted {
        attempts: GENERATION_RETRY_BUDGET,
    })
}

// JSON wire format: {"dim": d, "points": [["p/q", ...], ...]}
#[derive(Serialize, Deserialize)]
struct PointConfigWire {
    dim: usize,
    points: Vec<Vec<String>>,
}

impl Serialize for PointConfig {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = PointConfigWire {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(crate::exact::format_rational).collect())
                .collect(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PointConfig {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = PointConfigWire::deserialize(deserializer)?;
        let points = wire
            .points
            .iter()
            .map(|p| p.iter().map(|s| parse_rational(s)).collect())
            .collect::<Result<Vec<Vec<Rational>>>>()
            .map_err(D::Error::custom)?;
        PointConfig::new(wire.dim, points).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    pub(crate) fn config(dim: usize, pts: &[&[i64]]) -> PointConfig {
        PointConfig::new(
            dim,
            pts.iter()
                .map(|p| p.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn moment_points_by_substitution() {
        let params = MomentParams::new(2, vec![rat_int(1), rat_int(2)]).unwrap();
        let c = moment_config(&params);
        assert_eq!(c.point(0), &[rat_int(1), rat_int(1)]);
        assert_eq!(c.point(1), &[rat_int(2), rat_int(4)]);
    }

    #[test]
    fn moment_rejects_non_monotone() {
        assert!(matches!(
            MomentParams::new(2, vec![rat_int(2), rat_int(1)]),
            Err(Error::NotIncreasing)
        ));
        assert!(matches!(
            MomentParams::new(2, vec![rat_int(1), rat_int(1)]),
            Err(Error::NotIncreasing)
        ));
    }

    #[test]
    fn moment_configs_are_general_position() {
        for (d, n) in [(2usize, 5usize), (3, 6), (4, 8)] {
            let c = moment_config(&MomentParams::integer_range(d, n).unwrap());
            assert!(is_general_position(&c).unwrap(), "d={d} n={n}");
        }
    }

    #[test]
    fn collinear_points_fail_general_position() {
        let c = config(2, &[&[0, 0], &[1, 1], &[2, 2], &[5, 7]]);
        assert!(!is_general_position(&c).unwrap());
    }

    #[test]
    fn repeated_point_fails_general_position() {
        let c = config(
            3,
            &[
                &[0, 0, 0],
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[2, 3, 5],
                &[2, 3, 5],
            ],
        );
        assert!(!is_general_position(&c).unwrap());
    }

    #[test]
    fn degenerate_query_is_flagged() {
        let c = config(2, &[&[0, 0], &[1, 0]]);
        assert!(matches!(
            is_general_position(&c),
            Err(Error::DegenerateQuery { n: 2, dim: 2 })
        ));
    }

    #[test]
    fn square_is_convex_position() {
        let c = config(2, &[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]);
        assert!(is_convex_position(&c).unwrap());
    }

    #[test]
    fn centroid_breaks_convex_position() {
        let c = config(2, &[&[0, 0], &[3, 0], &[0, 3], &[1, 1]]);
        assert!(!is_convex_position(&c).unwrap());
    }

    #[test]
    fn convex_position_requires_general_position() {
        let c = config(2, &[&[0, 0], &[1, 1], &[2, 2], &[5, 7]]);
        assert!(matches!(
            is_convex_position(&c),
            Err(Error::NotGeneralPosition)
        ));
    }

    #[test]
    fn moment_config_3d_is_convex() {
        let c = moment_config(&MomentParams::integer_range(3, 6).unwrap());
        assert!(is_convex_position(&c).unwrap());
    }

    #[test]
    fn moment_config_4d_is_convex() {
        let c = moment_config(&MomentParams::integer_range(4, 8).unwrap());
        assert!(is_convex_position(&c).unwrap());
    }

    #[test]
    fn random_general_is_deterministic_and_valid() {
        let a = random_general_config(2, 4, 7, default_coordinate_bound(2, 4)).unwrap();
        let b = random_general_config(2, 4, 7, default_coordinate_bound(2, 4)).unwrap();
        assert_eq!(a, b);
        assert!(is_general_position(&a).unwrap());

        let c = random_general_config(4, 8, 1, default_coordinate_bound(4, 8)).unwrap();
        assert!(is_general_position(&c).unwrap());
        assert_eq!(c.len(), 8);
    }

    #[test]
    fn random_convex_3d_passes_both_predicates() {
        let a = random_convex_config_3d(6, 3).unwrap();
        assert!(is_general_position(&a).unwrap());
        assert!(is_convex_position(&a).unwrap());
        let b = random_convex_config_3d(6, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let c = PointConfig::new(
            2,
            vec![vec![rat(1, 2), rat_int(-3)], vec![rat_int(0), rat(7, 9)]],
        )
        .unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"dim":2,"points":[["1/2","-3"],["0","7/9"]]}"#);
        let back: PointConfig = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn json_rejects_bad_rationals() {
        let s = r#"{"dim":2,"points":[["1/0","3"]]}"#;
        assert!(serde_json::from_str::<PointConfig>(s).is_err());
    }
}
