//! Gale transforms of point configurations.
//!
//! The transform sends m points in R^d (with full-dimensional affine hull)
//! to m vectors in R^{m-d-1}: stack the coordinates over a row of ones,
//! take a basis of the null space of that matrix, and read the i-th vector
//! off the i-th component of each basis vector. The result depends on the
//! basis choice, so everything downstream compares basis-invariant
//! properties (spans, separation counts, sign patterns) rather than raw
//! coordinates. The generic transform fixes the reduced-row-echelon basis
//! to make runs reproducible; for points on the moment curve there are
//! closed forms whose vectors are explicit product ratios.

use crate::configs::{next_combination, MomentParams, PointConfig};
use crate::error::{Error, Result};
use crate::exact::{lp_feasible, parse_rational, Matrix, Rational};
use num::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Sequence of m vectors in R^k, k = m - d - 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaleDiagram {
    k: usize,
    vectors: Vec<Vec<Rational>>,
    source: Option<PointConfig>,
}

impl GaleDiagram {
    pub fn new(k: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::Contract("Gale diagram needs k >= 1".into()));
        }
        for v in &vectors {
            if v.len() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    got: v.len(),
                });
            }
        }
        Ok(Self {
            k,
            vectors,
            source: None,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of vectors m.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vector(&self, i: usize) -> &[Rational] {
        &self.vectors[i]
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    /// The configuration this diagram was derived from, when known.
    pub fn source(&self) -> Option<&PointConfig> {
        self.source.as_ref()
    }

    fn with_source(mut self, c: PointConfig) -> Self {
        self.source = Some(c);
        self
    }
}

/// Generic Gale transform via the null space of the lifted matrix.
///
/// Requires m >= d + 2 and a full-dimensional affine hull (lifted rank
/// d + 1); rank deficiency is reported as a flat-configuration error.
pub fn gale_transform(c: &PointConfig) -> Result<GaleDiagram> {
    let d = c.dim();
    let m = c.len();
    if m < d + 2 {
        return Err(Error::TooFewPoints { n: m, need: d + 2 });
    }
    let lifted = c.lifted_matrix();
    let rank = lifted.rank();
    if rank != d + 1 {
        return Err(Error::FlatConfiguration {
            rank,
            expected: d + 1,
        });
    }
    let basis = lifted.null_space_basis();
    debug_assert_eq!(basis.len(), m - d - 1);
    let k = basis.len();
    let vectors = (0..m)
        .map(|i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    Ok(GaleDiagram::new(k, vectors)?.with_source(c.clone()))
}

/// Closed-form Gale vectors for moment-curve points: the first d+1 vectors
/// have coordinate r equal to the product ratio
/// `(-1)^(d+1) * prod_{j != i} (t_{d+1+r} - t_j) / prod_{j != i} (t_j - t_i)`
/// (indices among the first d+1 parameters), and the remaining vectors are
/// the standard unit vectors.
fn moment_gale_closed_form(params: &MomentParams) -> GaleDiagram {
    let d = params.dim();
    let ts = params.ts();
    let m = ts.len();
    let k = m - d - 1;
    let negate = (d + 1) % 2 == 1;
    let mut vectors: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..=d {
        let mut denom = Rational::one();
        for j in 0..=d {
            if j != i {
                denom *= &ts[j] - &ts[i];
            }
        }
        let mut v = Vec::with_capacity(k);
        for r in 0..k {
            let mut numer = Rational::one();
            for j in 0..=d {
                if j != i {
                    numer *= &ts[d + 1 + r] - &ts[j];
                }
            }
            let mut coord = numer / &denom;
            if negate {
                coord = -coord;
            }
            v.push(coord);
        }
        vectors.push(v);
    }
    for r in 0..k {
        let mut unit = vec![Rational::zero(); k];
        unit[r] = Rational::one();
        vectors.push(unit);
    }
    GaleDiagram::new(k, vectors)
        .expect("closed-form vectors have k coordinates")
        .with_source(crate::configs::moment_config(params))
}

/// Closed-form Gale transform of d+3 moment-curve points (k = 2).
pub fn gale_moment_d3(params: &MomentParams) -> Result<GaleDiagram> {
    let d = params.dim();
    if params.len() != d + 3 {
        return Err(Error::WrongPointCount {
            expected: d + 3,
            got: params.len(),
        });
    }
    Ok(moment_gale_closed_form(params))
}

/// Closed-form Gale transform of 2d moment-curve points (k = d - 1).
pub fn gale_moment_2d(params: &MomentParams) -> Result<GaleDiagram> {
    let d = params.dim();
    if params.len() != 2 * d {
        return Err(Error::WrongPointCount {
            expected: 2 * d,
            got: params.len(),
        });
    }
    Ok(moment_gale_closed_form(params))
}

/// True iff every k-subset of the m vectors spans R^k, decided by k x k
/// determinants.
pub fn spans_check(g: &GaleDiagram) -> Result<bool> {
    let k = g.k();
    let m = g.len();
    if m < k {
        return Ok(false);
    }
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| g.vector(i).to_vec()).collect();
        if Matrix::from_rows(&rows)?.det()?.is_zero() {
            return Ok(false);
        }
        if !next_combination(&mut subset, m) {
            return Ok(true);
        }
    }
}

/// True iff no open half-space bounded by a linear hyperplane contains
/// exactly one vector of the diagram; equivalent to convex position of the
/// source points. For k = 2 this reads off the rotating-line sweep; for
/// other k each vector is tested for isolatability by LP.
pub fn gale_convexity_check(g: &GaleDiagram) -> Result<bool> {
    if !spans_check(g)? {
        return Err(Error::Degenerate(
            "Gale diagram has a dependent k-subset".into(),
        ));
    }
    if g.k() == 2 {
        let seps = crate::separations::enumerate_separations(g)?;
        return Ok(seps.iter().all(|s| s.min_side_size() >= 2));
    }
    for i in 0..g.len() {
        if isolatable(g, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Can some linear hyperplane put vector i alone in an open half-space?
/// Feasibility of `a . v_i >= 1`, `a . v_j <= 0` for all j != i, with the
/// normal a free (split into a difference of nonnegative parts).
fn isolatable(g: &GaleDiagram, i: usize) -> Result<bool> {
    let k = g.k();
    let m = g.len();
    // columns: a_plus (k), a_minus (k), s_target, s_j for j != i
    let ncols = 2 * k + m;
    let mut a = Matrix::zeros(m, ncols);
    let mut b = vec![Rational::zero(); m];
    for j in 0..m {
        let v = g.vector(j);
        for c in 0..k {
            a[(j, c)] = v[c].clone();
            a[(j, k + c)] = -v[c].clone();
        }
        if j == i {
            a[(j, 2 * k)] = -Rational::one();
            b[j] = Rational::one();
        } else {
            a[(j, 2 * k + 1 + if j < i { j } else { j - 1 })] = Rational::one();
        }
    }
    Ok(lp_feasible(&a, &b)?.is_some())
}

// JSON wire format mirrors PointConfig with a "k" field.
#[derive(Serialize, Deserialize)]
struct GaleDiagramWire {
    k: usize,
    vectors: Vec<Vec<String>>,
}

impl Serialize for GaleDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = GaleDiagramWire {
            k: self.k,
            vectors: self
                .vectors
                .iter()
                .map(|v| v.iter().map(crate::exact::format_rational).collect())
                .collect(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GaleDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = GaleDiagramWire::deserialize(deserializer)?;
        let vectors = wire
            .vectors
            .iter()
            .map(|v| v.iter().map(|s| parse_rational(s)).collect())
            .collect::<Result<Vec<Vec<Rational>>>>()
            .map_err(D::Error::custom)?;
        GaleDiagram::new(wire.k, vectors).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::moment_config;
    use crate::exact::{rat_int, sign};

    fn int_config(dim: usize, pts: &[&[i64]]) -> PointConfig {
        PointConfig::new(
            dim,
            pts.iter()
                .map(|p| p.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// Columns assembled from the diagram's vectors must lie in the null
    /// space of the source's lifted matrix.
    fn assert_null_space_property(c: &PointConfig, g: &GaleDiagram) {
        let lifted = c.lifted_matrix();
        for r in 0..g.k() {
            let col: Vec<Rational> = (0..g.len()).map(|i| g.vector(i)[r].clone()).collect();
            let prod = lifted.mul_vec(&col).unwrap();
            assert!(prod.iter().all(Rational::is_zero), "basis column {r}");
        }
    }

    #[test]
    fn square_gale_alternates_signs() {
        let c = int_config(2, &[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]);
        let g = gale_transform(&c).unwrap();
        assert_eq!(g.k(), 1);
        assert_eq!(g.len(), 4);
        let signs: Vec<i8> = (0..4).map(|i| sign(&g.vector(i)[0])).collect();
        assert!(signs.iter().all(|&s| s != 0));
        // alternating around the cycle, up to a global flip
        assert_eq!(signs[0], -signs[1]);
        assert_eq!(signs[1], -signs[2]);
        assert_eq!(signs[2], -signs[3]);
        assert_null_space_property(&c, &g);
    }

    #[test]
    fn five_moment_points_give_pairwise_independent_plane_vectors() {
        let params = MomentParams::integer_range(2, 5).unwrap();
        let c = moment_config(&params);
        let g = gale_transform(&c).unwrap();
        assert_eq!(g.k(), 2);
        for i in 0..5 {
            for j in i + 1..5 {
                let det = &g.vector(i)[0] * &g.vector(j)[1] - &g.vector(i)[1] * &g.vector(j)[0];
                assert!(!det.is_zero(), "vectors {i},{j} dependent");
            }
        }
        assert_null_space_property(&c, &g);
        assert!(spans_check(&g).unwrap());
    }

    #[test]
    fn six_moment_points_3d_have_three_proper_separations() {
        let params = MomentParams::integer_range(3, 6).unwrap();
        let g = gale_transform(&moment_config(&params)).unwrap();
        assert_eq!(g.k(), 2);
        assert_eq!(crate::separations::count_proper_separations(&g).unwrap(), 3);
    }

    #[test]
    fn closed_form_d3_unit_tail() {
        let params = MomentParams::integer_range(2, 5).unwrap();
        let g = gale_moment_d3(&params).unwrap();
        assert_eq!(g.vector(3), &[rat_int(1), rat_int(0)]);
        assert_eq!(g.vector(4), &[rat_int(0), rat_int(1)]);
    }

    #[test]
    fn closed_form_d3_is_a_null_space_basis() {
        let params = MomentParams::integer_range(3, 6).unwrap();
        let g = gale_moment_d3(&params).unwrap();
        assert_null_space_property(&moment_config(&params), &g);
    }

    #[test]
    fn closed_form_d3_quadrants_and_slopes() {
        // first d+1 vectors alternate between first and third quadrant
        // (depending on the parity of d+1+i) and their slopes strictly
        // decrease; the tail vectors pin slope infinity and slope zero.
        let d = 3;
        let params = MomentParams::integer_range(d, d + 3).unwrap();
        let g = gale_moment_d3(&params).unwrap();
        for i in 0..=d {
            let v = g.vector(i);
            let sx = sign(&v[0]);
            let sy = sign(&v[1]);
            assert_eq!(sx, sy, "vector {i} not on a diagonal quadrant");
            // d+1+i odd (1-based i) -> first quadrant
            let expected = if (d + 2 + i) % 2 == 1 { 1 } else { -1 };
            assert_eq!(sx, expected, "vector {i} in wrong quadrant");
        }
        let slope = |i: usize| -> Rational { &g.vector(i)[1] / &g.vector(i)[0] };
        for i in 0..d {
            assert!(slope(i) > slope(i + 1), "slopes not decreasing at {i}");
        }
        // s_1 below infinity (v_{d+3} vertical), s_{d+1} above 0 (v_{d+2} horizontal)
        assert!(slope(0) > Rational::zero());
        assert!(slope(d) > Rational::zero());
    }

    #[test]
    fn closed_form_2d_matches_generic_up_to_basis_change() {
        // both are null-space bases, so they differ by an invertible k x k
        // change of basis; solve for it and check it reproduces every vector
        let params = MomentParams::integer_range(2, 4).unwrap();
        let c = moment_config(&params);
        let closed = gale_moment_2d(&params).unwrap();
        let generic = gale_transform(&c).unwrap();
        assert_eq!(closed.k(), 1);
        assert_eq!(generic.k(), 1);
        // k = 1: proportionality with a single nonzero scalar
        let ratio = &closed.vector(0)[0] / &generic.vector(0)[0];
        assert!(!ratio.is_zero());
        for i in 0..4 {
            assert_eq!(closed.vector(i)[0], &ratio * &generic.vector(i)[0]);
        }
        // signs alternate
        let signs: Vec<i8> = (0..4).map(|i| sign(&closed.vector(i)[0])).collect();
        assert_eq!(signs[0], -signs[1]);
        assert_eq!(signs[1], -signs[2]);
        assert_eq!(signs[2], -signs[3]);
    }

    #[test]
    fn closed_form_2d_d4_spans() {
        let params = MomentParams::integer_range(4, 8).unwrap();
        let g = gale_moment_2d(&params).unwrap();
        assert_eq!(g.k(), 3);
        assert_eq!(g.len(), 8);
        assert!(spans_check(&g).unwrap());
        assert_null_space_property(&moment_config(&params), &g);
    }

    #[test]
    fn closed_form_shape_errors() {
        let params = MomentParams::integer_range(3, 7).unwrap();
        assert!(matches!(
            gale_moment_d3(&params),
            Err(Error::WrongPointCount { expected: 6, .. })
        ));
        assert!(matches!(
            gale_moment_2d(&params),
            Err(Error::WrongPointCount { expected: 6, .. })
        ));
    }

    #[test]
    fn spans_check_rejects_zero_and_proportional_vectors() {
        let zero = GaleDiagram::new(
            2,
            vec![
                vec![rat_int(0), rat_int(0)],
                vec![rat_int(1), rat_int(0)],
                vec![rat_int(0), rat_int(1)],
            ],
        )
        .unwrap();
        assert!(!spans_check(&zero).unwrap());

        let proportional = GaleDiagram::new(
            2,
            vec![
                vec![rat_int(1), rat_int(2)],
                vec![rat_int(2), rat_int(4)],
                vec![rat_int(0), rat_int(1)],
            ],
        )
        .unwrap();
        assert!(!spans_check(&proportional).unwrap());
    }

    #[test]
    fn convexity_check_matches_position_predicates() {
        // cyclic polytope: convex
        let g =
            gale_transform(&moment_config(&MomentParams::integer_range(3, 6).unwrap())).unwrap();
        assert!(gale_convexity_check(&g).unwrap());

        // triangle + interior point: not convex (k = 1 goes through the LP)
        let c = int_config(2, &[&[0, 0], &[3, 0], &[0, 3], &[1, 1]]);
        let g = gale_transform(&c).unwrap();
        assert_eq!(g.k(), 1);
        assert!(!gale_convexity_check(&g).unwrap());

        // square: convex (k = 1)
        let c = int_config(2, &[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]);
        assert!(gale_convexity_check(&gale_transform(&c).unwrap()).unwrap());
    }

    #[test]
    fn flat_configuration_is_rejected() {
        // all points on a line in R^2: lifted rank 2 < 3
        let c = int_config(2, &[&[0, 0], &[1, 1], &[2, 2], &[3, 3]]);
        assert!(matches!(
            gale_transform(&c),
            Err(Error::FlatConfiguration {
                rank: 2,
                expected: 3
            })
        ));
    }

    #[test]
    fn json_round_trip() {
        let params = MomentParams::integer_range(2, 5).unwrap();
        let g = gale_moment_d3(&params).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        let back: GaleDiagram = serde_json::from_str(&s).unwrap();
        assert_eq!(back.k(), g.k());
        assert_eq!(back.vectors(), g.vectors());
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
