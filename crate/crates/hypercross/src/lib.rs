//! Exact computation of crossing pairs of hyperedges in d-dimensional
//! rectilinear drawings of complete d-uniform hypergraphs.
//!
//! Everything is decided in exact rational arithmetic: whether two
//! vertex-disjoint simplices cross, how a point configuration transforms
//! into a Gale diagram, which linear separations a rotating line through
//! the origin produces, and the closed-form crossing counts for vertices
//! on the moment curve. Geometric shortcuts (closed-form Gale diagrams,
//! the alternating-color crossing criterion) are validated against
//! brute-force oracles in the test suites.
//!
//! Module map:
//! - [`exact`]: rationals, matrices, determinants, null spaces, exact LP.
//! - [`configs`]: point configurations, moment-curve embeddings, position
//!   predicates, seeded random generators.
//! - [`gale`]: Gale transforms (generic and closed-form) and their
//!   span/convexity predicates.
//! - [`separations`]: rotating-line enumeration of linear separations of
//!   planar vector sequences.
//! - [`crossing`]: the simplex-crossing predicate and crossing-pair counts.
//! - [`moment`]: moment-curve combinatorics, crossing-count formulas, and
//!   bound evaluators.

pub mod configs;
pub mod crossing;
pub mod error;
pub mod exact;
pub mod gale;
pub mod moment;
pub mod separations;

pub use error::{Error, Result};
pub use exact::Rational;
