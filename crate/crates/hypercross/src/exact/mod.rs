//! Exact numeric substrate: rational scalars, dense matrices, and an
//! exact-arithmetic LP used by every geometric predicate.

pub mod lp;
pub mod matrix;
pub mod rational;

pub use lp::{lp_feasible, lp_max_slack, simplex_max, LpOutcome, LpProblem};
pub use matrix::Matrix;
pub use rational::{format_rational, parse_rational, rat, rat_int, sign, Rational};
