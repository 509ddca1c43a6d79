use thiserror::Error;

/// Errors surfaced by geometric and numeric operations.
///
/// Everything here indicates a contract violation or a degenerate input;
/// no variant encodes a numeric failure, since all arithmetic is exact.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error(
        "general-position query is degenerate: {n} points in dimension {dim} (need at least dim+1)"
    )]
    DegenerateQuery { n: usize, dim: usize },

    #[error("points are not in general position")]
    NotGeneralPosition,

    #[error("affine hull is not full-dimensional (rank {rank}, expected {expected})")]
    FlatConfiguration { rank: usize, expected: usize },

    #[error("parameter sequence is not strictly increasing")]
    NotIncreasing,

    #[error("expected {expected} points, got {got}")]
    WrongPointCount { expected: usize, got: usize },

    #[error("index sets are not disjoint")]
    NotDisjoint,

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("configuration too small: n = {n} but need n >= {need}")]
    TooFewPoints { n: usize, need: usize },

    #[error("retry budget exhausted after {attempts} attempts")]
    GenerationExhausted { attempts: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
