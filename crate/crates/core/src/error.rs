use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point set is empty")]
    EmptyPointSet,

    #[error("duplicate coordinate in dimension {dim} (points {first} and {second}); rank-normalize first")]
    DuplicateCoordinates {
        dim: usize,
        first: usize,
        second: usize,
    },

    #[error("all points are collinear")]
    Collinear,

    #[error("cocircular quadruple ({0}, {1}, {2}, {3}); perturb the input")]
    Cocircular(usize, usize, usize, usize),

    #[error("too few points: need at least {needed}, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("family mismatch: expected {expected}, got {got}")]
    FamilyMismatch { expected: String, got: String },

    #[error("unsupported dimension {0} for box oracle (only 1, 2 and 3)")]
    UnsupportedDimension(usize),

    #[error("invalid net: {0}")]
    InvalidNet(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("budget exceeded: {used} predicate evaluations > {budget}; use a smaller instance")]
    BudgetExceeded { used: u64, budget: u64 },

    #[error("generator self-check failed: {0}")]
    SelfCheck(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal defect: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
