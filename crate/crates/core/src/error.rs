use thiserror::Error;

/// Everything the library can reject.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported Lie type {0}")]
    UnsupportedType(String),
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("Weyl group of order {order} exceeds the cap of {cap}")]
    GroupTooLarge { order: u64, cap: u64 },
    #[error("representation of dimension {dim} exceeds the cap of {cap}")]
    RepresentationTooLarge { dim: String, cap: u64 },
    #[error("non-positive weight {value} at {weight:?} (positivity fails)")]
    NonPositiveWeight { weight: Vec<i64>, value: i64 },
    #[error("Weyl alternating denominator vanishes identically for central mu")]
    DegenerateWeylDenominator,
    #[error("exact division left a nonzero remainder ({0})")]
    NonExactDivision(String),
    #[error("truncation order {requested} exceeds the cap of {cap}")]
    TruncationTooLarge { requested: usize, cap: usize },
    #[error("numerator tail does not vanish at truncation {0}; retry with larger T")]
    TruncationInsufficient(usize),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("equation is not weighted-homogeneous: {0}")]
    NonHomogeneous(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("catalog error: {0}")]
    Catalog(String),
}

pub type Result<T> = std::result::Result<T, Error>;
