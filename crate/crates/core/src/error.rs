use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown step token {token:?} at position {position}")]
    Parse { position: usize, token: String },

    #[error("invalid constraints: {0}")]
    InvalidConstraints(String),

    #[error("size {size} exceeds the exhaustive generation cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("square root needs an even valuation, got {0}")]
    OddValuation(i64),

    #[error("square root needs a rational square leading coefficient, got {0}")]
    NonSquareLeading(String),

    #[error("division by a series that vanishes to its known order {0}")]
    DivisionByZero(i64),

    #[error("series known only to w^{known}, needed w^{needed}")]
    InsufficientPrecision { known: i64, needed: i64 },

    #[error("series has a nonzero odd power of w at w^{0}")]
    OddTerm(i64),

    #[error("coefficient of z^{index} is not a non-negative integer: {value}")]
    NotACount { index: usize, value: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("path is not in the image of the map: {0}")]
    NotInImage(String),

    #[error("expected number of steps is undefined: no paths end at ({n}, {k})")]
    UndefinedExpectation { n: i64, k: i64 },

    #[error("source {source_name} cannot provide exact values for {formula}")]
    UnsupportedSource { formula: String, source_name: String },

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
