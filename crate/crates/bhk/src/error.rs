use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("no positive weight system: {0}")]
    NoPositiveWeights(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("not an invertible-polynomial shape: {0}")]
    NotInvertibleShape(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("exponential grading operators differ: {0}")]
    JMismatch(String),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("ambient is not Gorenstein: {0}")]
    NotGorenstein(String),
    #[error("point fails invariance or degree constraint: {0}")]
    InvarianceViolation(String),
    #[error("degenerate point configuration: {0}")]
    DegenerateConfig(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
