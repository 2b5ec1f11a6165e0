use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("invalid coefficient field: {0}")]
    InvalidField(String),
    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("the defining ideal contains 1; the zero ring is not supported")]
    ZeroRing,
    #[error("operation undefined on the zero module: {0}")]
    ZeroModule(String),
    #[error("ring is not artinian (Krull dimension {0})")]
    NotArtinian(i64),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
