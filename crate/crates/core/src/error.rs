use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("singular pairing")]
    SingularPairing,
    #[error("zero subspace")]
    ZeroSubspace,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("not nilpotent")]
    NotNilpotent,
    #[error("invalid case parameters: {0}")]
    InvalidCase(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("empty orbit label {0}")]
    EmptyLabel(String),
    #[error("inconsistent samples: {0}")]
    InconsistentSamples(String),
    #[error("unassignable: {0}")]
    Unassignable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
