use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("state validation failed: {0}")]
    InvalidState(String),

    #[error("matrix contains non-finite entries")]
    NonFiniteEntries,

    #[error("matrix is not symmetric within tolerance (max asymmetry {0:.3e})")]
    NotSymmetric(f64),

    #[error("insufficient moments: need a_0..a_{needed}, have a_0..a_{have}")]
    InsufficientMoments { needed: usize, have: usize },

    #[error("no sign change bracketed on [{lo}, {hi}]: both endpoints give the same verdict")]
    NoBracket { lo: f64, hi: f64 },

    #[error("discriminant changes sign {count} times on [{lo}, {hi}]; refine the range")]
    MultipleBrackets { lo: f64, hi: f64, count: usize },

    #[error("evaluation produced a non-finite discriminant at parameter {0}")]
    NonFiniteDiscriminant(f64),

    #[error("invalid axis: {0}")]
    InvalidAxis(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
