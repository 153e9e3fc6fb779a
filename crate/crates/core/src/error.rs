use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unsupported type: {0}")]
    UnsupportedType(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("numeric failure: {0}")]
    NumericFailure(String),

    #[error("regularity failure: kernel dimension {found}, expected {expected}")]
    Regularity { found: usize, expected: usize },

    #[error("spectrum/plane mismatch: best residual {residual:e}")]
    Mismatch { residual: f64 },

    #[error("character table out of desk scale: dimension {dim} exceeds cap {cap}")]
    OutOfDeskScale { dim: u128, cap: u128 },

    #[error("inadmissible asymptotic data: {0}")]
    Inadmissible(String),

    #[error("consistency failure: {0}")]
    Consistency(String),

    #[error("integrator failure: {0}")]
    Integrator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
