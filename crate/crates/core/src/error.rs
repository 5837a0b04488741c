use thiserror::Error;

/// Errors raised by the exact and multiprecision kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value {0} is outside the finite double range")]
    Range(String),
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("matrix is singular: {0}")]
    SingularMatrix(String),
    #[error("matrix is not totally positive: {0}")]
    NotTotallyPositive(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix of order {n} exceeds the enumeration limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("invalid nodes: {0}")]
    InvalidNodes(String),
    #[error("spectrum is not real: {0}")]
    NonRealSpectrum(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
