use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("exponential needs a series with zero constant term")]
    NonzeroConstantTerm,
    #[error("quotient is not finite-dimensional: no pure power of {0} is a leading monomial")]
    InfiniteStaircase(&'static str),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("lattice mismatch: {0}")]
    Lattice(String),
    #[error("series is not of simple type")]
    NotSimpleType,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// An algebraic identity that should hold failed to verify.
    #[error("falsified: {0}")]
    Falsified(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
