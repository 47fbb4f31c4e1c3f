use alloc::string::String;

/// Failures raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("root scan of the zero polynomial")]
    ZeroPolynomial,
    #[error("system is singular for every value of lam")]
    IdenticallySingular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("unknown basis element: {0}")]
    UnknownBasis(String),
    #[error("operator order too low: {0}")]
    OrderTooLow(String),
    #[error("weight is not a nonnegative integer combination of positive roots")]
    NotPositiveCombination,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("verification failed: {0}")]
    Verification(String),
}
