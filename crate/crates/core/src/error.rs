use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("too many variables: {0} (maximum is {max})", max = crate::poly::MAX_VARS)]
    TooManyVars(usize),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("polynomial is not divisible by the product of all variables")]
    NotDivisible,
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("degree {0} exceeds the supported maximum of 4")]
    DegreeTooHigh(u32),
    #[error("basis expansion left a nonzero residual")]
    Residual,
    #[error("determinant twist r(S-s)/2 = {0} is not an integer")]
    Parity(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
