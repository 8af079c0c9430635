use thiserror::Error;

use crate::solver::Hypothesis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("algebra parameters must be nonzero")]
    ZeroParameter,
    #[error("operands belong to different algebras")]
    ParamsMismatch,
    #[error("element is not invertible (reduced norm is zero)")]
    NotInvertible,
    #[error("reconstruction identity violated: {0}")]
    IdentityViolation(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(Hypothesis),
    #[error("solution check failed: {0}")]
    VerificationFailed(String),
    #[error("closed form is only available for a = b = 1")]
    UnsupportedParams,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("fixture error: {0}")]
    Fixture(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
