use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not invertible: constant term is not a unit")]
    NotInvertible,
    #[error("inverse square root needs constant term 1")]
    InvSqrtConstant,
    #[error("composition needs an inner series without constant term")]
    ComposeConstant,
    #[error("reversion needs f(0) = 0 and linear coefficient 1")]
    ReversionPrecondition,
    #[error("logarithm needs constant term 1")]
    LogConstant,
    #[error("exponential needs zero constant term")]
    ExpConstant,
    #[error("operation needs a finite truncation order")]
    Unbounded,
    #[error("insufficient order: need {needed}, have {available}")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("theta quotient has unresolved prefactor q^({0}/8)")]
    FractionalPrefactor(i64),
    #[error("partition mismatch: {0}")]
    PartitionMismatch(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: u32, got: u32 },
    #[error("value is not integral: {0}")]
    NonIntegral(String),
    #[error("singular matrix")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
