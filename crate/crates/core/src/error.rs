use thiserror::Error;

use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: Ring, right: Ring },

    #[error("truncation mismatch: degree {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    /// `1 < 1` and `1 > 1` have no meaning; left and right products need a unit-free operand.
    #[error("undefined unit product: {0}")]
    UndefinedUnitProduct(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

impl AlgebraError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        AlgebraError::InvalidArgument(msg.into())
    }
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
