use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A sequence or diagram violates a structural invariant.
    #[error("validation error at index {index}: {reason}")]
    Validation { index: i64, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    /// The engine contradicted one of its own invariants. Never expected on
    /// valid inputs.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("range too large: {what} exceeds the bound {bound}")]
    RangeTooLarge { what: String, bound: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
