use thiserror::Error;

/// Errors raised by group construction, analysis and verification.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group order {projected} exceeds the configured cap {cap}")]
    Capacity { projected: u128, cap: usize },

    #[error("group table rejected: {0}")]
    Validation(String),

    #[error("parse error at position {pos} near {token:?}: {message}")]
    Parse {
        pos: usize,
        token: String,
        message: String,
    },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("capability error: {0}")]
    Capability(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A finite-case identity the engine asserts did not hold. Always a bug.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
