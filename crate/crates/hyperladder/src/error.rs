//! Error taxonomy shared by every module.
//!
//! `Domain` marks inputs outside an operation's contract (bad parameters,
//! index ranges, malformed configs). `Numeric` marks a floating-point stage
//! that failed to converge or to meet its tolerance. `Internal` marks a
//! violated invariant that callers cannot trigger through valid input.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input violates an operation's precondition or a config is malformed.
    #[error("domain error: {0}")]
    Domain(String),
    /// A numeric stage failed: non-convergence or tolerance exceeded.
    #[error("numeric error: {0}")]
    Numeric(String),
    /// An internal consistency check failed; indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
