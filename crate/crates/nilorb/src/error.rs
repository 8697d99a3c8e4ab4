//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by the combinatorial operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An input violated a documented precondition (wrong type, wrong size, not special, ...).
    #[error("invalid input: {0}")]
    Validation(String),
    /// A textual input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A computation was requested beyond a configured rank bound.
    #[error("rank {rank} exceeds the configured bound {bound} for {what}")]
    BoundExceeded {
        /// What was being computed.
        what: String,
        /// Requested rank.
        rank: usize,
        /// Configured bound.
        bound: usize,
    },
    /// The answer depends on a decoration that the inputs do not determine.
    #[error("ambiguous: {0}")]
    Ambiguous(String),
    /// A data file (for instance an exceptional table) failed an integrity check.
    #[error("data error: {0}")]
    Data(String),
    /// An internal consistency check failed; this indicates a bug.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for building a [`Error::Validation`].
pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Validation(msg.into()))
}
