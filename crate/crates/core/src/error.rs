//! Error types shared across the library.

use thiserror::Error;

/// Errors raised by the measurement engine and the protocol layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// The weak value diverges because pre- and post-selected states are orthogonal.
    #[error("undefined weak value: pre- and post-selected states are orthogonal")]
    UndefinedWeakValue,
    /// An honest party attempted a second strong measurement on a consumed spin.
    #[error("protocol violation: {0}")]
    ProtocolViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
