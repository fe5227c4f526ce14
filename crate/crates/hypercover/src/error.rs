use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an operation's inputs was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// An oracle or enumeration was asked to exceed its configured bound.
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    /// Malformed JSON or an unparsable rational/descriptor.
    #[error("parse error: {0}")]
    Parse(String),

    /// A condition the library guarantees internally failed to hold.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn bound(msg: impl Into<String>) -> Self {
        Error::BoundExceeded(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
