use thiserror::Error;

/// Failures shared by every module.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The caller supplied data that violates an operation's precondition.
    #[error("invalid input: {0}")]
    Input(String),
    /// An enumeration guard was tripped before any work was done.
    #[error("resource guard exceeded: {0}")]
    Resource(String),
    /// An internal consistency check failed.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
