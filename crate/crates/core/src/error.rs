use thiserror::Error;

/// Failure modes shared by every operation in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Inputs outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A search, enumeration or sampling budget would be exceeded.
    #[error("capacity error: {0}")]
    Capacity(String),
    /// The input is valid but no construction case applies to it.
    #[error("unsupported instance: {0}")]
    Unsupported(String),
    /// A postcondition that should hold by construction did not.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn capacity<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Capacity(msg.into()))
}
