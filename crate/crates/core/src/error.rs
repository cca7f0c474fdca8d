use thiserror::Error;

/// Errors raised by construction and analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Integer arithmetic would overflow the representable width.
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    /// The requested object is too large to build.
    #[error("resource limit: {0}")]
    Resource(String),
    /// A structural precondition on the input does not hold.
    #[error("contract violation: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;
