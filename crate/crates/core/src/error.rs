use thiserror::Error;

/// Errors raised by the library.
///
/// The variants map onto the CLI exit codes: validation problems exit with 1,
/// capacity problems with 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Validation(String),

    #[error("ground sets differ in size: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("linear system has no unique solution: {0}")]
    Singular(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity(_))
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
