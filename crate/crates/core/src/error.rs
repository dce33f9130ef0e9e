use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input length or dimension does not fit the operation.
    #[error("size error: {0}")]
    Size(String),
    /// Parameter outside the operation's domain (unknown variant, bad band index, ...).
    #[error("domain error: {0}")]
    Domain(String),
    #[error("non-finite sample at index {0}")]
    NonFinite(usize),
    /// Input is valid but carries no information the operation can use.
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

impl Error {
    pub(crate) fn size(msg: impl Into<String>) -> Self {
        Error::Size(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
