use thiserror::Error;

/// Failure classes shared by every module. The CLI maps `Usage`, `Capability`
/// and `Parse` onto exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("capability error: {0}")]
    Capability(String),
    /// A result that contradicts a theorem the library relies on. Seeing this
    /// means the implementation is wrong, not the input.
    #[error("integrity error: {0}")]
    Integrity(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
