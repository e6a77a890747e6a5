use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by zero")]
    DivisionByZero,

    /// A configured computational bound was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),

    /// No data is available for the requested dimension.
    #[error("unsupported dimension: {0}")]
    UnsupportedDimension(String),

    /// An input file could not be read.
    #[error("cannot read {path}: {message}")]
    Input { path: String, message: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A geometric construction collapsed (zero vector, nonzero intersection).
    #[error("degenerate: {0}")]
    Degenerate(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Explicit input disagrees with the encoded sphere tables.
    #[error("input contradicts table: {0}")]
    InputContradictsTable(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
