use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Shapes, moduli, rings or lengths that do not fit together.
    #[error("structural error: {0}")]
    Structural(String),
    /// A value outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An operation was called on an input that does not satisfy its precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    /// A mathematical guarantee failed to hold; indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
