use thiserror::Error;

/// Errors surfaced by the recoloring toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or mismatched input (vertex counts, colors out of range, ...).
    #[error("invalid input: {0}")]
    Input(String),
    /// An algorithm was called outside its contract (too few colors, improper coloring, ...).
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An exact search or state enumeration would exceed its configured guard.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    /// A recoloring sequence failed validation at `step` (0-based).
    #[error("invalid recoloring step {step}: {reason}")]
    InvalidStep { step: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
