//! Crate error type.

use thiserror::Error;

/// Errors produced by the library.
///
/// File-format problems are split into distinct variants so callers (and
/// tests) can tell a corrupted header from a short read or a version skew.
#[derive(Debug, Error)]
pub enum GdError {
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("bad magic: expected {expected:?}, found {found:?}")]
    BadMagic { expected: [u8; 4], found: [u8; 4] },

    #[error("truncated file: {0}")]
    Truncated(String),

    #[error("version mismatch: expected {expected}, found {found}")]
    VersionMismatch { expected: u32, found: u32 },

    #[error("config error: {0}")]
    Config(String),

    #[error("checkpoint mismatch: {0}")]
    CheckpointMismatch(String),

    #[error("training aborted: {0}")]
    Train(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl GdError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        GdError::Invalid(msg.into())
    }

    pub fn shape(msg: impl Into<String>) -> Self {
        GdError::Shape(msg.into())
    }
}
