use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("flux derivative has no sign change on [0, {u_max}]; flux is not unimodal")]
    NoMinimizer { u_max: f64 },

    #[error("size mismatch: expected {expected} values, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("invalid hierarchy: {0}")]
    Hierarchy(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid value for `{field}`: {reason}")]
    Invalid { field: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(field: &str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            field: field.to_string(),
            reason: reason.into(),
        }
    }

    /// True for errors caused by bad user input rather than runtime failure.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::Invalid { .. } | Error::Hierarchy(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
