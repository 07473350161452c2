//! Crate-wide error type.

use thiserror::Error;

use crate::geometry::Violation;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on user-supplied input failed.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A drawing failed good-drawing validation; the violations explain why.
    #[error("invalid drawing: {}", format_violations(.0))]
    InvalidDrawing(Vec<Violation>),

    /// Input was refused because it exceeds the intended problem scale.
    #[error("scale guard: {0}")]
    ScaleGuard(String),

    /// A malformed file or serialized structure.
    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

fn format_violations(violations: &[Violation]) -> String {
    match violations.first() {
        None => "no violations recorded".to_string(),
        Some(first) if violations.len() == 1 => first.to_string(),
        Some(first) => format!("{first} (+{} more)", violations.len() - 1),
    }
}
