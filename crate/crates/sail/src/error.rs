//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {context}: expected {expected}, got {actual}")]
    ShapeMismatch {
        context: String,
        expected: String,
        actual: String,
    },

    #[error("backward requires a scalar loss node, got shape {0:?}")]
    NonScalarLoss(Vec<usize>),

    #[error("non-finite value in {context}{}", sample.map(|i| format!(" (sample {i})")).unwrap_or_default())]
    NonFinite {
        context: String,
        sample: Option<usize>,
    },

    #[error("NaN gradient for parameter '{0}'")]
    NanGradient(String),

    #[error("degenerate input in {context}: {detail}")]
    DegenerateInput { context: String, detail: String },

    #[error("environment error: {0}")]
    Env(String),

    #[error("invalid mixture weights: {0}")]
    MixtureWeights(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("empty input in {0}")]
    EmptyInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code for the CLI: 2 for configuration problems, 3 for numeric failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::MixtureWeights(_) => 2,
            _ => 3,
        }
    }
}
