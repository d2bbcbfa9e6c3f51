//! Errors of the command-line front end and their exit codes.

use tritrop_core::curve33::CurveError;

/// Failures of a command.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// The input curve is not smooth.
    #[error("{0}")]
    NotSmooth(#[from] CurveError),
    /// Every perturbation attempt was non-generic.
    #[error("non-generic input after {attempts} attempts: {last}")]
    NonGeneric {
        /// Number of attempts made.
        attempts: u32,
        /// Error of the last attempt.
        last: String,
    },
    /// The analysis finished but some consistency checks failed.
    #[error("consistency checks failed: {}", .0.join(", "))]
    ChecksFailed(Vec<&'static str>),
    /// Malformed input.
    #[error("invalid input: {0}")]
    Input(String),
    /// Unknown class id.
    #[error("unknown class id {0}")]
    UnknownClass(usize),
    /// File system failure.
    #[error("{0}")]
    Io(#[from] std::io::Error),
    /// JSON failure.
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Process exit code.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::NotSmooth(_) => 2,
            CliError::NonGeneric { .. } => 3,
            CliError::ChecksFailed(_) => 1,
            _ => 4,
        }
    }
}
