use lightleaf_core::Error;

/// Failures of a CLI run, grouped by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad system, word, flag or file. Exit code 2.
    #[error("{0}")]
    Config(String),
    /// An enumeration or size guard was hit. Exit code 3.
    #[error("{0}")]
    Guard(String),
    /// Two computations that must agree did not. Exit code 4.
    #[error("{0}")]
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Inconsistent(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded { .. } => CliError::Guard(format!("{e} (raise --max-word-len to allow it)")),
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Config(format!("invalid JSON: {e}"))
    }
}
