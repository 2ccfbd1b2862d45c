use std::io;
use std::path::PathBuf;

use crosssec_core::Error as ModelError;

/// Failures surfaced by the command-line tool. Each maps onto one exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed or inconsistent input.
    #[error("{0}")]
    Input(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    /// The model has no answer for otherwise valid input.
    #[error("{0}")]
    Model(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io { .. } => 1,
            CliError::Model(_) => 2,
        }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        match e {
            ModelError::InfeasibleSpec(_) | ModelError::Solve { .. } => CliError::Model(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}
