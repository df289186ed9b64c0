use std::process::ExitCode;

use mwc_power::{LimitError, ValidationError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(ValidationError),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Limit(#[from] LimitError),
    #[error("direct computation disagrees with the oracle")]
    Mismatch,
}

impl CliError {
    /// 1 verification mismatch, 2 bad input, 3 resource cap.
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Mismatch => ExitCode::from(1),
            CliError::Validation(_) | CliError::Input(_) => ExitCode::from(2),
            CliError::Limit(_) => ExitCode::from(3),
        }
    }
}

impl From<mwc_power::Error> for CliError {
    fn from(e: mwc_power::Error) -> Self {
        match e {
            mwc_power::Error::Validation(v) => CliError::Validation(v),
            mwc_power::Error::Limit(l) => CliError::Limit(l),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
