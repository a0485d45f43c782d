//! Command-line front end for the workspace: experiment dispatch, parameter
//! sweeps, CSV/JSON artifact export, and the acceptance-suite runner.
//!
//! Exit-code contract: 0 success, 2 accuracy error, 3 domain error.
//! All artifacts are byte-identical for identical configuration (fixed
//! seeds, ordered output assembly).

pub mod commands;
pub mod params;
pub mod table;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Precondition or usage violation → exit 3.
    #[error("domain error: {0}")]
    Domain(String),
    /// A computed quantity missed its accuracy target → exit 2.
    #[error("accuracy error: {0}")]
    Accuracy(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Accuracy(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 3,
        }
    }
}

impl From<moyal_core::MoyalError> for CliError {
    fn from(e: moyal_core::MoyalError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<ribbon::RibbonError> for CliError {
    fn from(e: ribbon::RibbonError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<eps_graded::EpsError> for CliError {
    fn from(e: eps_graded::EpsError) -> Self {
        CliError::Domain(e.to_string())
    }
}
