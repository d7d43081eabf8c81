use std::process::ExitCode;

use qschroder::hankel::VerifyError;
use qschroder::{FamilyError, JacobiError, SeriesError, SizeLimit};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Limit(String),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Jacobi(#[from] JacobiError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("could not render JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("could not render CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Usage(_) => 2,
            CliError::Limit(_) => 3,
            _ => 1,
        })
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Unknown(_) | FamilyError::UnknownRoute { .. } => CliError::Usage(e.to_string()),
            other => CliError::Verify(other.into()),
        }
    }
}

impl From<SizeLimit> for CliError {
    fn from(e: SizeLimit) -> Self {
        CliError::Limit(e.to_string())
    }
}
