use thiserror::Error;
use weil_core::Error as CoreError;

/// A failed command, carrying the process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("wrong stratum: {0}")]
    WrongStratum(String),
    #[error("{0} (`weil cayley <class>`)")]
    SingularLocus(String),
    #[error("{0}")]
    NotImaginary(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Invalid(_) => 2,
            CliError::WrongStratum(_) => 3,
            CliError::SingularLocus(_) => 4,
            CliError::NotImaginary(_) => 5,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let msg = e.to_string();
        match e {
            CoreError::Parse(_) => CliError::Parse(msg),
            CoreError::NotOnZ | CoreError::NotOnS | CoreError::NotRankTwo | CoreError::ZeroInput => {
                CliError::WrongStratum(msg)
            }
            CoreError::OnSingularLocus => CliError::SingularLocus(msg),
            CoreError::NotImaginary(_) => CliError::NotImaginary(msg),
            CoreError::Internal(_) => CliError::Internal(msg),
            _ => CliError::Invalid(msg),
        }
    }
}
