use thiserror::Error;

/// CLI failure, carrying the process exit code contract:
/// 2 parse, 3 validation, 4 I/O, 5 numeric.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("I/O error: {0}")]
    Io(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Io(_) => 4,
            CliError::Numeric(_) => 5,
        }
    }
}

impl From<entangle_core::Error> for CliError {
    fn from(e: entangle_core::Error) -> Self {
        match e {
            entangle_core::Error::Precondition(msg) => CliError::Validation(msg),
            other => CliError::Numeric(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
