use qrac_core::QracError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("malformed scheme: {0}")]
    Malformed(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invariant(_) => 3,
            _ => 2,
        }
    }
}

impl From<QracError> for CliError {
    fn from(e: QracError) -> Self {
        match e {
            QracError::Domain(_)
            | QracError::Capacity { .. }
            | QracError::UnknownScheme(_)
            | QracError::InvalidBits(_) => CliError::Usage(e.to_string()),
            QracError::MalformedScheme(_) => CliError::Malformed(e.to_string()),
            _ => CliError::Invariant(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
