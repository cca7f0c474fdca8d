use thiserror::Error;

/// Exit status for success or all checks passing.
pub const EXIT_OK: i32 = 0;
/// A check failed, or output could not be written.
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
/// The feasibility guard refused the request.
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] ggadget_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed graph document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed graph document: {0}")]
    Format(String),
    #[error("usage: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(ggadget_core::Error::Domain(_)) | CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(ggadget_core::Error::Resource(_) | ggadget_core::Error::Overflow(_)) => {
                EXIT_RESOURCE
            }
            _ => EXIT_FAILURE,
        }
    }
}
