//! Command-line front end: graph exports, verification suites and reports.

pub mod commands;
pub mod error;
pub mod export;
pub mod report;

pub use commands::{run, Cli, Command};
pub use error::CliError;

/// Environment variable overriding the largest buildable parameter.
pub const MAX_ELL_ENV: &str = "GGADGET_MAX_ELL";

/// The feasibility limit from the environment, or the library default.
pub fn max_ell_from_env() -> Result<u32, CliError> {
    match std::env::var(MAX_ELL_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{MAX_ELL_ENV} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(ggadget_core::construction::DEFAULT_MAX_ELL),
    }
}
