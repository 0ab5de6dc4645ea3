//! File formats, subcommands and reports of the `lincode` command.

pub mod error;
pub mod files;
pub mod report;
pub mod run;

pub use error::CliError;
pub use report::RunReport;
pub use run::{render_text, run, Cli, Command};

/// Builds the global worker pool from `LINCODE_THREADS`, if set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("LINCODE_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Threads(format!("expected a positive integer, found {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Threads(e.to_string()))
}
