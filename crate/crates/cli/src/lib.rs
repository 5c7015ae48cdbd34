//! Front end for `qboole`: emits family tables and runs identity suites.
//!
//! Data goes to the supplied writer (stdout in the binary), diagnostics to
//! stderr. Exit codes: 0 success, 1 an identity failed, 2 usage or
//! configuration error.

pub mod args;
pub mod encode;
pub mod table;
pub mod verify;

use std::io::Write;

pub use args::{Cli, Command, Format};

pub const EXIT_OK: u8 = 0;
pub const EXIT_IDENTITY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Kernel(#[from] qboole_core::Error),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization failed: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> u8 {
    let result = match &cli.command {
        Command::Table(t) => table::run_table(t, out).map(|()| EXIT_OK),
        Command::Verify(v) => verify::run_verify(v, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Io(_) => EXIT_IDENTITY_FAILED,
                _ => EXIT_USAGE,
            }
        }
    }
}
