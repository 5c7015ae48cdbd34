use std::process::ExitCode;

use clap::Parser;
use qboole_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    ExitCode::from(run(&cli, &mut out))
}
