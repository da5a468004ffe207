use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    ExitCode::from(limag_cli::run(limag_cli::Cli::parse()))
}
