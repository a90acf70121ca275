//! `shiftcf`: factor, solve and verify second-order difference equations
//! from the command line.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 math error (factorization breakdown, division by zero).

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::{CliError, Outcome};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Usage(_) | CliError::Io(_) => 2,
                CliError::Math(_) => 3,
            })
        }
    }
}
