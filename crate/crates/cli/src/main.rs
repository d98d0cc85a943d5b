//! `gsp-frames` command-line front end.
//!
//! Exit codes: 0 positive verdict, 1 negative verdict, 2 usage or I/O
//! error, 3 parse error, 4 numerical failure.

mod args;
mod commands;
mod error;
mod input;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(&cli.command, cli.output, cli.tol) {
        Ok(outcome) => {
            print!("{}", outcome.body);
            ExitCode::from(if outcome.positive { 0 } else { 1 })
        }
        Err(e) => {
            if !matches!(e, error::CliError::Disagreement) {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
