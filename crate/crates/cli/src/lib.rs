//! Driver behind the `tropfit` binary: argument definitions, reference data
//! generators, the random benchmark and the reproduction checks.

pub mod bench;
pub mod cli;
pub mod commands;
pub mod config;
pub mod datasets;
pub mod repro;

use std::process::ExitCode;

use clap::Parser;

use crate::commands::Outcome;

/// Exit status for a budget that cannot be met.
pub const EXIT_INFEASIBLE: u8 = 2;

/// Parses arguments, runs the command and maps the result to an exit code:
/// 0 ok, 2 infeasible, 1 error or failed checks.
pub fn main_entry() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = cli::Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Infeasible) => ExitCode::from(EXIT_INFEASIBLE),
        Ok(Outcome::ChecksFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
