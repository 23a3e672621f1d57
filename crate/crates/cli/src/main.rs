// SPDX-License-Identifier: Apache-2.0

//! `girthpath`: generate, analyze, verify and export digraphs.
//!
//! Exit codes: 0 success, 1 assertion failure, 2 usage or parse error,
//! 3 resource or scale limit.

mod analyze;
mod error;
mod export;
mod generate;
mod manifest;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use girthpath::SolverLimits;

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "girthpath",
    version,
    about = "Girth and longest directed paths in digraphs"
)]
struct Cli {
    /// Solver limits as `dp=22,bb=40,budget=100000000`.
    #[arg(long, env = "GIRTHPATH_LIMITS", global = true)]
    limits: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a construction or random instance as an edge list.
    #[command(subcommand)]
    Generate(generate::GenerateCommand),
    /// Girth, longest path, bounds and key-lemma report as JSON.
    Analyze(analyze::AnalyzeArgs),
    /// Run a seeded verification suite.
    Verify(verify::VerifyArgs),
    /// Convert an instance to DOT, JSON, CSV or the canonical edge list.
    Export(export::ExportArgs),
}

fn limits(cli: &Cli) -> Result<SolverLimits, CliError> {
    match &cli.limits {
        Some(text) => text
            .parse()
            .map_err(|e: girthpath::SolverError| CliError::Usage(e.to_string())),
        None => Ok(SolverLimits::default()),
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let limits = limits(&cli)?;
    match cli.command {
        Command::Generate(cmd) => generate::run(cmd),
        Command::Analyze(args) => analyze::run(args, &limits),
        Command::Verify(args) => verify::run(args, limits),
        Command::Export(args) => export::run(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
