//! `ngwp`: verify wave-packet identities and evaluate wave functions on grids.

mod document;
mod eval;
mod grid;
mod list;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// Exit status for a usage or domain error.
pub const EXIT_USAGE: u8 = 2;
/// Exit status when a check fails or an evaluation cannot be completed.
pub const EXIT_FAIL: u8 = 1;

#[derive(Parser, Debug)]
#[command(name = "ngwp", version, about = "Non-Gaussian wave packets: identity checks and wave-function evaluation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run identity checks and report pass/fail.
    Verify(verify::VerifyArgs),
    /// Evaluate a wave function on a grid and write CSV.
    Eval(eval::EvalArgs),
    /// List the identity catalog.
    List(ListArgs),
}

#[derive(Args, Debug)]
struct ListArgs {
    /// Print the catalog as a JSON array.
    #[arg(long)]
    json: bool,
}

/// Failure categories mapped onto exit codes.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failed(_) => EXIT_FAIL,
        }
    }
}

impl From<ngwp_core::Error> for CliError {
    fn from(e: ngwp_core::Error) -> Self {
        match e {
            ngwp_core::Error::Usage(_) | ngwp_core::Error::Domain(_) => CliError::Usage(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Verify(a) => verify::run(&a),
        Command::Eval(a) => eval::run(&a),
        Command::List(a) => list::run(a.json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            match &e {
                CliError::Usage(m) => eprintln!("error: {m}"),
                CliError::Failed(m) => eprintln!("failed: {m}"),
            }
            ExitCode::from(e.code())
        }
    }
}
