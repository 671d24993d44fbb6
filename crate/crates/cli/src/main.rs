//! `deformkit` command-line front end for finite-dimensional algebras.
//!
//! Exit codes: 0 on success (negative verdicts included), 1 on usage errors,
//! 2 on input or validation errors.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use deformkit::Scalar;

#[derive(Parser, Debug)]
#[command(name = "deformkit", version, about = "Exact finite-dimensional algebras and their deformations")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report (for `build`, the algebra file) here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the structure-constant algebra of a presentation file.
    Build {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Radical and block profile of algebra or presentation files.
    Analyze {
        #[arg(long, required = true)]
        input: Vec<PathBuf>,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Specialize a deformation family along base·2^-k and report the stable profile.
    Scan {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        schedule: ScheduleArgs,
    },
    /// Tower-family obstruction report over all semisimple types of the dimension.
    Obstruct {
        #[arg(long)]
        input: PathBuf,
        /// Generator name (or basis label), or a comma-separated coordinate vector. Give twice.
        #[arg(long = "gen", num_args = 1)]
        generators: Vec<String>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List the semisimple ℂ-algebra types of dimension n.
    Enumerate {
        n: usize,
        #[arg(long)]
        max_block: Option<usize>,
    },
    /// Dimensions of the standard-identity span and the ideal it generates.
    IdentitySpan {
        #[arg(long, required = true)]
        input: Vec<PathBuf>,
        /// Half the identity degree; all m up to ⌊√n⌋ when omitted.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct ScheduleArgs {
    #[arg(long, default_value = "1/2")]
    base: Scalar,
    #[arg(long, default_value_t = 12)]
    count: usize,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
}

impl CliError {
    fn input(e: impl std::fmt::Display) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
