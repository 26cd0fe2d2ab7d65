//! `hch`: batch front end for relative homology of Harish-Chandra modules.
//!
//! Exit codes: 0 success, 1 internal failure, 2 invalid input, 3 the
//! computation ran but stabilization was not certified (the raw window data
//! is still written).

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hch::Error;

#[derive(Parser)]
#[command(name = "hch", version, about = "Relative Lie algebra homology of Harish-Chandra modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
pub struct Global {
    /// Output format; `sl2-demo` defaults to tsv, everything else to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Stabilization windows for band modules, e.g. `16,24,32,48`.
    /// `HCH_MAX_WINDOW` caps them.
    #[arg(long, global = true, value_delimiter = ',')]
    windows: Option<Vec<i64>>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

/// Inputs are file paths or inline JSON.
#[derive(Subcommand)]
enum Command {
    /// Validate a pair, a subpair, and optionally a module over it.
    Verify {
        #[arg(long)]
        pair: Option<String>,
        #[arg(long)]
        subpair: Option<String>,
        #[arg(long, requires = "subpair")]
        module: Option<String>,
    },
    /// Relative homology `H_n(h, K^H; M)`.
    Homology(SubpairModule),
    /// `dim Ext^n(M, C)`, cross-checked by three independent routes.
    Ext(SubpairModule),
    /// Euler-Poincaré characteristic.
    Ep(SubpairModule),
    /// Coinvariants `M / hM` on the `K^H`-invariant part.
    Coinv(SubpairModule),
    /// Check the h-complex axioms on a given h-complex or a truncated
    /// standard resolution.
    Hcheck {
        #[arg(long)]
        pair: String,
        #[arg(long, conflicts_with = "resolution", required_unless_present = "resolution")]
        hcomplex: Option<String>,
        /// Cutoff of the standard resolution to build and check.
        #[arg(long)]
        resolution: Option<u32>,
        /// Also write the checked h-complex as JSON.
        #[arg(long)]
        save_hcomplex: Option<PathBuf>,
    },
    /// Branching of SL(2) principal series to a subpair, swept over λ.
    Sl2Demo {
        /// Comma-separated values, integers or `p/q`.
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<String>,
        #[arg(long, default_value_t = 0)]
        epsilon: u8,
        #[arg(long, default_value = "diagonal_torus")]
        subpair: String,
    },
}

#[derive(Args)]
struct SubpairModule {
    #[arg(long)]
    subpair: String,
    #[arg(long)]
    module: String,
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Input(String),
    Validation(String),
    Output(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Unsupported(_) | Error::OracleMismatch(_)) | CliError::Output(_) => 1,
            _ => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(s) | CliError::Output(s) => f.write_str(s),
            CliError::Validation(s) => write!(f, "validation failed: {s}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, &cli.global) {
        Ok(certified) => ExitCode::from(if certified { 0 } else { 3 }),
        Err(e) => {
            eprintln!("hch: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
