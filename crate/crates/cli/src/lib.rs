//! Library side of the `ncr` command: problem-file parsing, the commands,
//! and result documents. The binary is a thin wrapper around [`run`].

pub mod commands;
pub mod demo;
pub mod encode;
pub mod error;
pub mod problem;
pub mod report;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

pub use commands::MapKind;
pub use error::{CliError, Result};
pub use problem::{parse_problem, AnyProblem, Problem};
pub use report::Report;

#[derive(Debug, Parser)]
#[command(name = "ncr", version, about = "Admissible pairs of splittings and their non-commutative cross-ratios")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the result document here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Zero threshold for the complex-float field.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,

    /// Seed for the randomized verifications.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the four splitting conditions of a pair.
    Admissible {
        #[arg(long)]
        input: PathBuf,
        /// Pair name; may be omitted when the file defines a single pair.
        #[arg(long)]
        pair: Option<String>,
    },
    /// Compute DV, D̃V or Ξ of an admissible pair.
    Crossratio {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        pair: Option<String>,
        #[arg(long, value_enum, default_value_t = MapKind::Tilde)]
        map: MapKind,
    },
    /// Run one of the worked-example suites.
    Demo {
        #[command(subcommand)]
        which: Demo,
    },
}

#[derive(Debug, Subcommand)]
pub enum Demo {
    /// Truncated Fourier model of L²(S¹).
    Fourier {
        /// Truncation order N (modes −N..=N).
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Formal symbols with the odd/even and ξ-sign splittings.
    Symbols {
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        d_min: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        d_max: i64,
        /// Fourier truncation of each coefficient function.
        #[arg(long, default_value_t = 1)]
        modes: usize,
    },
    /// μ-partitions of a finite ground set.
    Measures {
        #[arg(long, default_value_t = 3)]
        points: usize,
        #[arg(long, default_value_t = 1)]
        value_dim: usize,
    },
}

fn load(path: &Path) -> Result<AnyProblem> {
    let src = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })?;
    parse_problem(&src, &path.display().to_string())
}

/// Runs a parsed command line and returns its result document.
pub fn run(cli: &Cli) -> Result<Report> {
    if let Some(tol) = cli.tolerance {
        ncr_core::linalg::set_float_tolerance(tol)?;
    }
    let uses_floats = |p: &AnyProblem| matches!(p, AnyProblem::ComplexFloat(_));
    let reject_tolerance = || {
        Err(CliError::Usage("--tolerance applies only to complex-float problems".into()))
    };
    match &cli.command {
        Command::Admissible { input, pair } => {
            let problem = load(input)?;
            if cli.tolerance.is_some() && !uses_floats(&problem) {
                return reject_tolerance();
            }
            match &problem {
                AnyProblem::Rational(p) => commands::admissible(p, pair.as_deref()),
                AnyProblem::ComplexFloat(p) => commands::admissible(p, pair.as_deref()),
            }
        }
        Command::Crossratio { input, pair, map } => {
            let problem = load(input)?;
            if cli.tolerance.is_some() && !uses_floats(&problem) {
                return reject_tolerance();
            }
            match &problem {
                AnyProblem::Rational(p) => commands::crossratio(p, pair.as_deref(), *map, cli.seed),
                AnyProblem::ComplexFloat(p) => commands::crossratio(p, pair.as_deref(), *map, cli.seed),
            }
        }
        Command::Demo { .. } if cli.tolerance.is_some() => reject_tolerance(),
        Command::Demo { which } => match *which {
            Demo::Fourier { order } => demo::fourier(order, cli.seed),
            Demo::Symbols { d_min, d_max, modes } => demo::symbols(d_min, d_max, modes, cli.seed),
            Demo::Measures { points, value_dim } => demo::measures(points, value_dim, cli.seed),
        },
    }
}

/// Process exit codes.
pub mod exit {
    /// Every requested verification passed.
    pub const PASS: i32 = 0;
    /// The document was produced but some verification failed.
    pub const FAIL: i32 = 1;
    /// No document: invalid input, usage or I/O error.
    pub const ERROR: i32 = 2;
}
