//! Command-line front end for the fracshoot solver library.
//!
//! Exit codes: 0 on success, 1 on validation errors (bad flags, unknown
//! problem ids, inadmissible meshes), 2 on numerical failures (solver
//! breakdown, accuracy targets not met, shooting that fails to converge).

mod bench;
mod commands;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use fracshoot::fode::{Method, MeshError, SolveError};
use fracshoot::mlf::MlfError;
use fracshoot::problems::{by_name, Problem, ProblemError};
use fracshoot::shooting::{ShootError, Strategy};
use std::path::PathBuf;

#[derive(Debug)]
pub enum CliError {
    /// Bad input: exit code 1.
    Validation(String),
    /// Failure while computing or writing results: exit code 2.
    Runtime(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Runtime(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Runtime(m) => m,
        }
    }
}

impl From<ProblemError> for CliError {
    fn from(e: ProblemError) -> Self {
        match &e {
            ProblemError::UnknownId(_)
            | ProblemError::UnsupportedAlpha { .. }
            | ProblemError::IncommensurateMesh { .. } => CliError::Validation(e.to_string()),
            ProblemError::Mlf(MlfError::Domain(_)) => CliError::Validation(e.to_string()),
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<MeshError> for CliError {
    fn from(e: MeshError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        CliError::Runtime(e.to_string())
    }
}

impl From<ShootError> for CliError {
    fn from(e: ShootError) -> Self {
        match &e {
            ShootError::Domain(_) => CliError::Validation(e.to_string()),
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<MlfError> for CliError {
    fn from(e: MlfError) -> Self {
        match &e {
            MlfError::Domain(_) => CliError::Validation(e.to_string()),
            MlfError::Accuracy { .. } => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

/// Formats a float with 17 significant digits, enough to round-trip f64
/// exactly through text.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Parser)]
#[command(
    name = "fracshoot",
    version,
    about = "Terminal value problems for Caputo fractional ODEs: shooting solvers and benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a fractional initial value problem forward on a uniform mesh.
    Solve(commands::SolveArgs),
    /// Solve a terminal value problem by shooting (exit code 2 if the
    /// requested tolerance is not reached).
    Shoot(commands::ShootArgs),
    /// Run the solver x step x strategy benchmark matrix for one problem.
    Bench(bench::BenchArgs),
    /// Evaluate the one-parameter Mittag-Leffler function E_alpha(z).
    Mlf(commands::MlfArgs),
}

/// Flags shared by every command that names a benchmark problem.
#[derive(Args)]
pub struct ProblemArgs {
    /// Benchmark problem id: ex1, ex2, or ex3.
    #[arg(long)]
    problem: String,
    /// Override the fractional order where the problem admits it.
    #[arg(long)]
    alpha: Option<f64>,
}

impl ProblemArgs {
    pub fn resolve(&self) -> Result<Problem, CliError> {
        let p = by_name(&self.problem)?;
        match self.alpha {
            Some(alpha) => Ok(p.with_alpha(alpha)?),
            None => Ok(p),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Adams,
    Bdf2,
    Trapezoidal,
}

impl MethodArg {
    pub fn to_method(self) -> Method {
        match self {
            MethodArg::Adams => Method::Adams,
            MethodArg::Bdf2 => Method::Bdf2,
            MethodArg::Trapezoidal => Method::Trapezoidal,
        }
    }
}

/// Shooting variant: the proportional-secting strategies plus the
/// classical bisection baseline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Bisection,
    Unit,
    Midpoint,
    Auto,
}

impl StrategyArg {
    pub fn name(self) -> &'static str {
        match self {
            StrategyArg::Bisection => "bisection",
            StrategyArg::Unit => "unit",
            StrategyArg::Midpoint => "midpoint",
            StrategyArg::Auto => "auto",
        }
    }

    /// The secting strategy, or None for the bisection baseline.
    pub fn secting(self) -> Option<Strategy> {
        match self {
            StrategyArg::Bisection => None,
            StrategyArg::Unit => Some(Strategy::Unit),
            StrategyArg::Midpoint => Some(Strategy::Midpoint),
            StrategyArg::Auto => Some(Strategy::Auto),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Destination helper: `--out` file or stdout.
pub fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(CliError::from),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                std::process::exit(0);
            }
            let _ = e.print();
            std::process::exit(1);
        }
    };

    let result = match cli.command {
        Command::Solve(args) => commands::run_solve(&args),
        Command::Shoot(args) => commands::run_shoot(&args),
        Command::Bench(args) => bench::run_bench(&args),
        Command::Mlf(args) => commands::run_mlf(&args),
    };

    if let Err(e) = result {
        eprintln!("error: {}", e.message());
        std::process::exit(e.code());
    }
}
