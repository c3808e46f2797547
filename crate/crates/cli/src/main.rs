//! `lsb`: boundedness of simple highest weight modules from the command line.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 hypothesis violated,
//! 3 unknown verdict under `--strict`, 4 oracle cap exceeded, 5 grid
//! disagreement.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lsb_core::Error;

#[derive(Parser)]
#[command(
    name = "lsb",
    version,
    about = "Bounded highest weight modules over basic classical Lie superalgebras"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether L(Σ, λ) is bounded.
    Classify {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        weight: WeightArgs,
        /// Truncation depth for oracle-backed components.
        #[arg(long, default_value_t = lsb_core::classifier::DEFAULT_DEPTH)]
        depth: usize,
        /// Exit with code 3 when the verdict is unknown.
        #[arg(long)]
        strict: bool,
    },
    /// List the bases and the components of the nonisotropic root system.
    Bases {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Only the distinguished bases.
        #[arg(long)]
        distinguished: bool,
    },
    /// Truncated formal character of L(Σ, λ).
    Character {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        /// Use the product formula for strongly typical weights instead of the oracle.
        #[arg(long)]
        typical: bool,
    },
    /// dim L(λ)_{λ-μ} as the rank of the Shapovalov matrix.
    OracleMult {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        weight: WeightArgs,
        /// μ, a sum of positive roots of the base.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Growth of the largest multiplicity over increasing depths.
    OracleProbe {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        schedule: Schedule,
    },
    /// Compare the classifier with the oracle probe on a grid of weights.
    ValidateGrid {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// How grid points are read.
        #[arg(long, value_enum, default_value_t = WeightIs::Lambda)]
        weight_is: WeightIs,
        /// `default`, `distinguished:<index>` or an explicit list `{α1, …}`.
        #[arg(long, default_value = "default", allow_hyphen_values = true)]
        base: String,
        /// Smallest coordinate value.
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        /// Largest coordinate value.
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long, default_value = "1/2")]
        step: String,
        #[command(flatten)]
        schedule: Schedule,
        /// Worker threads; defaults to the number of logical cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Args)]
struct AlgebraArgs {
    /// gl(m|n), sl(m|n), osp(m|2n), o(m), sp(2n), D(2,1,a=<a>), F(4), G(3).
    #[arg(long)]
    algebra: String,
    /// `paper` ((δ_i, δ_i) = -1) or `negated`.
    #[arg(long, default_value = "paper")]
    form_convention: String,
}

#[derive(Args)]
struct WeightArgs {
    /// Coordinates `x1,…,xs|y1,…,yn`, rationals allowed.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    #[arg(long, value_enum, default_value_t = WeightIs::Lambda)]
    weight_is: WeightIs,
    /// `default`, `distinguished:<index>` or an explicit list `{α1, …}`.
    #[arg(long, default_value = "default", allow_hyphen_values = true)]
    base: String,
}

#[derive(Args)]
struct Schedule {
    /// Largest depth; the schedule is chosen from it unless `--depths` is given.
    #[arg(long, default_value_t = lsb_core::classifier::DEFAULT_DEPTH)]
    depth: usize,
    /// Explicit increasing depths, e.g. `6,8,10`.
    #[arg(long, value_delimiter = ',')]
    depths: Option<Vec<usize>>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WeightIs {
    Lambda,
    LambdaPlusRho,
}

/// Failure of a command, with its exit code.
#[derive(Debug)]
enum Failure {
    Core(Error),
    Unknown,
    Disagreement(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Core(Error::Hypothesis(_) | Error::NotBounded) => 2,
            Failure::Core(Error::OracleCap { .. }) => 4,
            Failure::Core(_) => 1,
            Failure::Unknown => 3,
            Failure::Disagreement(_) => 5,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Unknown => "verdict is unknown".into(),
            Failure::Disagreement(k) => format!("{k} grid point(s) disagree with the oracle"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("lsb: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
