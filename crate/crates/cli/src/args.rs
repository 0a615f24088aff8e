//! Command-line surface.

use std::path::PathBuf;

use bmw_core::scalars::FieldSpec;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "bmw", version, about = "Exact BMW algebra and symplectic Schur-Weyl duality computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a tangle expression as a matrix on tensor powers of V.
    Eval(EvalArgs),
    /// Run a relation suite over a grid of (m, n).
    Check(CheckArgs),
    /// Dimensions of W_f, the quotient and the harmonic tensors.
    Dims(GridArgs),
    /// Surjectivity of the induced maps on the quotients by W_f.
    Duality(GridArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Json,
    Csv,
    Table,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Relations,
    Tangle,
    UqCommute,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Tangle => "tangle",
            Suite::UqCommute => "uq-commute",
        }
    }
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Rank: V has dimension 2m.
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value = "generic")]
    pub field: FieldSpec,
    #[arg(long, value_enum, default_value_t = OutFormat::Table)]
    pub out: OutFormat,
    /// Tangle expression, e.g. "A ; U" or "X ; Xi".
    pub expr: String,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Args, Debug, Clone)]
pub struct GridArgs {
    #[arg(long, conflicts_with = "grid")]
    pub m: Option<usize>,
    #[arg(long, conflicts_with = "grid")]
    pub n: Option<usize>,
    /// Single layer; by default every layer of each point is reported.
    #[arg(long)]
    pub f: Option<usize>,
    /// Inclusive ranges "m1..m2,n1..n2".
    #[arg(long)]
    pub grid: Option<String>,
    /// Coefficient field: generic, modp:P or zeta:A/B. Repeatable.
    #[arg(long = "field")]
    pub fields: Vec<FieldSpec>,
    #[arg(long, value_enum, default_value_t = OutFormat::Table)]
    pub out: OutFormat,
    /// Directory for the subspace cache.
    #[arg(long, env = "BMW_CACHE_DIR")]
    pub cache: Option<PathBuf>,
    /// Allow generic-q jobs with (2m)^n above the size guard.
    #[arg(long)]
    pub force_generic: bool,
    /// Leave out run statistics (timings, cache hits, warnings).
    #[arg(long)]
    pub deterministic: bool,
}
