use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "theta-trunc",
    version,
    about = "Exact verification of truncated theta identities and linear partition inequalities",
    after_help = "Exit status: 0 when every check passes, 1 on a mathematical violation, 2 on a usage error."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads (default: THETA_TRUNC_THREADS, else all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Use arbitrary-precision coefficients instead of i128.
    #[arg(long, global = true)]
    pub bigint: bool,

    /// Add wall-clock timings to JSON output, in a separate `timings` field.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate a sequence: p, N, R, C, D, ge, p3, Mk (with --k), rank or crank (with --m).
    Compute(ComputeArgs),
    /// Verify one identity (I1..I21) or all of them.
    Verify(VerifyArgs),
    /// Check one inequality family (F1..F8) or all of them.
    Ineq(IneqArgs),
    /// Run every check and write one consolidated report.
    Suite(SuiteArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    pub sequence: String,
    #[arg(long, default_value_t = 50)]
    pub n_max: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity id, or `all`.
    pub id: String,
    #[arg(long, default_value_t = 200)]
    pub order: usize,
    /// A single k.
    #[arg(long, conflicts_with_all = ["k_min", "k_max"])]
    pub k: Option<usize>,
    #[arg(long)]
    pub k_min: Option<usize>,
    #[arg(long, default_value_t = 6)]
    pub k_max: usize,
    /// A single rank value, for I1.
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    #[arg(long, default_value_t = theta_trunc::partitions::DEFAULT_ORACLE_BOUND)]
    pub oracle_bound: usize,
    /// Replace I5 with a copy whose remainder prefactor is off by one.
    #[arg(long)]
    pub negative_control: bool,
}

#[derive(Debug, Args)]
pub struct IneqArgs {
    /// Family id, or `all`.
    pub id: String,
    /// A single k.
    #[arg(long, conflicts_with = "k_max")]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 8)]
    pub k_max: usize,
    #[arg(long, default_value_t = 1000)]
    pub n_max: usize,
    /// Include every row (n, value, baseline, margin) in the output.
    #[arg(long)]
    pub rows: bool,
    /// Reverse the sign of the checked families.
    #[arg(long)]
    pub negative_control: bool,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    #[arg(long, default_value_t = 200)]
    pub order: usize,
    #[arg(long, default_value_t = 6)]
    pub k_max: usize,
    #[arg(long, default_value_t = 8)]
    pub ineq_k_max: usize,
    #[arg(long, default_value_t = 1000)]
    pub n_max: usize,
    #[arg(long, default_value_t = theta_trunc::partitions::DEFAULT_ORACLE_BOUND)]
    pub oracle_bound: usize,
    /// Directory for `suite-report.json`.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    /// Perturb one identity and flip one inequality family; the suite must fail.
    #[arg(long)]
    pub negative_control: bool,
}
