//! Command-line interface definition.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use maxplus_sparse::regression::DEFAULT_GRID_CAP;
use maxplus_sparse::solver::Estimator;

#[derive(Debug, Parser)]
#[command(
    name = "tropfit",
    version,
    about = "Sparse max-plus solutions and convex piecewise-linear fits"
)]
pub struct Cli {
    /// Master seed for generated data and benchmark trials.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output directory.
    #[arg(long, global = true, default_value = "tropfit-out")]
    pub out: PathBuf,
    /// Worker threads for parallel trials and fits (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sparse approximate solution of A ⊞ x ≈ b.
    Solve(SolveArgs),
    /// Fit one piecewise-linear model to a dataset.
    Fit(FitArgs),
    /// Fit over a list of norm orders and budgets and tabulate the errors.
    Sweep(SweepArgs),
    /// Random-instance comparison of the ℓ∞ heuristic and the ℓ∞ greedy.
    Bench(BenchArgs),
    /// Run the reference checks and report pass/fail.
    Repro(ReproArgs),
    /// Write one of the reference datasets as CSV.
    GenExample(GenArgs),
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    /// Budget on ‖b − A ⊞ x‖_p.
    #[arg(long, conflicts_with = "epsilon")]
    pub theta: Option<f64>,
    /// Budget on ‖b − A ⊞ x‖_p^p.
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// sgle keeps the model below the data; smmae shifts it to halve the max error.
    #[arg(long, default_value = "sgle")]
    pub estimator: Estimator,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Matrix CSV.
    #[arg(long)]
    pub matrix: PathBuf,
    /// Target vector CSV.
    #[arg(long)]
    pub vector: PathBuf,
    /// Norm order p.
    #[arg(long, required_unless_present = "norm_inf_greedy")]
    pub p: Option<f64>,
    /// Run the greedy on the max-norm error instead (no approximation guarantee).
    #[arg(long, conflicts_with = "p")]
    pub norm_inf_greedy: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SlopeArgs {
    /// Lower corner of the slope grid, comma-separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires_all = ["grid_hi", "grid_step"])]
    pub grid_lo: Option<Vec<f64>>,
    /// Upper corner of the slope grid, comma-separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub grid_hi: Option<Vec<f64>>,
    /// Grid spacing along every axis.
    #[arg(long)]
    pub grid_step: Option<f64>,
    /// Refuse grids with more slopes than this.
    #[arg(long, default_value_t = DEFAULT_GRID_CAP)]
    pub grid_cap: usize,
    /// CSV of slope vectors, one per row.
    #[arg(long, conflicts_with_all = ["grid_lo", "gradients"])]
    pub slopes: Option<PathBuf>,
    /// Use numerical gradients of the data as slopes.
    #[arg(long, conflicts_with = "grid_lo")]
    pub gradients: bool,
    /// Neighbourhood size for gradient estimates (default 2n + 1).
    #[arg(long, requires = "gradients")]
    pub neighbors: Option<usize>,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Dataset CSV: input columns, then the target column.
    #[arg(long)]
    pub data: PathBuf,
    #[command(flatten)]
    pub slopes: SlopeArgs,
    /// Norm order p.
    #[arg(long)]
    pub p: f64,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Grid resolution per axis for the plot data (1-D and 2-D only).
    #[arg(long)]
    pub plot_points: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub data: PathBuf,
    #[command(flatten)]
    pub slopes: SlopeArgs,
    /// Norm orders, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub p: Vec<f64>,
    /// Budgets on ‖r‖_p, comma-separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "epsilon")]
    pub theta: Vec<f64>,
    /// Budgets on ‖r‖_p^p, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub epsilon: Vec<f64>,
    /// Estimators, comma-separated.
    #[arg(long, value_delimiter = ',', default_value = "sgle,smmae")]
    pub estimator: Vec<Estimator>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub rows: Option<usize>,
    #[arg(long)]
    pub cols: Option<usize>,
    #[arg(long)]
    pub trials: Option<usize>,
    /// 1000 × 1000 instances.
    #[arg(long)]
    pub paper_scale: bool,
}

#[derive(Debug, Args)]
pub struct ReproArgs {
    /// Dataset for the 1-D curve checks (default: generated).
    #[arg(long)]
    pub data: Option<PathBuf>,
    /// Include the 1000 × 1000 benchmark.
    #[arg(long)]
    pub paper_scale: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// 1: 1-D curve, 2: noisy paraboloid, 3: log-sum-exp grid.
    #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
    pub example: u8,
    /// Number of points (examples 1 and 2).
    #[arg(long)]
    pub points: Option<usize>,
}
