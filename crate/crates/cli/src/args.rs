use std::path::PathBuf;

use bgctp::instances::{CostMode, EdgeRule, Metric, PointDistribution};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "bgctp",
    version,
    about = "Exact Pareto frontiers for the bi-objective cable-trench problem"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the non-dominated frontier of an instance file.
    Solve(SolveArgs),
    /// Write a seeded benchmark instance.
    Generate(GenerateArgs),
    /// Run a sweep of generated instances and aggregate the results.
    Bench(BenchArgs),
    /// Write the mixed-integer formulation in LP text format.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

impl Switch {
    pub fn enabled(self) -> bool {
        self == Switch::On
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Epsilon-constraint loop over the branch-and-bound.
    Eps,
    /// Enumerate every spanning tree.
    Oracle,
    /// Supported points only, by weighted sums.
    Supported,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchMethod {
    Eps,
    EpsNocut,
    Oracle,
    Supported,
}

impl BenchMethod {
    pub fn name(self) -> &'static str {
        match self {
            BenchMethod::Eps => "eps",
            BenchMethod::EpsNocut => "eps-nocut",
            BenchMethod::Oracle => "oracle",
            BenchMethod::Supported => "supported",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Incomplete,
    Complete,
    Grid,
    Location,
    Windmill,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CostModeArg {
    Ctp,
    Gctp,
}

impl From<CostModeArg> for CostMode {
    fn from(m: CostModeArg) -> Self {
        match m {
            CostModeArg::Ctp => CostMode::Ctp,
            CostModeArg::Gctp => CostMode::Gctp,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DistArg {
    Uniform,
    Normal,
}

impl From<DistArg> for PointDistribution {
    fn from(d: DistArg) -> Self {
        match d {
            DistArg::Uniform => PointDistribution::Uniform,
            DistArg::Normal => PointDistribution::Normal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EdgeRuleArg {
    Random,
    MinEuclidean,
    MinManhattan,
}

impl From<EdgeRuleArg> for EdgeRule {
    fn from(r: EdgeRuleArg) -> Self {
        match r {
            EdgeRuleArg::Random => EdgeRule::Random,
            EdgeRuleArg::MinEuclidean => EdgeRule::MinEuclidean,
            EdgeRuleArg::MinManhattan => EdgeRule::MinManhattan,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Euclidean,
    Manhattan,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Euclidean => Metric::Euclidean,
            MetricArg::Manhattan => Metric::Manhattan,
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Instance file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "eps")]
    pub method: Method,
    /// Apply the epsilon-cut (eps method only).
    #[arg(long, value_enum, default_value = "on")]
    pub cut: Switch,
    /// Wall-clock limit in seconds.
    #[arg(long, default_value_t = 300.0)]
    pub time_limit: f64,
    /// Frontier CSV; witness trees go to `<output>.trees`. Prints the CSV
    /// to stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Run report (one JSON record per line). Defaults to
    /// `<output>.report.jsonl` when `--output` is given.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Vertex count (all families except windmill).
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge density in (0, 1] (incomplete and location).
    #[arg(long)]
    pub density: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum)]
    pub cost_mode: Option<CostModeArg>,
    /// Point distribution (location).
    #[arg(long, value_enum)]
    pub dist: Option<DistArg>,
    /// Edge selection rule (location).
    #[arg(long, value_enum)]
    pub edge_rule: Option<EdgeRuleArg>,
    /// Cost metric for plain location instances; defaults to the edge rule's.
    #[arg(long, value_enum)]
    pub metric: Option<MetricArg>,
    /// Blade count (windmill).
    #[arg(long)]
    pub blades: Option<usize>,
    /// Instance file; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Instance families; an empty list gives an empty sweep.
    #[arg(long, value_enum, value_delimiter = ',', num_args = 0..)]
    pub family: Vec<Family>,
    /// Vertex counts.
    #[arg(long = "n", value_delimiter = ',', num_args = 0..)]
    pub sizes: Vec<usize>,
    /// Densities for incomplete and location families.
    #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = vec![0.5])]
    pub density: Vec<f64>,
    /// Number of seeds per class.
    #[arg(long, default_value_t = 20)]
    pub seeds: u64,
    #[arg(long, default_value_t = 1)]
    pub first_seed: u64,
    #[arg(long, value_enum, value_delimiter = ',', num_args = 1.., default_values_t = vec![CostModeArg::Ctp])]
    pub cost_mode: Vec<CostModeArg>,
    #[arg(long, value_enum, value_delimiter = ',', num_args = 1.., default_values_t = vec![DistArg::Uniform])]
    pub dist: Vec<DistArg>,
    #[arg(long, value_enum, value_delimiter = ',', num_args = 1.., default_values_t = vec![EdgeRuleArg::Random])]
    pub edge_rule: Vec<EdgeRuleArg>,
    /// Blade counts for the windmill family.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub blades: Vec<usize>,
    #[arg(long, value_enum, value_delimiter = ',', num_args = 1.., default_values_t = vec![BenchMethod::Eps])]
    pub methods: Vec<BenchMethod>,
    /// Per-run wall-clock limit in seconds.
    #[arg(long, default_value_t = 300.0)]
    pub time_limit: f64,
    /// Number of instances solved concurrently.
    #[arg(long, default_value_t = 1)]
    pub parallel: usize,
    /// Compare every run against full enumeration when n is small enough.
    #[arg(long)]
    pub verify_oracle: bool,
    #[arg(long, default_value_t = 8)]
    pub oracle_max_n: usize,
    /// Aggregate CSV; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Per-run records, one JSON object per line.
    #[arg(long)]
    pub records: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Trench budget row.
    #[arg(long)]
    pub epsilon: Option<i64>,
    /// Per-edge cut rows; requires --epsilon.
    #[arg(long, value_enum, default_value = "off")]
    pub cut: Switch,
    /// Objective weights on cable and trench.
    #[arg(long, num_args = 2, value_names = ["CABLE", "TRENCH"])]
    pub weights: Option<Vec<i64>>,
    /// LP file; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
}
