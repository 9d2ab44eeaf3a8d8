//! Command-line flags. Every subcommand's flags double as the keys of a
//! `--config` JSON file, spelled the same way (`"scan-max"`, `"out-dir"`, ...).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use torwave_core::presets;
use torwave_core::DEFAULT_RHO_NUM;

pub const DEFAULT_ROOT_COUNT: usize = 3;
pub const DEFAULT_SCAN_MAX: f64 = 20.0;
pub const DEFAULT_MODE: &str = "consistent";

#[derive(Debug, Parser)]
#[command(
    name = "torwave",
    version,
    about = "Torsional wave dispersion in prestressed, damped, incompressible cylinders"
)]
pub struct Cli {
    /// Read the subcommand and all of its flags from a JSON file instead.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, PartialEq, Subcommand, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Positive roots of the stress-free frequency equation.
    Roots(RootsArgs),
    /// Complex velocity at a single point.
    #[command(allow_negative_numbers = true)]
    Velocity(VelocityArgs),
    /// Evaluate a parameter grid and write a CSV table.
    #[command(allow_negative_numbers = true)]
    Sweep(SweepArgs),
    /// Regenerate the built-in figure tables and charts.
    Figures(FiguresArgs),
    /// Run the self-verification suites.
    Verify,
}

#[derive(Debug, Clone, PartialEq, Args, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields, default)]
pub struct RootsArgs {
    #[arg(long, default_value_t = DEFAULT_ROOT_COUNT)]
    pub count: usize,
    /// Upper end of the sign-change scan.
    #[arg(long, default_value_t = DEFAULT_SCAN_MAX)]
    pub scan_max: f64,
}

impl Default for RootsArgs {
    fn default() -> Self {
        Self {
            count: DEFAULT_ROOT_COUNT,
            scan_max: DEFAULT_SCAN_MAX,
        }
    }
}

fn one() -> f64 {
    1.0
}

fn default_rho() -> f64 {
    DEFAULT_RHO_NUM
}

fn default_mode() -> String {
    DEFAULT_MODE.to_owned()
}

#[derive(Debug, Clone, PartialEq, Args, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct VelocityArgs {
    /// Dimensionless wavenumber k a.
    #[arg(long)]
    pub ka: f64,
    /// Axial extension ratio; below 1 is compression.
    #[arg(long, default_value_t = 1.0)]
    #[serde(default = "one")]
    pub lambda: f64,
    /// Damping parameter.
    #[arg(long, default_value_t = 0.0)]
    #[serde(default)]
    pub delta: f64,
    /// Mode root, 0 for the fundamental mode.
    #[arg(long, default_value_t = 0.0)]
    #[serde(default)]
    pub xi: f64,
    /// Damping law: paper-literal or consistent.
    #[arg(long, default_value = DEFAULT_MODE)]
    #[serde(default = "default_mode")]
    pub mode: String,
    /// Density number used by the paper-literal law.
    #[arg(long, default_value_t = DEFAULT_RHO_NUM)]
    #[serde(default = "default_rho")]
    pub rho: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Deserialize)]
pub enum OutputFormat {
    #[default]
    #[value(name = "csv")]
    #[serde(rename = "csv")]
    Csv,
    #[value(name = "csv+svg")]
    #[serde(rename = "csv+svg")]
    CsvSvg,
}

#[derive(Debug, Clone, PartialEq, Args, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct SweepArgs {
    /// Start from a built-in preset grid (fig1, fig2, fig3).
    #[arg(long)]
    #[serde(default)]
    pub preset: Option<String>,
    /// Explicit ka values; overrides the ka range.
    #[arg(long, value_delimiter = ',')]
    #[serde(default)]
    pub ka: Option<Vec<f64>>,
    #[arg(long, default_value_t = presets::KA_START)]
    #[serde(default = "ka_min")]
    pub ka_min: f64,
    #[arg(long, default_value_t = presets::KA_STOP)]
    #[serde(default = "ka_max")]
    pub ka_max: f64,
    #[arg(long, default_value_t = presets::KA_STEP)]
    #[serde(default = "ka_step")]
    pub ka_step: f64,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    #[serde(default = "unit_list")]
    pub lambda: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    #[serde(default = "zero_list")]
    pub delta: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    #[serde(default = "zero_list")]
    pub xi: Vec<f64>,
    /// Damping law: paper-literal or consistent.
    #[arg(long, default_value = DEFAULT_MODE)]
    #[serde(default = "default_mode")]
    pub mode: String,
    /// Density number used by the paper-literal law.
    #[arg(long, default_value_t = DEFAULT_RHO_NUM)]
    #[serde(default = "default_rho")]
    pub rho: f64,
    /// Worker threads; defaults to the number of logical processors.
    #[arg(long)]
    #[serde(default)]
    pub jobs: Option<usize>,
    /// Output CSV path; standard output when omitted.
    #[arg(long)]
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    #[serde(default)]
    pub format: OutputFormat,
    #[arg(long, default_value = "sweep")]
    #[serde(default = "sweep_label")]
    pub label: String,
}

fn ka_min() -> f64 {
    presets::KA_START
}

fn ka_max() -> f64 {
    presets::KA_STOP
}

fn ka_step() -> f64 {
    presets::KA_STEP
}

fn unit_list() -> Vec<f64> {
    vec![1.0]
}

fn zero_list() -> Vec<f64> {
    vec![0.0]
}

fn sweep_label() -> String {
    "sweep".to_owned()
}

/// Requested worker count, or the number of logical processors.
pub fn resolve_jobs(jobs: Option<usize>) -> usize {
    jobs.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    })
}

#[derive(Debug, Clone, PartialEq, Args, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct FiguresArgs {
    /// Figure number (1, 2 or 3); all three when omitted.
    #[arg(long)]
    #[serde(default)]
    pub which: Option<u8>,
    #[arg(long, default_value = ".")]
    #[serde(default = "current_dir")]
    pub out_dir: PathBuf,
    /// Worker threads; defaults to the number of logical processors.
    #[arg(long)]
    #[serde(default)]
    pub jobs: Option<usize>,
}

fn current_dir() -> PathBuf {
    PathBuf::from(".")
}
