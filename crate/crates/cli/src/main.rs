//! `anchor-paths`: generate movable-anchor trajectories, emit NS-2 movement
//! scenarios, replay them, and score beacon coverage.

mod commands;
mod export;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "anchor-paths",
    version,
    about = "Trajectory and NS-2 movement-scenario toolkit for movable-anchor WSN localization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a trajectory and write the scenario, topology, stats, chart,
    /// and SVG outputs
    Generate(GenerateArgs),
    /// Replay a scenario file at a fixed tick and export the trace
    Replay(ReplayArgs),
    /// Score beacon coverage of a scenario against a topology
    Coverage(CoverageArgs),
    /// Check a scenario file for syntax, monotonicity, and timing problems
    Validate(ValidateArgs),
    /// List the available trajectory models
    Models,
}

#[derive(Args)]
pub struct GenerateArgs {
    /// Trajectory model (see `models`)
    #[arg(long)]
    pub model: String,
    /// Number of horizontal R segments
    #[arg(long, default_value_t = 10)]
    pub segments: u32,
    /// Trajectory resolution in meters (length of one R segment)
    #[arg(long, default_value_t = 50.0)]
    pub resolution: f64,
    /// Hilbert curve level
    #[arg(long, default_value_t = 4)]
    pub level: u32,
    /// Anchor mobility speed in m/s
    #[arg(long, default_value_t = 10.0)]
    pub speed: f64,
    /// Total number of nodes (sensors plus the anchor)
    #[arg(long, default_value_t = 10)]
    pub nodes: u32,
    /// Anchor communication range in meters
    #[arg(long, default_value_t = 100.0)]
    pub range: f64,
    /// Beacon broadcast interval in seconds
    #[arg(long, default_value_t = 5.0)]
    pub interval: f64,
    /// Seed for the random sensor placement
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Deployment field width in meters
    #[arg(long, default_value_t = 550.0)]
    pub width: f64,
    /// Deployment field height in meters
    #[arg(long, default_value_t = 550.0)]
    pub height: f64,
    /// Trajectory origin x
    #[arg(long, default_value_t = 1.0)]
    pub origin_x: f64,
    /// Trajectory origin y
    #[arg(long, default_value_t = 1.0)]
    pub origin_y: f64,
    /// Arc-length sampling step for the spiral, in meters
    #[arg(long, default_value_t = 0.25)]
    pub spiral_step: f64,
    /// Output directory
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Args)]
pub struct ReplayArgs {
    /// Scenario file to replay
    #[arg(long)]
    pub scenario: PathBuf,
    /// Anchor start position x
    #[arg(long)]
    pub start_x: f64,
    /// Anchor start position y
    #[arg(long)]
    pub start_y: f64,
    /// Snapshot spacing in seconds
    #[arg(long, default_value_t = 1.0)]
    pub tick: f64,
    /// Output directory for trace.csv
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Args)]
pub struct CoverageArgs {
    /// Scenario file with the anchor movement
    #[arg(long)]
    pub scenario: PathBuf,
    /// Topology file with the node positions
    #[arg(long)]
    pub topology: PathBuf,
    /// Communication range in meters
    #[arg(long, default_value_t = 100.0)]
    pub range: f64,
    /// Beacon broadcast interval in seconds
    #[arg(long, default_value_t = 5.0)]
    pub interval: f64,
    /// Collinearity area threshold in square meters
    #[arg(long, default_value_t = anchor_paths_core::DEFAULT_COLLINEARITY_EPS)]
    pub eps: f64,
    /// Anchor energy budget in joules
    #[arg(long, default_value_t = 100.0)]
    pub initial_energy: f64,
    /// Joules consumed per beacon (0 disables energy accounting)
    #[arg(long, default_value_t = 0.0)]
    pub beacon_cost: f64,
    /// Output directory for coverage.csv
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Args)]
pub struct ValidateArgs {
    /// Scenario file to check
    #[arg(long)]
    pub scenario: PathBuf,
    /// Anchor start x; with --start-y, also checks the first leg's timing
    #[arg(long, requires = "start_y")]
    pub start_x: Option<f64>,
    /// Anchor start y
    #[arg(long, requires = "start_x")]
    pub start_y: Option<f64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Generate(args) => commands::generate(args),
        Command::Replay(args) => commands::replay(args),
        Command::Coverage(args) => commands::coverage(args),
        Command::Validate(args) => commands::validate(args),
        Command::Models => commands::models(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}
