//! The five subcommands. Each one is a straight pipeline over the core
//! crate; file writes go through a write-then-rename so interrupted runs
//! never leave half-written outputs.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anchor_paths_core::models::{compute_stats, ModelError, ModelParams, ModelRegistry};
use anchor_paths_core::network::{
    apply_beacon_energy, coverage_report, deploy, Anchor, Network, NetworkConfig, NetworkError,
    Sensor,
};
use anchor_paths_core::replay::TimedPath;
use anchor_paths_core::scenario::{
    build_commands, fmt_time, parse_scenario, parse_scenario_line, parse_topology, render_scenario,
    render_topology, ScenarioCommand, TopologyEntry, TopologyFile,
};
use anchor_paths_core::Point2D;

use crate::export;
use crate::{CoverageArgs, GenerateArgs, ReplayArgs, ValidateArgs};

/// Exit codes: 0 success, 1 validation/data failure, 2 usage or
/// configuration error.
pub enum CliError {
    Config(String),
    Data(String),
}

impl CliError {
    pub fn message(&self) -> &str {
        match self {
            CliError::Config(m) | CliError::Data(m) => m,
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Config(_) => ExitCode::from(2),
            CliError::Data(_) => ExitCode::from(1),
        }
    }
}

type CliResult = Result<(), CliError>;

fn write_atomic(dir: &Path, name: &str, contents: &str) -> CliResult {
    fs::create_dir_all(dir).map_err(|e| {
        CliError::Config(format!("cannot create output dir {}: {e}", dir.display()))
    })?;
    let target = dir.join(name);
    let tmp = dir.join(format!("{name}.tmp"));
    fs::write(&tmp, contents)
        .map_err(|e| CliError::Config(format!("cannot write {}: {e}", tmp.display())))?;
    fs::rename(&tmp, &target)
        .map_err(|e| CliError::Config(format!("cannot write {}: {e}", target.display())))?;
    Ok(())
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))
}

/// Flag that produced a given generator parameter error.
fn param_flag(err: &ModelError) -> &'static str {
    match err {
        ModelError::InvalidSegmentCount => "--segments",
        ModelError::InvalidResolution => "--resolution",
        ModelError::InvalidCurveLevel => "--level",
        ModelError::InvalidSpiralStep => "--spiral-step",
        ModelError::InvalidOrigin => "--origin-x/--origin-y",
        ModelError::InvalidSpeed => "--speed",
        ModelError::UnknownModel { .. } => "--model",
    }
}

fn config_flag(err: &NetworkError) -> String {
    match err {
        NetworkError::TooFewNodes => format!("--nodes: {err}"),
        NetworkError::InvalidConfig { field } => {
            let flag = match *field {
                "width" => "--width",
                "height" => "--height",
                "communication range" => "--range",
                "beacon interval" => "--interval",
                "speed" => "--speed",
                "initial energy" => "--initial-energy",
                "beacon cost" => "--beacon-cost",
                other => other,
            };
            format!("{flag}: {err}")
        }
        NetworkError::DuplicateNodeId { .. } => err.to_string(),
    }
}

pub fn generate(args: &GenerateArgs) -> CliResult {
    let registry = ModelRegistry::builtin();
    let generator = registry
        .get(&args.model)
        .map_err(|e| CliError::Config(format!("--model: {e}")))?;
    let params = ModelParams::new(args.segments, args.resolution)
        .with_level(args.level)
        .with_origin(Point2D::new(args.origin_x, args.origin_y))
        .with_spiral_step(args.spiral_step);
    let trajectory =
        generator(&params).map_err(|e| CliError::Config(format!("{}: {e}", param_flag(&e))))?;
    let stats = compute_stats(&trajectory, args.speed)
        .map_err(|e| CliError::Config(format!("{}: {e}", param_flag(&e))))?;

    if args.nodes < 2 {
        return Err(CliError::Config(
            "--nodes: network needs at least 2 nodes".into(),
        ));
    }
    let cfg = NetworkConfig {
        width: args.width,
        height: args.height,
        total_nodes: args.nodes,
        comm_range: args.range,
        beacon_interval: args.interval,
        speed: args.speed,
        seed: args.seed,
        ..NetworkConfig::default()
    };
    let net =
        deploy(&cfg, trajectory.path.first()).map_err(|e| CliError::Config(config_flag(&e)))?;

    let scenario = build_commands(&trajectory, args.speed, net.anchor.id)
        .map_err(|e| CliError::Config(e.to_string()))?;

    let mut entries: Vec<TopologyEntry> = net
        .sensors
        .iter()
        .map(|s| TopologyEntry {
            node_id: s.id,
            position: s.position,
            is_base_station: s.is_base_station,
        })
        .collect();
    entries.push(TopologyEntry {
        node_id: net.anchor.id,
        position: net.anchor.position,
        is_base_station: false,
    });
    let topology = TopologyFile::new(entries).map_err(|e| CliError::Config(e.to_string()))?;

    let block: String = export::stats_lines(&trajectory, &stats)
        .iter()
        .map(|(k, v)| export::csv_row(k, v) + "\n")
        .collect();
    print!("{block}");

    let dir = &args.out;
    write_atomic(
        dir,
        &format!("{}_scenario.txt", args.model),
        &render_scenario(&scenario),
    )?;
    write_atomic(dir, "topology.txt", &render_topology(&topology))?;
    write_atomic(dir, "stats.csv", &block)?;
    write_atomic(dir, "chart.csv", &export::chart_csv(&trajectory))?;
    write_atomic(
        dir,
        "trajectory.svg",
        &export::render_svg(&trajectory, Some(&net)),
    )?;
    Ok(())
}

pub fn replay(args: &ReplayArgs) -> CliResult {
    let text = read_input(&args.scenario)?;
    let file = parse_scenario(&text).map_err(|e| CliError::Data(e.to_string()))?;
    let start = Point2D::new(args.start_x, args.start_y);
    let path = TimedPath::from_scenario(&file, start).map_err(|e| CliError::Data(e.to_string()))?;
    let steps = path
        .steps(args.tick)
        .map_err(|e| CliError::Config(format!("--tick: {e}")))?;
    write_atomic(&args.out, "trace.csv", &export::trace_csv(steps))?;
    println!("total simulated time: {} s", fmt_time(path.total_time()));
    Ok(())
}

pub fn coverage(args: &CoverageArgs) -> CliResult {
    let scenario_text = read_input(&args.scenario)?;
    let file = parse_scenario(&scenario_text).map_err(|e| CliError::Data(e.to_string()))?;
    let topology_text = read_input(&args.topology)?;
    let topology = parse_topology(&topology_text).map_err(|e| CliError::Data(e.to_string()))?;

    let anchor_id = file
        .node_id()
        .ok_or_else(|| CliError::Data("scenario has no commands".into()))?;
    let anchor_entry = topology
        .find(anchor_id)
        .ok_or_else(|| CliError::Data(format!("anchor node {anchor_id} not found in topology")))?;

    let path = TimedPath::from_scenario(&file, anchor_entry.position)
        .map_err(|e| CliError::Data(e.to_string()))?;
    let events = path
        .beacon_schedule(args.interval)
        .map_err(|e| CliError::Config(format!("--interval: {e}")))?;

    let sensors: Vec<Sensor> = topology
        .entries()
        .iter()
        .filter(|e| e.node_id != anchor_id)
        .map(|e| Sensor {
            id: e.node_id,
            position: e.position,
            is_base_station: e.is_base_station,
        })
        .collect();
    let anchor = Anchor {
        id: anchor_id,
        position: anchor_entry.position,
        radius: args.range,
        initial_energy: args.initial_energy,
        remaining_energy: args.initial_energy,
    };
    let cfg = NetworkConfig {
        total_nodes: sensors.len() as u32 + 1,
        comm_range: args.range,
        beacon_interval: args.interval,
        speed: path.speed(),
        initial_energy: args.initial_energy,
        beacon_cost: args.beacon_cost,
        ..NetworkConfig::default()
    };
    let net =
        Network::from_parts(cfg, anchor, sensors).map_err(|e| CliError::Config(config_flag(&e)))?;

    let report = coverage_report(&net, &events, args.eps);
    write_atomic(
        &args.out,
        "coverage.csv",
        &export::coverage_csv(&net, &report),
    )?;

    let total: u64 = net.sensors.iter().filter(|s| !s.is_base_station).count() as u64;
    let localizable: u64 = net
        .sensors
        .iter()
        .zip(&report.per_sensor)
        .filter(|(s, e)| !s.is_base_station && e.localizable)
        .count() as u64;
    println!(
        "localizable: {localizable}/{total} ({:.1}%)",
        report.localizable_fraction * 100.0
    );

    if args.beacon_cost > 0.0 {
        let outcome = apply_beacon_energy(&net.anchor, report.total_beacons, args.beacon_cost);
        match outcome.depleted_at_beacon {
            Some(k) => println!(
                "energy: {} J remaining, depleted at beacon {k}",
                outcome.anchor.remaining_energy
            ),
            None => println!("energy: {} J remaining", outcome.anchor.remaining_energy),
        }
    }
    Ok(())
}

pub fn validate(args: &ValidateArgs) -> CliResult {
    let text = read_input(&args.scenario)?;

    let mut violations: Vec<String> = Vec::new();
    let mut commands: Vec<(usize, ScenarioCommand)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        match parse_scenario_line(raw) {
            Ok(None) => {}
            Ok(Some(cmd)) => commands.push((line, cmd)),
            Err(reason) => violations.push(format!("line {line}: {reason}: `{}`", raw.trim())),
        }
    }

    for pair in commands.windows(2) {
        let (prev_line, prev) = pair[0];
        let (line, cmd) = pair[1];
        let _ = prev_line;
        if cmd.time < prev.time {
            violations.push(format!("line {line}: non-monotonic time"));
        }
        if cmd.node_id != prev.node_id {
            violations.push(format!("line {line}: multiple mobile nodes"));
        }
    }

    // Constant-speed feasibility: the step between consecutive commands must
    // equal the leg length over the speed. The leg before the first command
    // is only checkable when the start position is supplied.
    let start = match (args.start_x, args.start_y) {
        (Some(x), Some(y)) => Some(Point2D::new(x, y)),
        _ => None,
    };
    for i in 0..commands.len().saturating_sub(1) {
        let from = if i == 0 {
            match start {
                Some(p) => p,
                None => continue,
            }
        } else {
            commands[i - 1].1.dest
        };
        let (_, cmd) = commands[i];
        let (line, next) = commands[i + 1];
        let required = from.distance(&cmd.dest) / cmd.speed;
        let actual = next.time - cmd.time;
        if (actual - required).abs() > anchor_paths_core::replay::TIMING_TOLERANCE {
            violations.push(format!(
                "line {line}: timing infeasible: step {} s, required {} s",
                fmt_time(actual),
                fmt_time(required)
            ));
        }
    }

    if violations.is_empty() {
        let total = match commands.len() {
            0 => 0.0,
            1 => {
                let (_, only) = commands[0];
                match start {
                    Some(p) => only.time + p.distance(&only.dest) / only.speed,
                    None => only.time,
                }
            }
            n => {
                let (_, last) = commands[n - 1];
                let (_, prev) = commands[n - 2];
                last.time + prev.dest.distance(&last.dest) / last.speed
            }
        };
        println!("OK, {} commands, {} s", commands.len(), fmt_time(total));
        Ok(())
    } else {
        for v in &violations {
            println!("{v}");
        }
        Err(CliError::Data(format!(
            "{} violation(s) found",
            violations.len()
        )))
    }
}

pub fn models() -> CliResult {
    for name in ModelRegistry::builtin().list() {
        println!("{name}");
    }
    Ok(())
}
