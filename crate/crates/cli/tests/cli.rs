//! Behavior of the command-line surface: outputs, error paths, exit codes.

mod common;

use common::*;
use tempfile::TempDir;

fn out_arg(dir: &TempDir) -> String {
    dir.path().to_string_lossy().into_owned()
}

#[test]
fn generate_scan_writes_the_full_artifact_set() {
    let dir = TempDir::new().unwrap();
    let out = anchor_paths(&[
        "generate",
        "--model",
        "scan",
        "--segments",
        "10",
        "--resolution",
        "50",
        "--speed",
        "10",
        "--nodes",
        "10",
        "--seed",
        "42",
        "--out",
        &out_arg(&dir),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(
        text.contains("Total Trajectory Length (m),6000"),
        "stdout: {text}"
    );
    assert!(text.contains("Simulation Time (Sec),600"));

    for name in [
        "scan_scenario.txt",
        "topology.txt",
        "stats.csv",
        "chart.csv",
        "trajectory.svg",
    ] {
        assert!(dir.path().join(name).is_file(), "missing {name}");
    }
    assert_eq!(read(dir.path(), "stats.csv"), text);

    let scenario = read(dir.path(), "scan_scenario.txt");
    let first: Vec<&str> = scenario.lines().take(5).collect();
    assert_eq!(
        first,
        [
            "$ns_ at 0 \"$node_(9) setdest 1.0 501.0 10.0\"",
            "$ns_ at 50 \"$node_(9) setdest 51.0 501.0 10.0\"",
            "$ns_ at 55 \"$node_(9) setdest 51.0 1.0 10.0\"",
            "$ns_ at 105 \"$node_(9) setdest 101.0 1.0 10.0\"",
            "$ns_ at 110 \"$node_(9) setdest 101.0 501.0 10.0\"",
        ]
    );
    assert_eq!(read(dir.path(), "chart.csv").lines().count(), 1 + 22);
}

#[test]
fn generate_hilbert_level_one_first_command() {
    let dir = TempDir::new().unwrap();
    let out = anchor_paths(&[
        "generate",
        "--model",
        "hilbert",
        "--level",
        "1",
        "--resolution",
        "35",
        "--speed",
        "10",
        "--nodes",
        "5",
        "--out",
        &out_arg(&dir),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let scenario = read(dir.path(), "hilbert_scenario.txt");
    assert_eq!(
        scenario.lines().next().unwrap(),
        "$ns_ at 0 \"$node_(4) setdest 1.0 36.0 10.0\""
    );
}

#[test]
fn generate_rejects_invalid_segment_count() {
    let out = anchor_paths(&["generate", "--model", "scan", "--segments", "0"]);
    assert_eq!(exit_code(&out), 2);
    let err = stderr(&out);
    assert!(err.contains("--segments"), "stderr: {err}");
    assert!(err.contains("invalid segment count"));
}

#[test]
fn generate_unknown_model_lists_the_alternatives() {
    let out = anchor_paths(&["generate", "--model", "zcurve"]);
    assert_eq!(exit_code(&out), 2);
    let err = stderr(&out);
    for name in ["scan", "double-scan", "hilbert", "spiral"] {
        assert!(err.contains(name), "stderr: {err}");
    }
}

#[test]
fn generate_rejects_unwritable_output_dir() {
    let out = anchor_paths(&["generate", "--model", "scan", "--out", "/proc/no/such/dir"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn replay_emits_the_trace() {
    let dir = TempDir::new().unwrap();
    let gen = anchor_paths(&["generate", "--model", "scan", "--out", &out_arg(&dir)]);
    assert_eq!(exit_code(&gen), 0);
    let out = anchor_paths(&[
        "replay",
        "--scenario",
        dir.path().join("scan_scenario.txt").to_str().unwrap(),
        "--start-x",
        "1",
        "--start-y",
        "1",
        "--tick",
        "60",
        "--out",
        &out_arg(&dir),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), "total simulated time: 600 s\n");

    let trace = read(dir.path(), "trace.csv");
    let lines: Vec<&str> = trace.lines().collect();
    assert_eq!(lines.len(), 1 + 11);
    assert_eq!(lines[0], "t,x,y,fraction");
    assert_eq!(lines[11], "600,501.0,501.0,1.0");
}

#[test]
fn replay_with_tick_longer_than_the_run() {
    let dir = TempDir::new().unwrap();
    let gen = anchor_paths(&["generate", "--model", "scan", "--out", &out_arg(&dir)]);
    assert_eq!(exit_code(&gen), 0);
    let out = anchor_paths(&[
        "replay",
        "--scenario",
        dir.path().join("scan_scenario.txt").to_str().unwrap(),
        "--start-x",
        "1",
        "--start-y",
        "1",
        "--tick",
        "100000",
        "--out",
        &out_arg(&dir),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(read(dir.path(), "trace.csv").lines().count(), 1 + 2);
}

#[test]
fn replay_reports_corrupt_files_with_line_numbers() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("broken.txt");
    std::fs::write(
        &path,
        "$ns_ at 0 \"$node_(1) setdest 1 1 10\"\nnot a command\n",
    )
    .unwrap();
    let out = anchor_paths(&[
        "replay",
        "--scenario",
        path.to_str().unwrap(),
        "--start-x",
        "0",
        "--start-y",
        "0",
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr(&out).contains("line 2"), "stderr: {}", stderr(&out));
}

#[test]
fn coverage_with_anchor_only_topology_is_vacuous() {
    let dir = TempDir::new().unwrap();
    let scenario = dir.path().join("s.txt");
    std::fs::write(&scenario, "$ns_ at 0 \"$node_(5) setdest 0.0 80.0 8.0\"\n").unwrap();
    let topology = dir.path().join("t.txt");
    std::fs::write(
        &topology,
        "$node_(5) set X_ 0.0\n$node_(5) set Y_ 0.0\n$node_(5) set Z_ 0.0\n",
    )
    .unwrap();
    let out = anchor_paths(&[
        "coverage",
        "--scenario",
        scenario.to_str().unwrap(),
        "--topology",
        topology.to_str().unwrap(),
        "--out",
        &out_arg(&dir),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert!(
        stdout(&out).starts_with("localizable: 0/0"),
        "stdout: {}",
        stdout(&out)
    );
}

#[test]
fn coverage_with_a_huge_range_localizes_everyone() {
    let dir = TempDir::new().unwrap();
    let gen = anchor_paths(&[
        "generate",
        "--model",
        "scan",
        "--seed",
        "42",
        "--out",
        &out_arg(&dir),
    ]);
    assert_eq!(exit_code(&gen), 0);
    let out = anchor_paths(&[
        "coverage",
        "--scenario",
        dir.path().join("scan_scenario.txt").to_str().unwrap(),
        "--topology",
        dir.path().join("topology.txt").to_str().unwrap(),
        "--range",
        "10000",
        "--interval",
        "5",
        "--out",
        &out_arg(&dir),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), "localizable: 4/4 (100.0%)\n");
    let csv = read(dir.path(), "coverage.csv");
    assert_eq!(
        csv.lines().next().unwrap(),
        "sensor_id,x,y,is_base,beacons_heard,localizable"
    );
    assert_eq!(csv.lines().count(), 1 + 9);
}

#[test]
fn coverage_reports_energy_when_beacons_cost() {
    let dir = TempDir::new().unwrap();
    let gen = anchor_paths(&["generate", "--model", "scan", "--out", &out_arg(&dir)]);
    assert_eq!(exit_code(&gen), 0);
    let out = anchor_paths(&[
        "coverage",
        "--scenario",
        dir.path().join("scan_scenario.txt").to_str().unwrap(),
        "--topology",
        dir.path().join("topology.txt").to_str().unwrap(),
        "--initial-energy",
        "100",
        "--beacon-cost",
        "0.5",
        "--out",
        &out_arg(&dir),
    ]);
    assert_eq!(exit_code(&out), 0);
    // 121 beacons at 0.5 J leave 39.5 J
    assert!(
        stdout(&out).contains("energy: 39.5 J remaining"),
        "stdout: {}",
        stdout(&out)
    );
}

#[test]
fn validate_accepts_generated_output() {
    let dir = TempDir::new().unwrap();
    let gen = anchor_paths(&["generate", "--model", "scan", "--out", &out_arg(&dir)]);
    assert_eq!(exit_code(&gen), 0);
    let out = anchor_paths(&[
        "validate",
        "--scenario",
        dir.path().join("scan_scenario.txt").to_str().unwrap(),
        "--start-x",
        "1",
        "--start-y",
        "1",
    ]);
    assert_eq!(exit_code(&out), 0, "stdout: {}", stdout(&out));
    assert_eq!(stdout(&out), "OK, 21 commands, 600 s\n");
}

#[test]
fn validate_flags_infeasible_step_timing() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("legacy.txt");
    std::fs::write(&path, LEGACY_HILBERT_SCENARIO).unwrap();
    let out = anchor_paths(&["validate", "--scenario", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("timing infeasible"), "stdout: {text}");
    assert!(text.contains("step 3 s, required 3.5 s"));
}

#[test]
fn validate_reports_syntax_errors_per_line() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("garbage.txt");
    std::fs::write(&path, "first nonsense line\n\n$ns_ at x \"broken\"\n").unwrap();
    let out = anchor_paths(&["validate", "--scenario", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("line 1"), "stdout: {text}");
    assert!(text.contains("line 3"), "stdout: {text}");
}

#[test]
fn validate_accepts_an_empty_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("empty.txt");
    std::fs::write(&path, "").unwrap();
    let out = anchor_paths(&["validate", "--scenario", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "OK, 0 commands, 0 s\n");
}

#[test]
fn models_lists_the_builtin_generators() {
    let out = anchor_paths(&["models"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "scan\ndouble-scan\nhilbert\nspiral\n");
}

#[test]
fn missing_required_flags_exit_with_usage_error() {
    let out = anchor_paths(&["replay"]);
    assert_eq!(exit_code(&out), 2);
    let out = anchor_paths(&["generate"]);
    assert_eq!(exit_code(&out), 2);
}
