//! Helpers shared by the CLI test suites.
#![allow(dead_code)] // each test target uses its own subset

use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, Output};

pub fn anchor_paths(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anchor-paths"))
        .args(args)
        .output()
        .expect("failed to launch anchor-paths")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

pub fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process terminated by signal")
}

pub fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap_or_else(|e| panic!("cannot read {name}: {e}"))
}

/// File name to bytes for every regular file in `dir`.
pub fn dir_snapshot(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut snapshot = BTreeMap::new();
    for entry in std::fs::read_dir(dir).expect("readable dir") {
        let entry = entry.expect("dir entry");
        if entry.file_type().expect("file type").is_file() {
            let name = entry.file_name().to_string_lossy().into_owned();
            snapshot.insert(name, std::fs::read(entry.path()).expect("readable file"));
        }
    }
    snapshot
}

/// Hand-written scenario with a known timing defect: every command is
/// spaced 3.0 s apart, but its 35 m legs at 10 m/s need 3.5 s.
pub const LEGACY_HILBERT_SCENARIO: &str = "\
$ns_ at 3.0 \"$node_(4) setdest 1.0 36.0 10.0\"
$ns_ at 6.0 \"$node_(4) setdest 36.0 36.0 10.0\"
$ns_ at 9.0 \"$node_(4) setdest 36.0 1.0 10.0\"
$ns_ at 12.0 \"$node_(4) setdest 71.0 1.0 10.0\"
$ns_ at 15.0 \"$node_(4) setdest 106.0 1.0 10.0\"
$ns_ at 18.0 \"$node_(4) setdest 106.0 36.0 10.0\"
$ns_ at 21.0 \"$node_(4) setdest 71.0 36.0 10.0\"
$ns_ at 24.0 \"$node_(4) setdest 71.0 71.0 10.0\"
$ns_ at 27.0 \"$node_(4) setdest 106.0 71.0 10.0\"
$ns_ at 30.0 \"$node_(4) setdest 106.0 106.0 10.0\"
$ns_ at 33.0 \"$node_(4) setdest 71.0 106.0 10.0\"
$ns_ at 36.0 \"$node_(4) setdest 36.0 106.0 10.0\"
$ns_ at 39.0 \"$node_(4) setdest 36.0 71.0 10.0\"
$ns_ at 42.0 \"$node_(4) setdest 1.0 71.0 10.0\"
$ns_ at 45.0 \"$node_(4) setdest 1.0 106.0 10.0\"
$ns_ at 48.0 \"$node_(4) setdest 1.0 141.0 10.0\"
$ns_ at 51.0 \"$node_(4) setdest 36.0 141.0 10.0\"
$ns_ at 54.0 \"$node_(4) setdest 36.0 176.0 10.0\"
$ns_ at 57.0 \"$node_(4) setdest 1.0 176.0 10.0\"
$ns_ at 60.0 \"$node_(4) setdest 1.0 211.0 10.0\"
$ns_ at 63.0 \"$node_(4) setdest 1.0 246.0 10.0\"
$ns_ at 66.0 \"$node_(4) setdest 36.0 246.0 10.0\"
$ns_ at 69.0 \"$node_(4) setdest 36.0 211.0 10.0\"
$ns_ at 72.0 \"$node_(4) setdest 71.0 211.0 10.0\"
$ns_ at 75.0 \"$node_(4) setdest 71.0 246.0 10.0\"
$ns_ at 78.0 \"$node_(4) setdest 106.0 246.0 10.0\"
$ns_ at 81.0 \"$node_(4) setdest 106.0 211.0 10.0\"
$ns_ at 84.0 \"$node_(4) setdest 106.0 176.0 10.0\"
";
