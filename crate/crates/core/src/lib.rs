//! Trajectory generation and replay for movable-anchor localization in
//! wireless sensor networks.
//!
//! A single GPS-equipped anchor node sweeps a deployment field along a
//! precomputed path, broadcasting its position so fixed sensors can localize
//! themselves. This crate synthesizes the classic static paths (SCAN,
//! DOUBLE-SCAN, HILBERT, SPIRAL), converts them to NS-2 `setdest` movement
//! scenarios, replays anchor kinematics at constant speed, and scores beacon
//! coverage against the collinearity requirement of trilateration.
//!
//! Everything is deterministic: generators are pure, deployments derive from
//! an explicit seed, and the scenario writer is byte-stable. The crate is
//! `no_std`-compatible (with `alloc`) when built with the `libm` feature
//! instead of the default `std`.
//!
//! ```
//! use anchor_paths_core::models::{generate_scan, ModelParams};
//! use anchor_paths_core::replay::TimedPath;
//! use anchor_paths_core::scenario::{build_commands, render_scenario};
//!
//! let trajectory = generate_scan(&ModelParams::new(10, 50.0)).unwrap();
//! let file = build_commands(&trajectory, 10.0, 9).unwrap();
//! assert!(render_scenario(&file).starts_with(
//!     "$ns_ at 0 \"$node_(9) setdest 1.0 501.0 10.0\"\n"
//! ));
//!
//! let timed = TimedPath::from_trajectory(&trajectory, 10.0).unwrap();
//! assert_eq!(timed.total_time(), 600.0);
//! ```

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod geometry;
mod math;
pub mod models;
pub mod network;
pub mod replay;
pub mod scenario;

pub use geometry::{collinear, GeometryError, Point2D, Polyline, Rect, DEFAULT_COLLINEARITY_EPS};
pub use models::{compute_stats, ModelError, ModelParams, ModelRegistry, ModelStats, Trajectory};
pub use network::{
    apply_beacon_energy, beacons_heard, coverage_report, deploy, Anchor, CoverageReport, Network,
    NetworkConfig, NetworkError, Sensor,
};
pub use replay::{BeaconEvent, Progress, ReplayError, TimedPath};
pub use scenario::{
    build_commands, parse_scenario, parse_topology, render_scenario, render_topology,
    ScenarioCommand, ScenarioError, ScenarioFile, TopologyEntry, TopologyError, TopologyFile,
};
