//! The sensor-network world: monitoring area, mobile anchor, sensor
//! deployment with base stations, unit-disk beacon reception, and
//! coverage/collinearity analytics.

use alloc::vec::Vec;
use core::fmt;

use crate::geometry::{collinear, Point2D};
use crate::replay::BeaconEvent;

/// Deterministic generator used for sensor placement. SplitMix64 is fixed
/// here (not a library default that may change between releases) so a seed
/// reproduces the same deployment anywhere:
///
/// ```text
/// state += 0x9e3779b97f4a7c15
/// z = state; z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
/// z = (z ^ (z >> 27)) * 0x94d049bb133111eb
/// output = z ^ (z >> 31)
/// ```
///
/// Uniform doubles in [0, 1) take the top 53 bits: `(output >> 11) * 2^-53`.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Deployment parameters. `total_nodes` counts the sensors plus the one
/// mobile anchor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetworkConfig {
    pub width: f64,
    pub height: f64,
    pub total_nodes: u32,
    pub comm_range: f64,
    pub beacon_interval: f64,
    pub speed: f64,
    pub seed: u64,
    pub initial_energy: f64,
    /// Joules per beacon; 0 keeps the anchor at full energy (reporting only).
    pub beacon_cost: f64,
}

impl Default for NetworkConfig {
    fn default() -> Self {
        NetworkConfig {
            width: 550.0,
            height: 550.0,
            total_nodes: 10,
            comm_range: 100.0,
            beacon_interval: 5.0,
            speed: 10.0,
            seed: 0,
            initial_energy: 100.0,
            beacon_cost: 0.0,
        }
    }
}

/// The mobile anchor node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Anchor {
    pub id: u32,
    pub position: Point2D,
    /// Communication range, in meters.
    pub radius: f64,
    pub initial_energy: f64,
    pub remaining_energy: f64,
}

/// A fixed sensor node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sensor {
    pub id: u32,
    pub position: Point2D,
    pub is_base_station: bool,
}

/// A deployed network: one anchor plus sensors, ordered by id.
#[derive(Debug, Clone, PartialEq)]
pub struct Network {
    pub config: NetworkConfig,
    pub anchor: Anchor,
    pub sensors: Vec<Sensor>,
}

/// Per-sensor coverage line plus the aggregate fraction.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageReport {
    pub per_sensor: Vec<CoverageEntry>,
    /// Localizable non-base sensors over all non-base sensors (base
    /// stations know their positions and are excluded); 0 when there are
    /// no non-base sensors.
    pub localizable_fraction: f64,
    pub total_beacons: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageEntry {
    pub sensor_id: u32,
    pub beacons_heard: u64,
    pub localizable: bool,
}

/// Energy left after a beacon schedule, and the first beacon index the
/// anchor could not afford, if any.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyOutcome {
    pub anchor: Anchor,
    pub depleted_at_beacon: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NetworkError {
    /// A network needs at least one sensor plus the anchor.
    TooFewNodes,
    InvalidConfig {
        field: &'static str,
    },
    DuplicateNodeId {
        id: u32,
    },
}

impl fmt::Display for NetworkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetworkError::TooFewNodes => write!(f, "network needs at least 2 nodes"),
            NetworkError::InvalidConfig { field } => write!(f, "invalid {field}"),
            NetworkError::DuplicateNodeId { id } => write!(f, "duplicate node id {id}"),
        }
    }
}

impl core::error::Error for NetworkError {}

fn check_config(cfg: &NetworkConfig) -> Result<(), NetworkError> {
    let positive = [
        (cfg.width, "width"),
        (cfg.height, "height"),
        (cfg.comm_range, "communication range"),
        (cfg.beacon_interval, "beacon interval"),
        (cfg.speed, "speed"),
    ];
    for (v, field) in positive {
        if v <= 0.0 || !v.is_finite() {
            return Err(NetworkError::InvalidConfig { field });
        }
    }
    for (v, field) in [
        (cfg.initial_energy, "initial energy"),
        (cfg.beacon_cost, "beacon cost"),
    ] {
        if v < 0.0 || !v.is_finite() {
            return Err(NetworkError::InvalidConfig { field });
        }
    }
    Ok(())
}

/// Places the network: the anchor (id = total_nodes - 1) at `anchor_start`,
/// up to five base stations pinned to the corners and center, and the
/// remaining sensors uniform in the area from the seeded generator.
pub fn deploy(cfg: &NetworkConfig, anchor_start: Point2D) -> Result<Network, NetworkError> {
    check_config(cfg)?;
    if cfg.total_nodes < 2 {
        return Err(NetworkError::TooFewNodes);
    }

    let (w, h) = (cfg.width, cfg.height);
    let fixed = [
        Point2D::new(0.0, 0.0),
        Point2D::new(0.0, h),
        Point2D::new(w, 0.0),
        Point2D::new(w, h),
        Point2D::new(w / 2.0, h / 2.0),
    ];

    let sensor_count = cfg.total_nodes - 1;
    let mut rng = SplitMix64::new(cfg.seed);
    let mut sensors = Vec::with_capacity(sensor_count as usize);
    for id in 0..sensor_count {
        let (position, is_base_station) = if (id as usize) < fixed.len() {
            (fixed[id as usize], true)
        } else {
            let x = rng.next_f64() * w;
            let y = rng.next_f64() * h;
            (Point2D::new(x, y), false)
        };
        sensors.push(Sensor {
            id,
            position,
            is_base_station,
        });
    }

    let anchor = Anchor {
        id: cfg.total_nodes - 1,
        position: anchor_start,
        radius: cfg.comm_range,
        initial_energy: cfg.initial_energy,
        remaining_energy: cfg.initial_energy,
    };
    Ok(Network {
        config: *cfg,
        anchor,
        sensors,
    })
}

impl Network {
    /// Builds a network from already-known node positions (for example a
    /// parsed topology file). The configured area grows to cover every
    /// position.
    pub fn from_parts(
        mut cfg: NetworkConfig,
        anchor: Anchor,
        sensors: Vec<Sensor>,
    ) -> Result<Network, NetworkError> {
        check_config(&cfg)?;
        for (i, s) in sensors.iter().enumerate() {
            if s.id == anchor.id || sensors[..i].iter().any(|prev| prev.id == s.id) {
                return Err(NetworkError::DuplicateNodeId { id: s.id });
            }
        }
        for s in &sensors {
            cfg.width = cfg.width.max(s.position.x);
            cfg.height = cfg.height.max(s.position.y);
        }
        cfg.total_nodes = sensors.len() as u32 + 1;
        Ok(Network {
            config: cfg,
            anchor,
            sensors,
        })
    }

    pub fn non_base_sensors(&self) -> impl Iterator<Item = &Sensor> {
        self.sensors.iter().filter(|s| !s.is_base_station)
    }
}

/// Beacons the sensor receives under the unit-disk model: exactly the
/// events within `range` of it, order preserved.
pub fn beacons_heard(s: &Sensor, events: &[BeaconEvent], range: f64) -> Vec<BeaconEvent> {
    events
        .iter()
        .filter(|e| e.position.distance(&s.position) <= range)
        .copied()
        .collect()
}

/// Coverage of every sensor against a beacon schedule. A sensor is
/// localizable when some triple of heard beacon positions is non-collinear
/// under the `eps` area threshold; the search is an exact scan over triples
/// with early exit.
pub fn coverage_report(net: &Network, events: &[BeaconEvent], eps: f64) -> CoverageReport {
    let mut per_sensor = Vec::with_capacity(net.sensors.len());
    let mut localizable_non_base = 0u64;
    let mut non_base = 0u64;
    for s in &net.sensors {
        let heard = beacons_heard(s, events, net.anchor.radius);
        let localizable = has_non_collinear_triple(&heard, eps);
        if !s.is_base_station {
            non_base += 1;
            if localizable {
                localizable_non_base += 1;
            }
        }
        per_sensor.push(CoverageEntry {
            sensor_id: s.id,
            beacons_heard: heard.len() as u64,
            localizable,
        });
    }
    let localizable_fraction = if non_base == 0 {
        0.0
    } else {
        localizable_non_base as f64 / non_base as f64
    };
    CoverageReport {
        per_sensor,
        localizable_fraction,
        total_beacons: events.len() as u64,
    }
}

fn has_non_collinear_triple(heard: &[BeaconEvent], eps: f64) -> bool {
    for i in 0..heard.len() {
        for j in i + 1..heard.len() {
            for k in j + 1..heard.len() {
                if !collinear(heard[i].position, heard[j].position, heard[k].position, eps) {
                    return true;
                }
            }
        }
    }
    false
}

/// Linear energy accounting: `remaining = max(0, initial - sent * cost)`,
/// with the index of the first unaffordable beacon when the budget runs out.
pub fn apply_beacon_energy(a: &Anchor, beacons_sent: u64, cost_per_beacon: f64) -> EnergyOutcome {
    debug_assert!(cost_per_beacon >= 0.0);
    let spent = beacons_sent as f64 * cost_per_beacon;
    let remaining = (a.initial_energy - spent).max(0.0);
    let depleted_at_beacon = if cost_per_beacon > 0.0 && spent >= a.initial_energy {
        let k = a.initial_energy / cost_per_beacon;
        let k_ceil = k as u64 + if k > (k as u64) as f64 { 1 } else { 0 };
        Some(k_ceil.min(beacons_sent))
    } else {
        None
    };
    EnergyOutcome {
        anchor: Anchor {
            remaining_energy: remaining,
            ..*a
        },
        depleted_at_beacon,
    }
}
