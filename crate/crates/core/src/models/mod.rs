//! Static path-planning trajectory generators and their statistics.
//!
//! Four models are built in: SCAN and DOUBLE-SCAN (boustrophedon sweeps),
//! HILBERT (space-filling curve over a square lattice) and SPIRAL
//! (Archimedean spiral sampled at uniform arc-length steps). New models can
//! be added through [`ModelRegistry::register`].

mod hilbert;
mod scan;
mod spiral;

pub use hilbert::generate_hilbert;
pub use scan::{generate_double_scan, generate_scan};
pub use spiral::{generate_spiral, spiral_arc_length};

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::f64::consts::TAU;
use core::fmt;

use crate::geometry::{Point2D, Polyline};
use crate::math;

pub const MODEL_SCAN: &str = "scan";
pub const MODEL_DOUBLE_SCAN: &str = "double-scan";
pub const MODEL_HILBERT: &str = "hilbert";
pub const MODEL_SPIRAL: &str = "spiral";

/// Parameters shared by all generators. Not every model reads every field:
/// `segments` drives the sweep and spiral extents, `curve_level` only the
/// Hilbert curve, `spiral_step` only the spiral sampling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Number of horizontal R segments (>= 1); one R segment is
    /// `resolution` meters long.
    pub segments: u32,
    /// Length of one R segment, in meters (> 0).
    pub resolution: f64,
    /// Hilbert curve level (>= 1).
    pub curve_level: u32,
    /// First waypoint of the path (anchor start offset).
    pub origin: Point2D,
    /// Arc-length sampling step for the spiral, in meters (> 0).
    pub spiral_step: f64,
}

impl ModelParams {
    pub fn new(segments: u32, resolution: f64) -> Self {
        ModelParams {
            segments,
            resolution,
            curve_level: 1,
            origin: Point2D::new(1.0, 1.0),
            spiral_step: 0.25,
        }
    }

    pub fn with_level(mut self, level: u32) -> Self {
        self.curve_level = level;
        self
    }

    pub fn with_origin(mut self, origin: Point2D) -> Self {
        self.origin = origin;
        self
    }

    pub fn with_spiral_step(mut self, step: f64) -> Self {
        self.spiral_step = step;
        self
    }
}

/// A generated path together with the model and parameters that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub model: String,
    pub params: ModelParams,
    pub path: Polyline,
}

/// The per-model result block: deployment extent, path length, whole-second
/// simulation time, and model-specific display entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelStats {
    pub area_width: f64,
    pub area_height: f64,
    pub total_length: f64,
    /// floor(total_length / speed), in whole seconds.
    pub sim_time: u64,
    /// Ordered model-specific entries, already formatted for display.
    pub extras: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ModelError {
    InvalidSegmentCount,
    InvalidResolution,
    InvalidCurveLevel,
    InvalidSpiralStep,
    InvalidOrigin,
    InvalidSpeed,
    UnknownModel {
        name: String,
        available: Vec<String>,
    },
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::InvalidSegmentCount => write!(f, "invalid segment count"),
            ModelError::InvalidResolution => write!(f, "invalid resolution"),
            ModelError::InvalidCurveLevel => write!(f, "invalid curve level"),
            ModelError::InvalidSpiralStep => write!(f, "invalid spiral step"),
            ModelError::InvalidOrigin => write!(f, "invalid origin"),
            ModelError::InvalidSpeed => write!(f, "invalid speed"),
            ModelError::UnknownModel { name, available } => {
                write!(
                    f,
                    "unknown model `{name}`; available: {}",
                    available.join(", ")
                )
            }
        }
    }
}

impl core::error::Error for ModelError {}

pub type GeneratorFn = fn(&ModelParams) -> Result<Trajectory, ModelError>;

/// Name-to-generator table. Immutable after startup registration; listing
/// order is insertion order, so lookups and listings are deterministic.
#[derive(Debug, Clone)]
pub struct ModelRegistry {
    entries: Vec<(String, GeneratorFn)>,
}

impl ModelRegistry {
    /// Registry with the four built-in models.
    pub fn builtin() -> Self {
        let mut reg = ModelRegistry {
            entries: Vec::new(),
        };
        reg.register(MODEL_SCAN, generate_scan);
        reg.register(MODEL_DOUBLE_SCAN, generate_double_scan);
        reg.register(MODEL_HILBERT, generate_hilbert);
        reg.register(MODEL_SPIRAL, generate_spiral);
        reg
    }

    /// Adds a model, replacing any previous entry with the same name.
    pub fn register(&mut self, name: &str, generator: GeneratorFn) {
        if let Some(slot) = self.entries.iter_mut().find(|(n, _)| n == name) {
            slot.1 = generator;
        } else {
            self.entries.push((name.to_string(), generator));
        }
    }

    pub fn list(&self) -> Vec<&str> {
        self.entries.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Result<GeneratorFn, ModelError> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| *g)
            .ok_or_else(|| ModelError::UnknownModel {
                name: name.to_string(),
                available: self.entries.iter().map(|(n, _)| n.clone()).collect(),
            })
    }
}

fn check_common(params: &ModelParams) -> Result<(), ModelError> {
    if params.resolution <= 0.0 || !params.resolution.is_finite() {
        return Err(ModelError::InvalidResolution);
    }
    if !params.origin.is_finite() {
        return Err(ModelError::InvalidOrigin);
    }
    Ok(())
}

pub(crate) fn check_sweep_params(params: &ModelParams) -> Result<(), ModelError> {
    if params.segments < 1 {
        return Err(ModelError::InvalidSegmentCount);
    }
    check_common(params)
}

pub(crate) fn check_hilbert_params(params: &ModelParams) -> Result<(), ModelError> {
    if params.curve_level < 1 {
        return Err(ModelError::InvalidCurveLevel);
    }
    check_common(params)
}

pub(crate) fn check_spiral_params(params: &ModelParams) -> Result<(), ModelError> {
    check_sweep_params(params)?;
    if params.spiral_step <= 0.0 || !params.spiral_step.is_finite() {
        return Err(ModelError::InvalidSpiralStep);
    }
    Ok(())
}

/// Rounds a length to the nearest meter for display.
pub(crate) fn display_meters(v: f64) -> String {
    format!("{}", math::round(v) as i64)
}

/// Fills the result block for a trajectory replayed at `speed` m/s.
pub fn compute_stats(t: &Trajectory, speed: f64) -> Result<ModelStats, ModelError> {
    if speed <= 0.0 || !speed.is_finite() {
        return Err(ModelError::InvalidSpeed);
    }
    let (area_width, area_height) = t.path.bounding_box().extent();
    let total_length = t.path.length();
    let sim_time = math::floor(total_length / speed) as u64;

    let p = &t.params;
    let mut extras = Vec::new();
    match t.model.as_str() {
        MODEL_SCAN => {
            let vertical = p.segments as f64 * p.resolution;
            extras.push((
                "Length of Vertical Segment (m)".to_string(),
                display_meters(vertical),
            ));
            extras.push((
                "Number of Vertical Segments".to_string(),
                (p.segments + 1).to_string(),
            ));
        }
        MODEL_DOUBLE_SCAN => {
            let vertical = p.segments as f64 * p.resolution;
            extras.push((
                "Length of Vertical Segment (m)".to_string(),
                display_meters(vertical),
            ));
            extras.push((
                "Number of Vertical Segments".to_string(),
                (p.segments + 1).to_string(),
            ));
            extras.push((
                "Number of Horizontal Segments".to_string(),
                (p.segments + 1).to_string(),
            ));
        }
        MODEL_HILBERT => {
            let per_side = (1u64 << p.curve_level) - 1;
            extras.push((
                "Number of Horizontal Segment".to_string(),
                per_side.to_string(),
            ));
        }
        MODEL_SPIRAL => {
            let side = (p.segments + 1) as f64 * p.resolution;
            let growth = p.resolution / TAU;
            let final_radius = side / 2.0;
            let final_angle = final_radius / growth;
            let turns = math::floor(final_angle / TAU) as u64;
            let center = Point2D::new(p.origin.x + side / 2.0, p.origin.y + side / 2.0);
            extras.push(("Number of Spiral Turns".to_string(), turns.to_string()));
            extras.push((
                "Spiral Final Radius (m)".to_string(),
                display_meters(final_radius),
            ));
            extras.push(("Spiral Growth Rate (m)".to_string(), display_meters(growth)));
            extras.push((
                "Spiral Final Angle (rad)".to_string(),
                format!("{}", math::round(final_angle) as i64),
            ));
            extras.push((
                "Anchor Initial Position (x, y)".to_string(),
                format!(
                    "({}, {})",
                    display_meters(center.x),
                    display_meters(center.y)
                ),
            ));
        }
        _ => {}
    }

    Ok(ModelStats {
        area_width,
        area_height,
        total_length,
        sim_time,
        extras,
    })
}
