//! Archimedean spiral sampled at uniform arc-length steps.
//!
//! The spiral r(theta) = b * theta grows by one `resolution` per turn
//! (b = resolution / 2*pi) and is centered on the square that a sweep with
//! the same parameters would cover, so its final radius is half the field
//! side. Sampling every `spiral_step` meters of arc keeps replay speed
//! uniform along the curve.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use super::{check_spiral_params, ModelError, ModelParams, Trajectory, MODEL_SPIRAL};
use crate::geometry::{Point2D, Polyline};
use crate::math;

pub fn generate_spiral(params: &ModelParams) -> Result<Trajectory, ModelError> {
    check_spiral_params(params)?;
    let side = (params.segments + 1) as f64 * params.resolution;
    let center = Point2D::new(params.origin.x + side / 2.0, params.origin.y + side / 2.0);
    let growth = params.resolution / TAU;
    let final_angle = (side / 2.0) / growth;
    let total = spiral_arc_length(growth, final_angle);

    let at = |theta: f64| {
        let r = growth * theta;
        Point2D::new(
            center.x + r * math::cos(theta),
            center.y + r * math::sin(theta),
        )
    };

    let mut points = Vec::with_capacity((total / params.spiral_step) as usize + 2);
    points.push(center);
    let mut k = 1u64;
    loop {
        let s = k as f64 * params.spiral_step;
        if s >= total {
            break;
        }
        points.push(at(theta_at_arc_length(growth, s)));
        k += 1;
    }
    let end = at(final_angle);
    if end != *points.last().expect("center is always present") {
        points.push(end);
    }

    let path = Polyline::new(points).expect("spiral samples are distinct");
    Ok(Trajectory {
        model: MODEL_SPIRAL.to_string(),
        params: *params,
        path,
    })
}

/// Closed-form arc length of r = b * theta from 0 to `theta`:
/// (b/2) * (theta * sqrt(1 + theta^2) + asinh(theta)).
pub fn spiral_arc_length(b: f64, theta: f64) -> f64 {
    (b / 2.0) * (theta * math::sqrt(1.0 + theta * theta) + math::asinh(theta))
}

/// Inverts the arc-length formula by Newton iteration. The derivative
/// b * sqrt(1 + theta^2) is bounded below by b, so the iteration is stable;
/// sqrt(2s/b) is exact in the small-angle limit and a good start everywhere.
fn theta_at_arc_length(b: f64, s: f64) -> f64 {
    let mut theta = math::sqrt(2.0 * s / b);
    for _ in 0..64 {
        let err = spiral_arc_length(b, theta) - s;
        let step = err / (b * math::sqrt(1.0 + theta * theta));
        theta -= step;
        if math::abs(step) <= 1e-13 * (1.0 + theta) {
            break;
        }
    }
    theta
}
