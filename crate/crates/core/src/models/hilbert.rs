//! Hilbert space-filling curve over a 2^L x 2^L vertex lattice.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::{check_hilbert_params, ModelError, ModelParams, Trajectory, MODEL_HILBERT};
use crate::geometry::{Point2D, Polyline};

/// Visits every vertex of the `2^L x 2^L` lattice (spacing = `resolution`)
/// exactly once, each hop moving to a lattice neighbor. The curve starts at
/// the origin corner and always steps upward first, so a level-L curve is
/// made of four reflected/rotated level-(L-1) curves.
pub fn generate_hilbert(params: &ModelParams) -> Result<Trajectory, ModelError> {
    check_hilbert_params(params)?;
    let level = params.curve_level;
    let side = 1u64 << level;
    let d = params.resolution;
    let o = params.origin;

    let mut points = Vec::with_capacity((side * side) as usize);
    for index in 0..side * side {
        let (gx, gy) = lattice_vertex(level, index);
        points.push(Point2D::new(o.x + gx as f64 * d, o.y + gy as f64 * d));
    }
    let path = Polyline::new(points).expect("lattice vertices are distinct");
    Ok(Trajectory {
        model: MODEL_HILBERT.to_string(),
        params: *params,
        path,
    })
}

/// Curve-distance to lattice coordinates. The classic bit-twiddling walk
/// alternates its first step with the level parity, so even levels are
/// transposed to keep the first step upward at every level.
fn lattice_vertex(level: u32, index: u64) -> (u64, u64) {
    let side = 1u64 << level;
    let mut d = index;
    let (mut x, mut y) = (0u64, 0u64);
    let mut s = 1u64;
    while s < side {
        let rx = 1 & (d / 2);
        let ry = 1 & (d ^ rx);
        if ry == 0 {
            if rx == 1 {
                x = s - 1 - x;
                y = s - 1 - y;
            }
            core::mem::swap(&mut x, &mut y);
        }
        x += s * rx;
        y += s * ry;
        d /= 4;
        s *= 2;
    }
    if level.is_multiple_of(2) {
        (y, x)
    } else {
        (x, y)
    }
}
