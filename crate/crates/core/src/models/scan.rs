//! SCAN and DOUBLE-SCAN boustrophedon sweeps.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::{
    check_sweep_params, ModelError, ModelParams, Trajectory, MODEL_DOUBLE_SCAN, MODEL_SCAN,
};
use crate::geometry::{Point2D, Polyline};

/// Vertical boustrophedon: `segments + 1` columns of height
/// `segments * resolution`, joined by one-resolution horizontal hops at
/// alternating ends. Column 0 ascends from the origin.
pub fn generate_scan(params: &ModelParams) -> Result<Trajectory, ModelError> {
    check_sweep_params(params)?;
    let path = Polyline::new(scan_points(params)).expect("sweep points are valid");
    Ok(Trajectory {
        model: MODEL_SCAN.to_string(),
        params: *params,
        path,
    })
}

/// SCAN followed by its transpose: the same square swept again with
/// horizontal rows, starting where the vertical pass ended. When the second
/// pass cannot start there, a single connecting segment joins the passes.
pub fn generate_double_scan(params: &ModelParams) -> Result<Trajectory, ModelError> {
    check_sweep_params(params)?;
    let mut points = scan_points(params);
    let joint = *points.last().expect("scan pass is never empty");
    for p in transposed_pass(params, joint) {
        if p != *points.last().expect("non-empty") {
            points.push(p);
        }
    }
    let path = Polyline::new(points).expect("sweep points are valid");
    Ok(Trajectory {
        model: MODEL_DOUBLE_SCAN.to_string(),
        params: *params,
        path,
    })
}

fn scan_points(params: &ModelParams) -> Vec<Point2D> {
    let n = params.segments as usize;
    let d = params.resolution;
    let o = params.origin;
    let height = n as f64 * d;

    let column = |i: usize| o.x + i as f64 * d;
    let mut points = Vec::with_capacity(2 * (n + 1));
    for i in 0..=n {
        let x = column(i);
        let y_end = if i % 2 == 0 { o.y + height } else { o.y };
        if i == 0 {
            points.push(Point2D::new(x, o.y));
        }
        points.push(Point2D::new(x, y_end));
        if i < n {
            // reuse the next column's x so verticals stay bit-exactly vertical
            points.push(Point2D::new(column(i + 1), y_end));
        }
    }
    points
}

/// Horizontal boustrophedon over the same square, beginning at `start`
/// (one of the right-edge corners, where the vertical pass ends).
fn transposed_pass(params: &ModelParams, start: Point2D) -> Vec<Point2D> {
    let n = params.segments as usize;
    let d = params.resolution;
    let o = params.origin;
    let side = n as f64 * d;

    let start_at_top = start.y > o.y + side / 2.0;
    let mut points = Vec::with_capacity(2 * (n + 1));
    for k in 0..=n {
        let row = if start_at_top { n - k } else { k };
        let y = o.y + row as f64 * d;
        let x_end = if k % 2 == 0 { o.x } else { o.x + side };
        if k == 0 {
            points.push(Point2D::new(o.x + side, y));
        }
        points.push(Point2D::new(x_end, y));
        if k < n {
            let next_row = if start_at_top { row - 1 } else { row + 1 };
            points.push(Point2D::new(x_end, o.y + next_row as f64 * d));
        }
    }
    points
}
