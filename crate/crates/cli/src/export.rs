//! Text exporters: the stats block, CSV files, and the SVG plot.

use anchor_paths_core::models::{ModelStats, Trajectory, MODEL_HILBERT, MODEL_SPIRAL};
use anchor_paths_core::network::Network;
use anchor_paths_core::replay::Progress;
use anchor_paths_core::scenario::{fmt_coord, fmt_time};

/// One result-block line, CSV-quoted where a field contains a comma. The
/// same text goes to standard output and to `stats.csv`.
pub fn csv_row(label: &str, value: &str) -> String {
    fn field(s: &str) -> String {
        if s.contains(',') || s.contains('"') {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    }
    format!("{},{}", field(label), field(value))
}

/// The per-model result block as ordered label/value pairs. Lengths and
/// areas display rounded to the meter, times floor to the second; the CSV
/// exports carry the full-precision waypoints behind these summaries.
pub fn stats_lines(traj: &Trajectory, stats: &ModelStats) -> Vec<(String, String)> {
    let meters = |v: f64| format!("{}", v.round() as i64);
    let area = format!(
        "{} x {}",
        meters(stats.area_width),
        meters(stats.area_height)
    );

    let mut lines: Vec<(String, String)> = Vec::new();
    if traj.model == MODEL_SPIRAL {
        // spiral blocks lead with the curve parameters and keep the anchor
        // start next to the area
        let (position, rest): (Vec<_>, Vec<_>) = stats
            .extras
            .iter()
            .cloned()
            .partition(|(k, _)| k == "Anchor Initial Position (x, y)");
        lines.extend(rest);
        lines.push(("Area Size (m²)".to_string(), area));
        lines.extend(position);
    } else {
        lines.push(("Area Size (m²)".to_string(), area));
        lines.extend(stats.extras.iter().cloned());
    }
    lines.push((
        "Total Trajectory Length (m)".to_string(),
        meters(stats.total_length),
    ));
    lines.push((
        "Simulation Time (Sec)".to_string(),
        stats.sim_time.to_string(),
    ));

    if traj.model == MODEL_HILBERT {
        let vertices = 1u64 << (2 * traj.params.curve_level);
        let full_grid = vertices as f64 * traj.params.resolution;
        lines.push((
            "Length Convention".to_string(),
            format!(
                "{} segments x {} m ({} x resolution would give {})",
                vertices - 1,
                traj.params.resolution,
                vertices,
                meters(full_grid)
            ),
        ));
    }
    lines
}

/// Waypoint table behind the trajectory charts.
pub fn chart_csv(traj: &Trajectory) -> String {
    let mut out = String::from("x,y\n");
    for p in traj.path.points() {
        out.push_str(&format!("{},{}\n", fmt_coord(p.x), fmt_coord(p.y)));
    }
    out
}

/// Replay trace rows, one per tick.
pub fn trace_csv(steps: impl Iterator<Item = Progress>) -> String {
    let mut out = String::from("t,x,y,fraction\n");
    for p in steps {
        out.push_str(&format!(
            "{},{},{},{}\n",
            fmt_time(p.elapsed),
            fmt_coord(p.position.x),
            fmt_coord(p.position.y),
            fmt_coord(p.fraction),
        ));
    }
    out
}

/// Per-sensor coverage table.
pub fn coverage_csv(net: &Network, report: &anchor_paths_core::CoverageReport) -> String {
    let mut out = String::from("sensor_id,x,y,is_base,beacons_heard,localizable\n");
    for (sensor, entry) in net.sensors.iter().zip(&report.per_sensor) {
        debug_assert_eq!(sensor.id, entry.sensor_id);
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            sensor.id,
            fmt_coord(sensor.position.x),
            fmt_coord(sensor.position.y),
            sensor.is_base_station,
            entry.beacons_heard,
            entry.localizable,
        ));
    }
    out
}

/// Standalone SVG of the trajectory, with sensors and the anchor start when
/// a network is given. The y axis is flipped so the image uses the usual
/// y-up chart convention.
pub fn render_svg(traj: &Trajectory, net: Option<&Network>) -> String {
    let bbox = traj.path.bounding_box();
    let (mut min_x, mut min_y) = (bbox.min.x, bbox.min.y);
    let (mut max_x, mut max_y) = (bbox.max.x, bbox.max.y);
    if let Some(net) = net {
        for s in &net.sensors {
            min_x = min_x.min(s.position.x);
            min_y = min_y.min(s.position.y);
            max_x = max_x.max(s.position.x);
            max_y = max_y.max(s.position.y);
        }
    }
    let span = (max_x - min_x).max(max_y - min_y).max(1.0);
    let margin = 0.05 * span;
    let view = format!(
        "{} {} {} {}",
        min_x - margin,
        -(max_y + margin),
        (max_x - min_x) + 2.0 * margin,
        (max_y - min_y) + 2.0 * margin,
    );

    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{view}\">\n"
    ));
    out.push_str("<g transform=\"scale(1,-1)\">\n");

    let mut points = String::new();
    for p in traj.path.points() {
        if !points.is_empty() {
            points.push(' ');
        }
        points.push_str(&format!("{},{}", p.x, p.y));
    }
    out.push_str(&format!(
        "<polyline points=\"{points}\" fill=\"none\" stroke=\"#333333\" stroke-width=\"{}\"/>\n",
        span / 300.0
    ));

    if let Some(net) = net {
        let r = span * 0.012;
        for s in &net.sensors {
            if s.is_base_station {
                out.push_str(&format!(
                    "<circle class=\"sensor base\" cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"#1f77b4\"/>\n",
                    s.position.x, s.position.y
                ));
            } else {
                out.push_str(&format!(
                    "<circle class=\"sensor\" cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"{}\"/>\n",
                    s.position.x,
                    s.position.y,
                    span / 400.0
                ));
            }
        }
    }
    let start = traj.path.first();
    out.push_str(&format!(
        "<circle class=\"anchor\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#ff7f0e\"/>\n",
        start.x,
        start.y,
        span * 0.015
    ));
    out.push_str("</g>\n</svg>\n");
    out
}
