//! Deterministic constant-speed replay: position queries at arbitrary
//! times, periodic beacon schedules, and pull-based progress stepping.
//!
//! The caller owns the clock. Nothing here paces itself against wall time,
//! so replays are reproducible and testable from any driver.

use alloc::vec::Vec;
use core::fmt;

use crate::geometry::Point2D;
use crate::models::Trajectory;
use crate::scenario::ScenarioFile;

/// Tolerance (seconds) when checking a scenario's command times against the
/// constant-speed law. Tight enough to flag hand-edited files, loose enough
/// for decimal round-tripping.
pub const TIMING_TOLERANCE: f64 = 1e-6;

/// A trajectory annotated with per-waypoint arrival times at constant speed.
#[derive(Debug, Clone, PartialEq)]
pub struct TimedPath {
    waypoints: Vec<(f64, Point2D)>,
    speed: f64,
    total_time: f64,
}

/// One periodic broadcast of the anchor's position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeaconEvent {
    pub time: f64,
    pub position: Point2D,
    pub seq: u64,
}

/// Replay snapshot at a queried time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Progress {
    pub elapsed: f64,
    /// min(elapsed / total_time, 1).
    pub fraction: f64,
    pub position: Point2D,
    pub finished: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ReplayError {
    InvalidSpeed,
    /// Replay needs at least two waypoints.
    NoMotion,
    NegativeTime,
    InvalidInterval,
    InvalidTick,
    /// Command time does not match the constant-speed arrival from the
    /// previous waypoint.
    TimingInfeasible {
        line: usize,
        expected: f64,
        actual: f64,
    },
    /// Commands carry different speeds; a timed path has exactly one.
    MixedSpeeds {
        line: usize,
    },
    /// A command re-targets the point the anchor is already at.
    ZeroLengthLeg {
        line: usize,
    },
    EmptyScenario,
}

impl fmt::Display for ReplayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReplayError::InvalidSpeed => write!(f, "invalid speed"),
            ReplayError::NoMotion => write!(f, "trajectory has no motion"),
            ReplayError::NegativeTime => write!(f, "negative time"),
            ReplayError::InvalidInterval => write!(f, "invalid beacon interval"),
            ReplayError::InvalidTick => write!(f, "invalid tick"),
            ReplayError::TimingInfeasible { line, expected, actual } => write!(
                f,
                "scenario timing infeasible at line {line} (expected {expected} s, actual {actual} s)"
            ),
            ReplayError::MixedSpeeds { line } => {
                write!(f, "line {line}: commands use more than one speed")
            }
            ReplayError::ZeroLengthLeg { line } => {
                write!(f, "line {line}: zero-length leg")
            }
            ReplayError::EmptyScenario => write!(f, "scenario has no commands"),
        }
    }
}

impl core::error::Error for ReplayError {}

impl TimedPath {
    /// Times a trajectory at constant `speed`: arrival times are cumulative
    /// segment length over speed.
    pub fn from_trajectory(t: &Trajectory, speed: f64) -> Result<Self, ReplayError> {
        if speed <= 0.0 || !speed.is_finite() {
            return Err(ReplayError::InvalidSpeed);
        }
        let points = t.path.points();
        if points.len() < 2 {
            return Err(ReplayError::NoMotion);
        }
        let mut waypoints = Vec::with_capacity(points.len());
        let mut time = 0.0;
        waypoints.push((0.0, points[0]));
        for w in points.windows(2) {
            time += w[0].distance(&w[1]) / speed;
            waypoints.push((time, w[1]));
        }
        Ok(TimedPath {
            waypoints,
            speed,
            total_time: time,
        })
    }

    /// Reconstructs the timed path of a parsed scenario whose anchor starts
    /// at `start`. Command times are verified against the constant-speed law
    /// within [`TIMING_TOLERANCE`]; a positive time on the first command is
    /// accepted as an initial hold and replay time is counted from it.
    pub fn from_scenario(f: &ScenarioFile, start: Point2D) -> Result<Self, ReplayError> {
        let commands = f.commands();
        if commands.is_empty() {
            return Err(ReplayError::EmptyScenario);
        }
        let speed = commands[0].speed;
        if let Some(i) = commands.iter().position(|c| c.speed != speed) {
            return Err(ReplayError::MixedSpeeds {
                line: f.source_line(i),
            });
        }

        let mut waypoints = Vec::with_capacity(commands.len() + 1);
        let mut time = 0.0;
        let mut at = start;
        waypoints.push((0.0, at));
        for (i, c) in commands.iter().enumerate() {
            let leg = at.distance(&c.dest);
            if leg == 0.0 {
                return Err(ReplayError::ZeroLengthLeg {
                    line: f.source_line(i),
                });
            }
            if i > 0 {
                let expected = commands[i - 1].time + waypoints[i].0 - waypoints[i - 1].0;
                let actual = c.time;
                if (actual - expected).abs() > TIMING_TOLERANCE {
                    return Err(ReplayError::TimingInfeasible {
                        line: f.source_line(i),
                        expected,
                        actual,
                    });
                }
            }
            time += leg / speed;
            at = c.dest;
            waypoints.push((time, at));
        }
        Ok(TimedPath {
            waypoints,
            speed,
            total_time: time,
        })
    }

    pub fn waypoints(&self) -> &[(f64, Point2D)] {
        &self.waypoints
    }

    pub fn speed(&self) -> f64 {
        self.speed
    }

    pub fn total_time(&self) -> f64 {
        self.total_time
    }

    pub fn start(&self) -> Point2D {
        self.waypoints[0].1
    }

    pub fn end(&self) -> Point2D {
        self.waypoints[self.waypoints.len() - 1].1
    }

    /// Position and progress at time `t`, clamped to the final waypoint once
    /// the path is done.
    pub fn position_at(&self, t: f64) -> Result<Progress, ReplayError> {
        if t < 0.0 || !t.is_finite() {
            return Err(ReplayError::NegativeTime);
        }
        if t >= self.total_time {
            return Ok(Progress {
                elapsed: t,
                fraction: 1.0,
                position: self.end(),
                finished: true,
            });
        }
        let fraction = t / self.total_time;
        if fraction >= 1.0 {
            // t < total_time but the division rounded up; keep finished
            // equivalent to fraction == 1
            return Ok(Progress {
                elapsed: t,
                fraction: 1.0,
                position: self.end(),
                finished: true,
            });
        }
        let idx = self.waypoints.partition_point(|&(wt, _)| wt <= t) - 1;
        let (t0, p0) = self.waypoints[idx];
        let (t1, p1) = self.waypoints[idx + 1];
        let u = (t - t0) / (t1 - t0);
        let position = Point2D::new(p0.x + (p1.x - p0.x) * u, p0.y + (p1.y - p0.y) * u);
        Ok(Progress {
            elapsed: t,
            fraction,
            position,
            finished: false,
        })
    }

    /// Beacon events at t = 0, interval, 2*interval, ... The final event
    /// lands exactly on the total time, appended when the grid misses it.
    pub fn beacon_schedule(&self, interval: f64) -> Result<Vec<BeaconEvent>, ReplayError> {
        if interval <= 0.0 || !interval.is_finite() {
            return Err(ReplayError::InvalidInterval);
        }
        let mut events = Vec::new();
        let mut k = 0u64;
        loop {
            let t = k as f64 * interval;
            if t > self.total_time {
                break;
            }
            events.push(self.event_at(t, events.len() as u64));
            k += 1;
        }
        let last = events.last().expect("t = 0 is always scheduled");
        if self.total_time - last.time > 1e-9 {
            events.push(self.event_at(self.total_time, events.len() as u64));
        } else if last.time != self.total_time {
            // grid landed within tolerance of the end; snap it there
            let seq = last.seq;
            *events.last_mut().expect("non-empty") = self.event_at(self.total_time, seq);
        }
        Ok(events)
    }

    fn event_at(&self, t: f64, seq: u64) -> BeaconEvent {
        let p = self
            .position_at(t)
            .expect("schedule times are non-negative");
        BeaconEvent {
            time: t,
            position: p.position,
            seq,
        }
    }

    /// Pull-based progress snapshots at t = 0, tick, 2*tick, ... ending with
    /// the first finished snapshot.
    pub fn steps(&self, tick: f64) -> Result<Steps<'_>, ReplayError> {
        if tick <= 0.0 || !tick.is_finite() {
            return Err(ReplayError::InvalidTick);
        }
        Ok(Steps {
            path: self,
            tick,
            next: 0,
            done: false,
        })
    }
}

/// Iterator returned by [`TimedPath::steps`].
#[derive(Debug, Clone)]
pub struct Steps<'a> {
    path: &'a TimedPath,
    tick: f64,
    next: u64,
    done: bool,
}

impl Iterator for Steps<'_> {
    type Item = Progress;

    fn next(&mut self) -> Option<Progress> {
        if self.done {
            return None;
        }
        let t = self.next as f64 * self.tick;
        self.next += 1;
        let progress = self
            .path
            .position_at(t)
            .expect("tick times are non-negative");
        if progress.finished {
            self.done = true;
        }
        Some(progress)
    }
}
