//! NS-2 movement scenario files and node topology files.
//!
//! A scenario file holds one `setdest` command per line:
//!
//! ```text
//! $ns_ at 50 "$node_(9) setdest 51.0 501.0 10.0"
//! ```
//!
//! The writer is strict: ASCII, LF line endings, no trailing whitespace, and
//! canonical number formatting. Times print as the shortest decimal that
//! round-trips with no trailing `.0` (`0`, `50`, `8.3`); coordinates and
//! speeds print as the shortest round-tripping decimal with at least one
//! fractional digit (`1.0`, `276.078323503122`). The parser is liberal: it
//! accepts integer and decimal forms, arbitrary inter-token whitespace, and
//! blank lines.
//!
//! A topology file lists one node per three lines in NS-2 position style,
//! with a `# base_station <id>` marker line before each base station:
//!
//! ```text
//! # base_station 0
//! $node_(0) set X_ 0.0
//! $node_(0) set Y_ 0.0
//! $node_(0) set Z_ 0.0
//! ```

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::geometry::Point2D;
use crate::math;
use crate::models::Trajectory;

/// One timed `setdest` instruction: at `time`, the node starts moving toward
/// `dest` at `speed`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioCommand {
    pub time: f64,
    pub node_id: u32,
    pub dest: Point2D,
    pub speed: f64,
}

/// An ordered list of commands for a single mobile node, with non-decreasing
/// times.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioFile {
    commands: Vec<ScenarioCommand>,
    /// 1-based source line of each command; command ordinals when the file
    /// was built in memory.
    source_lines: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ScenarioError {
    Malformed {
        line: usize,
        text: String,
        reason: String,
    },
    NonMonotonicTime {
        line: usize,
    },
    MultipleMobileNodes {
        line: usize,
    },
    /// A trajectory with fewer than two waypoints has nothing to emit.
    NoMotion,
}

impl fmt::Display for ScenarioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScenarioError::Malformed { line, text, reason } => {
                write!(f, "line {line}: {reason}: `{text}`")
            }
            ScenarioError::NonMonotonicTime { line } => {
                write!(f, "line {line}: non-monotonic time")
            }
            ScenarioError::MultipleMobileNodes { line } => {
                write!(f, "line {line}: multiple mobile nodes")
            }
            ScenarioError::NoMotion => write!(f, "trajectory has no motion"),
        }
    }
}

impl core::error::Error for ScenarioError {}

impl ScenarioFile {
    /// Wraps commands built in memory, checking the file invariants.
    /// Positions in errors are 1-based command ordinals.
    pub fn new(commands: Vec<ScenarioCommand>) -> Result<Self, ScenarioError> {
        let lines: Vec<usize> = (1..=commands.len()).collect();
        Self::with_source_lines(commands, lines)
    }

    fn with_source_lines(
        commands: Vec<ScenarioCommand>,
        source_lines: Vec<usize>,
    ) -> Result<Self, ScenarioError> {
        debug_assert_eq!(commands.len(), source_lines.len());
        for (i, c) in commands.iter().enumerate() {
            let line = source_lines[i];
            if c.time < 0.0 || !c.time.is_finite() {
                return Err(ScenarioError::Malformed {
                    line,
                    text: String::new(),
                    reason: "negative time".to_string(),
                });
            }
            if c.speed <= 0.0 || !c.speed.is_finite() {
                return Err(ScenarioError::Malformed {
                    line,
                    text: String::new(),
                    reason: "non-positive speed".to_string(),
                });
            }
            if i > 0 {
                if c.time < commands[i - 1].time {
                    return Err(ScenarioError::NonMonotonicTime { line });
                }
                if c.node_id != commands[i - 1].node_id {
                    return Err(ScenarioError::MultipleMobileNodes { line });
                }
            }
        }
        Ok(ScenarioFile {
            commands,
            source_lines,
        })
    }

    pub fn commands(&self) -> &[ScenarioCommand] {
        &self.commands
    }

    /// Node id addressed by the file, if it has any commands.
    pub fn node_id(&self) -> Option<u32> {
        self.commands.first().map(|c| c.node_id)
    }

    /// 1-based source line of command `index`.
    pub fn source_line(&self, index: usize) -> usize {
        self.source_lines[index]
    }
}

/// Time format: shortest round-tripping decimal, integral values without a
/// fractional part.
pub fn fmt_time(t: f64) -> String {
    format!("{t}")
}

/// Coordinate/speed format: shortest round-tripping decimal with at least
/// one fractional digit.
pub fn fmt_coord(v: f64) -> String {
    if v == math::trunc(v) {
        format!("{v:.1}")
    } else {
        format!("{v}")
    }
}

/// Converts a trajectory into timed commands for node `anchor_id` moving at
/// constant `speed`. Command k fires when the anchor reaches waypoint k and
/// targets waypoint k+1; the first command fires at time 0 from the implicit
/// start position.
pub fn build_commands(
    t: &Trajectory,
    speed: f64,
    anchor_id: u32,
) -> Result<ScenarioFile, ScenarioError> {
    if t.path.points().len() < 2 {
        return Err(ScenarioError::NoMotion);
    }
    assert!(speed > 0.0 && speed.is_finite(), "speed must be positive");

    let points = t.path.points();
    let mut commands = Vec::with_capacity(points.len() - 1);
    let mut time = 0.0;
    for w in points.windows(2) {
        commands.push(ScenarioCommand {
            time,
            node_id: anchor_id,
            dest: w[1],
            speed,
        });
        time += w[0].distance(&w[1]) / speed;
    }
    ScenarioFile::new(commands)
}

/// Renders the canonical scenario text, one command per line, LF-terminated.
pub fn render_scenario(f: &ScenarioFile) -> String {
    let mut out = String::new();
    for c in &f.commands {
        out.push_str(&format!(
            "$ns_ at {} \"$node_({}) setdest {} {} {}\"\n",
            fmt_time(c.time),
            c.node_id,
            fmt_coord(c.dest.x),
            fmt_coord(c.dest.y),
            fmt_coord(c.speed),
        ));
    }
    out
}

/// Parses one scenario line. Blank lines yield `Ok(None)`; errors carry a
/// reason only (the caller owns line numbers).
pub fn parse_scenario_line(raw: &str) -> Result<Option<ScenarioCommand>, String> {
    let line = raw.trim();
    if line.is_empty() {
        return Ok(None);
    }

    let rest = line.strip_prefix("$ns_").ok_or("expected `$ns_`")?;
    let rest = expect_token(rest, "at")?;
    let (time_tok, rest) = take_word(rest).ok_or("missing time")?;
    let time = parse_number(time_tok)?;

    let rest = rest.trim_start();
    let rest = rest.strip_prefix('"').ok_or("expected opening quote")?;
    let (body, tail) = rest.split_once('"').ok_or("missing closing quote")?;
    if !tail.trim().is_empty() {
        return Err("unexpected text after closing quote".to_string());
    }

    let body = body.trim();
    let body = body.strip_prefix("$node_(").ok_or("expected `$node_(`")?;
    let (id_tok, body) = body.split_once(')').ok_or("expected `)` after node id")?;
    let node_id: u32 = id_tok
        .trim()
        .parse()
        .map_err(|_| format!("invalid node id `{}`", id_tok.trim()))?;
    let body = expect_token(body, "setdest")?;
    let (x_tok, body) = take_word(body).ok_or("missing x coordinate")?;
    let (y_tok, body) = take_word(body).ok_or("missing y coordinate")?;
    let (s_tok, body) = take_word(body).ok_or("missing speed")?;
    if !body.trim().is_empty() {
        return Err("unexpected trailing tokens".to_string());
    }

    let dest = Point2D::new(parse_number(x_tok)?, parse_number(y_tok)?);
    let speed = parse_number(s_tok)?;
    if time < 0.0 {
        return Err("negative time".to_string());
    }
    if speed <= 0.0 {
        return Err("non-positive speed".to_string());
    }
    Ok(Some(ScenarioCommand {
        time,
        node_id,
        dest,
        speed,
    }))
}

/// Parses a whole scenario file, checking non-decreasing times and a single
/// mobile node. Errors report 1-based line numbers.
pub fn parse_scenario(text: &str) -> Result<ScenarioFile, ScenarioError> {
    let mut commands = Vec::new();
    let mut source_lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        match parse_scenario_line(raw) {
            Ok(None) => {}
            Ok(Some(cmd)) => {
                if let Some(prev) = commands.last() {
                    let prev: &ScenarioCommand = prev;
                    if cmd.time < prev.time {
                        return Err(ScenarioError::NonMonotonicTime { line });
                    }
                    if cmd.node_id != prev.node_id {
                        return Err(ScenarioError::MultipleMobileNodes { line });
                    }
                }
                commands.push(cmd);
                source_lines.push(line);
            }
            Err(reason) => {
                return Err(ScenarioError::Malformed {
                    line,
                    text: raw.trim().to_string(),
                    reason,
                })
            }
        }
    }
    ScenarioFile::with_source_lines(commands, source_lines)
}

fn expect_token<'a>(input: &'a str, token: &str) -> Result<&'a str, String> {
    let rest = input.trim_start();
    let rest = rest
        .strip_prefix(token)
        .ok_or_else(|| format!("expected `{token}`"))?;
    if !rest.is_empty() && !rest.starts_with(char::is_whitespace) {
        return Err(format!("expected whitespace after `{token}`"));
    }
    Ok(rest)
}

fn take_word(input: &str) -> Option<(&str, &str)> {
    let rest = input.trim_start();
    if rest.is_empty() {
        return None;
    }
    match rest.find(char::is_whitespace) {
        Some(end) => Some((&rest[..end], &rest[end..])),
        None => Some((rest, "")),
    }
}

fn parse_number(token: &str) -> Result<f64, String> {
    let v: f64 = token
        .parse()
        .map_err(|_| format!("invalid number `{token}`"))?;
    if !v.is_finite() {
        return Err(format!("non-finite number `{token}`"));
    }
    Ok(v)
}

/// One node position entry of a topology file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TopologyEntry {
    pub node_id: u32,
    pub position: Point2D,
    pub is_base_station: bool,
}

/// Node positions with unique ids, in file order.
#[derive(Debug, Clone, PartialEq)]
pub struct TopologyFile {
    entries: Vec<TopologyEntry>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TopologyError {
    Malformed {
        line: usize,
        text: String,
        reason: String,
    },
    DuplicateNodeId {
        line: usize,
        id: u32,
    },
}

impl fmt::Display for TopologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyError::Malformed { line, text, reason } => {
                write!(f, "line {line}: {reason}: `{text}`")
            }
            TopologyError::DuplicateNodeId { line, id } => {
                write!(f, "line {line}: duplicate node id {id}")
            }
        }
    }
}

impl core::error::Error for TopologyError {}

impl TopologyFile {
    pub fn new(entries: Vec<TopologyEntry>) -> Result<Self, TopologyError> {
        for (i, e) in entries.iter().enumerate() {
            if entries[..i].iter().any(|prev| prev.node_id == e.node_id) {
                return Err(TopologyError::DuplicateNodeId {
                    line: i + 1,
                    id: e.node_id,
                });
            }
        }
        Ok(TopologyFile { entries })
    }

    pub fn entries(&self) -> &[TopologyEntry] {
        &self.entries
    }

    pub fn find(&self, node_id: u32) -> Option<&TopologyEntry> {
        self.entries.iter().find(|e| e.node_id == node_id)
    }
}

/// Renders the topology text: three NS-2 position lines per node, with a
/// marker comment before each base station.
pub fn render_topology(t: &TopologyFile) -> String {
    let mut out = String::new();
    for e in &t.entries {
        if e.is_base_station {
            out.push_str(&format!("# base_station {}\n", e.node_id));
        }
        out.push_str(&format!(
            "$node_({}) set X_ {}\n",
            e.node_id,
            fmt_coord(e.position.x)
        ));
        out.push_str(&format!(
            "$node_({}) set Y_ {}\n",
            e.node_id,
            fmt_coord(e.position.y)
        ));
        out.push_str(&format!("$node_({}) set Z_ 0.0\n", e.node_id));
    }
    out
}

/// Parses topology text. Unknown `#` comment lines are ignored; errors carry
/// 1-based line numbers.
pub fn parse_topology(text: &str) -> Result<TopologyFile, TopologyError> {
    let malformed = |line: usize, raw: &str, reason: &str| TopologyError::Malformed {
        line,
        text: raw.trim().to_string(),
        reason: reason.to_string(),
    };

    let mut entries: Vec<TopologyEntry> = Vec::new();
    let mut pending_base: Option<u32> = None;
    let mut partial: Option<(u32, f64, Option<f64>, bool)> = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            if let Some(id_tok) = rest.trim().strip_prefix("base_station") {
                let id: u32 = id_tok
                    .trim()
                    .parse()
                    .map_err(|_| malformed(line, raw, "invalid base station id"))?;
                pending_base = Some(id);
            }
            continue;
        }

        let (id, axis, value) =
            parse_position_line(trimmed).map_err(|reason| malformed(line, raw, &reason))?;
        match (axis, &mut partial) {
            ('X', None) => {
                let is_base = pending_base.take() == Some(id);
                partial = Some((id, value, None, is_base));
            }
            ('Y', Some((pid, _, y @ None, _))) if *pid == id => *y = Some(value),
            ('Z', Some((pid, _, Some(_), _))) if *pid == id => {
                let (id, x, y, is_base) = partial.take().expect("checked above");
                if entries.iter().any(|e| e.node_id == id) {
                    return Err(TopologyError::DuplicateNodeId { line, id });
                }
                entries.push(TopologyEntry {
                    node_id: id,
                    position: Point2D::new(x, y.expect("checked above")),
                    is_base_station: is_base,
                });
            }
            _ => return Err(malformed(line, raw, "position lines out of order")),
        }
    }
    if partial.is_some() {
        let line = text.lines().count();
        return Err(malformed(line, "", "incomplete node entry at end of file"));
    }
    TopologyFile::new(entries)
}

fn parse_position_line(line: &str) -> Result<(u32, char, f64), String> {
    let rest = line.strip_prefix("$node_(").ok_or("expected `$node_(`")?;
    let (id_tok, rest) = rest.split_once(')').ok_or("expected `)` after node id")?;
    let id: u32 = id_tok
        .trim()
        .parse()
        .map_err(|_| format!("invalid node id `{}`", id_tok.trim()))?;
    let rest = expect_token(rest, "set")?;
    let (axis_tok, rest) = take_word(rest).ok_or("missing axis")?;
    let axis = match axis_tok {
        "X_" => 'X',
        "Y_" => 'Y',
        "Z_" => 'Z',
        other => return Err(format!("unknown axis `{other}`")),
    };
    let (val_tok, rest) = take_word(rest).ok_or("missing coordinate value")?;
    if !rest.trim().is_empty() {
        return Err("unexpected trailing tokens".to_string());
    }
    Ok((id, axis, parse_number(val_tok)?))
}
