//! Planar geometry shared by the trajectory generators and analyzers:
//! points, polylines, arc length, interpolation, collinearity, bounding boxes.
//!
//! All coordinates are real-valued meters in the usual y-up mathematical
//! convention.

use alloc::vec::Vec;
use core::fmt;

use crate::math;

/// Default area threshold (m²) for the collinearity test.
pub const DEFAULT_COLLINEARITY_EPS: f64 = 1e-6;

/// A point in the deployment plane, in meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2D {
    pub x: f64,
    pub y: f64,
}

impl Point2D {
    pub fn new(x: f64, y: f64) -> Self {
        Point2D { x, y }
    }

    /// Euclidean distance to `other`.
    pub fn distance(&self, other: &Point2D) -> f64 {
        math::hypot(other.x - self.x, other.y - self.y)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl fmt::Display for Point2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// An axis-aligned rectangle with `min.x <= max.x` and `min.y <= max.y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub min: Point2D,
    pub max: Point2D,
}

impl Rect {
    /// Width and height of the rectangle.
    pub fn extent(&self) -> (f64, f64) {
        (self.max.x - self.min.x, self.max.y - self.min.y)
    }
}

/// An ordered chain of waypoints. Never empty, and no segment has zero
/// length.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    points: Vec<Point2D>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometryError {
    /// A polyline needs at least one point.
    EmptyPolyline,
    /// Two consecutive points coincide (zero-length segment).
    RepeatedPoint { index: usize },
    /// A coordinate is NaN or infinite.
    NonFinitePoint { index: usize },
    /// Arc-length query with a negative distance.
    ArcLengthOutOfRange,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::EmptyPolyline => write!(f, "polyline has no points"),
            GeometryError::RepeatedPoint { index } => {
                write!(f, "zero-length segment at point {index}")
            }
            GeometryError::NonFinitePoint { index } => {
                write!(f, "non-finite coordinate at point {index}")
            }
            GeometryError::ArcLengthOutOfRange => write!(f, "arclength out of range"),
        }
    }
}

impl core::error::Error for GeometryError {}

impl Polyline {
    pub fn new(points: Vec<Point2D>) -> Result<Self, GeometryError> {
        if points.is_empty() {
            return Err(GeometryError::EmptyPolyline);
        }
        for (i, p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(GeometryError::NonFinitePoint { index: i });
            }
            if i > 0 && *p == points[i - 1] {
                return Err(GeometryError::RepeatedPoint { index: i });
            }
        }
        Ok(Polyline { points })
    }

    pub fn points(&self) -> &[Point2D] {
        &self.points
    }

    pub fn first(&self) -> Point2D {
        self.points[0]
    }

    pub fn last(&self) -> Point2D {
        *self.points.last().expect("polyline is never empty")
    }

    /// Sum of Euclidean segment lengths; 0 for a single point.
    pub fn length(&self) -> f64 {
        self.points.windows(2).map(|w| w[0].distance(&w[1])).sum()
    }

    /// Point at distance `s` along the polyline, linearly interpolated
    /// within a segment. Queries past the end clamp to the final point.
    pub fn point_at_arclength(&self, s: f64) -> Result<Point2D, GeometryError> {
        if s < 0.0 || s.is_nan() {
            return Err(GeometryError::ArcLengthOutOfRange);
        }
        let mut walked = 0.0;
        for w in self.points.windows(2) {
            let seg = w[0].distance(&w[1]);
            if s <= walked + seg {
                let u = (s - walked) / seg;
                return Ok(Point2D::new(
                    w[0].x + (w[1].x - w[0].x) * u,
                    w[0].y + (w[1].y - w[0].y) * u,
                ));
            }
            walked += seg;
        }
        Ok(self.last())
    }

    /// Smallest axis-aligned rectangle containing all points.
    pub fn bounding_box(&self) -> Rect {
        let mut min = self.points[0];
        let mut max = self.points[0];
        for p in &self.points[1..] {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
        Rect { min, max }
    }
}

/// True iff the triangle `a b c` has twice-area at most `eps` (in m²).
/// Cross-product formulation: no division, symmetric in all three points.
pub fn collinear(a: Point2D, b: Point2D, c: Point2D, eps: f64) -> bool {
    debug_assert!(eps >= 0.0);
    let cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    math::abs(cross) <= eps
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn poly(pts: &[(f64, f64)]) -> Polyline {
        Polyline::new(pts.iter().map(|&(x, y)| Point2D::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn length_of_single_segment() {
        assert_eq!(poly(&[(1.0, 1.0), (1.0, 501.0)]).length(), 500.0);
    }

    #[test]
    fn length_of_single_point_is_zero() {
        assert_eq!(poly(&[(7.0, 7.0)]).length(), 0.0);
    }

    #[test]
    fn arclength_interpolates_within_segment() {
        let p = poly(&[(0.0, 0.0), (10.0, 0.0)]);
        assert_eq!(p.point_at_arclength(4.0).unwrap(), Point2D::new(4.0, 0.0));
    }

    #[test]
    fn arclength_clamps_at_end() {
        let p = poly(&[(0.0, 0.0), (10.0, 0.0)]);
        assert_eq!(p.point_at_arclength(15.0).unwrap(), Point2D::new(10.0, 0.0));
    }

    #[test]
    fn arclength_crosses_segments() {
        let p = poly(&[(1.0, 1.0), (1.0, 501.0), (51.0, 501.0)]);
        assert_eq!(
            p.point_at_arclength(520.0).unwrap(),
            Point2D::new(21.0, 501.0)
        );
    }

    #[test]
    fn arclength_rejects_negative() {
        let p = poly(&[(0.0, 0.0), (1.0, 0.0)]);
        assert_eq!(
            p.point_at_arclength(-0.5),
            Err(GeometryError::ArcLengthOutOfRange)
        );
    }

    #[test]
    fn collinear_examples() {
        let a = Point2D::new(0.0, 0.0);
        assert!(collinear(
            a,
            Point2D::new(1.0, 1.0),
            Point2D::new(2.0, 2.0),
            1e-9
        ));
        assert!(!collinear(
            a,
            Point2D::new(1.0, 0.0),
            Point2D::new(1.0, 1.0),
            1e-9
        ));
        // cross product is 0.2, under the loose threshold
        assert!(collinear(
            a,
            Point2D::new(100.0, 0.001),
            Point2D::new(200.0, 0.0),
            1.0
        ));
    }

    #[test]
    fn collinear_is_permutation_symmetric() {
        let mut rng = crate::network::SplitMix64::new(7);
        for _ in 0..200 {
            let p = |rng: &mut crate::network::SplitMix64| {
                Point2D::new(rng.next_f64() * 100.0, rng.next_f64() * 100.0)
            };
            let (a, b, c) = (p(&mut rng), p(&mut rng), p(&mut rng));
            let eps = rng.next_f64() * 10.0;
            let expect = collinear(a, b, c, eps);
            for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                assert_eq!(collinear(x, y, z, eps), expect);
            }
        }
    }

    #[test]
    fn bounding_box_degenerate() {
        let r = poly(&[(5.0, 5.0)]).bounding_box();
        assert_eq!(r.min, Point2D::new(5.0, 5.0));
        assert_eq!(r.max, Point2D::new(5.0, 5.0));
        assert_eq!(r.extent(), (0.0, 0.0));
    }

    #[test]
    fn length_is_translation_invariant() {
        let mut rng = crate::network::SplitMix64::new(11);
        for _ in 0..50 {
            let n = 2 + (rng.next_u64() % 8) as usize;
            let mut pts = Vec::new();
            for _ in 0..n {
                pts.push((rng.next_f64() * 500.0, rng.next_f64() * 500.0));
            }
            pts.dedup_by(|a, b| a == b);
            let p = poly(&pts);
            let (dx, dy) = (rng.next_f64() * 1e3 - 500.0, rng.next_f64() * 1e3 - 500.0);
            let shifted: Vec<(f64, f64)> = pts.iter().map(|&(x, y)| (x + dx, y + dy)).collect();
            let q = poly(&shifted);
            assert!((p.length() - q.length()).abs() <= 1e-9 * (1.0 + p.length()));
        }
    }

    #[test]
    fn arclength_endpoints() {
        let p = poly(&[(1.0, 1.0), (1.0, 501.0), (51.0, 501.0), (51.0, 1.0)]);
        assert_eq!(p.point_at_arclength(0.0).unwrap(), p.first());
        assert_eq!(p.point_at_arclength(p.length()).unwrap(), p.last());
    }

    #[test]
    fn arclength_is_one_lipschitz() {
        let p = poly(&[
            (0.0, 0.0),
            (10.0, 0.0),
            (10.0, 10.0),
            (0.0, 10.0),
            (0.0, 1.0),
        ]);
        let total = p.length();
        let mut rng = crate::network::SplitMix64::new(3);
        for _ in 0..500 {
            let mut s1 = rng.next_f64() * total;
            let mut s2 = rng.next_f64() * total;
            if s1 > s2 {
                core::mem::swap(&mut s1, &mut s2);
            }
            let a = p.point_at_arclength(s1).unwrap();
            let b = p.point_at_arclength(s2).unwrap();
            assert!(a.distance(&b) <= (s2 - s1) + 1e-9);
        }
    }

    #[test]
    fn polyline_invariants_enforced() {
        assert_eq!(Polyline::new(vec![]), Err(GeometryError::EmptyPolyline));
        let dup = vec![Point2D::new(1.0, 1.0), Point2D::new(1.0, 1.0)];
        assert_eq!(
            Polyline::new(dup),
            Err(GeometryError::RepeatedPoint { index: 1 })
        );
        let bad = vec![Point2D::new(0.0, 0.0), Point2D::new(f64::NAN, 1.0)];
        assert_eq!(
            Polyline::new(bad),
            Err(GeometryError::NonFinitePoint { index: 1 })
        );
    }
}
