use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

/// Closed planar outline, points in mm. The closing edge from the last
/// point back to the first is implicit.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    points: Vec<Point>,
}

impl Polygon {
    /// Builds a polygon, dropping a trailing point that repeats the first.
    pub fn new(mut points: Vec<Point>) -> Result<Self> {
        if points.len() > 1 && points.first() == points.last() {
            points.pop();
        }
        if points.len() < 3 {
            return Err(Error::DegeneratePolygon("fewer than 3 distinct points"));
        }
        if points.iter().any(|p| !(p.x.is_finite() && p.y.is_finite())) {
            return Err(Error::DegeneratePolygon("non-finite coordinate"));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.points.len();
        (0..n).map(move |i| (self.points[i], self.points[(i + 1) % n]))
    }

    /// Shoelace area, positive for counter-clockwise vertex order.
    pub fn signed_area(&self) -> f64 {
        // Shift to the first vertex to limit cancellation for outlines far
        // from the origin.
        let o = self.points[0];
        let twice: f64 = self
            .edges()
            .map(|(p, q)| (p.x - o.x) * (q.y - o.y) - (q.x - o.x) * (p.y - o.y))
            .sum();
        0.5 * twice
    }

    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    pub fn scaled(&self, sx: f64, sy: f64) -> Self {
        Self { points: self.points.iter().map(|p| Point::new(p.x * sx, p.y * sy)).collect() }
    }

    pub fn translated(&self, dx: f64, dy: f64) -> Self {
        Self { points: self.points.iter().map(|p| Point::new(p.x + dx, p.y + dy)).collect() }
    }

    pub fn rotated(&self, angle: f64) -> Self {
        let (s, c) = libm::sincos(angle);
        Self { points: self.points.iter().map(|p| Point::new(c * p.x - s * p.y, s * p.x + c * p.y)).collect() }
    }

    pub fn bounds(&self) -> (Point, Point) {
        let mut lo = self.points[0];
        let mut hi = lo;
        for p in &self.points[1..] {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }

    /// True when no two non-adjacent edges cross properly. Edges that only
    /// touch (a pinch point where two arcs meet) are allowed.
    pub fn is_simple(&self) -> bool {
        self.first_crossing().is_none()
    }

    /// Area for comparison purposes; rejects zero-area and self-crossing outlines.
    pub fn checked_area(&self) -> Result<f64> {
        let a = self.area();
        if !(a > 0.0) {
            return Err(Error::DegeneratePolygon("zero area"));
        }
        if !self.is_simple() {
            return Err(Error::DegeneratePolygon("self-intersecting"));
        }
        Ok(a)
    }

    fn first_crossing(&self) -> Option<(usize, usize)> {
        let n = self.points.len();
        if n < 4 {
            return None;
        }
        // Uniform bucket grid over the bounding box; only edges sharing a
        // cell are tested against each other.
        let (lo, hi) = self.bounds();
        let cells = (libm::sqrt(n as f64) as usize).clamp(1, 1024);
        let span_x = (hi.x - lo.x).max(f64::MIN_POSITIVE);
        let span_y = (hi.y - lo.y).max(f64::MIN_POSITIVE);
        let cell_of = |v: f64, lo: f64, span: f64| -> usize {
            let c = ((v - lo) / span * cells as f64) as usize;
            c.min(cells - 1)
        };
        let mut grid: Vec<Vec<usize>> = vec![Vec::new(); cells * cells];
        for (i, (p, q)) in self.edges().enumerate() {
            let (x0, x1) = (cell_of(p.x.min(q.x), lo.x, span_x), cell_of(p.x.max(q.x), lo.x, span_x));
            let (y0, y1) = (cell_of(p.y.min(q.y), lo.y, span_y), cell_of(p.y.max(q.y), lo.y, span_y));
            for cy in y0..=y1 {
                for cx in x0..=x1 {
                    grid[cy * cells + cx].push(i);
                }
            }
        }
        // orientation values below this are rounding noise (pinch points)
        let tol = 1e-12 * (span_x * span_x + span_y * span_y);
        let edge = |i: usize| (self.points[i], self.points[(i + 1) % n]);
        for bucket in &grid {
            for (k, &i) in bucket.iter().enumerate() {
                for &j in &bucket[k + 1..] {
                    let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                    if adjacent {
                        continue;
                    }
                    let (a, b) = edge(i);
                    let (c, d) = edge(j);
                    if segments_cross(a, b, c, d, tol) {
                        return Some((i, j));
                    }
                }
            }
        }
        None
    }
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn segments_cross(a: Point, b: Point, c: Point, d: Point, tol: f64) -> bool {
    let strictly_opposite = |u: f64, v: f64| (u > tol && v < -tol) || (u < -tol && v > tol);
    strictly_opposite(orient(c, d, a), orient(c, d, b)) && strictly_opposite(orient(a, b, c), orient(a, b, d))
}

/// Angular step whose chord deviates from a circle of `radius` by at most
/// `max_sagitta`.
pub fn arc_step(radius: f64, max_sagitta: f64) -> f64 {
    let c = (1.0 - max_sagitta / radius).max(-1.0);
    2.0 * libm::acos(c)
}

const MIN_ARC_SEGMENTS: usize = 8;

/// Number of chords used for an arc of `sweep` radians.
pub fn arc_segments(radius: f64, sweep: f64, max_sagitta: f64) -> usize {
    let step = arc_step(radius, max_sagitta);
    let n = libm::ceil(sweep.abs() / step);
    if n.is_finite() {
        (n as usize).max(MIN_ARC_SEGMENTS)
    } else {
        MIN_ARC_SEGMENTS
    }
}

/// Appends the vertices of a counter-clockwise arc to `out`, from
/// `start` to `start + sweep`. The first vertex is skipped when
/// `skip_first` is set, so consecutive arcs can share endpoints.
pub fn push_arc(
    out: &mut Vec<Point>,
    center: Point,
    radius: f64,
    start: f64,
    sweep: f64,
    max_sagitta: f64,
    skip_first: bool,
) {
    let n = arc_segments(radius, sweep, max_sagitta);
    let first = if skip_first { 1 } else { 0 };
    for i in first..=n {
        let t = start + sweep * (i as f64 / n as f64);
        let (s, c) = libm::sincos(t);
        out.push(Point::new(center.x + radius * c, center.y + radius * s));
    }
}

/// A full circle as a polygon; handy for tests and synthetic outlines.
pub fn circle(center: Point, radius: f64, max_sagitta: f64) -> Polygon {
    let mut pts = Vec::new();
    push_arc(&mut pts, center, radius, 0.0, 2.0 * PI, max_sagitta, false);
    pts.pop();
    Polygon { points: pts }
}
