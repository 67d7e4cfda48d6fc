use std::f64::consts::PI;

use thiserror::Error;

use super::point::{Direction, Point2};

/// Errors raised while validating polygon input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 vertices, got {count}")]
    TooFewVertices { count: usize },
    #[error("vertex {index} has a non-finite coordinate")]
    NonFinite { index: usize },
    #[error("vertex {index} duplicates its predecessor")]
    DuplicateVertex { index: usize },
    #[error("vertex {index} is not a strict left turn (collinear, reflex or self-overlapping)")]
    NotStrictlyConvex { index: usize },
    #[error("vertices are in clockwise order")]
    WrongOrientation,
}

impl PolygonError {
    /// Index of the offending vertex, when the error names one.
    pub fn vertex_index(&self) -> Option<usize> {
        match *self {
            PolygonError::NonFinite { index }
            | PolygonError::DuplicateVertex { index }
            | PolygonError::NotStrictlyConvex { index } => Some(index),
            _ => None,
        }
    }
}

/// Size-relative tolerances derived from a polygon's diameter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Positional tolerance, `1e-9 · diameter`.
    pub geom: f64,
    /// Angular tolerance in radians.
    pub ang: f64,
    /// Incircle contact tolerance, `1e-7 · diameter`.
    pub touch: f64,
    /// Cross-product tolerance, `1e-12 · diameter²`.
    pub area: f64,
    /// Projection coverage tolerance, `1e-9 · diameter`.
    pub cover: f64,
}

impl Tolerances {
    pub fn for_diameter(diameter: f64) -> Self {
        Tolerances {
            geom: 1e-9 * diameter,
            ang: 1e-12,
            touch: 1e-7 * diameter,
            area: 1e-12 * diameter * diameter,
            cover: 1e-9 * diameter,
        }
    }
}

/// Closed interval of offsets along a projection axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "interval bounds out of order: {lo} > {hi}");
        Interval { lo, hi }
    }

    /// Smallest interval containing all `values`; `None` for an empty input.
    pub fn hull_of(values: impl IntoIterator<Item = f64>) -> Option<Self> {
        let mut it = values.into_iter();
        let first = it.next()?;
        let (lo, hi) = it.fold((first, first), |(lo, hi), v| (lo.min(v), hi.max(v)));
        Some(Interval { lo, hi })
    }

    #[inline]
    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.hi <= self.lo
    }

    #[inline]
    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    #[inline]
    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// Distance from `v` to the interval (zero inside).
    #[inline]
    pub fn distance_to(&self, v: f64) -> f64 {
        if v < self.lo {
            self.lo - v
        } else if v > self.hi {
            v - self.hi
        } else {
            0.0
        }
    }
}

/// A nondegenerate line segment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    pub a: Point2,
    pub b: Point2,
}

impl Segment {
    /// Returns `None` when the endpoints are within `tol` of each other.
    pub fn new(a: Point2, b: Point2, tol: f64) -> Option<Self> {
        (a.distance(b) > tol).then_some(Segment { a, b })
    }

    pub fn length(&self) -> f64 {
        self.a.distance(self.b)
    }

    pub fn direction(&self) -> Direction {
        Direction::line((self.b - self.a).angle())
    }

    pub fn distance_to_point(&self, p: Point2) -> f64 {
        point_segment_distance(p, self.a, self.b)
    }
}

/// Distance from `p` to the closed segment `[a, b]`.
pub fn point_segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return p.distance(a);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    p.distance(a + ab * t)
}

/// Distance between the closed segments `[a, b]` and `[c, d]`.
pub fn segment_segment_distance(a: Point2, b: Point2, c: Point2, d: Point2) -> f64 {
    let d1 = (b - a).cross(c - a);
    let d2 = (b - a).cross(d - a);
    let d3 = (d - c).cross(a - c);
    let d4 = (d - c).cross(b - c);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return 0.0;
    }
    point_segment_distance(a, c, d)
        .min(point_segment_distance(b, c, d))
        .min(point_segment_distance(c, a, b))
        .min(point_segment_distance(d, a, b))
}

/// Total length of an open polyline.
pub fn polyline_length(points: &[Point2]) -> f64 {
    points.windows(2).map(|w| w[0].distance(w[1])).sum()
}

/// Drops consecutive points closer than `tol` to the last kept one.
pub fn dedup_points(points: impl IntoIterator<Item = Point2>, tol: f64) -> Vec<Point2> {
    let mut out: Vec<Point2> = Vec::new();
    for p in points {
        if out.last().is_none_or(|q| q.distance(p) > tol) {
            out.push(p);
        }
    }
    out
}

/// A validated, counterclockwise, strictly convex polygon.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
    perimeter: f64,
    diameter: f64,
}

impl ConvexPolygon {
    /// Validates `points` as a counterclockwise strictly convex cycle.
    ///
    /// Clockwise input is rejected; see [`ConvexPolygon::new_auto_orient`].
    pub fn new(points: Vec<Point2>) -> Result<Self, PolygonError> {
        let n = points.len();
        if n < 3 {
            return Err(PolygonError::TooFewVertices { count: n });
        }
        if let Some(index) = points.iter().position(|p| !p.is_finite()) {
            return Err(PolygonError::NonFinite { index });
        }
        let diameter = brute_diameter(&points);
        let tol = Tolerances::for_diameter(diameter);
        for i in 0..n {
            let j = (i + 1) % n;
            if diameter == 0.0 || points[i].distance(points[j]) <= tol.geom {
                return Err(PolygonError::DuplicateVertex { index: j });
            }
        }

        let turns: Vec<f64> = (0..n)
            .map(|i| {
                let prev = points[(i + n - 1) % n];
                let next = points[(i + 1) % n];
                (points[i] - prev).cross(next - points[i])
            })
            .collect();
        if turns.iter().all(|&c| c < -tol.area) {
            return Err(PolygonError::WrongOrientation);
        }
        if let Some(index) = turns.iter().position(|&c| c <= tol.area) {
            return Err(PolygonError::NotStrictlyConvex { index });
        }

        // all left turns; a single winding rules out star-shaped overlaps
        let winding: f64 = (0..n)
            .map(|i| {
                let prev = points[(i + n - 1) % n];
                let next = points[(i + 1) % n];
                let u = points[i] - prev;
                let v = next - points[i];
                u.cross(v).atan2(u.dot(v))
            })
            .sum();
        if winding > 3.0 * PI {
            return Err(PolygonError::NotStrictlyConvex { index: 0 });
        }

        let perimeter = (0..n)
            .map(|i| points[i].distance(points[(i + 1) % n]))
            .sum();
        Ok(ConvexPolygon {
            vertices: points,
            perimeter,
            diameter,
        })
    }

    /// Like [`ConvexPolygon::new`] but reverses clockwise input first.
    pub fn new_auto_orient(mut points: Vec<Point2>) -> Result<Self, PolygonError> {
        match ConvexPolygon::new(points.clone()) {
            Err(PolygonError::WrongOrientation) => {
                points.reverse();
                ConvexPolygon::new(points)
            }
            other => other,
        }
    }

    pub fn from_coords(coords: &[(f64, f64)]) -> Result<Self, PolygonError> {
        ConvexPolygon::new(coords.iter().map(|&c| Point2::from(c)).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    /// Vertex `i`, indices taken modulo `n`.
    #[inline]
    pub fn vertex(&self, i: usize) -> Point2 {
        self.vertices[i % self.vertices.len()]
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> (Point2, Point2) {
        (self.vertex(i), self.vertex(i + 1))
    }

    /// Inward unit normal of edge `i`.
    pub fn inward_normal(&self, i: usize) -> Point2 {
        let (a, b) = self.edge(i);
        (b - a).perp().normalized()
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn tolerances(&self) -> Tolerances {
        Tolerances::for_diameter(self.diameter)
    }

    pub fn centroid(&self) -> Point2 {
        let sum = self.vertices.iter().fold(Point2::ORIGIN, |acc, &p| acc + p);
        sum / self.vertices.len() as f64
    }

    pub fn area(&self) -> f64 {
        let n = self.len();
        0.5 * (0..n)
            .map(|i| self.vertex(i).cross(self.vertex(i + 1)))
            .sum::<f64>()
    }

    /// Extent of the polygon along the unit vector of `alpha`: the width of
    /// the thinnest strip whose lines are orthogonal to `alpha`.
    pub fn width_in_direction(&self, alpha: Direction) -> f64 {
        let u = alpha.unit();
        Interval::hull_of(self.vertices.iter().map(|p| p.dot(u))).map_or(0.0, |iv| iv.len())
    }

    /// Offsets of the polygon along the normal `(−sin θ, cos θ)` of lines
    /// with direction `theta`. A line of direction `theta` meets the polygon
    /// exactly when its offset lies in the returned interval.
    pub fn project(&self, theta: Direction) -> Interval {
        project_points(&self.vertices, theta)
    }

    /// Signed distance of `p` from the supporting line of edge `i`,
    /// positive inside.
    pub fn edge_distance(&self, i: usize, p: Point2) -> f64 {
        (p - self.vertex(i)).dot(self.inward_normal(i))
    }

    /// Whether `p` lies in the closed polygon, up to `tol`.
    pub fn contains(&self, p: Point2, tol: f64) -> bool {
        (0..self.len()).all(|i| self.edge_distance(i, p) >= -tol)
    }

    /// Length of the counterclockwise boundary walk from vertex `from` to
    /// vertex `to`.
    pub fn chain_length(&self, from: usize, to: usize) -> f64 {
        let n = self.len();
        let steps = (to + n - from % n) % n;
        (0..steps)
            .map(|k| self.vertex(from + k).distance(self.vertex(from + k + 1)))
            .sum()
    }

    /// Vertices met on the counterclockwise walk from `from` to `to`,
    /// both ends included.
    pub fn chain(&self, from: usize, to: usize) -> Vec<Point2> {
        let n = self.len();
        let steps = (to + n - from % n) % n;
        (0..=steps).map(|k| self.vertex(from + k)).collect()
    }
}

/// Offsets of `points` along the normal of direction `theta`.
pub fn project_points(points: &[Point2], theta: Direction) -> Interval {
    let nrm = theta.normal();
    Interval::hull_of(points.iter().map(|p| p.dot(nrm))).expect("projecting an empty point set")
}

fn brute_diameter(points: &[Point2]) -> f64 {
    let mut best = 0.0f64;
    for (i, &p) in points.iter().enumerate() {
        for &q in &points[i + 1..] {
            best = best.max(p.distance(q));
        }
    }
    best
}

/// Convex hull by monotone chain. Points whose turn falls below the
/// polygon's area tolerance are dropped so the result validates.
pub fn convex_hull(points: &[Point2]) -> Result<ConvexPolygon, PolygonError> {
    if let Some(index) = points.iter().position(|p| !p.is_finite()) {
        return Err(PolygonError::NonFinite { index });
    }
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return Err(PolygonError::TooFewVertices { count: pts.len() });
    }
    let diameter = brute_diameter(&pts);
    let tol = Tolerances::for_diameter(diameter);
    let eps = 4.0 * tol.area;

    let mut hull: Vec<Point2> = Vec::with_capacity(pts.len() + 1);
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point2>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                let turn = (b - a).cross(p - b);
                if turn <= eps || b.distance(p) <= tol.geom {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        hull.pop();
    }
    // seam vertices can still be nearly collinear after both passes
    loop {
        let n = hull.len();
        if n < 3 {
            break;
        }
        let bad = (0..n).find(|&i| {
            let prev = hull[(i + n - 1) % n];
            let next = hull[(i + 1) % n];
            (hull[i] - prev).cross(next - hull[i]) <= eps || hull[i].distance(next) <= tol.geom
        });
        match bad {
            Some(i) => {
                hull.remove(i);
            }
            None => break,
        }
    }
    ConvexPolygon::new(hull)
}
