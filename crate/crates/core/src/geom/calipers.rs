//! Rotating-calipers sweeps over edge-flush configurations.

use std::f64::consts::{FRAC_PI_2, PI};

use super::point::{reduce_angle, Direction, Point2};
use super::polygon::{ConvexPolygon, Interval};

/// The region between two parallel lines.
///
/// The lines are orthogonal to `direction`; `lo` and `hi` are their offsets
/// measured along `direction.unit()`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Strip {
    pub direction: Direction,
    pub lo: f64,
    pub hi: f64,
}

impl Strip {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, p: Point2, tol: f64) -> bool {
        let s = p.dot(self.direction.unit());
        s >= self.lo - tol && s <= self.hi + tol
    }
}

/// Result of [`min_width`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinWidth {
    /// Direction along which the extent is smallest.
    pub direction: Direction,
    pub width: f64,
    pub strip: Strip,
}

/// A rectangle given by its corners in counterclockwise order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrientedRectangle {
    pub corners: [Point2; 4],
    /// Length of sides `corners[0]–corners[1]` and `corners[2]–corners[3]`.
    pub side_x: f64,
    /// Length of sides `corners[1]–corners[2]` and `corners[3]–corners[0]`.
    pub side_y: f64,
}

impl OrientedRectangle {
    pub fn perimeter(&self) -> f64 {
        2.0 * (self.side_x + self.side_y)
    }

    /// Side `k` runs from `corners[k]` to `corners[k + 1]`.
    pub fn side(&self, k: usize) -> (Point2, Point2) {
        (self.corners[k % 4], self.corners[(k + 1) % 4])
    }

    pub fn contains(&self, p: Point2, tol: f64) -> bool {
        (0..4).all(|k| {
            let (a, b) = self.side(k);
            (b - a).normalized().cross(p - a) >= -tol
        })
    }
}

/// Farthest-vertex pointer: advances `j` while `f` does not decrease.
fn advance(poly: &ConvexPolygon, mut j: usize, f: impl Fn(Point2) -> f64) -> usize {
    let n = poly.len();
    for _ in 0..n {
        let next = (j + 1) % n;
        if f(poly.vertex(next)) >= f(poly.vertex(j)) {
            j = next;
        } else {
            break;
        }
    }
    j
}

fn argmax(poly: &ConvexPolygon, f: impl Fn(Point2) -> f64) -> usize {
    (0..poly.len())
        .max_by(|&a, &b| f(poly.vertex(a)).total_cmp(&f(poly.vertex(b))))
        .unwrap_or(0)
}

/// Minimum-width enclosing strip.
///
/// The optimum is always flush with an edge; the antipodal vertex of each
/// edge is tracked with a single rotating pointer. Among directions whose
/// widths agree within the positional tolerance the smallest canonical
/// angle wins.
pub fn min_width(poly: &ConvexPolygon) -> MinWidth {
    let n = poly.len();
    let tol = poly.tolerances();
    let height = |i: usize, p: Point2| (p - poly.vertex(i)).dot(poly.inward_normal(i));

    let mut far = argmax(poly, |p| height(0, p));
    let mut best: Option<(f64, f64)> = None; // (width, canonical angle)
    for i in 0..n {
        far = advance(poly, far, |p| height(i, p));
        let w = height(i, poly.vertex(far));
        let angle = reduce_angle(poly.inward_normal(i).angle(), PI);
        best = match best {
            None => Some((w, angle)),
            Some((bw, ba)) => {
                if w < bw - tol.geom || ((w - bw).abs() <= tol.geom && angle < ba) {
                    Some((w, angle))
                } else {
                    Some((bw, ba))
                }
            }
        };
    }
    let (_, angle) = best.expect("polygon has edges");
    let direction = Direction::line(angle);
    let u = direction.unit();
    let iv = Interval::hull_of(poly.vertices().iter().map(|p| p.dot(u))).expect("vertices");
    MinWidth {
        direction,
        width: iv.len(),
        strip: Strip {
            direction,
            lo: iv.lo,
            hi: iv.hi,
        },
    }
}

/// Minimum-perimeter enclosing rectangle.
///
/// Enumerates the `n` rectangles with one side flush against an edge,
/// maintaining three caliper pointers (farthest along the edge, behind it,
/// and away from it).
pub fn min_perimeter_rectangle(poly: &ConvexPolygon) -> OrientedRectangle {
    let n = poly.len();
    let tol = poly.tolerances();
    let edge_unit = |i: usize| {
        let (a, b) = poly.edge(i);
        (b - a).normalized()
    };

    let u0 = edge_unit(0);
    let v0 = u0.perp();
    let mut hi_u = argmax(poly, |p| p.dot(u0));
    let mut lo_u = argmax(poly, |p| -p.dot(u0));
    let mut far = argmax(poly, |p| p.dot(v0));

    let mut best: Option<(f64, f64, OrientedRectangle)> = None;
    for i in 0..n {
        let u = edge_unit(i);
        let v = u.perp();
        hi_u = advance(poly, hi_u, |p| p.dot(u));
        far = advance(poly, far, |p| p.dot(v));
        lo_u = advance(poly, lo_u, |p| -p.dot(u));

        let o = poly.vertex(i);
        let umax = (poly.vertex(hi_u) - o).dot(u);
        let umin = (poly.vertex(lo_u) - o).dot(u);
        let h = (poly.vertex(far) - o).dot(v);
        let rect = OrientedRectangle {
            corners: [
                o + u * umin,
                o + u * umax,
                o + u * umax + v * h,
                o + u * umin + v * h,
            ],
            side_x: umax - umin,
            side_y: h,
        };
        let per = rect.perimeter();
        let angle = reduce_angle(u.angle(), FRAC_PI_2);
        let better = match &best {
            None => true,
            Some((bp, ba, _)) => {
                per < bp - tol.geom || ((per - bp).abs() <= tol.geom && angle < *ba)
            }
        };
        if better {
            best = Some((per, angle, rect));
        }
    }
    best.expect("polygon has edges").2
}
