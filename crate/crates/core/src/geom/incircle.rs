//! Largest inscribed circle and the tangent triangle built on its contacts.

use std::f64::consts::{PI, TAU};

use thiserror::Error;

use super::point::Point2;
use super::polygon::ConvexPolygon;
use super::steiner::steiner_three_points;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IncircleError {
    /// Neither an antipodal contact pair nor a positively spanning contact
    /// triple was found. Only reachable through tolerance trouble.
    #[error("incircle contacts admit neither an antipodal pair nor a spanning triple")]
    InconsistentIncircle,
}

/// A largest circle contained in a polygon.
#[derive(Clone, Debug, PartialEq)]
pub struct InscribedCircle {
    pub center: Point2,
    pub radius: f64,
    /// Edges whose supporting line lies within the contact tolerance of the
    /// circle, in increasing index order.
    pub touching_edges: Vec<usize>,
}

/// Chebyshev center of a convex polygon.
///
/// Maximizes the concave function `g(c) = min_i dist_i(c)` by an
/// active-set ascent: from the vertex centroid, move along the direction
/// that raises every tight edge distance fastest, up to the next point where
/// another edge becomes tight. The walk stops once the tight inward normals
/// are not contained in any open half-plane.
pub fn largest_inscribed_circle(poly: &ConvexPolygon) -> InscribedCircle {
    let n = poly.len();
    let tol = poly.tolerances();
    let normals: Vec<Point2> = (0..n).map(|i| poly.inward_normal(i)).collect();
    let offsets: Vec<f64> = (0..n).map(|i| poly.vertex(i).dot(normals[i])).collect();
    let dist = |c: Point2, i: usize| c.dot(normals[i]) - offsets[i];
    let active_eps = 1e-12 * poly.diameter();

    let mut center = poly.centroid();
    for _ in 0..(8 * n + 32) {
        let d: Vec<f64> = (0..n).map(|i| dist(center, i)).collect();
        let g = d.iter().copied().fold(f64::INFINITY, f64::min);
        let active: Vec<usize> = (0..n).filter(|&i| d[i] - g <= active_eps).collect();
        let Some((dir, rate)) = ascent_direction(&active, &normals, tol.ang) else {
            break;
        };
        let mut step = f64::INFINITY;
        for j in 0..n {
            let r = dir.dot(normals[j]);
            if r < rate && d[j] - g > active_eps {
                step = step.min((d[j] - g) / (rate - r));
            }
        }
        if !step.is_finite() || step <= 0.0 {
            break;
        }
        center += dir * step;
    }

    let d: Vec<f64> = (0..n).map(|i| dist(center, i)).collect();
    let radius = d.iter().copied().fold(f64::INFINITY, f64::min);
    let touching_edges = (0..n).filter(|&i| d[i] - radius <= tol.touch).collect();
    InscribedCircle {
        center,
        radius,
        touching_edges,
    }
}

/// Best unit direction for raising all active distances at once, with its
/// guaranteed rate; `None` when the active normals leave no ascent.
fn ascent_direction(active: &[usize], normals: &[Point2], ang_tol: f64) -> Option<(Point2, f64)> {
    let mut angles: Vec<f64> = active
        .iter()
        .map(|&i| normals[i].angle().rem_euclid(TAU))
        .collect();
    angles.sort_by(f64::total_cmp);
    let k = angles.len();
    // the largest circular gap; the arc spanned by the normals is its complement
    let (gap_end, gap) = (0..k)
        .map(|i| {
            let next = if i + 1 < k {
                angles[i + 1]
            } else {
                angles[0] + TAU
            };
            (next, next - angles[i])
        })
        .max_by(|a, b| a.1.total_cmp(&b.1))?;
    let span = TAU - gap;
    if span >= PI - ang_tol {
        return None;
    }
    let mid = gap_end + 0.5 * span;
    Some((Point2::from_angle(mid), (0.5 * span).cos()))
}

/// Triangle circumscribed about a polygon and its incircle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TangentTriangle {
    pub a_prime: Point2,
    pub b_prime: Point2,
    pub c_prime: Point2,
}

impl TangentTriangle {
    /// Builds the triangle with corners relabeled so that `a ≥ b ≥ c`,
    /// where `a = |B'C'|`, `b = |C'A'|`, `c = |A'B'|`.
    pub fn new(p: Point2, q: Point2, r: Point2) -> Self {
        // the side opposite a corner is the distance between the other two
        let mut corners = [(q.distance(r), p), (r.distance(p), q), (p.distance(q), r)];
        corners.sort_by(|x, y| y.0.total_cmp(&x.0));
        TangentTriangle {
            a_prime: corners[0].1,
            b_prime: corners[1].1,
            c_prime: corners[2].1,
        }
    }

    pub fn corners(&self) -> [Point2; 3] {
        [self.a_prime, self.b_prime, self.c_prime]
    }

    /// Side lengths `(a, b, c)`, longest first.
    pub fn sides(&self) -> (f64, f64, f64) {
        (
            self.b_prime.distance(self.c_prime),
            self.c_prime.distance(self.a_prime),
            self.a_prime.distance(self.b_prime),
        )
    }

    fn area_signed(&self) -> f64 {
        0.5 * (self.b_prime - self.a_prime).cross(self.c_prime - self.a_prime)
    }

    pub fn area(&self) -> f64 {
        self.area_signed().abs()
    }

    /// Whether `p` lies in the closed triangle, up to `tol`.
    pub fn contains(&self, p: Point2, tol: f64) -> bool {
        let c = self.corners();
        let sign = if self.area_signed() >= 0.0 { 1.0 } else { -1.0 };
        (0..3).all(|k| {
            let (a, b) = (c[k], c[(k + 1) % 3]);
            sign * (b - a).normalized().cross(p - a) >= -tol
        })
    }
}

/// Triangle formed by the supporting lines of three incircle contacts.
///
/// Returns `Ok(None)` when two contact edges are parallel with opposite
/// inward normals (the circle meets two diametrically opposite boundary
/// points). Otherwise every triple of contact edges whose normals
/// positively span the plane yields a containing triangle; the one whose
/// corners have the shortest Steiner tree is returned.
pub fn tangent_triangle(
    poly: &ConvexPolygon,
    circ: &InscribedCircle,
) -> Result<Option<TangentTriangle>, IncircleError> {
    let tol = poly.tolerances();
    let edges = &circ.touching_edges;
    let normals: Vec<Point2> = edges.iter().map(|&i| poly.inward_normal(i)).collect();
    for (i, a) in normals.iter().enumerate() {
        for b in &normals[i + 1..] {
            if a.dot(*b) < 0.0 && a.cross(*b).abs() <= tol.ang {
                return Ok(None);
            }
        }
    }

    let line = |k: usize| {
        let e = edges[k];
        (normals[k], poly.vertex(e).dot(normals[k]))
    };
    let mut best: Option<(f64, TangentTriangle)> = None;
    let m = edges.len();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                if !positively_spanning(normals[i], normals[j], normals[k]) {
                    continue;
                }
                let (Some(p), Some(q), Some(r)) = (
                    intersect(line(i), line(j)),
                    intersect(line(j), line(k)),
                    intersect(line(k), line(i)),
                ) else {
                    continue;
                };
                let len = steiner_three_points(p, q, r).length;
                if best.as_ref().is_none_or(|(b, _)| len < *b) {
                    best = Some((len, TangentTriangle::new(p, q, r)));
                }
            }
        }
    }
    best.map(|(_, t)| Some(t))
        .ok_or(IncircleError::InconsistentIncircle)
}

/// No closed half-plane through the origin contains all three vectors.
fn positively_spanning(a: Point2, b: Point2, c: Point2) -> bool {
    let mut ang = [a.angle(), b.angle(), c.angle()].map(|t| t.rem_euclid(TAU));
    ang.sort_by(f64::total_cmp);
    let gaps = [ang[1] - ang[0], ang[2] - ang[1], ang[0] + TAU - ang[2]];
    gaps.iter().all(|&g| g < PI)
}

/// Intersection of lines `{x : n·x = c}`.
fn intersect((n1, c1): (Point2, f64), (n2, c2): (Point2, f64)) -> Option<Point2> {
    let det = n1.cross(n2);
    if det.abs() < 1e-15 {
        return None;
    }
    Some(Point2::new(
        (c1 * n2.y - c2 * n1.y) / det,
        (n1.x * c2 - n2.x * c1) / det,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coords: &[(f64, f64)]) -> ConvexPolygon {
        ConvexPolygon::from_coords(coords).unwrap()
    }

    #[test]
    fn square_incircle() {
        let c = largest_inscribed_circle(&poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]));
        assert!(c.center.distance(Point2::new(0.5, 0.5)) < 1e-15);
        assert!((c.radius - 0.5).abs() < 1e-15);
        assert_eq!(c.touching_edges, vec![0, 1, 2, 3]);
    }

    #[test]
    fn triangle_inradius() {
        let c =
            largest_inscribed_circle(&poly(&[(0.0, 0.0), (1.0, 0.0), (0.5, 3f64.sqrt() / 2.0)]));
        assert!((c.radius - 3f64.sqrt() / 6.0).abs() < 1e-14);
        assert_eq!(c.touching_edges.len(), 3);
    }

    #[test]
    fn rectangle_touches_long_edges() {
        let c = largest_inscribed_circle(&poly(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (0.0, 1.0)]));
        assert!((c.radius - 0.5).abs() < 1e-15);
        assert_eq!(c.touching_edges, vec![0, 2]);
    }

    #[test]
    fn walk_reaches_off_center_optimum() {
        // a long skewed quadrilateral: the centroid is far from the optimum
        let p = poly(&[(0.0, 0.0), (10.0, 0.0), (10.5, 0.3), (0.2, 2.0)]);
        let c = largest_inscribed_circle(&p);
        assert!(c.touching_edges.len() >= 2);
        for i in 0..p.len() {
            assert!(p.edge_distance(i, c.center) >= c.radius - 1e-12);
        }
    }

    #[test]
    fn tangent_triangle_cases() {
        let tri = poly(&[(0.0, 0.0), (1.0, 0.0), (0.5, 3f64.sqrt() / 2.0)]);
        let t = tangent_triangle(&tri, &largest_inscribed_circle(&tri))
            .unwrap()
            .unwrap();
        for v in tri.vertices() {
            assert!(t.corners().iter().any(|c| c.distance(*v) < 1e-12));
        }

        let sq = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        assert_eq!(
            tangent_triangle(&sq, &largest_inscribed_circle(&sq)).unwrap(),
            None
        );
    }

    #[test]
    fn relabels_longest_side_first() {
        let t = TangentTriangle::new(
            Point2::new(0.0, 0.0),
            Point2::new(4.0, 0.0),
            Point2::new(0.0, 1.0),
        );
        let (a, b, c) = t.sides();
        assert!(a >= b && b >= c);
        assert!((a - 17f64.sqrt()).abs() < 1e-15);
    }
}
