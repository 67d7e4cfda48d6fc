use std::f64::consts::FRAC_PI_3;

use super::point::Point2;

/// Shortest tree joining three terminals.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SteinerStar {
    /// The Fermat–Torricelli point, or `None` when the tree is two sides of
    /// the triangle meeting at a wide-angle (or collinear middle) terminal.
    pub point: Option<Point2>,
    pub length: f64,
}

const WIDE: f64 = 2.0 * FRAC_PI_3;

/// Interior angle of triangle `(a, b, c)` at `a`.
fn angle_at(a: Point2, b: Point2, c: Point2) -> f64 {
    let u = b - a;
    let v = c - a;
    u.cross(v).abs().atan2(u.dot(v))
}

/// Steiner minimal tree of three points.
///
/// When every angle is below 2π/3 the tree is a star through the Fermat
/// point, located from its barycentric weights `|BC| / sin(A + π/3)`. When
/// some angle reaches 2π/3 the tree is the two sides meeting at that vertex.
/// Collinear or coincident input falls into the second case and yields the
/// longest pairwise span.
pub fn steiner_three_points(a: Point2, b: Point2, c: Point2) -> SteinerStar {
    let (ab, bc, ca) = (a.distance(b), b.distance(c), c.distance(a));
    if ab == 0.0 || bc == 0.0 || ca == 0.0 {
        return SteinerStar {
            point: None,
            length: ab.max(bc).max(ca),
        };
    }
    let (ang_a, ang_b, ang_c) = (angle_at(a, b, c), angle_at(b, c, a), angle_at(c, a, b));
    if ang_a >= WIDE {
        return SteinerStar {
            point: None,
            length: ab + ca,
        };
    }
    if ang_b >= WIDE {
        return SteinerStar {
            point: None,
            length: ab + bc,
        };
    }
    if ang_c >= WIDE {
        return SteinerStar {
            point: None,
            length: bc + ca,
        };
    }
    let wa = bc / (ang_a + FRAC_PI_3).sin();
    let wb = ca / (ang_b + FRAC_PI_3).sin();
    let wc = ab / (ang_c + FRAC_PI_3).sin();
    let s = (a * wa + b * wb + c * wc) / (wa + wb + wc);
    SteinerStar {
        point: Some(s),
        length: s.distance(a) + s.distance(b) + s.distance(c),
    }
}

/// Point minimizing the summed distance to three terminals (the wide-angle
/// terminal itself in the degenerate case).
pub fn fermat_point(a: Point2, b: Point2, c: Point2) -> Point2 {
    if let Some(s) = steiner_three_points(a, b, c).point {
        return s;
    }
    let (ab, bc, ca) = (a.distance(b), b.distance(c), c.distance(a));
    // the hub of the degenerate tree is the terminal opposite the longest side
    if bc >= ab && bc >= ca {
        a
    } else if ca >= ab {
        b
    } else {
        c
    }
}

/// Closed-form Steiner length `√(x² + y² − 2xy cos(Z + π/3))` for sides `x`,
/// `y` enclosing the angle `Z`.
pub fn steiner_length_formula(x: f64, y: f64, angle_between: f64) -> f64 {
    (x * x + y * y - 2.0 * x * y * (angle_between + FRAC_PI_3).cos()).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equilateral_star() {
        let a = Point2::new(0.0, 0.0);
        let b = Point2::new(1.0, 0.0);
        let c = Point2::new(0.5, 3f64.sqrt() / 2.0);
        let s = steiner_three_points(a, b, c);
        assert!((s.length - 3f64.sqrt()).abs() < 1e-14);
        let centroid = (a + b + c) / 3.0;
        assert!(s.point.unwrap().distance(centroid) < 1e-14);
    }

    #[test]
    fn wide_angle_uses_two_sides() {
        let v = Point2::new(0.0, 0.0);
        let p = Point2::new(1.0, 0.0);
        let q = Point2::from_angle(150f64.to_radians()) * 2.0;
        let s = steiner_three_points(p, v, q);
        assert_eq!(s.point, None);
        assert!((s.length - 3.0).abs() < 1e-14);
        assert_eq!(fermat_point(p, v, q), v);
    }

    #[test]
    fn right_isoceles_matches_formula() {
        let c = Point2::new(0.0, 0.0);
        let s = steiner_three_points(Point2::new(1.0, 0.0), c, Point2::new(0.0, 1.0));
        let expect = (2.0 + 3f64.sqrt()).sqrt();
        assert!((s.length - expect).abs() < 1e-14);
        assert!(
            (steiner_length_formula(1.0, 1.0, std::f64::consts::FRAC_PI_2) - expect).abs() < 1e-14
        );
    }

    #[test]
    fn collinear_gives_longest_span() {
        let s = steiner_three_points(
            Point2::new(0.0, 0.0),
            Point2::new(3.0, 0.0),
            Point2::new(1.0, 0.0),
        );
        assert_eq!(s.point, None);
        assert!((s.length - 3.0).abs() < 1e-15);
    }
}
