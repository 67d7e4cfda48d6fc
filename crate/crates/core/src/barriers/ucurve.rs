use crate::geom::{dedup_points, polyline_length, ConvexPolygon, Direction, Point2};

/// Drop–arc–drop curve over a tangent baseline.
#[derive(Clone, Debug, PartialEq)]
pub struct UCurve {
    /// Oriented direction of the baseline; the polygon lies to its left.
    pub baseline: Direction,
    pub polyline: Vec<Point2>,
    pub length: f64,
}

/// Where the U-curve for a baseline attaches to the polygon.
struct Frame {
    left: usize,
    right: usize,
    left_drop: f64,
    right_drop: f64,
    down: Point2,
}

fn frame(poly: &ConvexPolygon, baseline: Direction) -> Frame {
    let tol = poly.tolerances().geom;
    let along = baseline.unit();
    let up = along.perp();
    let x = |p: Point2| p.dot(along);
    let y = |p: Point2| p.dot(up);

    let verts = poly.vertices();
    let (mut xmin, mut xmax, mut ymin) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY);
    for &v in verts {
        xmin = xmin.min(x(v));
        xmax = xmax.max(x(v));
        ymin = ymin.min(y(v));
    }
    // lowest vertex on each vertical strip line
    let lowest_on = |target: f64| {
        (0..verts.len())
            .filter(|&i| (x(verts[i]) - target).abs() <= tol)
            .min_by(|&a, &b| y(verts[a]).total_cmp(&y(verts[b])))
            .expect("a strip line touches the polygon")
    };
    let left = lowest_on(xmin);
    let right = lowest_on(xmax);
    Frame {
        left,
        right,
        left_drop: y(verts[left]) - ymin,
        right_drop: y(verts[right]) - ymin,
        down: -up,
    }
}

/// Length of the U-curve for `baseline` without building it.
pub(crate) fn u_curve_length(poly: &ConvexPolygon, baseline: Direction) -> f64 {
    let f = frame(poly, baseline);
    // the far chain runs counterclockwise from the right contact to the left
    f.left_drop + poly.chain_length(f.right, f.left) + f.right_drop
}

/// U-curve of `poly` over the tangent line with oriented direction
/// `baseline` (the polygon on its left).
///
/// In the frame where the baseline is horizontal and below the polygon,
/// `p1` and `p2` are the lowest polygon points on the two vertical
/// supporting lines. The curve drops from `p1` to the baseline, follows the
/// upper boundary chain from `p1` to `p2`, and drops from `p2`.
pub fn u_curve(poly: &ConvexPolygon, baseline: Direction) -> UCurve {
    let baseline = Direction::oriented(baseline.theta());
    let f = frame(poly, baseline);
    let tol = poly.tolerances().geom;
    let p1 = poly.vertex(f.left);
    let p2 = poly.vertex(f.right);
    let mut arc = poly.chain(f.right, f.left);
    arc.reverse();

    let mut pts = Vec::with_capacity(arc.len() + 2);
    pts.push(p1 + f.down * f.left_drop);
    pts.extend(arc);
    pts.push(p2 + f.down * f.right_drop);
    let polyline = dedup_points(pts, tol);
    let length = polyline_length(&polyline);
    UCurve {
        baseline,
        polyline,
        length,
    }
}
