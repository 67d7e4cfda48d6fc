//! Linear-size approximation algorithms.

use std::f64::consts::FRAC_PI_2;

use crate::geom::{
    dedup_points, largest_inscribed_circle, min_perimeter_rectangle, min_width,
    steiner_three_points, tangent_triangle, ConvexPolygon, Direction, OrientedRectangle, Point2,
    TangentTriangle,
};

use super::ucurve::{u_curve, u_curve_length};
use super::{Barrier, BarrierKind, BarrierSolution, Candidate, Method, Quality};

/// The two U-curves over the lines of the minimum-width strip.
///
/// `B1` hangs from the upper strip line (lower chain plus rises), `B2` from
/// the lower one (upper chain plus drops). Their lengths sum to `p + 2w`.
fn strip_curves(poly: &ConvexPolygon) -> [(String, super::UCurve); 2] {
    let mw = min_width(poly);
    let alpha = mw.direction.theta();
    [
        (
            "B1".to_string(),
            u_curve(poly, Direction::oriented(alpha + FRAC_PI_2)),
        ),
        (
            "B2".to_string(),
            u_curve(poly, Direction::oriented(alpha - FRAC_PI_2)),
        ),
    ]
}

fn single_arc(polyline: Vec<Point2>) -> Barrier {
    Barrier::new(vec![polyline], BarrierKind::SingleArc).expect("U-curves are nondegenerate arcs")
}

/// Shorter of the two U-curves built on the minimum-width strip.
pub fn algo_a1(poly: &ConvexPolygon) -> BarrierSolution {
    let curves = strip_curves(poly);
    let candidates = curves
        .iter()
        .map(|(l, u)| Candidate::new(l.clone(), u.length))
        .collect();
    let [(_, b1), (_, b2)] = curves;
    let best = if b2.length < b1.length { b2 } else { b1 };
    BarrierSolution::new(
        poly,
        single_arc(best.polyline),
        Method::A1,
        Quality::Approximation,
        candidates,
    )
}

/// Steiner tree on the corners of a tangent triangle, as a barrier.
fn triangle_tree(t: &TangentTriangle) -> Barrier {
    let [a, b, c] = t.corners();
    let star = steiner_three_points(a, b, c);
    let polylines = match star.point {
        Some(s) => vec![vec![s, a], vec![s, b], vec![s, c]],
        None => {
            // two sides meeting at the corner opposite the longest side
            vec![vec![b, a, c]]
        }
    };
    Barrier::new(polylines, BarrierKind::Connected).expect("triangle trees are connected")
}

/// A1's two curves plus the Steiner tree of the incircle's tangent triangle,
/// whichever is shortest.
///
/// The tangent triangle exists only when the largest inscribed circle has no
/// two diametrically opposite contacts; otherwise candidate `B3` is reported
/// with infinite length.
pub fn algo_a2(poly: &ConvexPolygon) -> BarrierSolution {
    let curves = strip_curves(poly);
    let circle = largest_inscribed_circle(poly);
    let b3 = tangent_triangle(poly, &circle)
        .ok()
        .flatten()
        .map(|t| triangle_tree(&t));

    let mut candidates: Vec<Candidate> = curves
        .iter()
        .map(|(l, u)| Candidate::new(l.clone(), u.length))
        .collect();
    candidates.push(Candidate::new(
        "B3",
        b3.as_ref().map_or(f64::INFINITY, Barrier::length),
    ));

    let [(_, c1), (_, c2)] = curves;
    let arc = if c2.length < c1.length { c2 } else { c1 };
    let barrier = match b3 {
        Some(tree) if tree.length() < arc.length => tree,
        _ => single_arc(arc.polyline),
    };
    BarrierSolution::new(
        poly,
        barrier,
        Method::A2,
        Quality::Approximation,
        candidates,
    )
}

/// Oriented baselines at which a U-curve can be minimal: for each edge of
/// direction `d`, the angles `d`, `d + π/2` and `d − π/2` put that edge on
/// the baseline or on one of the two vertical strip lines.
pub fn algo_a3_candidates(poly: &ConvexPolygon) -> Vec<(Direction, f64)> {
    let n = poly.len();
    let mut out = Vec::with_capacity(3 * n);
    for i in 0..n {
        let (a, b) = poly.edge(i);
        let d = (b - a).angle();
        for phi in [d, d + FRAC_PI_2, d - FRAC_PI_2] {
            let dir = Direction::oriented(phi);
            out.push((dir, u_curve_length(poly, dir)));
        }
    }
    out
}

/// Shortest U-curve over all baseline directions.
///
/// The length is concave between consecutive edge-flush configurations, so
/// the minimum is attained at one of the `3n` candidate baselines.
pub fn algo_a3(poly: &ConvexPolygon) -> BarrierSolution {
    let cands = algo_a3_candidates(poly);
    let (best_dir, _) = cands
        .iter()
        .copied()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("polygon has edges");
    let u = u_curve(poly, best_dir);
    let candidates = cands
        .iter()
        .map(|(d, l)| Candidate::new(format!("baseline {:.12}", d.theta()), *l))
        .collect();
    BarrierSolution::new(
        poly,
        single_arc(u.polyline),
        Method::A3,
        Quality::Approximation,
        candidates,
    )
}

/// Vertex indices of `poly` lying on rectangle side `k`, as a
/// counterclockwise run `(first, last)`.
fn contact_run(
    poly: &ConvexPolygon,
    rect: &OrientedRectangle,
    k: usize,
    tol: f64,
) -> (usize, usize) {
    let n = poly.len();
    let (a, b) = rect.side(k);
    let inward = (b - a).normalized().perp();
    let on = |i: usize| (poly.vertex(i) - a).dot(inward) <= tol;
    let touching: Vec<usize> = (0..n).filter(|&i| on(i)).collect();
    let seed = touching.first().copied().unwrap_or_else(|| {
        (0..n)
            .min_by(|&x, &y| {
                (poly.vertex(x) - a)
                    .dot(inward)
                    .total_cmp(&(poly.vertex(y) - a).dot(inward))
            })
            .expect("polygon has vertices")
    });
    let mut first = seed;
    while on((first + n - 1) % n) && (first + n - 1) % n != seed {
        first = (first + n - 1) % n;
    }
    let mut last = seed;
    while on((last + 1) % n) && (last + 1) % n != first {
        last = (last + 1) % n;
    }
    (first, last)
}

/// Corner component plus altitude for each corner of the minimum-perimeter
/// enclosing rectangle; the shortest of the four.
///
/// For corner `c_k` the component runs from the previous corner along its
/// side, follows the boundary chain of the polygon around `c_k`, and leaves
/// along the next side to the following corner. The second polyline is the
/// altitude from the opposite corner onto the diagonal joining the
/// component's ends, of length `xy / √(x² + y²)`.
pub fn algo_a4(poly: &ConvexPolygon) -> BarrierSolution {
    let rect = min_perimeter_rectangle(poly);
    let tol = poly.tolerances().geom;
    let runs: Vec<(usize, usize)> = (0..4).map(|k| contact_run(poly, &rect, k, tol)).collect();

    let mut best: Option<Barrier> = None;
    let mut candidates = Vec::with_capacity(4);
    for k in 0..4 {
        let prev_corner = rect.corners[(k + 3) % 4];
        let next_corner = rect.corners[(k + 1) % 4];
        let opposite = rect.corners[(k + 2) % 4];
        let start = runs[(k + 3) % 4].0;
        let end = runs[k].1;

        let mut pts = vec![prev_corner];
        pts.extend(poly.chain(start, end));
        pts.push(next_corner);
        let component = dedup_points(pts, tol);

        let diag = next_corner - prev_corner;
        let t = (opposite - prev_corner).dot(diag) / diag.dot(diag);
        let foot = prev_corner + diag * t;
        let barrier = Barrier::new(
            vec![component, vec![opposite, foot]],
            BarrierKind::Arbitrary,
        )
        .expect("corner components are nondegenerate");
        candidates.push(Candidate::new(format!("B{}", k + 1), barrier.length()));
        if best.as_ref().is_none_or(|b| barrier.length() < b.length()) {
            best = Some(barrier);
        }
    }
    BarrierSolution::new(
        poly,
        best.expect("four corners"),
        Method::A4,
        Quality::Approximation,
        candidates,
    )
}
