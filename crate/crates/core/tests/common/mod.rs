#![allow(dead_code)]

use std::f64::consts::PI;

use opaque::barriers::Barrier;
use opaque::geom::{ConvexPolygon, Direction, Point2};
use opaque::random::{random_convex_polygon, seeded_rng};
use opaque::verify::Witness;
use proptest::prelude::*;

pub fn square() -> ConvexPolygon {
    ConvexPolygon::from_coords(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap()
}

pub fn polygon(seed: u64, n: usize) -> ConvexPolygon {
    random_convex_polygon(&mut seeded_rng(seed), n)
}

pub fn polygons(lo: usize, hi: usize) -> impl Strategy<Value = ConvexPolygon> {
    (any::<u64>(), lo..=hi).prop_map(|(seed, n)| polygon(seed, n))
}

/// Extent of the vertices along `u`, by direct enumeration.
pub fn extent(poly: &ConvexPolygon, u: Point2) -> f64 {
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for v in poly.vertices() {
        lo = lo.min(v.dot(u));
        hi = hi.max(v.dot(u));
    }
    hi - lo
}

pub fn width_at(poly: &ConvexPolygon, theta: f64) -> f64 {
    extent(poly, Point2::new(theta.cos(), theta.sin()))
}

/// Shortest Hamiltonian path by enumerating every vertex order.
pub fn brute_hamiltonian(pts: &[Point2]) -> f64 {
    fn go(pts: &[Point2], used: &mut [bool], last: usize, left: usize, acc: f64, best: &mut f64) {
        if acc >= *best {
            return;
        }
        if left == 0 {
            *best = acc;
            return;
        }
        for j in 0..pts.len() {
            if !used[j] {
                used[j] = true;
                go(
                    pts,
                    used,
                    j,
                    left - 1,
                    acc + pts[last].distance(pts[j]),
                    best,
                );
                used[j] = false;
            }
        }
    }
    let n = pts.len();
    let mut best = f64::INFINITY;
    let mut used = vec![false; n];
    for s in 0..n {
        used[s] = true;
        go(pts, &mut used, s, n - 1, 0.0, &mut best);
        used[s] = false;
    }
    best
}

/// Largest inscribed circle radius by trying the point equidistant from
/// every triple of edge lines.
pub fn incircle_by_triples(poly: &ConvexPolygon) -> (Point2, f64) {
    let n = poly.len();
    let lines: Vec<(Point2, f64)> = (0..n)
        .map(|i| {
            let (a, b) = poly.edge(i);
            let nrm = (b - a).perp().normalized();
            (nrm, a.dot(nrm))
        })
        .collect();
    let dist = |c: Point2| {
        lines
            .iter()
            .map(|(nrm, off)| c.dot(*nrm) - off)
            .fold(f64::INFINITY, f64::min)
    };
    let mut best = (poly.vertex(0), 0.0);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                // (n_i − n_j)·c = o_i − o_j, (n_i − n_k)·c = o_i − o_k
                let (ni, oi) = lines[i];
                let (nj, oj) = lines[j];
                let (nk, ok) = lines[k];
                let (r1, r2) = (ni - nj, ni - nk);
                let det = r1.cross(r2);
                if det.abs() < 1e-14 {
                    continue;
                }
                let (b1, b2) = (oi - oj, oi - ok);
                let c = Point2::new((b1 * r2.y - b2 * r1.y) / det, (r1.x * b2 - r2.x * b1) / det);
                let r = dist(c);
                if r > best.1 {
                    best = (c, r);
                }
            }
        }
    }
    best
}

/// Distance between the line `{x : x·n(θ) = offset}` and segment `ab`.
pub fn line_segment_distance(theta: Direction, offset: f64, a: Point2, b: Point2) -> f64 {
    let nrm = Point2::new(-theta.theta().sin(), theta.theta().cos());
    let (sa, sb) = (a.dot(nrm) - offset, b.dot(nrm) - offset);
    if sa * sb <= 0.0 {
        0.0
    } else {
        sa.abs().min(sb.abs())
    }
}

/// Samples of `[0, π)` at `k` evenly spaced points.
pub fn half_turn(k: usize) -> impl Iterator<Item = f64> {
    (0..k).map(move |i| PI * i as f64 / k as f64)
}

/// The witness line crosses the polygon's interior and stays clear of every
/// barrier segment.
pub fn witness_is_valid(poly: &ConvexPolygon, barrier: &Barrier, w: &Witness) -> bool {
    let tol = poly.tolerances().cover;
    let span = poly.project(w.theta);
    let s = w.representative_offset;
    s > span.lo + tol
        && s < span.hi - tol
        && w.uncovered.len() > tol
        && barrier
            .segments()
            .all(|(a, b)| line_segment_distance(w.theta, s, a, b) > tol)
}
