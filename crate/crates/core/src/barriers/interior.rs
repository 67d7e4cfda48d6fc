//! Shortest Hamiltonian path on the vertices of a convex polygon.
//!
//! An interior barrier must contain every vertex (a line tangent at a single
//! vertex meets the polygon nowhere else), and the shortest arc through all
//! vertices is the shortest Hamiltonian path. On points in convex position
//! such a path never crosses itself, so after its first vertex it always
//! continues to one end of the remaining contiguous arc of vertices.

use crate::geom::ConvexPolygon;

use super::{Barrier, BarrierKind, BarrierSolution, Candidate, Method, Quality};

/// Dynamic-programming tables over counterclockwise vertex arcs.
///
/// For the arc `v_i, v_{i+1}, …, v_j`, `s(i, j)` is the shortest path
/// visiting the whole arc starting at `v_i`, and `t(i, j)` the shortest one
/// starting at `v_j`. Arcs are stored by start index and size.
#[derive(Clone, Debug)]
pub struct DpTables {
    n: usize,
    s: Vec<f64>,
    t: Vec<f64>,
    /// `true` when `s(i, j)` continues to `v_j`, otherwise to `v_{i+1}`.
    s_jumps: Vec<bool>,
    /// `true` when `t(i, j)` continues to `v_i`, otherwise to `v_{j-1}`.
    t_jumps: Vec<bool>,
}

impl DpTables {
    /// Fills both tables in order of increasing arc size.
    pub fn compute(poly: &ConvexPolygon) -> Self {
        let n = poly.len();
        let dist = |i: usize, j: usize| poly.vertex(i).distance(poly.vertex(j));
        let mut tables = DpTables {
            n,
            s: vec![f64::NAN; n * n],
            t: vec![f64::NAN; n * n],
            s_jumps: vec![false; n * n],
            t_jumps: vec![false; n * n],
        };
        for i in 0..n {
            let k = tables.slot(i, 1);
            let d = dist(i, i + 1);
            tables.s[k] = d;
            tables.t[k] = d;
        }
        for span in 2..n {
            for i in 0..n {
                let j = (i + span) % n;
                let k = tables.slot(i, span);

                // S(i, j) = min{dist(i, i+1) + S(i+1, j), dist(i, j) + T(i+1, j)}
                let inner = tables.slot(i + 1, span - 1);
                let step = dist(i, i + 1) + tables.s[inner];
                let jump = dist(i, j) + tables.t[inner];
                tables.s_jumps[k] = jump < step;
                tables.s[k] = step.min(jump);

                // T(i, j) = min{dist(j, j-1) + T(i, j-1), dist(j, i) + S(i, j-1)}
                let inner = tables.slot(i, span - 1);
                let step = dist(j, j + n - 1) + tables.t[inner];
                let jump = dist(j, i) + tables.s[inner];
                tables.t_jumps[k] = jump < step;
                tables.t[k] = step.min(jump);
            }
        }
        tables
    }

    #[inline]
    fn slot(&self, i: usize, span: usize) -> usize {
        (i % self.n) * self.n + span
    }

    fn span(&self, i: usize, j: usize) -> usize {
        (j + self.n - i % self.n) % self.n
    }

    /// `S(i, j)`; `j` must differ from `i`.
    pub fn s(&self, i: usize, j: usize) -> f64 {
        self.s[self.slot(i, self.span(i, j))]
    }

    /// `T(i, j)`; `j` must differ from `i`.
    pub fn t(&self, i: usize, j: usize) -> f64 {
        self.t[self.slot(i, self.span(i, j))]
    }

    /// Vertex order of the path realizing `S(i, j)` (or `T(i, j)` when
    /// `from_end`).
    fn walk(&self, mut i: usize, mut j: usize, mut from_end: bool) -> Vec<usize> {
        let n = self.n;
        let mut order = Vec::with_capacity(self.span(i, j) + 1);
        loop {
            let span = self.span(i, j);
            let k = self.slot(i, span);
            if from_end {
                order.push(j % n);
                if span == 1 {
                    order.push(i % n);
                    break;
                }
                if self.t_jumps[k] {
                    from_end = false;
                }
                j = (j + n - 1) % n;
            } else {
                order.push(i % n);
                if span == 1 {
                    order.push(j % n);
                    break;
                }
                if self.s_jumps[k] {
                    from_end = true;
                }
                i = (i + 1) % n;
            }
        }
        order
    }

    /// Shortest Hamiltonian path over all vertices, as vertex indices.
    pub fn best_path(&self, poly: &ConvexPolygon) -> (f64, Vec<usize>) {
        let n = self.n;
        let dist = |i: usize, j: usize| poly.vertex(i).distance(poly.vertex(j));
        let mut best = (f64::INFINITY, 0, false);
        for i in 0..n {
            let (lo, hi) = ((i + 1) % n, (i + n - 1) % n);
            let forward = dist(i, lo) + self.s(lo, hi);
            let backward = dist(i, hi) + self.t(lo, hi);
            if forward < best.0 {
                best = (forward, i, false);
            }
            if backward < best.0 {
                best = (backward, i, true);
            }
        }
        let (len, start, backward) = best;
        let mut order = vec![start];
        order.extend(self.walk((start + 1) % n, (start + n - 1) % n, backward));
        (len, order)
    }
}

/// Optimal single-arc barrier confined to the polygon: the shortest
/// Hamiltonian path of its vertices, in `O(n²)` time and space.
pub fn interior_single_arc(poly: &ConvexPolygon) -> BarrierSolution {
    let tables = DpTables::compute(poly);
    let (len, order) = tables.best_path(poly);
    let path = order.iter().map(|&i| poly.vertex(i)).collect();
    let barrier =
        Barrier::new(vec![path], BarrierKind::SingleArc).expect("a Hamiltonian path is an arc");
    BarrierSolution::new(
        poly,
        barrier,
        Method::InteriorArc,
        Quality::Exact,
        vec![Candidate::new("hamiltonian-path", len)],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point2;
    use std::f64::consts::PI;

    fn poly(coords: &[(f64, f64)]) -> ConvexPolygon {
        ConvexPolygon::from_coords(coords).unwrap()
    }

    #[test]
    fn square_path_is_three_sides() {
        let sq = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let sol = interior_single_arc(&sq);
        assert!((sol.length - 3.0).abs() < 1e-12);
        assert_eq!(sol.barrier.polylines()[0].len(), 4);
    }

    #[test]
    fn triangle_uses_two_shortest_sides() {
        let t = poly(&[(0.0, 0.0), (4.0, 0.0), (1.0, 1.0)]);
        let sides = [4.0, 3f64.hypot(1.0), 2f64.sqrt()];
        let expect = sides.iter().sum::<f64>() - 4.0;
        assert!((interior_single_arc(&t).length - expect).abs() < 1e-12);
    }

    #[test]
    fn base_cases_and_chord_bound() {
        let hex = ConvexPolygon::new(
            (0..6)
                .map(|k| Point2::from_angle(PI * k as f64 / 3.0) * (1.0 + 0.1 * k as f64))
                .collect(),
        )
        .unwrap();
        let tables = DpTables::compute(&hex);
        for i in 0..6 {
            let d = hex.vertex(i).distance(hex.vertex(i + 1));
            assert_eq!(tables.s(i, (i + 1) % 6), d);
            assert_eq!(tables.t(i, (i + 1) % 6), d);
            for span in 1..6 {
                let j = (i + span) % 6;
                let chord = hex.vertex(i).distance(hex.vertex(j));
                assert!(tables.s(i, j) >= chord - 1e-15);
                assert!(tables.t(i, j) >= chord - 1e-15);
            }
        }
    }

    #[test]
    fn reconstructed_path_matches_value() {
        let p = poly(&[
            (0.0, 0.0),
            (3.0, -1.0),
            (5.0, 1.0),
            (4.0, 3.0),
            (1.0, 3.5),
            (-1.0, 2.0),
        ]);
        let tables = DpTables::compute(&p);
        let (len, order) = tables.best_path(&p);
        let mut seen = order.clone();
        seen.sort();
        assert_eq!(seen, (0..6).collect::<Vec<_>>());
        let walked: f64 = order
            .windows(2)
            .map(|w| p.vertex(w[0]).distance(p.vertex(w[1])))
            .sum();
        assert!((walked - len).abs() < 1e-12);
    }
}
