//! Steiner trees on polygon vertices: the minimum connected interior barrier.

use crate::geom::{fermat_point, steiner_three_points, ConvexPolygon, Point2};

use super::{Barrier, BarrierKind, BarrierSolution, Candidate, Method, Quality};

/// A tree over terminals plus added junction points.
#[derive(Clone, Debug, PartialEq)]
pub struct SteinerTree {
    pub nodes: Vec<Point2>,
    pub edges: Vec<(usize, usize)>,
}

impl SteinerTree {
    pub fn length(&self) -> f64 {
        self.edges
            .iter()
            .map(|&(a, b)| self.nodes[a].distance(self.nodes[b]))
            .sum()
    }

    fn into_barrier(self) -> Barrier {
        let polylines = self
            .edges
            .iter()
            .filter(|&&(a, b)| self.nodes[a] != self.nodes[b])
            .map(|&(a, b)| vec![self.nodes[a], self.nodes[b]])
            .collect();
        Barrier::new(polylines, BarrierKind::Connected).expect("trees are connected")
    }
}

/// Euclidean minimum spanning tree (Prim, `O(n²)`).
pub fn euclidean_mst(points: &[Point2]) -> SteinerTree {
    let n = points.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    if n > 1 {
        let mut in_tree = vec![false; n];
        let mut best = vec![(f64::INFINITY, 0usize); n];
        in_tree[0] = true;
        for j in 1..n {
            best[j] = (points[0].distance(points[j]), 0);
        }
        for _ in 1..n {
            let next = (0..n)
                .filter(|&j| !in_tree[j])
                .min_by(|&a, &b| best[a].0.total_cmp(&best[b].0))
                .expect("vertices remain");
            in_tree[next] = true;
            edges.push((best[next].1, next));
            for j in 0..n {
                if !in_tree[j] {
                    let d = points[next].distance(points[j]);
                    if d < best[j].0 {
                        best[j] = (d, next);
                    }
                }
            }
        }
    }
    SteinerTree {
        nodes: points.to_vec(),
        edges,
    }
}

/// Full topology `{a, b | c, d}`: one junction joined to `a`, `b`, the other
/// to `c`, `d`, and the two junctions to each other. Alternating Fermat-point
/// updates until the junctions move less than `eps`.
fn full_topology(a: Point2, b: Point2, c: Point2, d: Point2, eps: f64) -> SteinerTree {
    let centroid = (a + b + c + d) / 4.0;
    let mut s1 = (a + b + centroid) / 3.0;
    let mut s2 = (c + d + centroid) / 3.0;
    for _ in 0..100_000 {
        let n1 = fermat_point(a, b, s2);
        let n2 = fermat_point(c, d, n1);
        let moved = n1.distance(s1).max(n2.distance(s2));
        s1 = n1;
        s2 = n2;
        if moved < eps {
            break;
        }
    }
    SteinerTree {
        nodes: vec![a, b, c, d, s1, s2],
        edges: vec![(0, 4), (1, 4), (4, 5), (2, 5), (3, 5)],
    }
}

fn three_terminal_tree(a: Point2, b: Point2, c: Point2) -> SteinerTree {
    match steiner_three_points(a, b, c).point {
        Some(s) => SteinerTree {
            nodes: vec![a, b, c, s],
            edges: vec![(0, 3), (1, 3), (2, 3)],
        },
        None => {
            let hub = fermat_point(a, b, c);
            let nodes = vec![a, b, c];
            let h = nodes.iter().position(|&p| p == hub).unwrap_or(0);
            let edges = (0..3).filter(|&i| i != h).map(|i| (h, i)).collect();
            SteinerTree { nodes, edges }
        }
    }
}

/// Exact Steiner minimal tree for four terminals.
fn four_terminal_tree(pts: &[Point2], eps: f64) -> SteinerTree {
    let mut candidates = vec![euclidean_mst(pts)];
    for (p, q, r, s) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
        candidates.push(full_topology(pts[p], pts[q], pts[r], pts[s], eps));
    }
    for skip in 0..4 {
        let idx: Vec<usize> = (0..4).filter(|&i| i != skip).collect();
        let mut tree = three_terminal_tree(pts[idx[0]], pts[idx[1]], pts[idx[2]]);
        let attach = (0..3)
            .min_by(|&x, &y| {
                pts[skip]
                    .distance(tree.nodes[x])
                    .total_cmp(&pts[skip].distance(tree.nodes[y]))
            })
            .expect("three terminals");
        tree.nodes.push(pts[skip]);
        let extra = tree.nodes.len() - 1;
        tree.edges.push((attach, extra));
        candidates.push(tree);
    }
    candidates
        .into_iter()
        .min_by(|x, y| x.length().total_cmp(&y.length()))
        .expect("candidates")
}

/// Spanning tree shortened by replacing two edges that share a node with a
/// three-terminal Steiner star, greedily, until no replacement helps.
fn improved_mst(pts: &[Point2], eps: f64) -> SteinerTree {
    let mut tree = euclidean_mst(pts);
    for _ in 0..(4 * pts.len() + 16) {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); tree.nodes.len()];
        for (e, &(a, b)) in tree.edges.iter().enumerate() {
            adj[a].push(e);
            adj[b].push(e);
        }
        let other = |e: usize, v: usize| {
            let (a, b) = tree.edges[e];
            if a == v {
                b
            } else {
                a
            }
        };
        let mut best: Option<(f64, usize, usize, usize, Point2)> = None;
        for (v, incident) in adj.iter().enumerate() {
            for (x, &e1) in incident.iter().enumerate() {
                for &e2 in &incident[x + 1..] {
                    let (u, w) = (other(e1, v), other(e2, v));
                    let (pu, pv, pw) = (tree.nodes[u], tree.nodes[v], tree.nodes[w]);
                    let star = steiner_three_points(pu, pv, pw);
                    let Some(s) = star.point else { continue };
                    let gain = pu.distance(pv) + pv.distance(pw) - star.length;
                    if gain > eps && best.as_ref().is_none_or(|b| gain > b.0) {
                        best = Some((gain, e1, e2, v, s));
                    }
                }
            }
        }
        let Some((_, e1, e2, v, s)) = best else { break };
        let (u, w) = (other(e1, v), other(e2, v));
        let sid = tree.nodes.len();
        tree.nodes.push(s);
        tree.edges[e1] = (u, sid);
        tree.edges[e2] = (w, sid);
        tree.edges.push((v, sid));
    }
    tree
}

/// Shortest connected barrier confined to the polygon, which is a Steiner
/// minimal tree of the polygon's vertices.
///
/// Exact for up to four vertices. Beyond that the returned tree is an
/// improved spanning tree, labeled [`Quality::Heuristic`]; its length lies
/// between `(√3/2)·MST` and `MST`.
pub fn interior_connected(poly: &ConvexPolygon) -> BarrierSolution {
    let pts = poly.vertices();
    let eps = 1e-12 * poly.diameter();
    let mst_len = euclidean_mst(pts).length();
    let (tree, quality) = match pts.len() {
        3 => (three_terminal_tree(pts[0], pts[1], pts[2]), Quality::Exact),
        4 => (four_terminal_tree(pts, eps), Quality::Exact),
        _ => (improved_mst(pts, eps), Quality::Heuristic),
    };
    let candidates = vec![
        Candidate::new("mst", mst_len),
        Candidate::new("steiner", tree.length()),
    ];
    BarrierSolution::new(
        poly,
        tree.into_barrier(),
        Method::InteriorTree,
        quality,
        candidates,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn square_tree_has_two_junctions() {
        let sq =
            ConvexPolygon::from_coords(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap();
        let sol = interior_connected(&sq);
        assert!((sol.length - (1.0 + 3f64.sqrt())).abs() < 1e-9);
        assert_eq!(sol.quality, Quality::Exact);
    }

    #[test]
    fn mst_of_hexagon() {
        let hex: Vec<Point2> = (0..6)
            .map(|k| Point2::from_angle(PI * k as f64 / 3.0))
            .collect();
        assert!((euclidean_mst(&hex).length() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn heuristic_stays_in_steiner_sandwich() {
        let hex = ConvexPolygon::new(
            (0..6)
                .map(|k| Point2::from_angle(PI * k as f64 / 3.0))
                .collect(),
        )
        .unwrap();
        let sol = interior_connected(&hex);
        assert_eq!(sol.quality, Quality::Heuristic);
        assert!(sol.length <= 5.0 + 1e-12);
        assert!(sol.length >= 3f64.sqrt() / 2.0 * 5.0);
    }

    #[test]
    fn skinny_quadrilateral_prefers_spanning_tree_or_star() {
        let q = ConvexPolygon::from_coords(&[(0.0, 0.0), (10.0, 0.0), (10.0, 0.1), (0.0, 0.1)])
            .unwrap();
        let sol = interior_connected(&q);
        assert!(sol.length <= euclidean_mst(q.vertices()).length() + 1e-12);
        assert!(sol.length >= 10.0);
    }
}
