mod common;

use std::f64::consts::PI;

use common::{polygons, square, witness_is_valid};
use opaque::barriers::{solve, Barrier, BarrierKind, Method};
use opaque::fixtures::make_fixture;
use opaque::geom::{ConvexPolygon, Direction, Point2};
use opaque::verify::*;
use proptest::prelude::*;

fn boundary(poly: &ConvexPolygon) -> Barrier {
    let mut pts = poly.vertices().to_vec();
    pts.push(pts[0]);
    Barrier::new(vec![pts], BarrierKind::SingleArc).unwrap()
}

#[test]
fn square_fixture_barriers_are_opaque() {
    let f = make_fixture("unit-square").unwrap();
    for kb in &f.known_barriers {
        assert!(is_opaque(&f.polygon, &kb.barrier).opaque, "{}", kb.note);
        assert!(
            sampling_oracle(&f.polygon, &kb.barrier, 400, 400),
            "{}",
            kb.note
        );
    }
}

#[test]
fn rightmost_square_barrier_covers_diagonal_lines() {
    let f = make_fixture("unit-square").unwrap();
    let kb = &f.known_barriers[3];
    assert_eq!(
        projections_cover(&f.polygon, &kb.barrier, Direction::line(PI / 4.0)),
        (true, None)
    );
}

#[test]
fn dropping_a_polyline_from_each_fixture_barrier() {
    let f = make_fixture("unit-square").unwrap();
    for kb in &f.known_barriers {
        for i in 0..kb.barrier.polylines().len() {
            let Some(mutant) = kb.barrier.without_polyline(i) else {
                continue;
            };
            let report = is_opaque(&f.polygon, &mutant);
            assert!(!report.opaque, "{} without polyline {i}", kb.note);
            assert!(witness_is_valid(
                &f.polygon,
                &mutant,
                &report.witness.unwrap()
            ));
        }
    }
}

#[test]
fn critical_direction_count_bound() {
    let sq = square();
    let diag = Barrier::new(
        vec![vec![Point2::new(0.0, 0.0), Point2::new(1.0, 1.0)]],
        BarrierKind::SingleArc,
    )
    .unwrap();
    let dirs = critical_directions(&sq, &diag);
    assert!(dirs.len() <= 15);
    for want in [0.0, PI / 4.0, PI / 2.0, 3.0 * PI / 4.0] {
        assert!(dirs.iter().any(|d| (d.theta() - want).abs() < 1e-12));
    }
    assert!(dirs.windows(2).all(|w| w[0].theta() < w[1].theta()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn boundary_is_always_opaque(poly in polygons(3, 40)) {
        prop_assert!(is_opaque(&poly, &boundary(&poly)).opaque);
    }

    #[test]
    fn oracle_agrees_and_witnesses_are_valid(poly in polygons(3, 14), m in 0usize..6, drop in 0usize..8) {
        let sol = solve(&poly, Method::ALL[m]);
        let mut cases = vec![sol.barrier.clone()];
        let k = sol.barrier.polylines().len();
        if let Some(mutant) = sol.barrier.without_polyline(drop % k) {
            cases.push(mutant);
        }
        let tol = poly.tolerances().cover;
        for b in cases {
            let report = is_opaque(&poly, &b);
            prop_assert_eq!(report.opaque, report.witness.is_none());
            let oracle = sampling_oracle_report(&poly, &b, 300, 300);
            if oracle.margin() > 10.0 * tol {
                prop_assert!(!report.opaque);
            }
            if report.opaque {
                prop_assert!(oracle.opaque);
            }
            if let Some(w) = report.witness {
                prop_assert!(witness_is_valid(&poly, &b, &w));
            }
        }
    }

    #[test]
    fn adding_a_polyline_keeps_opacity(poly in polygons(3, 20), m in 0usize..6, a in 0.0..1.0f64, b in 0.0..1.0f64) {
        let sol = solve(&poly, Method::ALL[m]);
        let p = poly.vertex(0).lerp(poly.vertex(1), a);
        let q = poly.vertex(2).lerp(p, b);
        prop_assume!(p.distance(q) > 1e-6);
        let bigger = sol.barrier.with_polyline(vec![p, q]).unwrap();
        prop_assert!(is_opaque(&poly, &bigger).opaque);
    }

    #[test]
    fn blocking_margin_is_nonnegative_for_opaque_barriers(poly in polygons(3, 30), m in 0usize..6) {
        let sol = solve(&poly, Method::ALL[m]);
        for k in 0..1000 {
            let theta = Direction::line(PI * k as f64 / 1000.0);
            prop_assert!(blocking_margin(&poly, &sol.barrier, theta) >= -1e-9);
        }
    }

    #[test]
    fn margin_matches_projection_sum(poly in polygons(3, 30), t in 0.0..PI) {
        let b = boundary(&poly);
        let theta = Direction::line(t);
        // a closed convex curve covers its projection exactly twice
        let expect = poly.project(theta).len();
        prop_assert!((blocking_margin(&poly, &b, theta) - expect).abs() < 1e-12 * poly.perimeter());
    }
}
