//! Named polygons with known barriers and reference constants.

use std::f64::consts::PI;

use thiserror::Error;

use crate::barriers::{Barrier, BarrierKind};
use crate::geom::{convex_hull, ConvexPolygon, Point2};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown fixture {0:?}")]
pub struct UnknownFixture(pub String);

/// A barrier with its published length.
#[derive(Clone, Debug, PartialEq)]
pub struct KnownBarrier {
    pub barrier: Barrier,
    pub expected_length: f64,
    pub note: &'static str,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub name: String,
    pub polygon: ConvexPolygon,
    pub known_barriers: Vec<KnownBarrier>,
    pub known_constants: Vec<(&'static str, f64)>,
}

impl Fixture {
    fn plain(name: impl Into<String>, polygon: ConvexPolygon) -> Self {
        Fixture {
            name: name.into(),
            polygon,
            known_barriers: Vec::new(),
            known_constants: Vec::new(),
        }
    }

    pub fn constant(&self, name: &str) -> Option<f64> {
        self.known_constants
            .iter()
            .find(|(k, _)| *k == name)
            .map(|&(_, v)| v)
    }
}

/// Names accepted by [`make_fixture`], with their parameters.
pub const FIXTURE_NAMES: [&str; 6] = [
    "unit-square",
    "equilateral",
    "regular-ngon(n, r)",
    "pentagon-fig6",
    "reuleaux-poly(m, eps)",
    "rectangle(a, b)",
];

/// Builds a fixture by name.
///
/// Parameterized fixtures accept `family(p, q)` or `family:p:q`; the
/// radius of `regular-ngon` defaults to 1.
pub fn make_fixture(name: &str) -> Result<Fixture, UnknownFixture> {
    let unknown = || UnknownFixture(name.to_string());
    let (family, args) = split_name(name).ok_or_else(unknown)?;
    let fixture = match (family.as_str(), args.as_slice()) {
        ("unit-square", []) => unit_square(),
        ("equilateral", []) => equilateral(),
        ("pentagon-fig6", []) => pentagon_fig6(),
        ("regular-ngon", [n]) => regular_ngon_fixture(as_count(*n, 3)?, 1.0),
        ("regular-ngon", [n, r]) if *r > 0.0 => regular_ngon_fixture(as_count(*n, 3)?, *r),
        ("reuleaux-poly", [m, eps]) if (0.0..0.5).contains(eps) => {
            let m = as_count(*m, 2)?;
            Fixture::plain(name, reuleaux_polygon(m, *eps))
        }
        ("rectangle", [a, b]) if *a > 0.0 && *b > 0.0 => rectangle_fixture(*a, *b),
        _ => return Err(unknown()),
    };
    Ok(fixture)
}

fn split_name(name: &str) -> Option<(String, Vec<f64>)> {
    let name = name.trim();
    let (family, rest) = if let Some(open) = name.find('(') {
        let inner = name[open + 1..].strip_suffix(')')?;
        (&name[..open], inner.split(',').collect::<Vec<_>>())
    } else {
        let mut parts = name.split(':');
        let family = parts.next()?;
        (family, parts.collect())
    };
    let args = rest
        .iter()
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().ok().filter(|v| v.is_finite()))
        .collect::<Option<Vec<_>>>()?;
    Some((family.trim().to_string(), args))
}

fn as_count(v: f64, min: usize) -> Result<usize, UnknownFixture> {
    if v.fract() == 0.0 && v >= min as f64 && v <= 1e7 {
        Ok(v as usize)
    } else {
        Err(UnknownFixture(format!("count {v}")))
    }
}

fn p(x: f64, y: f64) -> Point2 {
    Point2::new(x, y)
}

fn arc(pts: Vec<Point2>) -> Barrier {
    Barrier::new(vec![pts], BarrierKind::SingleArc).expect("fixture arc")
}

fn known(barrier: Barrier, expected_length: f64, note: &'static str) -> KnownBarrier {
    KnownBarrier {
        barrier,
        expected_length,
        note,
    }
}

fn unit_square() -> Fixture {
    let polygon =
        ConvexPolygon::from_coords(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap();
    let s3 = 3f64.sqrt();
    let h = s3 / 6.0;

    let three_sides = arc(vec![p(0.0, 1.0), p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0)]);

    let diagonals = Barrier::new(
        vec![
            vec![p(0.0, 0.0), p(1.0, 1.0)],
            vec![p(1.0, 0.0), p(0.0, 1.0)],
        ],
        BarrierKind::Connected,
    )
    .unwrap();

    let (s, t) = (p(0.5, h), p(0.5, 1.0 - h));
    let tree = Barrier::new(
        vec![
            vec![p(0.0, 0.0), s, p(1.0, 0.0)],
            vec![s, t],
            vec![p(0.0, 1.0), t, p(1.0, 1.0)],
        ],
        BarrierKind::Connected,
    )
    .unwrap();

    let hub = p(0.5 - h, 0.5 - h);
    let split = Barrier::new(
        vec![
            vec![p(0.5, 0.5), p(1.0, 1.0)],
            vec![p(0.0, 1.0), hub],
            vec![p(0.0, 0.0), hub],
            vec![p(1.0, 0.0), hub],
        ],
        BarrierKind::Arbitrary,
    )
    .unwrap();

    Fixture {
        name: "unit-square".into(),
        polygon,
        known_barriers: vec![
            known(three_sides, 3.0, "three sides"),
            known(diagonals, 2.0 * 2f64.sqrt(), "both diagonals"),
            known(tree, 1.0 + s3, "Steiner tree with two junctions"),
            known(
                split,
                2f64.sqrt() + 6f64.sqrt() / 2.0,
                "half diagonal plus a three-terminal Steiner star",
            ),
        ],
        known_constants: vec![
            ("half_perimeter", 2.0),
            ("a1_length", 3.0),
            ("steiner_tree", 1.0 + s3),
            ("a2_vs_interior_ratio", 3.0 / (1.0 + s3)),
        ],
    }
}

fn equilateral() -> Fixture {
    let apex = p(0.5, 3f64.sqrt() / 2.0);
    let polygon = ConvexPolygon::new(vec![p(0.0, 0.0), p(1.0, 0.0), apex]).unwrap();
    let center = p(0.5, 3f64.sqrt() / 6.0);
    let star = Barrier::new(
        vec![
            vec![p(0.0, 0.0), center],
            vec![p(1.0, 0.0), center],
            vec![apex, center],
        ],
        BarrierKind::Connected,
    )
    .unwrap();
    Fixture {
        name: "equilateral".into(),
        polygon,
        known_barriers: vec![
            known(arc(vec![p(0.0, 0.0), p(1.0, 0.0), apex]), 2.0, "two sides"),
            known(star, 3f64.sqrt(), "Steiner star"),
        ],
        known_constants: vec![("half_perimeter", 1.5), ("a1_length", 2.0)],
    }
}

fn pentagon_fig6() -> Fixture {
    let (x, y, h) = (1.4507, 0.2072, 0.3806);
    let polygon = ConvexPolygon::new(vec![
        p(0.0, h),
        p(-x, y),
        p(-1.0, 0.0),
        p(1.0, 0.0),
        p(x, y),
    ])
    .unwrap();
    Fixture {
        name: "pentagon-fig6".into(),
        polygon,
        known_barriers: Vec::new(),
        known_constants: vec![("a3_length", 3.3364), ("better_barrier", 3.132)],
    }
}

/// Regular `n`-gon with circumradius `r` centered at the origin, first
/// vertex on the positive x-axis.
pub fn regular_ngon(n: usize, r: f64) -> ConvexPolygon {
    ConvexPolygon::new(
        (0..n)
            .map(|k| Point2::from_angle(2.0 * PI * k as f64 / n as f64) * r)
            .collect(),
    )
    .expect("regular polygons are strictly convex")
}

fn regular_ngon_fixture(n: usize, r: f64) -> Fixture {
    let sqrt2 = 2f64.sqrt();
    let mut f = Fixture::plain(format!("regular-ngon({n}, {r})"), regular_ngon(n, r));
    f.known_constants = vec![
        ("a4_limit_length", r * (2.0 + PI / 2.0 + sqrt2)),
        ("a4_limit_ratio", (2.0 + PI / 2.0 + sqrt2) / PI),
    ];
    f
}

fn rectangle_fixture(a: f64, b: f64) -> Fixture {
    let polygon = ConvexPolygon::from_coords(&[(0.0, 0.0), (a, 0.0), (a, b), (0.0, b)]).unwrap();
    let (long, short) = if a >= b { (a, b) } else { (b, a) };
    let u = if a >= b {
        arc(vec![p(0.0, 0.0), p(0.0, b), p(a, b), p(a, 0.0)])
    } else {
        arc(vec![p(0.0, 0.0), p(a, 0.0), p(a, b), p(0.0, b)])
    };
    Fixture {
        name: format!("rectangle({a}, {b})"),
        polygon,
        known_barriers: vec![known(u, long + 2.0 * short, "U over a long side")],
        known_constants: vec![("half_perimeter", a + b)],
    }
}

/// Polygonal Reuleaux triangle of width 1 with corners `(0, 0)`, `(1, 0)`
/// and `(½, √3/2)`, each arc sampled at `m` points, with the two bottom
/// corners cut off by vertical lines so the width along the x-axis is
/// `1 − eps`.
pub fn reuleaux_polygon(m: usize, eps: f64) -> ConvexPolygon {
    assert!(m >= 2, "at least two points per arc");
    let corners = [p(0.0, 0.0), p(1.0, 0.0), p(0.5, 3f64.sqrt() / 2.0)];
    let mut pts = Vec::with_capacity(3 * m);
    for k in 0..3 {
        // arc from corner k to corner k+1, centered on the third corner
        let (from, to, center) = (corners[k], corners[(k + 1) % 3], corners[(k + 2) % 3]);
        let a0 = (from - center).angle();
        let mut a1 = (to - center).angle();
        while a1 < a0 {
            a1 += 2.0 * PI;
        }
        for j in 0..m {
            let a = a0 + (a1 - a0) * j as f64 / m as f64;
            pts.push(center + Point2::from_angle(a));
        }
    }
    if eps > 0.0 {
        pts = clip_x(&pts, eps / 2.0, 1.0);
        pts = clip_x(&pts, 1.0 - eps / 2.0, -1.0);
    }
    convex_hull(&pts).expect("shaved Reuleaux polygon")
}

/// Keeps the part of a closed convex polygon with `sign·(x − x0) ≥ 0`.
fn clip_x(pts: &[Point2], x0: f64, sign: f64) -> Vec<Point2> {
    let side = |q: Point2| sign * (q.x - x0);
    let n = pts.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let (a, b) = (pts[i], pts[(i + 1) % n]);
        let (sa, sb) = (side(a), side(b));
        if sa >= 0.0 {
            out.push(a);
        }
        if (sa >= 0.0) != (sb >= 0.0) {
            out.push(a.lerp(b, sa / (sa - sb)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_parameterized_names() {
        assert_eq!(make_fixture("regular-ngon(7, 2)").unwrap().polygon.len(), 7);
        assert_eq!(make_fixture("regular-ngon:5:1").unwrap().polygon.len(), 5);
        assert_eq!(make_fixture("regular-ngon(6)").unwrap().polygon.len(), 6);
        let r = make_fixture("rectangle(3, 0.5)").unwrap();
        assert!((r.polygon.perimeter() - 7.0).abs() < 1e-15);
        assert!(make_fixture("reuleaux-poly(50, 0.001)").is_ok());
    }

    #[test]
    fn rejects_unknown_names() {
        for bad in [
            "",
            "circle",
            "regular-ngon(2)",
            "rectangle(1)",
            "unit-square(2)",
            "regular-ngon(x)",
        ] {
            assert!(make_fixture(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn square_barrier_lengths() {
        let f = make_fixture("unit-square").unwrap();
        assert_eq!(f.known_barriers.len(), 4);
        for kb in &f.known_barriers {
            assert!(
                (kb.barrier.length() - kb.expected_length).abs() < 1e-12,
                "{}",
                kb.note
            );
        }
    }

    #[test]
    fn pentagon_vertices() {
        let f = make_fixture("pentagon-fig6").unwrap();
        assert_eq!(f.polygon.vertices()[0], p(0.0, 0.3806));
        assert_eq!(f.polygon.len(), 5);
    }

    #[test]
    fn shaved_reuleaux_width() {
        let r = reuleaux_polygon(400, 0.01);
        let xs: Vec<f64> = r.vertices().iter().map(|v| v.x).collect();
        let lo = xs.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        assert!((lo - 0.005).abs() < 1e-12 && (hi - 0.995).abs() < 1e-12);
    }
}
