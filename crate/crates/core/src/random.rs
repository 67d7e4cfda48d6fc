//! Seeded polygon generators for tests and benchmarks.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::fixtures::{regular_ngon, reuleaux_polygon};
use crate::geom::{convex_hull, ConvexPolygon, Point2};

/// Convex polygon with exactly `n ≥ 3` vertices: sorted random angles on an
/// ellipse with eccentricity uniform in `[0, 0.99]` and random rotation.
pub fn random_convex_polygon<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ConvexPolygon {
    assert!(n >= 3, "a polygon needs three vertices");
    loop {
        let e: f64 = rng.gen_range(0.0..=0.99);
        let b = (1.0 - e * e).sqrt();
        let rot: f64 = rng.gen_range(0.0..2.0 * PI);
        let (s, c) = rot.sin_cos();
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
        angles.sort_by(f64::total_cmp);
        let pts: Vec<Point2> = angles
            .iter()
            .map(|a| {
                let (x, y) = (a.cos(), b * a.sin());
                Point2::new(c * x - s * y, s * x + c * y)
            })
            .collect();
        if let Ok(poly) = convex_hull(&pts) {
            if poly.len() == n {
                return poly;
            }
        }
    }
}

/// Deterministic generator used by the benchmark and the test suites.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Ngon,
    RandomHull,
    Thin,
    Reuleaux,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Ngon,
        Family::RandomHull,
        Family::Thin,
        Family::Reuleaux,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Ngon => "ngon",
            Family::RandomHull => "random-hull",
            Family::Thin => "thin",
            Family::Reuleaux => "reuleaux",
        }
    }

    /// Instance of size `n`. `rng` is only drawn from by `random-hull`.
    ///
    /// `thin` is a regular `n`-gon squashed into a 100 × 1 box; `reuleaux`
    /// samples each arc at `n` points and shaves `10⁻³`.
    pub fn instance<R: Rng + ?Sized>(self, n: usize, rng: &mut R) -> ConvexPolygon {
        match self {
            Family::Ngon => regular_ngon(n, 1.0),
            Family::RandomHull => random_convex_polygon(rng, n),
            Family::Thin => {
                let base = regular_ngon(n, 1.0);
                let turn = Point2::from_angle(PI / n as f64);
                let pts: Vec<Point2> = base
                    .vertices()
                    .iter()
                    .map(|v| Point2::new(v.x * turn.x - v.y * turn.y, v.x * turn.y + v.y * turn.x))
                    .collect();
                let (mut lo, mut hi) = (pts[0], pts[0]);
                for q in &pts {
                    lo = Point2::new(lo.x.min(q.x), lo.y.min(q.y));
                    hi = Point2::new(hi.x.max(q.x), hi.y.max(q.y));
                }
                let scaled = pts
                    .iter()
                    .map(|q| {
                        Point2::new(
                            100.0 * (q.x - lo.x) / (hi.x - lo.x),
                            (q.y - lo.y) / (hi.y - lo.y),
                        )
                    })
                    .collect();
                ConvexPolygon::new(scaled).expect("affine images stay convex")
            }
            Family::Reuleaux => reuleaux_polygon(n.max(2), 1e-3),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_vertex_count_and_determinism() {
        let mut a = seeded_rng(7);
        let mut b = seeded_rng(7);
        for n in [3, 4, 9, 64] {
            let pa = random_convex_polygon(&mut a, n);
            let pb = random_convex_polygon(&mut b, n);
            assert_eq!(pa.len(), n);
            assert_eq!(pa, pb);
        }
    }

    #[test]
    fn thin_family_box() {
        let t = Family::Thin.instance(4, &mut seeded_rng(0));
        assert!((t.perimeter() - 202.0).abs() < 1e-9);
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>(), Ok(f));
        }
        assert!("hull".parse::<Family>().is_err());
    }
}
