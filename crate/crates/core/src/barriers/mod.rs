//! Barrier constructions for convex polygons.
//!
//! Every construction returns a [`BarrierSolution`]: the barrier, its length,
//! the half-perimeter lower bound and the achieved ratio against it.
//!
//! | method | kind | guarantee |
//! |---|---|---|
//! | [`algo_a1`] | single arc | ratio ≤ (π+5)/(π+2) |
//! | [`algo_a2`] | connected | ratio ≤ 1.5716 |
//! | [`algo_a3`] | single arc | shortest U-curve, ratio ≤ (π+5)/(π+2) |
//! | [`algo_a4`] | arbitrary | ratio ≤ ½ + (2+√2)/π |
//! | [`interior_single_arc`] | single arc | optimal among interior arcs |
//! | [`interior_connected`] | connected | optimal for n ≤ 4, bounded heuristic beyond |

mod approx;
mod interior;
mod steiner_tree;
mod ucurve;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::geom::{polyline_length, segment_segment_distance, ConvexPolygon, Point2};

pub use approx::{algo_a1, algo_a2, algo_a3, algo_a3_candidates, algo_a4};
pub use interior::{interior_single_arc, DpTables};
pub use steiner_tree::{euclidean_mst, interior_connected, SteinerTree};
pub use ucurve::{u_curve, UCurve};

/// Structural class of a barrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BarrierKind {
    SingleArc,
    Connected,
    Arbitrary,
}

impl BarrierKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BarrierKind::SingleArc => "single-arc",
            BarrierKind::Connected => "connected",
            BarrierKind::Arbitrary => "arbitrary",
        }
    }
}

impl fmt::Display for BarrierKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BarrierKind {
    type Err = BarrierError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "single-arc" => Ok(BarrierKind::SingleArc),
            "connected" => Ok(BarrierKind::Connected),
            "arbitrary" => Ok(BarrierKind::Arbitrary),
            other => Err(BarrierError::UnknownKind(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BarrierError {
    #[error("a barrier needs at least one polyline")]
    Empty,
    #[error("polyline {index} has fewer than two points")]
    ShortPolyline { index: usize },
    #[error("polyline {index} has a non-finite coordinate")]
    NonFinite { index: usize },
    #[error("a single-arc barrier must consist of exactly one polyline, got {count}")]
    NotSingleArc { count: usize },
    #[error("polylines of a connected barrier do not form one component")]
    Disconnected,
    #[error("barrier has zero length")]
    ZeroLength,
    #[error("unknown barrier kind `{0}`")]
    UnknownKind(String),
}

/// A finite union of polylines tagged with its structural kind.
#[derive(Clone, Debug, PartialEq)]
pub struct Barrier {
    polylines: Vec<Vec<Point2>>,
    kind: BarrierKind,
}

impl Barrier {
    /// Validates the polylines against `kind`.
    ///
    /// Connectivity for [`BarrierKind::Connected`] is decided by
    /// segment–segment contact within `1e-9` of the barrier's bounding-box
    /// diagonal.
    pub fn new(polylines: Vec<Vec<Point2>>, kind: BarrierKind) -> Result<Self, BarrierError> {
        if polylines.is_empty() {
            return Err(BarrierError::Empty);
        }
        for (index, pl) in polylines.iter().enumerate() {
            if pl.len() < 2 {
                return Err(BarrierError::ShortPolyline { index });
            }
            if pl.iter().any(|p| !p.is_finite()) {
                return Err(BarrierError::NonFinite { index });
            }
        }
        let barrier = Barrier { polylines, kind };
        let len = barrier.length();
        if len.is_nan() || len <= 0.0 {
            return Err(BarrierError::ZeroLength);
        }
        match kind {
            BarrierKind::SingleArc if barrier.polylines.len() != 1 => {
                return Err(BarrierError::NotSingleArc {
                    count: barrier.polylines.len(),
                })
            }
            BarrierKind::Connected if barrier.components() != 1 => {
                return Err(BarrierError::Disconnected)
            }
            _ => {}
        }
        Ok(barrier)
    }

    pub fn polylines(&self) -> &[Vec<Point2>] {
        &self.polylines
    }

    pub fn kind(&self) -> BarrierKind {
        self.kind
    }

    pub fn length(&self) -> f64 {
        self.polylines.iter().map(|pl| polyline_length(pl)).sum()
    }

    /// All segments as endpoint pairs, zero-length pieces skipped.
    pub fn segments(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        self.polylines
            .iter()
            .flat_map(|pl| pl.windows(2).map(|w| (w[0], w[1])))
            .filter(|(a, b)| a != b)
    }

    pub fn points(&self) -> impl Iterator<Item = Point2> + '_ {
        self.polylines.iter().flatten().copied()
    }

    /// Returns a copy with polyline `index` removed, or `None` when that
    /// would leave nothing. The copy is tagged [`BarrierKind::Arbitrary`].
    pub fn without_polyline(&self, index: usize) -> Option<Barrier> {
        if self.polylines.len() < 2 || index >= self.polylines.len() {
            return None;
        }
        let mut polylines = self.polylines.clone();
        polylines.remove(index);
        Some(Barrier {
            polylines,
            kind: BarrierKind::Arbitrary,
        })
    }

    /// Returns a copy with an extra polyline, tagged arbitrary.
    pub fn with_polyline(&self, extra: Vec<Point2>) -> Result<Barrier, BarrierError> {
        let mut polylines = self.polylines.clone();
        polylines.push(extra);
        Barrier::new(polylines, BarrierKind::Arbitrary)
    }

    /// Number of connected components, polylines joined when they touch.
    pub fn components(&self) -> usize {
        let scale = self.bbox_diagonal();
        let tol = 1e-9 * scale;
        let k = self.polylines.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..k {
            for j in i + 1..k {
                if find(&mut parent, i) == find(&mut parent, j) {
                    continue;
                }
                if polylines_touch(&self.polylines[i], &self.polylines[j], tol) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
        (0..k).filter(|&i| find(&mut parent, i) == i).count()
    }

    fn bbox_diagonal(&self) -> f64 {
        let (mut lo, mut hi) = (
            Point2::new(f64::INFINITY, f64::INFINITY),
            Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        );
        for p in self.points() {
            lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        lo.distance(hi)
    }
}

fn polylines_touch(a: &[Point2], b: &[Point2], tol: f64) -> bool {
    a.windows(2).any(|s| {
        b.windows(2)
            .any(|t| segment_segment_distance(s[0], s[1], t[0], t[1]) <= tol)
    })
}

/// Construction that produced a [`BarrierSolution`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    A1,
    A2,
    A3,
    A4,
    InteriorArc,
    InteriorTree,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::A1,
        Method::A2,
        Method::A3,
        Method::A4,
        Method::InteriorArc,
        Method::InteriorTree,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::A1 => "a1",
            Method::A2 => "a2",
            Method::A3 => "a3",
            Method::A4 => "a4",
            Method::InteriorArc => "interior-arc",
            Method::InteriorTree => "interior-tree",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown method `{0}` (expected a1, a2, a3, a4, interior-arc or interior-tree)")]
pub struct UnknownMethod(pub String);

impl FromStr for Method {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| UnknownMethod(s.to_string()))
    }
}

/// What the returned length is known to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quality {
    /// Within the method's proven approximation ratio.
    Approximation,
    /// Optimal within its barrier class.
    Exact,
    /// An upper bound with no optimality claim.
    Heuristic,
}

/// One candidate barrier considered by a method. An absent candidate has
/// infinite length.
#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub label: String,
    pub length: f64,
}

impl Candidate {
    pub fn new(label: impl Into<String>, length: f64) -> Self {
        Candidate {
            label: label.into(),
            length,
        }
    }
}

/// A computed barrier with its certificate against the `per/2` bound.
#[derive(Clone, Debug, PartialEq)]
pub struct BarrierSolution {
    pub barrier: Barrier,
    pub length: f64,
    pub lower_bound: f64,
    pub method: Method,
    pub ratio: f64,
    pub quality: Quality,
    /// Every candidate the method compared, in evaluation order.
    pub candidates: Vec<Candidate>,
}

impl BarrierSolution {
    pub(crate) fn new(
        poly: &ConvexPolygon,
        barrier: Barrier,
        method: Method,
        quality: Quality,
        candidates: Vec<Candidate>,
    ) -> Self {
        let length = barrier.length();
        let lower_bound = half_perimeter_lower_bound(poly);
        BarrierSolution {
            barrier,
            length,
            lower_bound,
            method,
            ratio: length / lower_bound,
            quality,
            candidates,
        }
    }

    pub fn candidate(&self, label: &str) -> Option<f64> {
        self.candidates
            .iter()
            .find(|c| c.label == label)
            .map(|c| c.length)
    }
}

/// Every barrier of a convex body is at least half its perimeter long.
pub fn half_perimeter_lower_bound(poly: &ConvexPolygon) -> f64 {
    poly.perimeter() / 2.0
}

/// Runs `method` on `poly`.
pub fn solve(poly: &ConvexPolygon, method: Method) -> BarrierSolution {
    match method {
        Method::A1 => algo_a1(poly),
        Method::A2 => algo_a2(poly),
        Method::A3 => algo_a3(poly),
        Method::A4 => algo_a4(poly),
        Method::InteriorArc => interior_single_arc(poly),
        Method::InteriorTree => interior_connected(poly),
    }
}
