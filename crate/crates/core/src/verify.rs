//! Deciding whether a segment barrier blocks every line through a polygon.
//!
//! A line of direction `θ` is identified with its offset along the normal
//! `n(θ) = (−sin θ, cos θ)`. It meets the polygon when the offset lies in the
//! polygon's projection and meets a polyline when the offset lies in that
//! polyline's projection (polylines are connected, so each projects to one
//! interval). The barrier is opaque iff for every `θ` the union of the
//! polyline intervals covers the polygon interval.
//!
//! The relative order of the projected points only changes at directions
//! spanned by two of them, so coverage is constant on each open gap between
//! such critical directions. [`is_opaque`] checks every critical direction
//! and one direction inside every gap.

use std::f64::consts::PI;

use crate::barriers::Barrier;
use crate::geom::{project_points, ConvexPolygon, Direction, Interval, Point2};

/// A line that meets the polygon but misses the barrier.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Witness {
    pub theta: Direction,
    /// Offsets along `n(θ)` inside the polygon's projection and outside
    /// every polyline's projection.
    pub uncovered: Interval,
    pub representative_offset: f64,
}

impl Witness {
    /// Two points on the witness line, `half_length` either side of its
    /// foot on the normal axis.
    pub fn line_points(&self, half_length: f64) -> (Point2, Point2) {
        let foot = self.theta.normal() * self.representative_offset;
        let along = self.theta.unit() * half_length;
        (foot - along, foot + along)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub opaque: bool,
    pub witness: Option<Witness>,
    pub directions_tested: usize,
}

/// Coverage of the polygon's projection at one direction; the first
/// uncovered stretch when coverage fails.
pub fn projections_cover(
    poly: &ConvexPolygon,
    barrier: &Barrier,
    theta: Direction,
) -> (bool, Option<Interval>) {
    let target = poly.project(theta);
    let mut intervals: Vec<Interval> = barrier
        .polylines()
        .iter()
        .map(|pl| project_points(pl, theta))
        .collect();
    match first_gap(target, &mut intervals, poly.tolerances().cover) {
        None => (true, None),
        Some(gap) => (false, Some(gap)),
    }
}

/// Sweeps `intervals` in order of their lower ends and returns the first
/// part of `target` they leave uncovered by more than `tol`.
fn first_gap(target: Interval, intervals: &mut [Interval], tol: f64) -> Option<Interval> {
    intervals.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    let mut reach = target.lo;
    for iv in intervals.iter() {
        if iv.lo > reach + tol {
            let hi = iv.lo.min(target.hi);
            if hi - reach > tol {
                return Some(Interval::new(reach, hi));
            }
        }
        reach = reach.max(iv.hi);
        if reach >= target.hi {
            return None;
        }
    }
    (target.hi - reach > tol).then(|| Interval::new(reach, target.hi))
}

/// Line directions in `[0, π)` through pairs of distinct points of the
/// barrier vertices and polygon vertices, deduplicated and sorted.
pub fn critical_directions(poly: &ConvexPolygon, barrier: &Barrier) -> Vec<Direction> {
    let tol = poly.tolerances();
    let mut pts: Vec<Point2> = Vec::new();
    for p in barrier.points().chain(poly.vertices().iter().copied()) {
        if !pts.iter().any(|q| q.distance(p) <= tol.geom) {
            pts.push(p);
        }
    }
    let mut angles = Vec::with_capacity(pts.len() * pts.len() / 2);
    for (i, &p) in pts.iter().enumerate() {
        for &q in &pts[i + 1..] {
            angles.push(Direction::line((q - p).angle()).theta());
        }
    }
    angles.sort_by(f64::total_cmp);
    let mut out: Vec<Direction> = Vec::with_capacity(angles.len());
    for a in angles {
        if out.last().is_none_or(|d| a - d.theta() > tol.ang) {
            out.push(Direction::line(a));
        }
    }
    // the range is circular: a direction just below π duplicates 0
    if out.len() > 1 {
        let last = out[out.len() - 1].theta();
        if out[0].theta() + PI - last <= tol.ang {
            out.pop();
        }
    }
    out
}

/// Exact opaqueness test for a polyline barrier.
///
/// Every critical direction and every gap midpoint is tested; when some
/// fail, the witness is the widest uncovered stretch found.
pub fn is_opaque(poly: &ConvexPolygon, barrier: &Barrier) -> VerificationReport {
    let crit = critical_directions(poly, barrier);
    let m = crit.len();
    let mut tested = 0;
    let mut witness: Option<Witness> = None;
    for k in 0..m {
        let here = crit[k].theta();
        let next = if k + 1 < m {
            crit[k + 1].theta()
        } else {
            crit[0].theta() + PI
        };
        for theta in [Direction::line(here), Direction::line(0.5 * (here + next))] {
            tested += 1;
            if let (false, Some(gap)) = projections_cover(poly, barrier, theta) {
                if witness.is_none_or(|w| gap.len() > w.uncovered.len()) {
                    witness = Some(Witness {
                        theta,
                        uncovered: gap,
                        representative_offset: gap.mid(),
                    });
                }
            }
        }
    }
    VerificationReport {
        opaque: witness.is_none(),
        witness,
        directions_tested: tested,
    }
}

/// Blocking inequality slack at direction `theta`: the summed projections of
/// the barrier segments onto the normal of `theta`, minus the polygon's
/// extent along that normal. Lines of direction `theta` cannot all be
/// blocked when this is negative.
pub fn blocking_margin(poly: &ConvexPolygon, barrier: &Barrier, theta: Direction) -> f64 {
    let t = theta.theta();
    let covered: f64 = barrier
        .segments()
        .map(|(a, b)| {
            let seg = b - a;
            seg.norm() * (t - seg.angle()).sin().abs()
        })
        .sum();
    covered - poly.project(theta).len()
}

/// Outcome of a sampling search for an unblocked line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SamplingReport {
    /// No sampled line missed the barrier.
    pub opaque: bool,
    /// The sampled miss farthest from every barrier segment, as
    /// `(direction, offset, clearance)`.
    pub best_miss: Option<(Direction, f64, f64)>,
}

impl SamplingReport {
    /// Clearance of the best miss; zero when no miss was found.
    pub fn margin(&self) -> f64 {
        self.best_miss.map_or(0.0, |m| m.2)
    }
}

/// Tests a grid of `n_angles × n_offsets` lines meeting the polygon against
/// every barrier segment individually.
pub fn sampling_oracle(
    poly: &ConvexPolygon,
    barrier: &Barrier,
    n_angles: usize,
    n_offsets: usize,
) -> bool {
    sampling_oracle_report(poly, barrier, n_angles, n_offsets).opaque
}

/// [`sampling_oracle`] with the clearance of the best miss.
pub fn sampling_oracle_report(
    poly: &ConvexPolygon,
    barrier: &Barrier,
    n_angles: usize,
    n_offsets: usize,
) -> SamplingReport {
    assert!(
        n_angles >= 1 && n_offsets >= 1,
        "sample counts must be positive"
    );
    let tol = poly.tolerances().cover;
    let segments: Vec<(Point2, Point2)> = barrier.segments().collect();
    let mut best: Option<(Direction, f64, f64)> = None;
    for k in 0..n_angles {
        let theta = Direction::line(PI * k as f64 / n_angles as f64);
        let nrm = theta.normal();
        // distance from a line to a segment it does not cross is the
        // distance between their offsets along the normal
        let mut shadows: Vec<Interval> = segments
            .iter()
            .map(|&(a, b)| {
                let (sa, sb) = (a.dot(nrm), b.dot(nrm));
                Interval::new(sa.min(sb), sa.max(sb))
            })
            .collect();
        shadows.sort_by(|a, b| a.lo.total_cmp(&b.lo));
        let merged = merge(&shadows);

        let target = poly.project(theta);
        let span = target.len() - 2.0 * tol;
        if span <= 0.0 {
            continue;
        }
        let mut cursor = 0;
        for j in 0..n_offsets {
            let s = target.lo + tol + span * (j as f64 + 0.5) / n_offsets as f64;
            while cursor < merged.len() && merged[cursor].hi < s {
                cursor += 1;
            }
            let right = merged
                .get(cursor)
                .map_or(f64::INFINITY, |iv| iv.distance_to(s));
            let left = cursor
                .checked_sub(1)
                .map_or(f64::INFINITY, |c| merged[c].distance_to(s));
            let clearance = left.min(right);
            if clearance > 0.0 && best.is_none_or(|b| clearance > b.2) {
                best = Some((theta, s, clearance));
            }
        }
    }
    SamplingReport {
        opaque: best.is_none(),
        best_miss: best,
    }
}

fn merge(sorted: &[Interval]) -> Vec<Interval> {
    let mut out: Vec<Interval> = Vec::with_capacity(sorted.len());
    for &iv in sorted {
        match out.last_mut() {
            Some(last) if iv.lo <= last.hi => last.hi = last.hi.max(iv.hi),
            _ => out.push(iv),
        }
    }
    out
}
