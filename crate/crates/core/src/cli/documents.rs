use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::barriers::{Barrier, BarrierError, BarrierKind, BarrierSolution};
use crate::geom::{ConvexPolygon, Point2, PolygonError};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid polygon: {0}")]
    Polygon(#[from] PolygonError),
    #[error("invalid barrier: {0}")]
    Barrier(#[from] BarrierError),
    #[error("stated length {stated} does not match the polylines' length {computed}")]
    LengthMismatch { stated: f64, computed: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolygonDocument {
    pub vertices: Vec<[f64; 2]>,
}

impl PolygonDocument {
    pub fn from_polygon(poly: &ConvexPolygon) -> Self {
        PolygonDocument {
            vertices: poly.vertices().iter().map(|&p| p.into()).collect(),
        }
    }

    /// Validates the vertices; clockwise input is reversed only with
    /// `auto_orient`.
    pub fn to_polygon(&self, auto_orient: bool) -> Result<ConvexPolygon, PolygonError> {
        let pts: Vec<Point2> = self.vertices.iter().map(|&v| v.into()).collect();
        if auto_orient {
            ConvexPolygon::new_auto_orient(pts)
        } else {
            ConvexPolygon::new(pts)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BarrierDocument {
    pub polylines: Vec<Vec<[f64; 2]>>,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
}

impl BarrierDocument {
    pub fn from_barrier(barrier: &Barrier) -> Self {
        BarrierDocument {
            polylines: barrier
                .polylines()
                .iter()
                .map(|pl| pl.iter().map(|&p| p.into()).collect())
                .collect(),
            kind: barrier.kind().as_str().to_string(),
            length: Some(barrier.length()),
            method: None,
            lower_bound: None,
            ratio: None,
        }
    }

    pub fn from_solution(sol: &BarrierSolution) -> Self {
        BarrierDocument {
            method: Some(sol.method.as_str().to_string()),
            lower_bound: Some(sol.lower_bound),
            ratio: Some(sol.ratio),
            ..BarrierDocument::from_barrier(&sol.barrier)
        }
    }

    /// Rebuilds the barrier, rejecting a stated length that differs from
    /// the recomputed one by more than `1e-9` relative.
    pub fn to_barrier(&self) -> Result<Barrier, DocumentError> {
        let kind: BarrierKind = self.kind.parse()?;
        let polylines = self
            .polylines
            .iter()
            .map(|pl| pl.iter().map(|&v| v.into()).collect())
            .collect();
        let barrier = Barrier::new(polylines, kind)?;
        if let Some(stated) = self.length {
            let computed = barrier.length();
            if (stated - computed).abs() > 1e-9 * computed.max(1.0) || !stated.is_finite() {
                return Err(DocumentError::LengthMismatch { stated, computed });
            }
        }
        Ok(barrier)
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, DocumentError> {
    let text = fs::read_to_string(path).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}
