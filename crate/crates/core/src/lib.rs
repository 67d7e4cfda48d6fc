//! Short opaque barriers for convex polygons.
//!
//! A barrier for a convex polygon `P` is a set of polylines meeting every
//! line that meets `P`. Every barrier is at least `per(P)/2` long; the
//! constructions in [`barriers`] come within a constant factor of that, and
//! [`verify`] decides opaqueness of any polyline barrier exactly.
//!
//! ```
//! use opaque::barriers::algo_a2;
//! use opaque::geom::ConvexPolygon;
//! use opaque::verify::is_opaque;
//!
//! let square = ConvexPolygon::from_coords(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])?;
//! let sol = algo_a2(&square);
//! assert!((sol.length - 3.0).abs() < 1e-9);
//! assert!(is_opaque(&square, &sol.barrier).opaque);
//! # Ok::<(), opaque::geom::PolygonError>(())
//! ```

pub mod barriers;
pub mod cli;
pub mod fixtures;
pub mod geom;
pub mod random;
pub mod verify;
