//! Planar primitives and convex-polygon computations.

mod calipers;
mod incircle;
mod point;
mod polygon;
mod steiner;

pub use calipers::{min_perimeter_rectangle, min_width, MinWidth, OrientedRectangle, Strip};
pub use incircle::{
    largest_inscribed_circle, tangent_triangle, IncircleError, InscribedCircle, TangentTriangle,
};
pub use point::{reduce_angle, Direction, Point2};
pub use polygon::{
    convex_hull, dedup_points, point_segment_distance, polyline_length, project_points,
    segment_segment_distance, ConvexPolygon, Interval, PolygonError, Segment, Tolerances,
};
pub use steiner::{fermat_point, steiner_length_formula, steiner_three_points, SteinerStar};
