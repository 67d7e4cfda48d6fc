//! Width, enclosing rectangle, inscribed circle and tangent triangle of a
//! polygon.
//!
//! ```bash
//! cargo run --example calipers
//! ```

use std::f64::consts::PI;

use opaque::geom::{
    largest_inscribed_circle, min_perimeter_rectangle, min_width, tangent_triangle, ConvexPolygon,
};

fn main() {
    let poly =
        ConvexPolygon::from_coords(&[(0.0, 0.0), (4.0, -0.5), (5.0, 1.5), (2.5, 3.0), (0.5, 2.0)])
            .expect("convex counterclockwise input");

    let mw = min_width(&poly);
    println!(
        "min width {:.6} along {:.6} rad",
        mw.width,
        mw.direction.theta()
    );

    let rect = min_perimeter_rectangle(&poly);
    println!(
        "min-perimeter rectangle {:.6} x {:.6}, perimeter {:.6} <= (4/pi) per = {:.6}",
        rect.side_x,
        rect.side_y,
        rect.perimeter(),
        4.0 / PI * poly.perimeter()
    );

    let circle = largest_inscribed_circle(&poly);
    println!(
        "inscribed circle at ({:.6}, {:.6}), radius {:.6}, touching edges {:?}",
        circle.center.x, circle.center.y, circle.radius, circle.touching_edges
    );
    match tangent_triangle(&poly, &circle) {
        Ok(Some(t)) => println!("tangent triangle {:?}, area {:.6}", t.corners(), t.area()),
        Ok(None) => println!("incircle touches two parallel edges: no tangent triangle"),
        Err(e) => println!("{e}"),
    }
}
