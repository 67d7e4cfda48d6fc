//! Ratio statistics over seeded random polygons, against the half-perimeter
//! bound and against max(p/2, (π+2)r) with r the inradius.
//!
//! ```bash
//! cargo run --release --example ratio_survey -- 2000
//! ```

use std::f64::consts::PI;

use opaque::barriers::{solve, Method};
use opaque::geom::largest_inscribed_circle;
use opaque::random::{random_convex_polygon, seeded_rng};

fn main() {
    let count: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(500);
    let mut rng = seeded_rng(11);
    let methods = [Method::A1, Method::A2, Method::A3, Method::A4];
    let mut worst_half = [0.0f64; 4];
    let mut worst_lb = [0.0f64; 4];
    let mut mean = [0.0f64; 4];
    for i in 0..count {
        let poly = random_convex_polygon(&mut rng, 3 + i % 62);
        let half = poly.perimeter() / 2.0;
        let lb = half.max((PI + 2.0) * largest_inscribed_circle(&poly).radius);
        for (k, &m) in methods.iter().enumerate() {
            let len = solve(&poly, m).length;
            worst_half[k] = worst_half[k].max(len / half);
            worst_lb[k] = worst_lb[k].max(len / lb);
            mean[k] += len / half / count as f64;
        }
    }
    println!("method  mean/half  worst/half  worst/lb");
    for (k, m) in methods.iter().enumerate() {
        println!(
            "{:<6}  {:>9.4}  {:>10.4}  {:>8.4}",
            m.as_str(),
            mean[k],
            worst_half[k],
            worst_lb[k]
        );
    }
}
