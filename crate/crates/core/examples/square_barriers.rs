//! The four classic barriers for the unit square, checked by the verifier.
//!
//! ```bash
//! cargo run --example square_barriers
//! ```

use opaque::fixtures::make_fixture;
use opaque::verify::is_opaque;

fn main() {
    let square = make_fixture("unit-square").expect("built-in fixture");
    println!(
        "half-perimeter lower bound: {}",
        square.polygon.perimeter() / 2.0
    );
    for kb in &square.known_barriers {
        let report = is_opaque(&square.polygon, &kb.barrier);
        println!(
            "{:<50} length {:.10} (expected {:.10})  {}",
            kb.note,
            kb.barrier.length(),
            kb.expected_length,
            if report.opaque {
                "opaque"
            } else {
                "NOT opaque"
            }
        );
    }
}
