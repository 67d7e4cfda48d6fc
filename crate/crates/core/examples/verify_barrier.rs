//! Verifies a barrier, then deletes each polyline in turn and prints the
//! unblocked line the verifier finds.
//!
//! ```bash
//! cargo run --example verify_barrier
//! ```

use opaque::fixtures::make_fixture;
use opaque::verify::{blocking_margin, critical_directions, is_opaque, sampling_oracle};

fn main() {
    let f = make_fixture("unit-square").unwrap();
    let kb = &f.known_barriers[3];
    let crit = critical_directions(&f.polygon, &kb.barrier);
    let report = is_opaque(&f.polygon, &kb.barrier);
    println!(
        "{}: opaque = {}, {} critical directions, {} tested",
        kb.note,
        report.opaque,
        crit.len(),
        report.directions_tested
    );
    let worst = crit
        .iter()
        .map(|&d| blocking_margin(&f.polygon, &kb.barrier, d))
        .fold(f64::INFINITY, f64::min);
    println!("smallest blocking margin at a critical direction: {worst:.6}");

    for i in 0..kb.barrier.polylines().len() {
        let Some(mutant) = kb.barrier.without_polyline(i) else {
            continue;
        };
        let report = is_opaque(&f.polygon, &mutant);
        match report.witness {
            Some(w) => println!(
                "without polyline {i}: line at theta {:.6}, offset {:.6} misses (gap {:.6}); oracle agrees: {}",
                w.theta.theta(),
                w.representative_offset,
                w.uncovered.len(),
                !sampling_oracle(&f.polygon, &mutant, 500, 500)
            ),
            None => println!("without polyline {i}: still opaque"),
        }
    }
}
