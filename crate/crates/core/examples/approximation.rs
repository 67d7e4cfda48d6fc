//! Runs the four approximation algorithms and lists every candidate each one
//! compared.
//!
//! ```bash
//! cargo run --example approximation            # the pentagon fixture
//! cargo run --example approximation -- 17 42   # random 17-gon, seed 42
//! ```

use opaque::barriers::{algo_a1, algo_a2, algo_a3, algo_a4, BarrierSolution};
use opaque::fixtures::make_fixture;
use opaque::geom::ConvexPolygon;
use opaque::random::{random_convex_polygon, seeded_rng};

type Algo = fn(&ConvexPolygon) -> BarrierSolution;

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let poly = match args.as_slice() {
        [n, seed, ..] => random_convex_polygon(&mut seeded_rng(*seed), *n as usize),
        _ => make_fixture("pentagon-fig6").unwrap().polygon,
    };
    println!("{} vertices, perimeter {:.6}", poly.len(), poly.perimeter());

    let runs: [(&str, Algo); 4] = [
        ("A1", algo_a1),
        ("A2", algo_a2),
        ("A3", algo_a3),
        ("A4", algo_a4),
    ];
    for (name, algo) in runs {
        let sol = algo(&poly);
        println!("{name}: length {:.6}, ratio {:.4}", sol.length, sol.ratio);
        // A3 compares 3n baselines; show only the best few
        let mut cands = sol.candidates.clone();
        cands.sort_by(|a, b| a.length.total_cmp(&b.length));
        for c in cands.iter().take(4) {
            println!("    {:<28} {:.6}", c.label, c.length);
        }
    }
}
