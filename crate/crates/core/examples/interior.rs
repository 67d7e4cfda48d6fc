//! Optimal barriers that stay inside the polygon: the shortest Hamiltonian
//! path of the vertices and the Steiner tree.
//!
//! ```bash
//! cargo run --example interior
//! ```

use opaque::barriers::{euclidean_mst, interior_connected, interior_single_arc, DpTables};
use opaque::fixtures::{make_fixture, regular_ngon};

fn main() {
    let square = make_fixture("unit-square").unwrap().polygon;
    let arc = interior_single_arc(&square);
    let tree = interior_connected(&square);
    println!(
        "unit square: arc {:.9}, tree {:.9} ({:?})",
        arc.length, tree.length, tree.quality
    );

    let hex = regular_ngon(6, 1.0);
    let tables = DpTables::compute(&hex);
    let (len, order) = tables.best_path(&hex);
    println!("hexagon path {order:?}, length {len:.6}");
    println!(
        "  S(0, 3) = {:.6}, T(0, 3) = {:.6}",
        tables.s(0, 3),
        tables.t(0, 3)
    );
    let tree = interior_connected(&hex);
    println!(
        "  tree {:.6} ({:?}), spanning tree {:.6}",
        tree.length,
        tree.quality,
        euclidean_mst(hex.vertices()).length()
    );
}
