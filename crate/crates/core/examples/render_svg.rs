//! Writes an SVG per method for a random polygon.
//!
//! ```bash
//! cargo run --example render_svg -- out/
//! ```

use std::fs;
use std::path::PathBuf;

use opaque::barriers::{solve, Method};
use opaque::cli::svg;
use opaque::random::{random_convex_polygon, seeded_rng};

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "svg".into()));
    fs::create_dir_all(&dir)?;
    let poly = random_convex_polygon(&mut seeded_rng(3), 12);
    for m in Method::ALL {
        let sol = solve(&poly, m);
        let caption = format!("{m}: {:.4} ({:.3} x per/2)", sol.length, sol.ratio);
        let path = dir.join(format!("{m}.svg"));
        fs::write(
            &path,
            svg::render(&poly, Some(&sol.barrier), None, &caption),
        )?;
        println!("{}", path.display());
    }
    Ok(())
}
