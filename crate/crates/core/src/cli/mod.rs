//! The `opaque` command-line tool.
//!
//! Exit codes: `0` success (or opaque), `1` not opaque, `2` invalid input,
//! `3` unknown method, family or fixture.

mod documents;
pub mod svg;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::barriers::{solve, Method};
use crate::fixtures::make_fixture;
use crate::random::{seeded_rng, Family};
use crate::verify::is_opaque;

pub use documents::{read_json, BarrierDocument, DocumentError, PolygonDocument};

#[derive(Debug, Parser)]
#[command(
    name = "opaque",
    version,
    about = "Short opaque barriers for convex polygons"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a barrier and print it as JSON.
    Compute {
        /// a1, a2, a3, a4, interior-arc or interior-tree
        #[arg(long)]
        method: String,
        /// Polygon JSON: {"vertices": [[x, y], ...]}
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Accept clockwise input by reversing it.
        #[arg(long)]
        auto_orient: bool,
    },
    /// Decide whether a barrier blocks every line through a polygon.
    Verify {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long)]
        barrier: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        auto_orient: bool,
    },
    /// Print a CSV table of every method over a polygon family.
    Bench {
        /// ngon, random-hull, thin or reuleaux
        #[arg(long)]
        family: String,
        /// Inclusive size range `a..b`, or a single size.
        #[arg(long)]
        sizes: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Restrict to these methods (comma separated).
        #[arg(long, value_delimiter = ',')]
        methods: Vec<String>,
    },
    /// Print a named fixture.
    Fixture {
        #[arg(long)]
        name: String,
        #[arg(long, value_enum, default_value_t = Emit::Polygon)]
        emit: Emit,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Polygon,
    Barriers,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_OPAQUE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Compute {
            method,
            input,
            svg,
            auto_orient,
        } => compute(&method, &input, svg.as_deref(), auto_orient, out),
        Command::Verify {
            polygon,
            barrier,
            svg,
            auto_orient,
        } => verify(&polygon, &barrier, svg.as_deref(), auto_orient, out),
        Command::Bench {
            family,
            sizes,
            seed,
            methods,
        } => bench(&family, &sizes, seed, &methods, out),
        Command::Fixture { name, emit } => fixture(&name, emit, out),
    };
    match result {
        Ok(code) => code,
        Err((code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

type Outcome = Result<i32, (i32, String)>;

fn invalid(e: impl std::fmt::Display) -> (i32, String) {
    (EXIT_INVALID, e.to_string())
}

fn write_out(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes())
        .map(|_| EXIT_OK)
        .map_err(|e| (EXIT_INVALID, format!("cannot write output: {e}")))
}

fn write_file(path: &Path, text: &str) -> Result<(), (i32, String)> {
    fs::write(path, text).map_err(|e| {
        (
            EXIT_INVALID,
            format!("cannot write {}: {e}", path.display()),
        )
    })
}

fn compute(
    method: &str,
    input: &Path,
    svg_path: Option<&Path>,
    auto_orient: bool,
    out: &mut dyn Write,
) -> Outcome {
    let method: Method = method.parse().map_err(|e| (EXIT_UNKNOWN, format!("{e}")))?;
    let doc: PolygonDocument = read_json(input).map_err(invalid)?;
    let poly = doc
        .to_polygon(auto_orient)
        .map_err(|e| invalid(DocumentError::Polygon(e)))?;
    let sol = solve(&poly, method);
    if let Some(path) = svg_path {
        let caption = format!(
            "{}: length {:.6}, ratio {:.4} to per/2 = {:.6}",
            method, sol.length, sol.ratio, sol.lower_bound
        );
        write_file(
            path,
            &svg::render(&poly, Some(&sol.barrier), None, &caption),
        )?;
    }
    let json =
        serde_json::to_string_pretty(&BarrierDocument::from_solution(&sol)).map_err(invalid)?;
    write_out(out, &(json + "\n"))
}

fn verify(
    polygon: &Path,
    barrier: &Path,
    svg_path: Option<&Path>,
    auto_orient: bool,
    out: &mut dyn Write,
) -> Outcome {
    let pdoc: PolygonDocument = read_json(polygon).map_err(invalid)?;
    let poly = pdoc
        .to_polygon(auto_orient)
        .map_err(|e| invalid(DocumentError::Polygon(e)))?;
    let bdoc: BarrierDocument = read_json(barrier).map_err(invalid)?;
    let barrier = bdoc.to_barrier().map_err(invalid)?;
    let report = is_opaque(&poly, &barrier);

    let mut text = String::new();
    let caption = match &report.witness {
        None => {
            text.push_str(&format!(
                "opaque ({} directions tested)\n",
                report.directions_tested
            ));
            format!("opaque, length {:.6}", barrier.length())
        }
        Some(w) => {
            text.push_str("not opaque\n");
            text.push_str(&format!(
                "witness theta={} offset={} uncovered=[{}, {}]\n",
                w.theta.theta(),
                w.representative_offset,
                w.uncovered.lo,
                w.uncovered.hi
            ));
            format!(
                "not opaque: unblocked line at theta {:.6}, offset {:.6}",
                w.theta.theta(),
                w.representative_offset
            )
        }
    };
    if let Some(path) = svg_path {
        write_file(
            path,
            &svg::render(&poly, Some(&barrier), report.witness.as_ref(), &caption),
        )?;
    }
    write_out(out, &text)?;
    Ok(if report.opaque {
        EXIT_OK
    } else {
        EXIT_NOT_OPAQUE
    })
}

fn parse_sizes(sizes: &str) -> Option<(usize, usize)> {
    let (a, b) = match sizes.split_once("..") {
        Some((a, b)) => (a.trim().parse().ok()?, b.trim().parse().ok()?),
        None => {
            let n = sizes.trim().parse().ok()?;
            (n, n)
        }
    };
    (3 <= a && a <= b).then_some((a, b))
}

fn bench(family: &str, sizes: &str, seed: u64, methods: &[String], out: &mut dyn Write) -> Outcome {
    let family: Family = family.parse().map_err(|e| (EXIT_UNKNOWN, e))?;
    let (lo, hi) = parse_sizes(sizes).ok_or_else(|| {
        invalid(format!(
            "sizes must be `a..b` with 3 <= a <= b, got {sizes:?}"
        ))
    })?;
    let methods: Vec<Method> = if methods.is_empty() {
        Method::ALL.to_vec()
    } else {
        methods
            .iter()
            .map(|m| m.parse())
            .collect::<Result<_, _>>()
            .map_err(|e| (EXIT_UNKNOWN, format!("{e}")))?
    };
    let mut rng = seeded_rng(seed);
    let mut table = String::from("instance,method,length,half_perimeter,ratio\n");
    for n in lo..=hi {
        let poly = family.instance(n, &mut rng);
        for &m in &methods {
            let sol = solve(&poly, m);
            table.push_str(&format!(
                "{family}-{n},{m},{},{},{}\n",
                sol.length, sol.lower_bound, sol.ratio
            ));
        }
    }
    write_out(out, &table)
}

fn fixture(name: &str, emit: Emit, out: &mut dyn Write) -> Outcome {
    let f = make_fixture(name).map_err(|e| (EXIT_UNKNOWN, e.to_string()))?;
    let json = match emit {
        Emit::Polygon => serde_json::to_string_pretty(&PolygonDocument::from_polygon(&f.polygon)),
        Emit::Barriers => {
            let lower = f.polygon.perimeter() / 2.0;
            let docs: Vec<BarrierDocument> = f
                .known_barriers
                .iter()
                .map(|kb| {
                    let len = kb.barrier.length();
                    BarrierDocument {
                        method: Some(kb.note.to_string()),
                        lower_bound: Some(lower),
                        ratio: Some(len / lower),
                        ..BarrierDocument::from_barrier(&kb.barrier)
                    }
                })
                .collect();
            serde_json::to_string_pretty(&docs)
        }
    }
    .map_err(invalid)?;
    write_out(out, &(json + "\n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_ranges() {
        assert_eq!(parse_sizes("4..9"), Some((4, 9)));
        assert_eq!(parse_sizes("512"), Some((512, 512)));
        assert_eq!(parse_sizes("9..4"), None);
        assert_eq!(parse_sizes("2..4"), None);
        assert_eq!(parse_sizes("a..b"), None);
    }
}
