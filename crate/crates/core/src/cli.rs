//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input
//! that cannot be read, parsed, or evaluated (e.g. a disconnected graph).

use std::fs;
use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::distance::apsp;
use crate::error::Error;
use crate::extremal::{c5_two_trees, cycle_with_tree, Theorem, TreeSpec};
use crate::formats::{parse_edge_list, parse_graph6_list, to_graph6, write_edge_list};
use crate::graph::Graph;
use crate::invariants::{pi_table, IndexReport};
use crate::verifier::{verify_lemmas, verify_theorem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BAD_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "szeged", version, about = "Wiener and Szeged indices, extremal families, exhaustive bound checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// A cycle of length --cycle with one tree of --t vertices
    CycleTree,
    /// C5 with trees of --t1 and --t2 vertices at adjacent cycle vertices
    C5TwoTrees,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Shape {
    Random,
    Path,
    Star,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute W, Sz and 4·Sz* for each input graph
    Compute {
        /// Input file, or "-" for stdin
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        #[arg(long)]
        json: bool,
        /// Include π(x, y) for every vertex pair
        #[arg(long)]
        pairs: bool,
    },
    /// Build a member of an extremal family
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        /// Cycle length for cycle-tree
        #[arg(long)]
        cycle: Option<usize>,
        /// Tree size (vertices, including the root) for cycle-tree
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, default_value_t = 1)]
        t1: usize,
        #[arg(long, default_value_t = 1)]
        t2: usize,
        #[arg(long, value_enum, default_value_t = Shape::Random)]
        shape: Shape,
        /// Required for random shapes
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long = "output-format", value_enum, default_value_t = Format::Edgelist)]
        output_format: Format,
    },
    /// Exhaustively check a bound for every n in a range such as 4..7
    Verify {
        #[arg(long, value_parser = parse_theorem)]
        theorem: Theorem,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long)]
        json: bool,
        /// Also write the JSON reports (one per line) to this file
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exhaustively check the supporting lemmas on connected graphs
    Lemmas {
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Convert graphs between formats
    Convert {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum)]
        from: Format,
        #[arg(long, value_enum)]
        to: Format,
    },
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse()
}

/// `a..b` and `a..=b` are both inclusive; a single number is a one-element range.
fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid number {t:?}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_BAD_INPUT,
            message: message.into(),
        }
    }
}

fn io_err(e: std::io::Error) -> Failure {
    Failure::input(format!("i/o error: {e}"))
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{path}: {e}")))
    }
}

fn read_graphs(text: &str, format: Format) -> Result<Vec<Graph>, Failure> {
    let parsed = match format {
        Format::Edgelist => parse_edge_list(text).map(|g| vec![g]),
        Format::Graph6 => parse_graph6_list(text),
    };
    parsed.map_err(|e| Failure::input(e.to_string()))
}

fn emit(g: &Graph, format: Format) -> String {
    match format {
        Format::Edgelist => write_edge_list(g),
        Format::Graph6 => to_graph6(g) + "\n",
    }
}

#[derive(Serialize)]
struct PairRow {
    x: usize,
    y: usize,
    d: u32,
    pi: i64,
    mu_edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct ReportWithPairs<'a> {
    #[serde(flatten)]
    report: &'a IndexReport,
    pairs: Vec<PairRow>,
}

fn compute(
    g: &Graph,
    json: bool,
    pairs: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let dm = apsp(g);
    let report = IndexReport::with_distances(g, &dm).map_err(|e| match e {
        Error::Disconnected => Failure::input("indices are defined for connected graphs only"),
        other => Failure::input(other.to_string()),
    })?;
    let table = if pairs {
        pi_table(g, &dm)
            .map_err(|e| Failure::input(e.to_string()))?
            .into_iter()
            .map(|c| PairRow {
                x: c.pair.0,
                y: c.pair.1,
                d: c.distance,
                pi: c.pi,
                mu_edges: c.mu_edges,
            })
            .collect()
    } else {
        Vec::new()
    };
    if json {
        let line = if pairs {
            serde_json::to_string(&ReportWithPairs {
                report: &report,
                pairs: table,
            })
        } else {
            serde_json::to_string(&report)
        }
        .expect("report serializes");
        writeln!(out, "{line}").map_err(io_err)?;
    } else {
        let opt = |v: Option<usize>| v.map_or_else(|| "none".to_string(), |x| x.to_string());
        writeln!(
            out,
            "n={} m={} W={} Sz={} 4Sz*={} Sz-W={} 4(Sz*-W)={} bipartite={} girth={} odd_girth={}",
            report.n,
            report.m,
            report.wiener,
            report.szeged,
            report.revised_szeged_x4,
            report.gap_sz,
            report.gap_rsz_x4,
            report.bipartite,
            opt(report.girth),
            opt(report.odd_girth)
        )
        .map_err(io_err)?;
        for row in &table {
            writeln!(out, "  pi({}, {}) = {}  (d = {})", row.x, row.y, row.pi, row.d)
                .map_err(io_err)?;
        }
    }
    Ok(())
}

fn tree(size: usize, shape: Shape, rng: Option<&mut ChaCha8Rng>) -> Result<TreeSpec, Failure> {
    let built = match shape {
        Shape::Path => TreeSpec::path(size),
        Shape::Star => TreeSpec::star(size),
        Shape::Random => {
            let rng = rng.ok_or_else(|| Failure::usage("random tree shapes require --seed"))?;
            TreeSpec::random(size, rng)
        }
    };
    built.map_err(|e| Failure::usage(e.to_string()))
}

fn execute(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Compute {
            input,
            format,
            json,
            pairs,
        } => {
            let text = read_input(&input, stdin)?;
            for g in read_graphs(&text, format)? {
                compute(&g, json, pairs, out)?;
            }
            Ok(EXIT_OK)
        }
        Command::Construct {
            family,
            cycle,
            t,
            t1,
            t2,
            shape,
            seed,
            output_format,
        } => {
            if shape == Shape::Random && seed.is_none() {
                return Err(Failure::usage("random tree shapes require --seed"));
            }
            let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
            let g = match family {
                Family::CycleTree => {
                    let len = cycle.ok_or_else(|| Failure::usage("cycle-tree requires --cycle"))?;
                    let spec = tree(t, shape, rng.as_mut())?;
                    cycle_with_tree(len, &spec)
                }
                Family::C5TwoTrees => {
                    let a = tree(t1, shape, rng.as_mut())?;
                    let b = tree(t2, shape, rng.as_mut())?;
                    c5_two_trees(&a, &b)
                }
            }
            .map_err(|e| Failure::usage(e.to_string()))?;
            out.write_all(emit(&g, output_format).as_bytes())
                .map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            theorem,
            n,
            json,
            output,
        } => {
            let mut file_lines = String::new();
            let mut all_passed = true;
            for k in n {
                let report = verify_theorem(theorem, k).map_err(|e| Failure::usage(e.to_string()))?;
                all_passed &= report.passed();
                let line = report.to_json();
                if json {
                    writeln!(out, "{line}").map_err(io_err)?;
                } else {
                    writeln!(out, "{report}").map_err(io_err)?;
                }
                file_lines.push_str(&line);
                file_lines.push('\n');
            }
            if let Some(path) = output {
                fs::write(&path, file_lines)
                    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            }
            Ok(if all_passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Lemmas { n, json } => {
            let mut all_passed = true;
            for k in n {
                let report = verify_lemmas(k).map_err(|e| Failure::usage(e.to_string()))?;
                all_passed &= report.passed();
                if json {
                    let line = serde_json::to_string(&report).expect("report serializes");
                    writeln!(out, "{line}").map_err(io_err)?;
                } else {
                    writeln!(out, "{report}").map_err(io_err)?;
                }
            }
            Ok(if all_passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Convert { input, from, to } => {
            let text = read_input(&input, stdin)?;
            for g in read_graphs(&text, from)? {
                out.write_all(emit(&g, to).as_bytes()).map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, stdin, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("szeged").chain(args.iter().copied());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..7"), Ok(4..=7));
        assert_eq!(parse_range("4..=7"), Ok(4..=7));
        assert_eq!(parse_range("5"), Ok(5..=5));
        assert!(parse_range("7..4").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn compute_from_stdin() {
        let (code, out, _) = call(&["compute", "--json"], "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["wiener"], 15);
        assert_eq!(v["szeged"], 20);
        assert_eq!(v["revised_szeged_x4"], 125);
    }

    #[test]
    fn compute_pairs_table() {
        let (code, out, _) = call(&["compute", "--json", "--pairs", "--format", "graph6"], "Dhc\n");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let pairs = v["pairs"].as_array().unwrap();
        assert_eq!(pairs.len(), 10);
        let total: i64 = pairs.iter().map(|p| p["pi"].as_i64().unwrap()).sum();
        assert_eq!(total, v["gap_sz"].as_i64().unwrap());
    }

    #[test]
    fn error_codes() {
        assert_eq!(call(&[], "").0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"], "").0, EXIT_USAGE);
        assert_eq!(call(&["--help"], "").0, EXIT_OK);
        assert_eq!(call(&["compute"], "3 1\n0 9\n").0, EXIT_BAD_INPUT);
        assert_eq!(call(&["compute"], "2 0\n").0, EXIT_BAD_INPUT);
        assert_eq!(
            call(&["compute", "--format", "graph6"], "D?\n").0,
            EXIT_BAD_INPUT
        );
        assert_eq!(call(&["compute", "/nonexistent/file"], "").0, EXIT_BAD_INPUT);
        assert_eq!(call(&["verify", "--theorem", "thm4", "--n", "5"], "").0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--theorem", "thm1", "--n", "3"], "").0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--theorem", "thm3", "--n", "9"], "").0, EXIT_USAGE);
        assert_eq!(
            call(&["construct", "--family", "c5-two-trees", "--t1", "3"], "").0,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["construct", "--family", "cycle-tree", "--shape", "path"], "").0,
            EXIT_USAGE
        );
    }

    #[test]
    fn construct_is_seeded() {
        let args = [
            "construct", "--family", "cycle-tree", "--cycle", "3", "--t", "9", "--seed", "11",
        ];
        let (c1, a, _) = call(&args, "");
        let (c2, b, _) = call(&args, "");
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(a, b);
        assert!(a.starts_with("11 11\n"));
    }

    #[test]
    fn convert_round_trip() {
        let text = "5 5\n3 4\n0 1\n2 1\n2 3\n0 4\n";
        let (_, g6, _) = call(&["convert", "--from", "edgelist", "--to", "graph6"], text);
        assert_eq!(g6, "Dhc\n");
        let (_, back, _) = call(&["convert", "--from", "graph6", "--to", "edgelist"], &g6);
        assert_eq!(back, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    }

    #[test]
    fn verify_and_lemmas() {
        let (code, out, _) = call(&["verify", "--theorem", "thm2", "--n", "4..5", "--json"], "");
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2);
        let (code, out, _) = call(&["lemmas", "--n", "4"], "");
        assert_eq!(code, 0);
        assert!(out.contains("PASS"));
    }
}
