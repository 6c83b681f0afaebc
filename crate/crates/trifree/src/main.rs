//! Command-line front end: construction, analysis, classification,
//! destabilizer catalogs, enumeration, and exhaustive verification, with
//! graph6 lines on stdin/stdout and JSON reports.
//!
//! Exit codes: 0 success, 1 verification failure or any per-line error,
//! 2 usage or parameter errors.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use trifree::classify;
use trifree::enumerate::{self, GenConstraints};
use trifree::families::{self, Attachment};
use trifree::graph::Graph;
use trifree::graph6;
use trifree::invariants;
use trifree::{alpha_at_most, independence_number};

/// Environment variable holding the default worker count.
const WORKERS_ENV: &str = "TRIFREE_WORKERS";

#[derive(Parser)]
#[command(name = "trifree", version, about = "Exact tools for extremal triangle-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Graph6,
    Table,
}

#[derive(Args)]
struct InputArgs {
    /// graph6 input: a file path, or "-" for standard input.
    #[arg(short, long, default_value = "-")]
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member as graph6: chain:k, bicycle:k, w13,
    /// loopchain:l:m:{star|path|cycle}, cycle:i, path:i.
    Construct {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Per-graph invariant report for a graph6 stream.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Classify each graph of a graph6 stream.
    Classify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// All minimal destabilizing sets up to --max-size.
    Destabilizers {
        /// graph6 of the graph; read from --input when omitted.
        graph: Option<String>,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
    /// Stream every triangle-free graph on --n vertices, one graph6 line
    /// each.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha_less_than: Option<usize>,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long)]
        min_degree: Option<usize>,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Minimal edge count of triangle-free graphs on --n vertices with
    /// independence number below --j, plus all extremal graphs.
    Enumber {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Exhaustive verification suites; exit code 1 on any failure.
    Verify {
        #[command(subcommand)]
        check: VerifyCheck,
    },
}

#[derive(Subcommand)]
enum VerifyCheck {
    /// t >= 0 and q >= 0 over all triangle-free graphs with n <= --n-max.
    TNonneg {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Classification of all t = 0 and (t = 1, delta <= 2) graphs with
    /// n <= --n-max.
    Theorem3 {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Family fact suites: independence numbers, stability levels,
    /// destabilizer catalogs, squares through high-degree vertices.
    Lemmas {
        #[arg(long, default_value_t = 6)]
        k_max: usize,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn worker_count(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var(WORKERS_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)
    })
    .max(1)
}

fn warn_if_large(n: usize) {
    if n >= 13 {
        eprintln!("note: exhaustive scans at n = {n} can take hours");
    }
}

fn run() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::Construct { spec, format } => construct(&spec, format),
        Command::Analyze { input, format } => for_each_graph(&input, |g| analyze(g, format)),
        Command::Classify { input } => for_each_graph(&input, |g| {
            let report = classify::classify_graph(g)?;
            println!("{}", report.to_json());
            Ok(())
        }),
        Command::Destabilizers {
            graph,
            input,
            max_size,
        } => {
            let g = match graph {
                Some(line) => graph6::decode(&line).context("malformed graph6 argument")?,
                None => {
                    let mut text = String::new();
                    open_input(&input.input)?.read_to_string(&mut text)?;
                    graph6::decode(text.trim()).context("malformed graph6 input")?
                }
            };
            let catalog = invariants::minimal_destabilizers(&g, max_size);
            println!("{}", catalog.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate {
            n,
            alpha_less_than,
            max_edges,
            min_degree,
            connected,
            workers,
        } => {
            warn_if_large(n);
            let c = GenConstraints {
                vertex_count: n,
                alpha_less_than,
                max_edges,
                min_degree,
                connected_only: connected,
            };
            let workers = worker_count(workers);
            if workers <= 1 {
                enumerate::generate_triangle_free(&c, |g| {
                    println!("{}", graph6::encode(g).expect("generated graphs encode"));
                })?;
            } else {
                // gather and sort so multi-worker output is deterministic
                let lines = std::sync::Mutex::new(Vec::new());
                enumerate::generate_triangle_free_parallel(&c, workers, |g| {
                    lines
                        .lock()
                        .expect("line collector")
                        .push(graph6::encode(g).expect("generated graphs encode"));
                })?;
                let mut lines = lines.into_inner().expect("line collector");
                lines.sort();
                for line in lines {
                    println!("{line}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumber { j, n, workers } => {
            warn_if_large(n);
            let result = enumerate::e_number(j, n, worker_count(workers))?;
            println!(
                "{}",
                json!({
                    "j": result.j,
                    "n": result.n,
                    "finite": result.value.is_some(),
                    "value": result.value,
                    "realisers": result.realisers,
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { check } => verify(check),
    }
}

fn construct(spec: &str, format: Format) -> Result<ExitCode> {
    let g = parse_family_spec(spec)?;
    let line = graph6::encode(&g).context("family member too large for graph6")?;
    match format {
        Format::Json => println!("{}", json!({ "spec": spec, "graph6": line })),
        _ => println!("{line}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_family_spec(spec: &str) -> Result<Graph> {
    let parts: Vec<&str> = spec.split(':').collect();
    let parse_num = |s: &str| -> Result<usize> {
        s.parse().map_err(|_| anyhow!("bad number {s:?} in {spec:?}"))
    };
    let g = match parts.as_slice() {
        ["w13"] => families::w13(),
        ["chain", k] => families::chain(parse_num(k)?)?,
        ["bicycle", k] => families::bicycle(parse_num(k)?)?,
        ["cycle", i] => families::cycle(parse_num(i)?)?,
        ["path", i] => families::path(parse_num(i)?)?,
        ["loopchain", l, m, att] => {
            let attachment = Attachment::parse(att)
                .ok_or_else(|| anyhow!("bad attachment {att:?}: use star, path, or cycle"))?;
            families::loop_chain(parse_num(l)?, parse_num(m)?, attachment)?
        }
        _ => {
            return Err(anyhow!(
                "bad family spec {spec:?}: use chain:k, bicycle:k, w13, \
                 loopchain:l:m:{{star|path|cycle}}, cycle:i, or path:i"
            ))
        }
    };
    Ok(g)
}

fn open_input(path: &str) -> Result<Box<dyn BufRead>> {
    Ok(match path {
        "-" => Box::new(BufReader::new(io::stdin())),
        p => Box::new(BufReader::new(
            File::open(p).with_context(|| format!("cannot open {p}"))?,
        )),
    })
}

/// Runs `per_graph` on each graph6 line; malformed lines and per-graph
/// failures produce error records and a final exit code 1 instead of
/// aborting the stream.
fn for_each_graph(input: &InputArgs, mut per_graph: impl FnMut(&Graph) -> Result<()>) -> Result<ExitCode> {
    let mut failures = 0u64;
    for (idx, line) in open_input(&input.input)?.lines().enumerate() {
        let line = line.context("cannot read input")?;
        if line.trim().is_empty() {
            continue;
        }
        let outcome = graph6::decode(&line)
            .map_err(anyhow::Error::from)
            .and_then(|g| per_graph(&g));
        if let Err(err) = outcome {
            println!("{}", json!({ "line": idx + 1, "error": format!("{err:#}") }));
            failures += 1;
        }
    }
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn analyze(g: &Graph, format: Format) -> Result<()> {
    let result = independence_number(g);
    let n = g.vertex_count();
    let e = g.edge_count();
    let t = invariants::T.value_from_parts(n, e, result.alpha);
    let q = invariants::Q.value_from_parts(n, e, result.alpha);
    let girth = g.girth();
    let delta = g.min_degree();
    match format {
        Format::Table => {
            println!(
                "n={n} e={e} alpha={} t={t} q={q} girth={} delta={} triangle_free={} components={}",
                result.alpha,
                girth.map_or("inf".into(), |v| v.to_string()),
                delta.map_or("-".into(), |v| v.to_string()),
                g.is_triangle_free(),
                g.count_components(),
            );
        }
        _ => {
            let histogram: serde_json::Map<String, serde_json::Value> = g
                .degree_histogram()
                .into_iter()
                .map(|(d, c)| (d.to_string(), c.into()))
                .collect();
            println!(
                "{}",
                json!({
                    "n": n,
                    "e": e,
                    "alpha": result.alpha,
                    "t": t,
                    "q": q,
                    "girth": girth,
                    "delta": delta,
                    "degree_histogram": histogram,
                    "triangle_free": g.is_triangle_free(),
                    "components": g.count_components(),
                })
            );
        }
    }
    Ok(())
}

fn verify(check: VerifyCheck) -> Result<ExitCode> {
    let (doc, pass) = match check {
        VerifyCheck::TNonneg { n_max, workers } => {
            warn_if_large(n_max);
            let report = enumerate::verify_t_nonnegative(n_max, worker_count(workers))?;
            let pass = report.pass;
            let mut doc = serde_json::to_value(&report)?;
            doc["check"] = "t-nonneg".into();
            (doc, pass)
        }
        VerifyCheck::Theorem3 { n_max, workers } => {
            warn_if_large(n_max);
            let report = enumerate::verify_theorem3(n_max, worker_count(workers))?;
            let pass = report.pass;
            let mut doc = serde_json::to_value(&report)?;
            doc["check"] = "theorem3".into();
            (doc, pass)
        }
        VerifyCheck::Lemmas { k_max } => {
            let report = verify_lemmas(k_max)?;
            let pass = report["pass"].as_bool().unwrap_or(false);
            (report, pass)
        }
    };
    println!("{doc}");
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// The family fact suites: exact alpha values, stability levels, complete
/// destabilizer catalogs, and 4-cycles through every vertex of degree at
/// least three.
fn verify_lemmas(k_max: usize) -> Result<serde_json::Value> {
    use trifree::graph::{CycleAnchor, VertexSet};

    let mut items = Vec::new();
    let mut record = |name: String, pass: bool, detail: String| {
        items.push(json!({ "name": name, "pass": pass, "detail": detail }));
        pass
    };

    // chains: alpha, 2-stability, size-3 destabilizers are bivalent balls
    let mut chains_ok = true;
    for k in 2..=k_max.max(2) {
        let g = families::chain(k)?;
        let alpha_ok = !alpha_at_most(&g, k - 1) && alpha_at_most(&g, k);
        let stable_ok = invariants::is_s_stable(&g, 2);
        let catalog = invariants::minimal_destabilizers(&g, 3);
        let expected: std::collections::BTreeSet<Vec<usize>> = g
            .vertices()
            .filter(|&v| g.degree(v) == 2)
            .map(|v| g.ball(VertexSet::singleton(v), 1).to_vec())
            .collect();
        let got: std::collections::BTreeSet<Vec<usize>> =
            catalog.sets.iter().map(|s| s.vertices.to_vec()).collect();
        chains_ok &= alpha_ok && stable_ok && got == expected;
    }
    record("chain-stability".into(), chains_ok, format!("k = 2..={k_max}"));

    // bicycles: alpha, 3-stability, the 4k destabilizing 4-sets
    let mut bicycles_ok = true;
    for k in 4..=k_max.max(4) {
        let g = families::bicycle(k)?;
        let alpha_ok = !alpha_at_most(&g, k - 1) && alpha_at_most(&g, k);
        let stable_ok = invariants::is_s_stable(&g, 3);
        let catalog = invariants::minimal_destabilizers(&g, 4);
        bicycles_ok &= alpha_ok && stable_ok && catalog.sets.len() == 4 * k;
    }
    record("bicycle-stability".into(), bicycles_ok, format!("k = 4..={k_max}"));

    // the 13-vertex circulant is 4-stable
    let w = families::w13();
    let w_ok = invariants::is_s_stable(&w, 4) && !alpha_at_most(&w, 3) && alpha_at_most(&w, 4);
    record("w13-stability".into(), w_ok, "4-stable, alpha 4".into());

    // every vertex of degree >= 3 in a family member lies on a 4-cycle
    let mut members: Vec<(String, Graph)> = Vec::new();
    for k in 2..=k_max.max(2) {
        members.push((format!("chain:{k}"), families::chain(k)?));
    }
    for k in 4..=k_max.max(4) {
        members.push((format!("bicycle:{k}"), families::bicycle(k)?));
    }
    members.push(("w13".into(), w));
    for l in 4..=k_max.max(5) {
        for m in 1..=3 {
            for att in Attachment::ALL {
                if l + m <= k_max.max(5) + 3 {
                    members.push((
                        format!("loopchain:{l}:{m}:{}", att.name()),
                        families::loop_chain(l, m, att)?,
                    ));
                }
            }
        }
    }
    let mut squares_ok = true;
    for (name, g) in &members {
        for v in g.vertices().filter(|&v| g.degree(v) >= 3) {
            if g.count_cycles(4, CycleAnchor::Vertex(v)) == 0 {
                squares_ok = record(
                    format!("square-through-{name}-{v}"),
                    false,
                    "no 4-cycle".into(),
                );
            }
        }
    }
    record(
        "squares-through-high-degree".into(),
        squares_ok,
        format!("{} members", members.len()),
    );

    let pass = items.iter().all(|i| i["pass"].as_bool() == Some(true));
    Ok(json!({ "check": "lemmas", "k_max": k_max, "items": items, "pass": pass }))
}
