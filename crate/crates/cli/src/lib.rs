//! Command-line surface for the odd-cover solvers.

use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use oddcover::error::Error;
use oddcover::exact::{exact_c2, exact_p2, exact_p2_iso, linear_arboricity, MAX_DENSITY_N, MAX_FOREST_N};
use oddcover::graph::{lower_bound, Graph, OddCover};
use oddcover::io::{emit_edge_list, generate, parse_edge_list, parse_graph6, Bounds, Family, Witness};
use oddcover::solver::{
    cover_first_bound, cycle_iso_cover, cycle_odd_cover, cycle_top_cover, gen_counterexample, greedy_linear_forests,
    iso_cover_general, path_odd_cover, topological_cover, walecki, IsoMethod,
};
use rayon::prelude::*;
use serde_json::json;
use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write output: {0}")]
    Write(#[source] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1 for bad input, 2 for I/O, 3 for a broken internal invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Internal(_)) => 3,
            CliError::Core(Error::Io(_)) | CliError::Read { .. } | CliError::Write(_) => 2,
            _ => 1,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "oddcover", version, about = "Path and cycle odd-covers of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
pub enum Format {
    #[default]
    Auto,
    Edges,
    Graph6,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Graph file; `-` or nothing reads stdin.
    pub input: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CoverAlgorithm {
    /// max{v_odd/2, 2 ceil(Δ/2)} paths.
    Pipeline,
    /// Δ + v_odd/2 paths.
    FirstBound,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ExactKind {
    Path,
    Cycle,
    Iso,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Path odd-cover of the graph.
    Cover {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = CoverAlgorithm::Pipeline)]
        algorithm: CoverAlgorithm,
    },
    /// Cycle odd-cover of an all-even graph with at most Δ cycles.
    CycleCover {
        #[command(flatten)]
        input: Input,
    },
    /// Cover of a subdivision with the optimal number of paths (or cycles).
    TopCover {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        cycles: bool,
    },
    /// Cover of the graph plus isolated vertices.
    IsoCover {
        #[command(flatten)]
        input: Input,
        /// Cycles through one extra apex (all-even graphs only).
        #[arg(long)]
        cycles: bool,
    },
    /// Exact minimum by search (n at most 7).
    Exact {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 6)]
        max_k: usize,
        #[arg(long, value_enum, default_value_t = ExactKind::Path)]
        kind: ExactKind,
        /// Isolated vertices to try with `--kind iso`.
        #[arg(long, default_value_t = 1)]
        extra: usize,
    },
    /// Re-check a witness file against a graph file.
    Verify {
        graph: String,
        witness: String,
        #[arg(long, value_enum, default_value_t = Format::Auto)]
        format: Format,
    },
    /// Print a graph from a family such as `cycles(4,4)`.
    Gen {
        family: String,
        /// JSON with the graph and any witnesses the family carries.
        #[arg(long)]
        json: bool,
    },
    /// Solve random G(n, p) instances and print one JSON line each.
    Bench {
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 100)]
        instances: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print lines in instance order.
        #[arg(long)]
        ordered: bool,
    },
}

fn read_source(path: Option<&str>) -> CliResult<String> {
    match path {
        None | Some("-") => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| CliError::Read { path: "stdin".into(), source })?;
            Ok(text)
        }
        Some(p) => std::fs::read_to_string(p).map_err(|source| CliError::Read { path: p.into(), source }),
    }
}

/// Parses `text` as an edge list or graph6; `Auto` picks edge lists when
/// the first meaningful line starts with a number.
pub fn parse_graph(text: &str, format: Format) -> CliResult<Graph> {
    let format = match format {
        Format::Auto => {
            let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
            match first {
                Some(l) if l.split_whitespace().count() >= 2 => Format::Edges,
                _ => Format::Graph6,
            }
        }
        f => f,
    };
    Ok(match format {
        Format::Graph6 => parse_graph6(text.trim())?,
        _ => parse_edge_list(text)?,
    })
}

fn load(input: &Input) -> CliResult<Graph> {
    parse_graph(&read_source(input.input.as_deref())?, input.format)
}

fn density_lower(g: &Graph) -> CliResult<usize> {
    Ok(lower_bound(g, g.n() <= MAX_DENSITY_N)?)
}

/// Witness for a cover that must already verify; a failed self-check is an
/// internal error.
fn checked_witness(cover: &OddCover, bounds: Bounds) -> CliResult<Witness> {
    let mut w = Witness::from_cover(cover);
    if !w.valid {
        return Err(Error::Internal("solver output failed self-verification".into()).into());
    }
    w.bounds = Some(bounds);
    Ok(w)
}

fn bounds(lower: usize, upper: usize, method: &str) -> Bounds {
    Bounds { lower, upper, method: method.into() }
}

fn forests_for(g: &Graph) -> CliResult<Vec<Vec<oddcover::graph::Edge>>> {
    if g.n() <= MAX_FOREST_N {
        match linear_arboricity(g) {
            Ok((_, f)) => return Ok(f),
            Err(Error::BudgetExceeded) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(greedy_linear_forests(g))
}

fn emit(out: &mut dyn Write, value: &impl serde::Serialize) -> CliResult<()> {
    let s = serde_json::to_string(value).map_err(|e| Error::Internal(e.to_string()))?;
    writeln!(out, "{s}").map_err(CliError::Write)
}

fn cover_cmd(g: &Graph, algorithm: CoverAlgorithm) -> CliResult<Witness> {
    let p = g.profile();
    let lower = density_lower(g)?;
    match algorithm {
        CoverAlgorithm::Pipeline => {
            let c = path_odd_cover(g)?;
            checked_witness(&c, bounds(lower, (p.v_odd / 2).max(p.delta_even()), "pipeline"))
        }
        CoverAlgorithm::FirstBound => {
            let c = cover_first_bound(g)?;
            checked_witness(&c, bounds(lower, p.max_degree + p.v_odd / 2, "first-bound"))
        }
    }
}

fn top_cmd(g: &Graph, cycles: bool) -> CliResult<Witness> {
    let p = g.profile();
    let (t, k, method) = if cycles {
        (cycle_top_cover(g)?, p.max_degree / 2, "topological-cycles")
    } else {
        (topological_cover(g)?, (p.v_odd / 2).max(p.max_degree.div_ceil(2)), "topological")
    };
    let mut w = checked_witness(&t.cover, bounds(k, k, method))?;
    w.subdivision = Some(t.subdivision.to_entries());
    Ok(w)
}

fn iso_cmd(g: &Graph, cycles: bool) -> CliResult<Witness> {
    let lower = g.max_degree().div_ceil(2);
    if cycles {
        let forests = forests_for(g)?;
        let iso = cycle_iso_cover(g, &forests)?;
        let mut w = checked_witness(&iso.cover, bounds(lower, forests.len(), "apex-cycles"))?;
        w.added_vertices = Some(iso.added_vertices);
        return Ok(w);
    }
    let gen = iso_cover_general(g)?;
    let b = gen.budget;
    let upper = match gen.method {
        IsoMethod::PathCover => (g.profile().v_odd / 2).max(b.delta_e),
        _ => 2 * b.t + b.d.max(0) as usize,
    };
    let mut w = checked_witness(&gen.iso.cover, bounds(lower, upper, gen.method.name()))?;
    w.added_vertices = Some(gen.iso.added_vertices);
    Ok(w)
}

fn exact_cmd(g: &Graph, max_k: usize, kind: ExactKind, extra: usize) -> CliResult<Witness> {
    let (k, cover, added) = match kind {
        ExactKind::Path => {
            let e = exact_p2(g, max_k)?;
            (e.k, e.witness, None)
        }
        ExactKind::Cycle => {
            let e = exact_c2(g, max_k)?;
            (e.k, e.witness, None)
        }
        ExactKind::Iso => {
            let e = exact_p2_iso(g, extra, max_k)?;
            (e.k, e.witness, Some(e.added_vertices))
        }
    };
    let mut w = checked_witness(&cover, bounds(k, k, "exact-search"))?;
    w.added_vertices = added;
    Ok(w)
}

fn gen_cmd(out: &mut dyn Write, family: &str, as_json: bool) -> CliResult<i32> {
    let family: Family = family.parse()?;
    let g = generate(&family)?;
    if !as_json {
        write!(out, "{}", emit_edge_list(&g)).map_err(CliError::Write)?;
        return Ok(0);
    }
    let edges: Vec<[usize; 2]> = g.edges().map(|e| [e.u(), e.v()]).collect();
    let mut doc = json!({ "n": g.n(), "m": g.edge_count(), "edges": edges });
    match family {
        Family::Walecki { k } => {
            let cycles = walecki(k)?;
            let cover = OddCover::from_cycles(g.clone(), cycles);
            doc["witness"] = serde_json::to_value(Witness::from_cover(&cover)).expect("witness");
        }
        Family::Counterexample { k } => {
            let c = gen_counterexample(k)?;
            let cover = OddCover::from_paths(g.clone(), c.paths.clone());
            let iso = c.iso_cover()?;
            let mut iso_w = Witness::from_cover(&iso.cover);
            iso_w.added_vertices = Some(iso.added_vertices);
            doc["witness"] = serde_json::to_value(Witness::from_cover(&cover)).expect("witness");
            doc["forests"] = json!(c.forests);
            doc["iso_witness"] = serde_json::to_value(iso_w).expect("witness");
            doc["certificate"] = json!({
                "k": c.certificate.k,
                "crossing_edges": c.certificate.crossing_edges,
                "min_total_length": c.certificate.min_total_length,
                "max_total_length": c.certificate.max_total_length,
                "holds": c.certificate.holds(),
            });
        }
        _ => {}
    }
    emit(out, &doc)?;
    Ok(0)
}

fn verify_cmd(out: &mut dyn Write, graph: &str, witness: &str, format: Format) -> CliResult<i32> {
    let g = parse_graph(&read_source(Some(graph))?, format)?;
    let w = Witness::from_json(&read_source(Some(witness))?)?;
    let valid = match w.check(&g) {
        Ok(v) => v,
        Err(Error::Internal(m)) => return Err(Error::Internal(m).into()),
        Err(_) => false,
    };
    emit(out, &json!({ "valid": valid, "count": w.members.len(), "kind": w.kind }))?;
    Ok(if valid { 0 } else { 1 })
}

fn worker_count() -> Option<usize> {
    std::env::var("ODDCOVER_THREADS").ok()?.parse().ok().filter(|&t: &usize| t > 0)
}

fn bench_line(i: u64, n: usize, p: f64, seed: u64) -> CliResult<serde_json::Value> {
    let g = generate(&Family::Gnp { n, p, seed: seed.wrapping_add(i) })?;
    let start = Instant::now();
    let c = path_odd_cover(&g)?;
    let micros = start.elapsed().as_micros() as u64;
    let prof = g.profile();
    let valid = c.verify().is_valid();
    if !valid {
        return Err(Error::Internal(format!("bench instance {i} failed verification")).into());
    }
    Ok(json!({
        "instance": i,
        "n": n,
        "m": g.edge_count(),
        "max_degree": prof.max_degree,
        "v_odd": prof.v_odd,
        "count": c.count(),
        "lower": (prof.v_odd / 2).max(prof.max_degree.div_ceil(2)),
        "upper": (prof.v_odd / 2).max(prof.delta_even()),
        "valid": valid,
        "micros": micros,
    }))
}

fn bench_cmd(out: &mut dyn Write, n: usize, p: f64, instances: u64, seed: u64, ordered: bool) -> CliResult<i32> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = worker_count() {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| CliError::Usage(e.to_string()))?;
    if ordered {
        let lines: Vec<CliResult<serde_json::Value>> =
            pool.install(|| (0..instances).into_par_iter().map(|i| bench_line(i, n, p, seed)).collect());
        for l in lines {
            emit(out, &l?)?;
        }
    } else {
        let (tx, rx) = std::sync::mpsc::channel();
        std::thread::scope(|scope| -> CliResult<()> {
            scope.spawn(move || {
                pool.install(|| {
                    (0..instances).into_par_iter().for_each_with(tx, |tx, i| {
                        let _ = tx.send(bench_line(i, n, p, seed));
                    })
                })
            });
            for line in rx {
                emit(out, &line?)?;
            }
            Ok(())
        })?;
    }
    Ok(0)
}

fn execute(cli: Cli, out: &mut dyn Write) -> CliResult<i32> {
    let witness = match cli.command {
        Command::Cover { input, algorithm } => cover_cmd(&load(&input)?, algorithm)?,
        Command::CycleCover { input } => {
            let g = load(&input)?;
            let c = cycle_odd_cover(&g)?;
            checked_witness(&c, bounds(g.max_degree() / 2, g.max_degree(), "layer-cycles"))?
        }
        Command::TopCover { input, cycles } => top_cmd(&load(&input)?, cycles)?,
        Command::IsoCover { input, cycles } => iso_cmd(&load(&input)?, cycles)?,
        Command::Exact { input, max_k, kind, extra } => exact_cmd(&load(&input)?, max_k, kind, extra)?,
        Command::Verify { graph, witness, format } => return verify_cmd(out, &graph, &witness, format),
        Command::Gen { family, json } => return gen_cmd(out, &family, json),
        Command::Bench { n, p, instances, seed, ordered } => return bench_cmd(out, n, p, instances, seed, ordered),
    };
    emit(out, &witness)?;
    Ok(0)
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{e}");
            return 1;
        }
        Err(e) => {
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
