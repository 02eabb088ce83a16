//! Batch command-line surface over the library. Exit codes: 0 success or
//! verified, 1 usage, 2 parse failure, 3 verification mismatch.

use clap::{Parser, Subcommand, ValueEnum};
use edgecut::graph::{parse_graph, read_graph_file, sniff_format, ParseMode, SimpleGraph};
use edgecut::mincut::{
    brute_force_mincut, certify_or_cut, exact_mincut_multigraph, minimum_cut, CertifyOutcome,
    ExactCut,
};
use edgecut::pagerank::{
    approximate_pagerank, sweep_high, DensityRange, InitialDistribution, TeleportParams,
};
use edgecut::pipeline::{build_kernel, PipelineConfig};
use edgecut::report::RunReport;
use std::path::{Path, PathBuf};

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_PARSE: i32 = 2;
const EXIT_MISMATCH: i32 = 3;

/// EDGECUT_LOG=1 turns on progress logging to stderr.
fn verbose() -> bool {
    std::env::var_os("EDGECUT_LOG").is_some_and(|v| !v.is_empty() && v != "0")
}

#[derive(Parser)]
#[command(
    name = "edgecut",
    version,
    about = "Deterministic edge connectivity: kernelization, certify-or-cut, exact finishers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Strict,
    Dedupe,
}

impl From<ModeArg> for ParseMode {
    fn from(m: ModeArg) -> ParseMode {
        match m {
            ModeArg::Strict => ParseMode::Strict,
            ModeArg::Dedupe => ParseMode::Dedupe,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Barbell,
    RandomGnp,
    PlantedCut,
}

#[derive(Subcommand)]
enum Command {
    /// Edge connectivity and a witness minimum cut
    Mincut {
        file: PathBuf,
        #[arg(long, default_value = "scaled")]
        profile: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        timing: bool,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
        /// Override a single constant, e.g. --set phi0=0.2 (repeatable)
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// Kernelize and report the rounds
    Kernel {
        file: PathBuf,
        #[arg(long, default_value = "scaled")]
        profile: String,
        /// Emit the per-round ledger as JSON
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        timing: bool,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
        /// Override a single constant, e.g. --set phi0=0.2 (repeatable)
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// Certify that no non-trivial min-cut exists, or print a low-conductance cut
    Certify {
        file: PathBuf,
        #[arg(long, default_value = "scaled")]
        profile: String,
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
        /// Override a single constant, e.g. --set phi0=0.2 (repeatable)
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// Approximate personalized PageRank from a source vertex or a set file
    Pagerank {
        file: PathBuf,
        /// Start vertex (by its label in the input file)
        #[arg(long, conflicts_with = "set")]
        source: Option<u64>,
        /// File listing one start label per line (uniform mass)
        #[arg(long)]
        set: Option<PathBuf>,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        eps: f64,
        /// Also run the conductance sweep and print the best cut
        #[arg(long)]
        sweep: bool,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
    },
    /// Generate a graph family, run min-cut and kernelization, emit rows
    Bench {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Clique size (barbell)
        #[arg(long)]
        k: Option<usize>,
        /// Bridge count (barbell, planted-cut)
        #[arg(long)]
        t: Option<usize>,
        /// Vertex count (random-gnp) or per-blob count (planted-cut)
        #[arg(long)]
        n: Option<usize>,
        /// Edge probability (random-gnp, planted-cut)
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "scaled")]
        profile: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        timing: bool,
        /// Cross-check λ against brute force where feasible
        #[arg(long)]
        verify: bool,
        /// Override a single constant, e.g. --set phi0=0.2 (repeatable)
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// Re-compute every graph in a directory with brute force and the exact
    /// finisher; exit 0 iff all agree
    Verify {
        dir: PathBuf,
        #[arg(long, default_value = "scaled")]
        profile: String,
        /// Override a single constant, e.g. --set phi0=0.2 (repeatable)
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // keep clap's rendering but pin the usage exit code
            let _ = e.print();
            std::process::exit(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    std::process::exit(run(cli));
}

fn load_config(
    profile: &str,
    overrides: &[String],
    g: &SimpleGraph,
) -> Result<PipelineConfig, String> {
    let base = match profile {
        "scaled" => PipelineConfig::scaled(),
        "paper" => PipelineConfig::paper(g.vertex_count(), g.edge_count()),
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read profile {path}: {e}"))?;
            PipelineConfig::from_toml_str(&text).map_err(|e| e.to_string())?
        }
    };
    apply_overrides(base, overrides)
}

/// Flag-level overrides win over the config file, which wins over the profile.
fn apply_overrides(cfg: PipelineConfig, overrides: &[String]) -> Result<PipelineConfig, String> {
    if overrides.is_empty() {
        return Ok(cfg);
    }
    let mut table = toml::Table::try_from(&cfg).map_err(|e| e.to_string())?;
    for kv in overrides {
        let Some((key, _)) = kv.split_once('=') else {
            return Err(format!("--set expects key=value, got {kv:?}"));
        };
        if !table.contains_key(key.trim()) {
            return Err(format!("unknown configuration key {key:?}"));
        }
        let parsed: toml::Table = kv
            .parse()
            .map_err(|e| format!("--set {kv:?}: {e}"))?;
        for (k, v) in parsed {
            table.insert(k, v);
        }
    }
    let cfg: PipelineConfig = table.try_into().map_err(|e| e.to_string())?;
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn load_graph(path: &Path, mode: ModeArg) -> Result<SimpleGraph, String> {
    let (g, report) = read_graph_file(path, mode.into()).map_err(|e| e.to_string())?;
    if report.dropped_self_loops + report.dropped_duplicates > 0 {
        eprintln!(
            "warning: dropped {} self-loops and {} duplicate edges",
            report.dropped_self_loops, report.dropped_duplicates
        );
    }
    Ok(g)
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Mincut {
            file,
            profile,
            json,
            timing,
            mode,
            overrides,
        } => cmd_mincut(&file, &profile, &overrides, json, timing, mode),
        Command::Kernel {
            file,
            profile,
            stats,
            timing,
            mode,
            overrides,
        } => cmd_kernel(&file, &profile, &overrides, stats, timing, mode),
        Command::Certify {
            file,
            profile,
            json,
            mode,
            overrides,
        } => cmd_certify(&file, &profile, &overrides, json, mode),
        Command::Pagerank {
            file,
            source,
            set,
            alpha,
            eps,
            sweep,
            mode,
        } => cmd_pagerank(&file, source, set, alpha, eps, sweep, mode),
        Command::Bench {
            family,
            k,
            t,
            n,
            p,
            count,
            seed,
            profile,
            json,
            timing,
            verify,
            overrides,
        } => cmd_bench(BenchArgs {
            family,
            k,
            t,
            n,
            p,
            count,
            seed,
            profile,
            json,
            timing,
            verify,
            overrides,
        }),
        Command::Verify {
            dir,
            profile,
            overrides,
        } => cmd_verify(&dir, &profile, &overrides),
    }
}

fn cmd_mincut(
    file: &Path,
    profile: &str,
    overrides: &[String],
    json: bool,
    timing: bool,
    mode: ModeArg,
) -> i32 {
    let g = match load_graph(file, mode) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    let cfg = match load_config(profile, overrides, &g) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let started = std::time::Instant::now();
    let res = match minimum_cut(&g, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if verbose() {
        if let Some(k) = &res.kernel {
            eprintln!(
                "kernel: {} vertices, {} edges, {} rounds, fallback={}",
                k.kernel.vertex_count(),
                k.kernel.edge_count(),
                k.rounds.len(),
                k.fallback
            );
        }
    }
    // every emitted cut re-validates before printing
    if res.lambda > 0 && !g.disconnects(&res.cut.boundary) {
        eprintln!("internal error: witness does not disconnect the graph");
        return EXIT_MISMATCH;
    }
    let elapsed = started.elapsed().as_millis() as u64;
    let side_labels: Vec<u64> = res.cut.side.iter().map(|&v| g.label(v)).collect();
    if json {
        let payload = serde_json::json!({
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "min_degree": g.min_degree(),
            "lambda": res.lambda,
            "kind": res.kind,
            "provenance": res.provenance,
            "side": side_labels,
            "boundary_edges": res.cut.boundary,
            "conductance": res.cut.conductance,
            "kernel_rounds": res.kernel.as_ref().map(|k| k.rounds.len()),
            "kernel_vertices": res.kernel.as_ref().map(|k| k.kernel.vertex_count()),
            "kernel_edges": res.kernel.as_ref().map(|k| k.kernel.edge_count()),
            "fallback": res.kernel.as_ref().map(|k| k.fallback),
        });
        let mut report = RunReport::new(format!("mincut {}", file.display()), &cfg, payload);
        if timing {
            report = report.with_timing(elapsed);
        }
        println!("{}", report.to_json());
    } else {
        println!(
            "lambda={} kind={} provenance={} boundary={:?} side={:?}",
            res.lambda,
            match res.kind {
                edgecut::mincut::CutKind::Trivial => "trivial",
                edgecut::mincut::CutKind::NonTrivial => "non-trivial",
            },
            match res.provenance {
                edgecut::mincut::Provenance::FallbackExact => "fallback-exact",
                edgecut::mincut::Provenance::KernelExact => "kernel+exact",
                edgecut::mincut::Provenance::CertifiedTrivial => "certified-trivial",
            },
            res.cut.boundary,
            side_labels,
        );
        if timing {
            println!("elapsed_ms={elapsed}");
        }
    }
    EXIT_OK
}

fn cmd_kernel(
    file: &Path,
    profile: &str,
    overrides: &[String],
    stats: bool,
    timing: bool,
    mode: ModeArg,
) -> i32 {
    let g = match load_graph(file, mode) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    let cfg = match load_config(profile, overrides, &g) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let started = std::time::Instant::now();
    let out = match build_kernel(&g, &cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let elapsed = started.elapsed().as_millis() as u64;
    if verbose() {
        for r in &out.rounds {
            eprintln!(
                "round {}: edges {} -> {}, {} clusters, {} cores",
                r.round, r.edges_before, r.edges_after, r.clusters, r.cores_contracted
            );
        }
    }
    let payload = serde_json::json!({
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "min_degree": g.min_degree(),
        "fallback": out.fallback,
        "kernel_vertices": out.kernel.vertex_count(),
        "kernel_edges": out.kernel.edge_count(),
        "super_vertices": out.super_vertices(),
        "rounds": if stats { serde_json::to_value(&out.rounds).unwrap() } else { serde_json::json!(out.rounds.len()) },
    });
    let mut report = RunReport::new(format!("kernel {}", file.display()), &cfg, payload);
    if timing {
        report = report.with_timing(elapsed);
    }
    println!("{}", report.to_json());
    EXIT_OK
}

fn cmd_certify(file: &Path, profile: &str, overrides: &[String], json: bool, mode: ModeArg) -> i32 {
    let g = match load_graph(file, mode) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    let cfg = match load_config(profile, overrides, &g) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    match certify_or_cut(&g, &cfg) {
        Ok(CertifyOutcome::Certified) => {
            if json {
                let payload = serde_json::json!({"verdict": "certified"});
                println!(
                    "{}",
                    RunReport::new(format!("certify {}", file.display()), &cfg, payload).to_json()
                );
            } else {
                println!("certified: no non-trivial min-cut exists");
            }
            EXIT_OK
        }
        Ok(CertifyOutcome::Cut(cut)) => {
            let side_labels: Vec<u64> = cut.side.iter().map(|&v| g.label(v)).collect();
            if json {
                let payload = serde_json::json!({
                    "verdict": "cut",
                    "conductance": cut.conductance,
                    "boundary_edges": cut.boundary,
                    "side": side_labels,
                });
                println!(
                    "{}",
                    RunReport::new(format!("certify {}", file.display()), &cfg, payload).to_json()
                );
            } else {
                println!(
                    "cut: conductance={:.6} boundary={:?} side={side_labels:?}",
                    cut.conductance, cut.boundary
                );
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn cmd_pagerank(
    file: &Path,
    source: Option<u64>,
    set: Option<PathBuf>,
    alpha: f64,
    eps: f64,
    do_sweep: bool,
    mode: ModeArg,
) -> i32 {
    let g = match load_graph(file, mode) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    let params = match TeleportParams::new_lenient(alpha, eps) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let label_of =
        |want: u64| -> Option<u32> { (0..g.vertex_count() as u32).find(|&v| g.label(v) == want) };
    let p0 = match (source, set) {
        (Some(label), None) => match label_of(label) {
            Some(v) => InitialDistribution::point(v),
            None => {
                eprintln!("error: vertex {label} not in graph");
                return EXIT_USAGE;
            }
        },
        (None, Some(path)) => {
            let text = match std::fs::read_to_string(&path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_PARSE;
                }
            };
            let mut verts = Vec::new();
            for tok in text.split_whitespace() {
                let label: u64 = match tok.parse() {
                    Ok(l) => l,
                    Err(_) => {
                        eprintln!("error: bad vertex label {tok:?} in set file");
                        return EXIT_PARSE;
                    }
                };
                match label_of(label) {
                    Some(v) => verts.push(v),
                    None => {
                        eprintln!("error: vertex {label} not in graph");
                        return EXIT_USAGE;
                    }
                }
            }
            match InitialDistribution::uniform_mass(&g, &verts) {
                Ok(d) => d,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            }
        }
        _ => {
            eprintln!("error: exactly one of --source or --set is required");
            return EXIT_USAGE;
        }
    };
    let state = approximate_pagerank(&g, &p0, params);
    for v in 0..g.vertex_count() as u32 {
        let line = serde_json::json!({
            "vertex": g.label(v),
            "settled": state.settled(v),
            "residual": state.residual(v),
        });
        println!("{line}");
    }
    println!(
        "{}",
        serde_json::json!({
            "total_settled": state.settled_total(),
            "total_residual": state.residual_total(),
            "pushes": state.push_count_total(),
            "work": state.work(),
        })
    );
    if do_sweep {
        match sweep_high(&g, &state, DensityRange::full()) {
            Some(res) => {
                let side_labels: Vec<u64> = res.cut.side.iter().map(|&v| g.label(v)).collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "sweep": {
                            "threshold": res.threshold,
                            "side": side_labels,
                            "boundary_edges": res.cut.boundary,
                            "conductance": res.cut.conductance,
                        }
                    })
                );
            }
            None => println!("{}", serde_json::json!({"sweep": null})),
        }
    }
    EXIT_OK
}

struct BenchArgs {
    family: FamilyArg,
    overrides: Vec<String>,
    k: Option<usize>,
    t: Option<usize>,
    n: Option<usize>,
    p: Option<f64>,
    count: usize,
    seed: u64,
    profile: String,
    json: bool,
    timing: bool,
    verify: bool,
}

#[derive(serde::Serialize)]
struct BenchRow {
    family: String,
    seed: u64,
    n: usize,
    m: usize,
    min_degree: u32,
    lambda: u64,
    kernel_vertices: usize,
    kernel_edges: u64,
    rounds: usize,
    cut_edges: u64,
    passive_cut_edges: u64,
    trimmed_edges: u64,
    shaved_edges: u64,
    scrapped_edges: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

fn cmd_bench(args: BenchArgs) -> i32 {
    let mut rows = Vec::new();
    for i in 0..args.count {
        let seed = args.seed + i as u64;
        let (name, g) = match args.family {
            FamilyArg::Barbell => {
                let k = args.k.unwrap_or(20);
                let t = args.t.unwrap_or(1);
                if t > k {
                    eprintln!("error: need t <= k");
                    return EXIT_USAGE;
                }
                (
                    format!("barbell-k{k}-t{t}"),
                    edgecut::families::barbell(k, t).0,
                )
            }
            FamilyArg::RandomGnp => {
                let n = args.n.unwrap_or(12);
                let p = args.p.unwrap_or(0.5);
                match edgecut::families::gnp(n, p, seed) {
                    Ok(g) => (format!("gnp-n{n}-p{p}"), g),
                    Err(_) => continue,
                }
            }
            FamilyArg::PlantedCut => {
                let n = args.n.unwrap_or(10);
                let p = args.p.unwrap_or(0.7);
                let t = args.t.unwrap_or(2);
                (
                    format!("planted-n{n}-p{p}-t{t}"),
                    edgecut::families::planted_cut(n, n, p, t, seed),
                )
            }
        };
        let cfg = match load_config(&args.profile, &args.overrides, &g) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        };
        let started = std::time::Instant::now();
        let res = match minimum_cut(&g, &cfg) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        };
        let elapsed = started.elapsed().as_millis() as u64;
        if args.verify && g.vertex_count() <= 20 {
            let brute = brute_force_mincut(&g).expect("small graph");
            if brute.lambda != res.lambda {
                eprintln!(
                    "MISMATCH {name} seed={seed}: lambda={} brute={}",
                    res.lambda, brute.lambda
                );
                return EXIT_MISMATCH;
            }
        }
        let ledger = res
            .kernel
            .as_ref()
            .map(|k| {
                k.rounds
                    .iter()
                    .fold(edgecut::pipeline::ChargeLedger::default(), |acc, r| {
                        edgecut::pipeline::ChargeLedger {
                            cut_edges: acc.cut_edges + r.ledger.cut_edges,
                            passive_cut_edges: acc.passive_cut_edges + r.ledger.passive_cut_edges,
                            trimmed_edges: acc.trimmed_edges + r.ledger.trimmed_edges,
                            shaved_edges: acc.shaved_edges + r.ledger.shaved_edges,
                            scrapped_edges: acc.scrapped_edges + r.ledger.scrapped_edges,
                        }
                    })
            })
            .unwrap_or_default();
        rows.push(BenchRow {
            family: name,
            seed,
            n: g.vertex_count(),
            m: g.edge_count(),
            min_degree: g.min_degree(),
            lambda: res.lambda,
            kernel_vertices: res
                .kernel
                .as_ref()
                .map(|k| k.kernel.vertex_count())
                .unwrap_or(g.vertex_count()),
            kernel_edges: res
                .kernel
                .as_ref()
                .map(|k| k.kernel.edge_count())
                .unwrap_or(g.edge_count() as u64),
            rounds: res.kernel.as_ref().map(|k| k.rounds.len()).unwrap_or(0),
            cut_edges: ledger.cut_edges,
            passive_cut_edges: ledger.passive_cut_edges,
            trimmed_edges: ledger.trimmed_edges,
            shaved_edges: ledger.shaved_edges,
            scrapped_edges: ledger.scrapped_edges,
            elapsed_ms: if args.timing { Some(elapsed) } else { None },
        });
    }
    if args.json {
        println!("{}", serde_json::to_string_pretty(&rows).unwrap());
    } else {
        println!(
            "family,seed,n,m,min_degree,lambda,kernel_vertices,kernel_edges,rounds,cut,passive,trimmed,shaved,scrapped{}",
            if args.timing { ",ms" } else { "" }
        );
        for r in &rows {
            print!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                r.family,
                r.seed,
                r.n,
                r.m,
                r.min_degree,
                r.lambda,
                r.kernel_vertices,
                r.kernel_edges,
                r.rounds,
                r.cut_edges,
                r.passive_cut_edges,
                r.trimmed_edges,
                r.shaved_edges,
                r.scrapped_edges
            );
            match r.elapsed_ms {
                Some(ms) => println!(",{ms}"),
                None => println!(),
            }
        }
    }
    EXIT_OK
}

fn cmd_verify(dir: &Path, profile: &str, overrides: &[String]) -> i32 {
    let mut entries: Vec<PathBuf> = match std::fs::read_dir(dir) {
        Ok(rd) => rd
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.is_file())
            .collect(),
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    entries.sort();
    let mut checked = 0;
    for path in entries {
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error reading {}: {e}", path.display());
                return EXIT_PARSE;
            }
        };
        let g = match parse_graph(&text, sniff_format(&text), ParseMode::Dedupe) {
            Ok((g, _)) => g,
            Err(e) => {
                eprintln!("parse error in {}: {e}", path.display());
                return EXIT_PARSE;
            }
        };
        let cfg = match load_config(profile, overrides, &g) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        };
        let res = match minimum_cut(&g, &cfg) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error on {}: {e}", path.display());
                return EXIT_USAGE;
            }
        };
        // exact finisher directly on the input
        let mg = edgecut::graph::MultiGraph::from_simple(&g);
        let sw = if g.is_connected() {
            match exact_mincut_multigraph(&mg, None) {
                Ok(ExactCut::Found { lambda, .. }) => lambda,
                _ => unreachable!("no cap"),
            }
        } else {
            0
        };
        let brute = if g.vertex_count() <= 20 {
            Some(brute_force_mincut(&g).expect("small graph").lambda)
        } else {
            None
        };
        let witness_ok = res.lambda == 0 || g.disconnects(&res.cut.boundary);
        let agree =
            witness_ok && sw == res.lambda && brute.map(|b| b == res.lambda).unwrap_or(true);
        println!(
            "{} lambda={} stoer_wagner={} brute={} witness={} {}",
            path.display(),
            res.lambda,
            sw,
            brute.map(|b| b.to_string()).unwrap_or_else(|| "-".into()),
            if witness_ok { "ok" } else { "INVALID" },
            if agree { "OK" } else { "MISMATCH" }
        );
        if !agree {
            return EXIT_MISMATCH;
        }
        checked += 1;
    }
    if checked == 0 {
        eprintln!("error: no graph files in {}", dir.display());
        return EXIT_USAGE;
    }
    println!("verified {checked} graphs");
    EXIT_OK
}
