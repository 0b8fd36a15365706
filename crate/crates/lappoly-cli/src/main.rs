//! `lappoly`: compute matching/Laplacian-matching/characteristic
//! polynomials of graphs, verify the identities and bounds relating them,
//! and sweep whole graph families.
//!
//! Exit codes: 0 = all checks passed, 1 = input error, 2 = a verification
//! check failed.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use lappoly::format::{emit_graph6, parse_graph6};
use lappoly::generate;
use lappoly::graph::Graph;
use lappoly::matching;
use lappoly::poly::{IntPoly, RatPoly};
use lappoly::report::{CheckResult, InputDescriptor, RunReport};
use lappoly::roots::{real_roots, RootList, DEFAULT_ROOT_TOL};
use lappoly::spectra;
use lappoly::suite::{self, DEFAULT_CHECK_TOL};
use lappoly::weighted::{parse_weighted_edge_list, weighted_beta, WeightedGraph};

#[derive(Parser)]
#[command(name = "lappoly", version, about = "Exact matching and Laplacian matching polynomials, with verifiers for the identities and bounds that relate them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one polynomial (optionally with certified real roots)
    Compute(ComputeArgs),
    /// Verify identities and bounds on one graph
    Verify(VerifyArgs),
    /// Run checks over every graph in a scope, streaming one report per
    /// graph
    Batch(BatchArgs),
}

#[derive(Args)]
struct InputArgs {
    /// graph6 string
    #[arg(long, value_name = "STRING")]
    g6: Option<String>,
    /// Edge-list file: first line n, then "u v" lines ("u v p/q" for
    /// weighted input)
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
    /// Labeled family, e.g. cycle:5, path:3, star:4, complete:6,
    /// complete_bipartite:2,3
    #[arg(long, value_name = "NAME:PARAMS")]
    family: Option<String>,
    /// Seeded random graph: n=8,p=0.5,seed=42
    #[arg(long, value_name = "SPEC")]
    random: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    /// Matching polynomial
    Alpha,
    /// Laplacian matching polynomial
    Beta,
    /// Principal Laplacian matching polynomial on --subset
    BetaPrincipal,
    /// Characteristic polynomial of the adjacency matrix
    PhiA,
    /// Characteristic polynomial of the Laplacian
    PhiL,
    /// Characteristic polynomial of the signless Laplacian
    PhiQ,
    /// Edge-weighted Laplacian matching polynomial
    BetaWeighted,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Which polynomial to compute
    #[arg(long, value_enum)]
    poly: PolyKind,
    /// Vertex subset for beta-principal, e.g. "0,2,3" (defaults to all
    /// vertices)
    #[arg(long, value_name = "LIST")]
    subset: Option<String>,
    /// Also extract certified real roots
    #[arg(long)]
    roots: bool,
    /// Root isolation width
    #[arg(long, default_value_t = DEFAULT_ROOT_TOL)]
    root_tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Comma-separated checks: subdivision, coefficients, tu, fibers,
    /// q-duality, a-duality, forest, interlacing, majorization, grone,
    /// bounds, zero-sum, or all
    #[arg(long, default_value = "all")]
    identity: String,
    /// Numeric tolerance for root comparisons (overrides LAPPOLY_TOL)
    #[arg(long)]
    tol: Option<f64>,
    /// Include wall-clock timings in the report
    #[arg(long)]
    timings: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct BatchArgs {
    /// Every edge subset of K_n (n at most 7)
    #[arg(long, value_name = "N", conflicts_with = "random")]
    all_n: Option<usize>,
    /// Random scope: n=9,p=0.4,count=100,seed=7
    #[arg(long, value_name = "SPEC")]
    random: Option<String>,
    /// Comma-separated checks (same names as verify)
    #[arg(long, default_value = "all")]
    checks: String,
    /// Numeric tolerance for root comparisons (overrides LAPPOLY_TOL)
    #[arg(long)]
    tol: Option<f64>,
    /// jsonl streams one report per graph; csv emits summary rows
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

enum CliError {
    Input(String),
    ChecksFailed,
}

impl From<lappoly::Error> for CliError {
    fn from(e: lappoly::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            emit_error("usage", &e.to_string());
            return ExitCode::from(1);
        }
    };
    let result = match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Batch(args) => cmd_batch(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            emit_error("input", &msg);
            ExitCode::from(1)
        }
        Err(CliError::ChecksFailed) => ExitCode::from(2),
    }
}

fn emit_error(kind: &str, message: &str) {
    let obj = serde_json::json!({"error": {"kind": kind, "message": message}});
    eprintln!("{obj}");
}

fn tolerance(flag: Option<f64>) -> Result<f64, CliError> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var("LAPPOLY_TOL") {
        Ok(s) => s
            .parse()
            .map_err(|_| CliError::Input(format!("bad LAPPOLY_TOL value {s:?}"))),
        Err(_) => Ok(DEFAULT_CHECK_TOL),
    }
}

fn parse_kv_spec(spec: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut map = BTreeMap::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| CliError::Input(format!("expected key=value, found {part:?}")))?;
        map.insert(k.trim().to_owned(), v.trim().to_owned());
    }
    Ok(map)
}

fn kv<T: std::str::FromStr>(map: &BTreeMap<String, String>, key: &str) -> Result<T, CliError> {
    let raw = map
        .get(key)
        .ok_or_else(|| CliError::Input(format!("missing {key}= in spec")))?;
    raw.parse()
        .map_err(|_| CliError::Input(format!("bad value for {key}: {raw:?}")))
}

/// Resolve the one-graph input flags. Weighted inputs keep their weights;
/// everything else gets unit weights.
fn load_input(input: &InputArgs) -> Result<(WeightedGraph, InputDescriptor), CliError> {
    let sources = [
        input.g6.is_some(),
        input.edges.is_some(),
        input.family.is_some(),
        input.random.is_some(),
    ];
    if sources.iter().filter(|&&s| s).count() != 1 {
        return Err(CliError::Input(
            "give exactly one of --g6, --edges, --family, --random".into(),
        ));
    }
    let (wg, kind, spec) = if let Some(g6) = &input.g6 {
        (WeightedGraph::unit(parse_graph6(g6)?), "g6", g6.clone())
    } else if let Some(path) = &input.edges {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        (
            parse_weighted_edge_list(&text)?,
            "edges",
            path.display().to_string(),
        )
    } else if let Some(family) = &input.family {
        (
            WeightedGraph::unit(generate::family_from_spec(family)?),
            "family",
            family.clone(),
        )
    } else {
        let spec = input.random.as_ref().unwrap();
        let map = parse_kv_spec(spec)?;
        let n: usize = kv(&map, "n")?;
        let p: f64 = kv(&map, "p")?;
        let seed: u64 = kv(&map, "seed")?;
        (
            WeightedGraph::unit(generate::random_graph(n, p, seed)?),
            "random",
            spec.clone(),
        )
    };
    let descriptor = describe(wg.graph(), kind, &spec);
    Ok((wg, descriptor))
}

fn describe(g: &Graph, kind: &str, spec: &str) -> InputDescriptor {
    InputDescriptor {
        kind: kind.to_owned(),
        spec: spec.to_owned(),
        n: g.n(),
        m: g.m(),
        graph6: emit_graph6(g).unwrap_or_default(),
    }
}

// ---------------------------------------------------------------------------
// compute

#[derive(Serialize)]
struct ComputeReport {
    version: String,
    input: InputDescriptor,
    poly: PolyReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    roots: Option<RootsReport>,
}

#[derive(Serialize)]
struct PolyReport {
    kind: String,
    /// Exact coefficient strings, leading term first.
    coefficients: Vec<String>,
    display: String,
}

#[derive(Serialize)]
struct RootsReport {
    values: Vec<f64>,
    multiplicities: Vec<usize>,
    error_bound: f64,
}

fn cmd_compute(args: ComputeArgs) -> Result<(), CliError> {
    let (wg, descriptor) = load_input(&args.input)?;
    let g = wg.graph();

    enum Computed {
        Int(IntPoly),
        Rat(RatPoly),
    }
    let (kind_name, value) = match args.poly {
        PolyKind::Alpha => ("alpha", Computed::Int(matching::matching_polynomial(g))),
        PolyKind::Beta => (
            "beta",
            Computed::Int(matching::laplacian_matching_polynomial(g)),
        ),
        PolyKind::BetaPrincipal => {
            let subset = match &args.subset {
                Some(list) => parse_subset(list)?,
                None => (0..g.n()).collect(),
            };
            (
                "beta-principal",
                Computed::Int(matching::principal_beta(g, &subset)?),
            )
        }
        PolyKind::PhiA => (
            "phi-a",
            Computed::Int(spectra::char_poly(&spectra::adjacency(g))),
        ),
        PolyKind::PhiL => (
            "phi-l",
            Computed::Int(spectra::char_poly(&spectra::laplacian(g))),
        ),
        PolyKind::PhiQ => (
            "phi-q",
            Computed::Int(spectra::char_poly(&spectra::signless_laplacian(g))),
        ),
        PolyKind::BetaWeighted => ("beta-weighted", Computed::Rat(weighted_beta(&wg))),
    };

    let (coefficients, display, int_form) = match &value {
        Computed::Int(p) => (p.decimal_coefficients_desc(), p.to_string(), p.clone()),
        Computed::Rat(p) => {
            let (cleared, _) = p.clear_denominators();
            (
                p.decimal_coefficients_desc(),
                format!("({})", p.decimal_coefficients_desc().join(", ")),
                cleared,
            )
        }
    };

    let roots = if args.roots {
        if int_form.is_zero() {
            return Err(CliError::Input("cannot extract roots of the zero polynomial".into()));
        }
        let roots = real_roots(&int_form, args.root_tol)?;
        Some(roots)
    } else {
        None
    };

    match args.format {
        Format::Json => {
            let report = ComputeReport {
                version: env!("CARGO_PKG_VERSION").to_owned(),
                input: descriptor,
                poly: PolyReport {
                    kind: kind_name.to_owned(),
                    coefficients,
                    display,
                },
                roots: roots.as_ref().map(|r| RootsReport {
                    values: r.roots.iter().map(|x| x.value).collect(),
                    multiplicities: r.roots.iter().map(|x| x.multiplicity).collect(),
                    error_bound: r.error_bound,
                }),
            };
            println!("{}", serde_json::to_string(&report).expect("serializable"));
        }
        _ => {
            println!("{kind_name}({}) = {display}", descriptor.spec);
            println!("coefficients (leading first): [{}]", coefficients.join(", "));
            if let Some(r) = &roots {
                print_roots_text(r);
            }
        }
    }
    Ok(())
}

fn print_roots_text(roots: &RootList) {
    let rendered: Vec<String> = roots
        .roots
        .iter()
        .map(|r| {
            if r.multiplicity == 1 {
                format!("{:.12}", r.value)
            } else {
                format!("{:.12} (x{})", r.value, r.multiplicity)
            }
        })
        .collect();
    println!(
        "roots (nonincreasing, certified to {:.1e}): [{}]",
        roots.error_bound.max(f64::MIN_POSITIVE),
        rendered.join(", ")
    );
}

fn parse_subset(list: &str) -> Result<Vec<usize>, CliError> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Input(format!("bad vertex {t:?} in subset")))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let (wg, descriptor) = load_input(&args.input)?;
    let tol = tolerance(args.tol)?;
    let kinds = suite::parse_checks(&args.identity)?;

    let mut checks = Vec::new();
    for kind in kinds {
        let start = Instant::now();
        let mut results = suite::run_check(wg.graph(), kind, tol);
        if args.timings {
            let millis = start.elapsed().as_secs_f64() * 1e3 / results.len().max(1) as f64;
            for r in &mut results {
                r.millis = Some(millis);
            }
        }
        checks.extend(results);
    }
    let report = RunReport::new(descriptor, checks);

    match args.format {
        Format::Json => println!("{}", serde_json::to_string(&report).expect("serializable")),
        _ => print_report_text(&report),
    }
    if report.pass {
        Ok(())
    } else {
        Err(CliError::ChecksFailed)
    }
}

fn print_report_text(report: &RunReport) {
    println!(
        "graph: {} (n={}, m={}, graph6 {:?})",
        report.input.spec, report.input.n, report.input.m, report.input.graph6
    );
    for c in &report.checks {
        let status = if let Some(reason) = &c.skipped {
            format!("skip ({reason})")
        } else if c.pass {
            "pass".to_owned()
        } else {
            "FAIL".to_owned()
        };
        let detail = c.detail.as_deref().unwrap_or("");
        let sep = if detail.is_empty() { "" } else { " - " };
        println!("  {:<32} {status}{sep}{detail}", c.name);
    }
    println!("overall: {}", if report.pass { "pass" } else { "FAIL" });
}

// ---------------------------------------------------------------------------
// batch

fn cmd_batch(args: BatchArgs) -> Result<(), CliError> {
    let tol = tolerance(args.tol)?;
    let kinds = suite::parse_checks(&args.checks)?;

    let items: Vec<(String, Graph)> = match (&args.all_n, &args.random) {
        (Some(n), None) => {
            if *n > 7 {
                return Err(CliError::Input(format!(
                    "--all-n supports n <= 7 (2^21 graphs), got {n}"
                )));
            }
            let pairs: Vec<(usize, usize)> = (0..*n)
                .flat_map(|u| (u + 1..*n).map(move |v| (u, v)))
                .collect();
            (0u64..1 << pairs.len())
                .map(|mask| {
                    let edges = pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e);
                    (
                        format!("all-n={n} mask={mask}"),
                        Graph::new(*n, edges).expect("subset of K_n"),
                    )
                })
                .collect()
        }
        (None, Some(spec)) => {
            let map = parse_kv_spec(spec)?;
            let n: usize = kv(&map, "n")?;
            let p: f64 = kv(&map, "p")?;
            let count: u64 = kv(&map, "count")?;
            let seed: u64 = kv(&map, "seed")?;
            (0..count)
                .map(|i| {
                    let s = seed.wrapping_add(i);
                    Ok((
                        format!("random n={n} p={p} seed={s}"),
                        generate::random_graph(n, p, s)?,
                    ))
                })
                .collect::<Result<_, CliError>>()?
        }
        _ => {
            return Err(CliError::Input(
                "give exactly one of --all-n or --random n=..,p=..,count=..,seed=..".into(),
            ))
        }
    };

    if args.format == Format::Csv {
        println!("index,graph6,n,m,pass,failed_checks");
    }

    let total = items.len();
    let mut passed = 0usize;
    let chunk_size = 2048;
    let mut index = 0usize;
    for chunk in items.chunks(chunk_size) {
        let reports: Vec<RunReport> = chunk
            .par_iter()
            .map(|(spec, g)| {
                let checks: Vec<CheckResult> = suite::run_checks(g, &kinds, tol);
                RunReport::new(describe(g, "batch", spec), checks)
            })
            .collect();
        for report in reports {
            match args.format {
                Format::Csv => {
                    let failed: Vec<&str> = report
                        .checks
                        .iter()
                        .filter(|c| !c.pass)
                        .map(|c| c.name.as_str())
                        .collect();
                    println!(
                        "{},{},{},{},{},{}",
                        index,
                        report.input.graph6,
                        report.input.n,
                        report.input.m,
                        report.pass,
                        failed.join(";")
                    );
                }
                _ => println!("{}", serde_json::to_string(&report).expect("serializable")),
            }
            if report.pass {
                passed += 1;
            }
            index += 1;
        }
    }

    let summary = serde_json::json!({"summary": {"total": total, "passed": passed, "failed": total - passed}});
    if args.format != Format::Csv {
        println!("{summary}");
    }
    eprintln!("passed {passed}/{total} graphs");
    if passed == total {
        Ok(())
    } else {
        Err(CliError::ChecksFailed)
    }
}
