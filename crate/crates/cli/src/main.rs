//! `esir` — edge irregularity strength tooling for cycle-star graphs
//! and small arbitrary graphs.
//!
//! Exit codes: 0 success (including "labeling is not irregular" and
//! "conjecture mismatch found"), 1 usage error, 2 I/O or file format
//! error, 3 search budget exhausted before an answer was proved.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use edge_irregularity::{
    brute_force_es_with_cap, construct_labeling, edge_weights, exact_es_with, graph_to_dot,
    is_edge_irregular, lower_bound, parse_graph, parse_labeling, rows_to_csv, rows_to_json,
    serialize_graph, serialize_labeling, sweep, CycleStarSpec, EsOutcome, EsResult, Graph,
    HarnessError, SearchBudget, SolverOptions, SweepConfig, BRUTE_FORCE_CAP,
};
use serde_json::json;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(name = "esir", version, about = "Edge irregularity strength of graphs")]
struct Cli {
    /// Emit a single JSON document on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a cycle-star graph in the graph file format.
    Gen(GenArgs),
    /// Emit the optimal labeling of a cycle-star (cycle length 3..=7).
    Label(LabelArgs),
    /// Check a labeling file against a graph file.
    Verify(VerifyArgs),
    /// Compute es exactly by backtracking search.
    Es(EsArgs),
    /// Compute es by brute-force enumeration (small graphs only).
    Oracle(OracleArgs),
    /// Sweep a cycle-star grid and report conjecture agreement.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Cycle length (at least 3).
    #[arg(long)]
    k: usize,
    /// Number of pendant leaves on the hub.
    #[arg(long)]
    leaves: usize,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit Graphviz DOT instead of the graph file format.
    #[arg(long)]
    dot: bool,
}

#[derive(Args)]
struct LabelArgs {
    /// Cycle length (3..=7).
    #[arg(long)]
    k: usize,
    /// Number of pendant leaves on the hub (at least 1).
    #[arg(long)]
    leaves: usize,
    /// Also write the labeling file here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    labeling: PathBuf,
}

#[derive(Args)]
struct EsArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    timeout: Option<u64>,
    /// Budget on label assignments tried.
    #[arg(long)]
    nodes: Option<u64>,
    /// Report unknown instead of searching spans above this.
    #[arg(long)]
    max_k: Option<u64>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Vertex-count cap (default 9): enumeration is exponential.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct SweepArgs {
    /// Cycle lengths, `A..B` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range)]
    k: RangeInclusive<usize>,
    /// Leaf counts, `A..B` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range)]
    leaves: RangeInclusive<usize>,
    /// JSON Lines cache; finished rows are appended and reruns resume.
    #[arg(long)]
    cache: PathBuf,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Per-instance wall-clock budget in seconds.
    #[arg(long)]
    timeout: Option<u64>,
    /// Per-instance budget on label assignments.
    #[arg(long)]
    nodes: Option<u64>,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{s}`: expected `A..B` (inclusive) or a single integer"))
    };
    Ok(parse(a)?..=parse(b)?)
}

/// Exit code 1 for bad requests, 2 for I/O and file format problems.
enum CliError {
    Usage(String),
    Data(String),
}

impl CliError {
    fn usage(flag: &str, err: impl std::fmt::Display) -> CliError {
        CliError::Usage(format!("{flag}: {err}"))
    }

    fn data(path: &Path, err: impl std::fmt::Display) -> CliError {
        CliError::Data(format!("{}: {err}", path.display()))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Gen(args) => cmd_gen(cli.json, args),
        Command::Label(args) => cmd_label(cli.json, args),
        Command::Verify(args) => cmd_verify(cli.json, args),
        Command::Es(args) => cmd_es(cli.json, args),
        Command::Oracle(args) => cmd_oracle(cli.json, args),
        Command::Sweep(args) => cmd_sweep(cli.json, args),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::data(path, e))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::data(path, e))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read_file(path)?).map_err(|e| CliError::data(path, e))
}

fn budget(timeout: Option<u64>, nodes: Option<u64>) -> SearchBudget {
    SearchBudget {
        max_nodes: nodes,
        max_time: timeout.map(Duration::from_secs),
    }
}

fn print_json(doc: &serde_json::Value) {
    println!("{:#}", doc);
}

fn joined(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_gen(json: bool, args: GenArgs) -> Result<ExitCode, CliError> {
    let spec = CycleStarSpec::new(args.k, args.leaves)
        .map_err(|e| CliError::usage(&format!("--k {}", args.k), e))?;
    let graph = spec.build();
    let text = if args.dot {
        graph_to_dot(&graph)
    } else {
        serialize_graph(&graph)
    };
    if let Some(ref path) = args.out {
        write_file(path, &text)?;
    }
    if json {
        let edges: Vec<[usize; 2]> = graph.edges().iter().map(|&(u, v)| [u, v]).collect();
        print_json(&json!({
            "k": args.k,
            "leaves": args.leaves,
            "n": graph.num_vertices(),
            "m": graph.num_edges(),
            "edges": edges,
            "out": args.out.as_ref().map(|p| p.display().to_string()),
        }));
    } else if let Some(ref path) = args.out {
        println!(
            "wrote cycle-star k={} leaves={} (n={}, m={}) to {}",
            args.k,
            args.leaves,
            graph.num_vertices(),
            graph.num_edges(),
            path.display()
        );
    } else {
        print!("{text}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_label(json: bool, args: LabelArgs) -> Result<ExitCode, CliError> {
    let spec = CycleStarSpec::new(args.k, args.leaves)
        .map_err(|e| CliError::usage(&format!("--k {}", args.k), e))?;
    let built = construct_labeling(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
    let graph = spec.build();
    let profile = edge_weights(&graph, &built.labeling).expect("construction fits its graph");
    let verdict = is_edge_irregular(&graph, &built.labeling).expect("construction fits its graph");
    if let Some(ref path) = args.out {
        write_file(path, &serialize_labeling(&built.labeling))?;
    }
    if json {
        print_json(&json!({
            "k": args.k,
            "leaves": args.leaves,
            "n": graph.num_vertices(),
            "m": graph.num_edges(),
            "case": built.case_tag.to_string(),
            "es": built.claimed_es,
            "labeling": built.labeling.labels(),
            "weights": profile.weights(),
            "irregular": verdict.irregular,
            "repairs": built.repairs,
            "out": args.out.as_ref().map(|p| p.display().to_string()),
        }));
    } else {
        println!(
            "cycle-star: k={}, leaves={} (n={}, m={})",
            args.k,
            args.leaves,
            graph.num_vertices(),
            graph.num_edges()
        );
        println!("case: {}", built.case_tag);
        println!("es: {}", built.claimed_es);
        println!("labeling: {}", joined(built.labeling.labels()));
        println!("weights: {}", joined(profile.weights()));
        println!("irregular: {}", verdict.irregular);
        if built.repairs.is_empty() {
            println!("repairs: none");
        } else {
            for note in &built.repairs {
                println!("repair: {note}");
            }
        }
        if let Some(ref path) = args.out {
            println!("wrote labeling to {}", path.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(json: bool, args: VerifyArgs) -> Result<ExitCode, CliError> {
    let graph = load_graph(&args.graph)?;
    let labeling = parse_labeling(&read_file(&args.labeling)?, graph.num_vertices())
        .map_err(|e| CliError::data(&args.labeling, e))?;
    let profile = edge_weights(&graph, &labeling).expect("length checked at parse");
    let verdict = is_edge_irregular(&graph, &labeling).expect("length checked at parse");
    if json {
        print_json(&json!({
            "n": graph.num_vertices(),
            "m": graph.num_edges(),
            "span": labeling.span(),
            "weights": profile.weights(),
            "irregular": verdict.irregular,
            "first_collision": verdict.first_collision.map(|(i, j)| [i, j]),
        }));
    } else {
        println!(
            "graph: {} (n={}, m={})",
            args.graph.display(),
            graph.num_vertices(),
            graph.num_edges()
        );
        println!(
            "labeling: {} (span {})",
            args.labeling.display(),
            labeling.span()
        );
        println!("weights: {}", joined(profile.weights()));
        println!("irregular: {}", verdict.irregular);
        if let Some((i, j)) = verdict.first_collision {
            let (a, b) = (graph.edges()[i], graph.edges()[j]);
            println!(
                "collision: edge {i} ({},{}) and edge {j} ({},{}) both weigh {}",
                a.0,
                a.1,
                b.0,
                b.1,
                profile.weights()[i]
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_es_result(json: bool, lb: u64, r: &EsResult) {
    if json {
        print_json(&json!({
            "es": r.es_value,
            "lower_bound": lb,
            "witness": r.witness.labels(),
            "method": r.method.to_string(),
            "nodes": r.nodes_explored,
            "elapsed_ms": r.elapsed.as_millis() as u64,
        }));
    } else {
        println!("es: {}", r.es_value);
        println!("lower bound: {lb}");
        println!("witness: {}", joined(r.witness.labels()));
        println!("method: {}", r.method);
        println!("nodes: {}", r.nodes_explored);
        println!("elapsed_ms: {}", r.elapsed.as_millis());
    }
}

fn cmd_es(json: bool, args: EsArgs) -> Result<ExitCode, CliError> {
    let graph = load_graph(&args.graph)?;
    let lb = lower_bound(&graph).map_err(|e| CliError::data(&args.graph, e))?;
    let opts = SolverOptions {
        budget: budget(args.timeout, args.nodes),
        max_span: args.max_k,
        ..SolverOptions::default()
    };
    match exact_es_with(&graph, &opts).map_err(|e| CliError::data(&args.graph, e))? {
        EsOutcome::Exact(r) => {
            print_es_result(json, lb, &r);
            Ok(ExitCode::SUCCESS)
        }
        EsOutcome::Unknown {
            lower_bound: proved,
            upper_bound,
            nodes_explored,
            elapsed,
        } => {
            if json {
                print_json(&json!({
                    "es": null,
                    "lower_bound": proved,
                    "upper_bound": upper_bound,
                    "nodes": nodes_explored,
                    "elapsed_ms": elapsed.as_millis() as u64,
                }));
            } else {
                println!("es: unknown (budget exhausted)");
                println!("proven lower bound: {proved}");
                println!("nodes: {nodes_explored}");
                println!("elapsed_ms: {}", elapsed.as_millis());
            }
            Ok(ExitCode::from(3))
        }
    }
}

fn cmd_oracle(json: bool, args: OracleArgs) -> Result<ExitCode, CliError> {
    let graph = load_graph(&args.graph)?;
    let lb = lower_bound(&graph).map_err(|e| CliError::data(&args.graph, e))?;
    let cap = args.cap.unwrap_or(BRUTE_FORCE_CAP);
    let r = brute_force_es_with_cap(&graph, cap).map_err(|e| CliError::data(&args.graph, e))?;
    print_es_result(json, lb, &r);
    Ok(ExitCode::SUCCESS)
}

fn cmd_sweep(json: bool, args: SweepArgs) -> Result<ExitCode, CliError> {
    let config = SweepConfig {
        cycle_lens: args.k.clone(),
        leaf_counts: args.leaves.clone(),
        budget: budget(args.timeout, args.nodes),
        jobs: args.jobs,
    };
    let outcome = sweep(&config, &args.cache).map_err(|e| match e {
        HarnessError::InvalidRange(_) | HarnessError::ConjectureRange(_) => {
            CliError::Usage(e.to_string())
        }
        other => CliError::Data(other.to_string()),
    })?;
    for warning in &outcome.warnings {
        eprintln!("warning: {warning}");
    }
    for row in &outcome.rows {
        if row.agrees == Some(false) {
            eprintln!(
                "conjecture mismatch at k={}, l={}: formula {}, exact {}",
                row.k,
                row.l,
                row.es_formula,
                row.es_exact.expect("mismatch rows have an exact value")
            );
        }
    }
    eprintln!(
        "swept {} instances ({} from cache, {} computed)",
        outcome.rows.len(),
        outcome.from_cache,
        outcome.freshly_computed
    );
    if json {
        print!("{}", rows_to_json(&outcome.rows));
    } else {
        print!("{}", rows_to_csv(&outcome.rows));
    }
    let unsettled = outcome.rows.iter().any(|r| r.es_exact.is_none());
    Ok(if unsettled {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}
