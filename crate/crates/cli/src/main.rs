//! Command-line surface of the coloring toolkit.
//!
//! Exit codes: 0 success, 2 verification/bound failure (potential bug or
//! counterexample), 3 budget exhaustion, 4 input error.

mod bench;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cfkit::coloring::verify;
use cfkit::error::Error;
use cfkit::exact::{self, Budget, ExactMode, Outcome};
use cfkit::graph::Graph;
use cfkit::io::{self, GraphFormat};
use cfkit::odd;
use cfkit::pcf::{self, EngineChoice, HcfOptions};
use cfkit::structure::{self, LccOutcome};

#[derive(Parser)]
#[command(name = "cfkit", version, about = "Conflict-free, odd, and dynamic graph coloring toolkit")]
struct Cli {
    /// Graph file format when it cannot be inferred from the extension.
    #[arg(long, global = true)]
    format: Option<String>,

    /// Emit JSON instead of human-readable text where applicable.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized tie-breaking.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a family spec and write it to a file.
    Gen(GenArgs),
    /// Structural analysis: degrees, girth, chordality, lcc, star-freeness.
    Analyze(AnalyzeArgs),
    /// Proper h-conflict-free coloring via the constructive engines.
    Color(ColorArgs),
    /// Odd coloring via the clique-peeling engines.
    OddColor(OddColorArgs),
    /// Exact decision / minimization oracle.
    Exact(ExactArgs),
    /// Verify a coloring file against a graph.
    Verify(VerifyArgs),
    /// Batch experiment runner emitting CSV.
    Bench(bench::BenchArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Family spec, e.g. cycle:7, path:5, complete:6, star:4, wheel:5,
    /// latin:3, rand:10:4:50:7, ktree:2:12:7, lg-rand:8:3:60:1
    spec: String,
    /// Output file.
    #[arg(short, long)]
    output: PathBuf,
    /// For latin:<n>, also write the role-label sidecar JSON here.
    #[arg(long)]
    labels: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    file: PathBuf,
}

#[derive(Args)]
struct ColorArgs {
    file: PathBuf,
    /// Conflict-free parameter h.
    #[arg(long, default_value_t = 1)]
    h: u32,
    /// One of auto, nice, dm2, chordal, square, exact.
    #[arg(long, default_value = "auto")]
    engine: String,
    /// Write the nice-sequence trace JSON here.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Write the coloring JSON here (defaults to stdout).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OddColorArgs {
    file: PathBuf,
    /// Local clique cover bound ℓ.
    #[arg(long, default_value_t = 2)]
    ell: u32,
    /// Claw-free mode: peel via the certified clique when the dense
    /// pair is at its minimum size (forces ℓ = 2).
    #[arg(long)]
    claw: bool,
    /// Star-free mode: peel dense pairs under K_{1,ℓ+1}-freeness
    /// instead of assuming lcc ≤ ℓ.
    #[arg(long)]
    starfree: bool,
    /// Write the peel-stack trace JSON here.
    #[arg(long)]
    trace: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExactArgs {
    file: PathBuf,
    /// One of proper, odd, hcf, dynamic, square.
    #[arg(long)]
    mode: String,
    #[arg(long, default_value_t = 1)]
    h: u32,
    /// Decide existence with exactly k colors.
    #[arg(long, conflicts_with = "minimize")]
    k: Option<u32>,
    /// Minimize the number of colors.
    #[arg(long)]
    minimize: bool,
    #[arg(long, default_value_t = 100_000_000)]
    budget_nodes: u64,
    #[arg(long, default_value_t = 60)]
    budget_secs: u64,
}

#[derive(Args)]
struct VerifyArgs {
    file: PathBuf,
    /// Coloring file (JSON or whitespace list).
    #[arg(long)]
    coloring: PathBuf,
    #[arg(long, default_value_t = 1)]
    h: u32,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Input(_) | Error::Parse(_) | Error::Io(_) => 4,
        Error::Budget(_) => 3,
        Error::Structure(_) | Error::Contract(_) | Error::EngineFailure(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    };
    ExitCode::from(code)
}

fn load_graph(path: &PathBuf, format: &Option<String>) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path)?;
    let fmt = match format {
        Some(name) => GraphFormat::parse_name(name)?,
        None => GraphFormat::from_path(&path.to_string_lossy()),
    };
    io::parse_graph(&text, fmt)
}

fn write_graph_file(g: &Graph, path: &PathBuf, format: &Option<String>) -> Result<(), Error> {
    let fmt = match format {
        Some(name) => GraphFormat::parse_name(name)?,
        None => GraphFormat::from_path(&path.to_string_lossy()),
    };
    std::fs::write(path, io::write_graph(g, fmt))?;
    Ok(())
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Gen(args) => {
            let item = bench::build_corpus_item(&args.spec, cli.seed)?;
            write_graph_file(&item.graph, &args.output, &cli.format)?;
            if let Some(labels_path) = &args.labels {
                let latin = item.latin.as_ref().ok_or_else(|| {
                    Error::Input("--labels is only meaningful for latin:<n>".into())
                })?;
                let sidecar = serde_json::json!({
                    "order": latin.order,
                    "labels": latin.labels,
                    "roles": latin.roles,
                });
                std::fs::write(labels_path, serde_json::to_string_pretty(&sidecar).unwrap())?;
            }
            println!(
                "wrote {} ({} vertices, {} edges)",
                args.output.display(),
                item.graph.n(),
                item.graph.edge_count()
            );
            Ok(0)
        }
        Command::Analyze(args) => {
            let g = load_graph(&args.file, &cli.format)?;
            let chordal = structure::chordal_certificate(&g);
            let lcc = structure::lcc(&g, g.max_degree() as u32 + 1);
            let claw = structure::star_free(&g, 2);
            let report = serde_json::json!({
                "n": g.n(),
                "m": g.edge_count(),
                "max_degree": g.max_degree(),
                "connected": g.is_connected(),
                "two_edge_connected": g.is_two_edge_connected(),
                "girth": g.girth(),
                "cut_edges": g.cut_edges(),
                "chordal": chordal.is_some(),
                "s_value": chordal.as_ref().map(|c| c.s_value),
                "peo": chordal.as_ref().map(|c| &c.peo),
                "lcc": match &lcc {
                    LccOutcome::Exact(v) => serde_json::json!({"value": v, "exact": true}),
                    LccOutcome::UpperBound(v) => serde_json::json!({"value": v, "exact": false}),
                    LccOutcome::ExceedsCap { vertex, cap } =>
                        serde_json::json!({"exceeds_cap": cap, "vertex": vertex}),
                },
                "claw_free": claw.free,
                "claw_witness": claw.witness,
            });
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(0)
        }
        Command::Color(args) => {
            let g = load_graph(&args.file, &cli.format)?;
            let opts = HcfOptions {
                engine: EngineChoice::parse(&args.engine)?,
                seed: cli.seed,
                budget: Budget::default(),
            };
            let out = pcf::color_hcf(&g, args.h, &opts)?;
            if let Some(trace_path) = &args.trace {
                std::fs::write(trace_path, serde_json::to_string_pretty(&out.traces).unwrap())?;
            }
            let text = io::write_coloring(&out.coloring);
            match &args.output {
                Some(path) => std::fs::write(path, &text)?,
                None => println!("{text}"),
            }
            if !cli.json {
                eprintln!(
                    "engine={} colors={} bound={}",
                    out.engine_label(),
                    out.coloring.used_colors(),
                    out.bound.map_or("-".into(), |b| b.to_string())
                );
            }
            Ok(0)
        }
        Command::OddColor(args) => {
            let g = load_graph(&args.file, &cli.format)?;
            let out = if args.claw || args.starfree {
                odd::odd_color_starfree(&g, if args.claw { 2 } else { args.ell }, args.claw)?
            } else {
                odd::odd_color_lcc(&g, args.ell)?
            };
            if let Some(trace_path) = &args.trace {
                std::fs::write(trace_path, serde_json::to_string_pretty(&out.stack).unwrap())?;
            }
            let text = io::write_coloring(&out.coloring);
            match &args.output {
                Some(path) => std::fs::write(path, &text)?,
                None => println!("{text}"),
            }
            if !cli.json {
                eprintln!(
                    "m={} colors={} layers={}",
                    out.m,
                    out.coloring.used_colors(),
                    out.stack.layers.len()
                );
            }
            Ok(0)
        }
        Command::Exact(args) => {
            let g = load_graph(&args.file, &cli.format)?;
            let mode = parse_mode(&args.mode, args.h)?;
            let budget =
                Budget { max_nodes: args.budget_nodes, max_millis: args.budget_secs * 1000 };
            if args.minimize {
                let res = exact::chromatic(&g, mode, budget);
                let json = serde_json::json!({
                    "mode": mode.name(),
                    "value": res.value,
                    "lower": res.lower,
                    "upper": res.upper,
                    "status": res.status,
                    "nodes": res.nodes,
                    "witness": res.witness.map(|w| w.colors),
                });
                println!("{}", serde_json::to_string_pretty(&json).unwrap());
                Ok(if res.value.is_some() { 0 } else { 3 })
            } else {
                let k = args.k.ok_or_else(|| Error::Input("pass --k or --minimize".into()))?;
                let res = exact::exists_coloring(&g, mode, k, budget);
                let (decision, witness, code) = match res.outcome {
                    Outcome::Found(w) => ("satisfiable", Some(w.colors), 0u8),
                    Outcome::None => ("unsatisfiable", None, 0),
                    Outcome::BudgetExceeded => ("budget-exceeded", None, 3),
                };
                let json = serde_json::json!({
                    "mode": mode.name(),
                    "k": k,
                    "decision": decision,
                    "witness": witness,
                    "nodes": res.nodes,
                });
                println!("{}", serde_json::to_string_pretty(&json).unwrap());
                Ok(code)
            }
        }
        Command::Verify(args) => {
            let g = load_graph(&args.file, &cli.format)?;
            let text = std::fs::read_to_string(&args.coloring)?;
            let phi = io::parse_coloring(&text)?;
            let report = verify(&g, &phi, args.h)?;
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(if report.proper && report.odd_ok && report.hcf_ok && report.dynamic_ok {
                0
            } else {
                2
            })
        }
        Command::Bench(args) => bench::run(args, cli.seed),
    }
}

fn parse_mode(name: &str, h: u32) -> Result<ExactMode, Error> {
    Ok(match name {
        "proper" => ExactMode::Proper,
        "odd" => ExactMode::Odd,
        "hcf" => ExactMode::Hcf(h),
        "dynamic" => ExactMode::Dynamic(h),
        "square" => ExactMode::Square,
        other => return Err(Error::Input(format!("unknown mode '{other}'"))),
    })
}
