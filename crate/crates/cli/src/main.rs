//! `friendly-split`: decompose connected graphs into A/B/C vertex sets by
//! exact energy descent, verify the decomposition properties and cut bounds,
//! and compare against brute-force oracles and floating-point heuristics.

mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use friendly_split::engine::{self, EngineError};
use friendly_split::graph::GraphError;
use friendly_split::heur;
use friendly_split::oracle;
use friendly_split::verify;
use friendly_split::{Flt, Rat};

/// Exit codes: 0 success/verified, 1 verification failed, 2 usage or input
/// error, 3 internal engine fault.
const EXIT_OK: u8 = 0;
const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ENGINE_FAULT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "friendly-split",
    version,
    about = "A/B/C graph decompositions by exact energy descent on the circle"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct GraphSource {
    /// Graph file: edge list (`u v` lines, `#` comments) or DIMACS.
    #[arg(long, value_name = "PATH", conflicts_with = "gen")]
    input: Option<PathBuf>,
    /// Generator spec, e.g. complete:5, cycle:7, friendship:3, petersen,
    /// frucht, thomassen32, gnp:12:0.3, regular:20:3.
    #[arg(long, value_name = "SPEC")]
    gen: Option<String>,
    /// Seed for random generators, quarter-grid inits and rounding.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the descent and print the decomposition with its reports.
    Decompose {
        #[command(flatten)]
        source: GraphSource,
        /// Initial configuration: zero, cut:FILE, or random.
        #[arg(long, default_value = "zero")]
        init: String,
        /// Collision-step budget (default 16 |E| n).
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, default_value = "json", value_parser = ["json", "text", "dot"])]
        format: String,
        /// Write the full descent trace as JSON lines.
        #[arg(long, value_name = "PATH")]
        trace: Option<PathBuf>,
    },
    /// Check a partition file against the decomposition properties.
    Verify {
        #[command(flatten)]
        source: GraphSource,
        /// Partition: JSON `{"A": [...], ...}` or `vertex class` lines.
        #[arg(long, value_name = "PATH")]
        partition: PathBuf,
        #[arg(long, default_value = "json", value_parser = ["json", "text"])]
        format: String,
    },
    /// Brute-force ground truth.
    Oracle {
        #[command(subcommand)]
        which: OracleCmd,
    },
    /// Compare the cosine heuristic, the exact engine, and the oracle (CSV).
    Compare {
        #[command(flatten)]
        source: GraphSource,
        /// Comma-separated descent seeds.
        #[arg(long, default_value = "0,1,2")]
        seeds: String,
        /// Vertex cap for including the brute-force MaxCut.
        #[arg(long, default_value_t = oracle::DEFAULT_MAXCUT_CAP)]
        cap: usize,
        /// Random diameters per descended configuration.
        #[arg(long, default_value_t = 1000)]
        lines: usize,
    },
    /// Emit a generated graph.
    Gen {
        /// Generator spec (see decompose --gen).
        spec: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "edgelist", value_parser = ["edgelist", "dimacs", "dot"])]
        format: String,
        /// Output path (stdout when omitted).
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Exact MaxCut by Gray-code sweep over all bipartitions.
    Maxcut {
        #[command(flatten)]
        source: GraphSource,
        /// Vertex cap for the 2^(n-1) sweep.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Exhaustive enumeration of all valid decompositions.
    Enumerate {
        #[command(flatten)]
        source: GraphSource,
        /// Vertex cap for the 3^n sweep.
        #[arg(long)]
        cap: Option<usize>,
        /// Maximum decompositions to print; the count is always exact.
        #[arg(long, default_value_t = 100)]
        limit: usize,
    },
    /// Monte-Carlo randomized rounding of a configuration.
    Round {
        #[command(flatten)]
        source: GraphSource,
        /// Configuration file: JSON array of "num/den" turns.
        #[arg(long, value_name = "PATH")]
        config: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(classify_error(&err))
        }
    }
}

/// Engine faults are exit 3; everything else that errors is a usage or
/// input problem (exit 2).
fn classify_error(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<EngineError>() {
        return match e {
            EngineError::BudgetExceeded { .. } | EngineError::Fault { .. } => EXIT_ENGINE_FAULT,
            _ => EXIT_USAGE,
        };
    }
    if err.downcast_ref::<GraphError>().is_some()
        || err.downcast_ref::<oracle::OracleError>().is_some()
        || err.downcast_ref::<heur::HeurError>().is_some()
    {
        return EXIT_USAGE;
    }
    EXIT_USAGE
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Decompose {
            source,
            init,
            budget,
            format,
            trace,
        } => cmd_decompose(&source, &init, budget, &format, trace.as_deref()),
        Cmd::Verify {
            source,
            partition,
            format,
        } => cmd_verify(&source, &partition, &format),
        Cmd::Oracle { which } => match which {
            OracleCmd::Maxcut { source, cap } => cmd_oracle_maxcut(&source, cap),
            OracleCmd::Enumerate { source, cap, limit } => {
                cmd_oracle_enumerate(&source, cap, limit)
            }
            OracleCmd::Round {
                source,
                config,
                samples,
            } => cmd_oracle_round(&source, &config, samples),
        },
        Cmd::Compare {
            source,
            seeds,
            cap,
            lines,
        } => cmd_compare(&source, &seeds, cap, lines),
        Cmd::Gen {
            spec,
            seed,
            format,
            output,
        } => cmd_gen(&spec, seed, &format, output.as_deref()),
    }
}

fn cmd_decompose(
    source: &GraphSource,
    init: &str,
    budget: Option<usize>,
    format: &str,
    trace_path: Option<&std::path::Path>,
) -> Result<u8> {
    let (g, _name) = input::load_graph(&source.input, &source.gen, source.seed)?;
    if g.n() == 0 {
        anyhow::bail!("graph has no vertices");
    }
    if !g.is_connected()? {
        anyhow::bail!("graph not connected");
    }
    let strategy = input::parse_init(init, g.n(), source.seed)?;
    let (d, trace) = engine::decompose::<Rat>(&g, &strategy, budget)?;
    let report = verify::check_properties(&g, &d)?;
    let bounds = verify::judicious_bounds::<Rat>(&g, &d, None)
        .ok()
        .map(|b| b.to_json())
        .unwrap_or(serde_json::Value::Null);

    if let Some(path) = trace_path {
        std::fs::write(path, trace.to_json_lines())
            .with_context(|| format!("writing trace to {}", path.display()))?;
    }

    match format {
        "dot" => print!("{}", output::to_dot(&g, Some(&d))),
        "text" => {
            println!("A = {:?}", d.a.to_vec());
            println!("B = {:?}", d.b.to_vec());
            println!("C = {:?}", d.c.to_vec());
            println!(
                "properties: {}",
                if report.pass() { "pass" } else { "FAIL" }
            );
            print!("{}", output::property_report_text(&report));
            println!(
                "trace: {} collisions, {} strict descents, {} neutral moves, {} restarts",
                trace.collisions(),
                trace.strict_descents(),
                trace.neutral_moves(),
                trace.restarts()
            );
            println!("initial energy: {}", trace.initial_energy.ratio_string());
            println!("final energy:   {}", trace.final_energy().ratio_string());
            println!("cut #E(A∪C, B) = {}", d.cut_value(&g));
        }
        _ => {
            let doc = json!({
                "A": d.a.to_vec(),
                "B": d.b.to_vec(),
                "C": d.c.to_vec(),
                "properties": if report.pass() { "pass" } else { "fail" },
                "property_report": report.to_json(),
                "bounds": bounds,
                "cut": d.cut_value(&g),
                "trace": {
                    "collisions": trace.collisions(),
                    "strict_descents": trace.strict_descents(),
                    "neutral_moves": trace.neutral_moves(),
                    "restarts": trace.restarts(),
                    "initial_energy": trace.initial_energy.ratio_string(),
                    "final_energy": trace.final_energy().ratio_string(),
                },
            });
            println!("{doc}");
        }
    }
    Ok(if report.pass() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn cmd_verify(source: &GraphSource, partition: &std::path::Path, format: &str) -> Result<u8> {
    let (g, _name) = input::load_graph(&source.input, &source.gen, source.seed)?;
    let d = input::load_partition(partition, g.n())?;
    let report = verify::check_properties(&g, &d)?;
    match format {
        "text" => {
            println!(
                "properties: {}",
                if report.pass() { "pass" } else { "FAIL" }
            );
            print!("{}", output::property_report_text(&report));
        }
        _ => println!("{}", report.to_json()),
    }
    Ok(if report.pass() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn cmd_oracle_maxcut(source: &GraphSource, cap: Option<usize>) -> Result<u8> {
    let (g, _name) = input::load_graph(&source.input, &source.gen, source.seed)?;
    let r = oracle::maxcut_bruteforce(&g, cap)?;
    let (value, a) = r.value;
    let b = a.complement_in(g.n());
    let doc = json!({
        "maxcut": value,
        "a": a.to_vec(),
        "b": b.to_vec(),
        "instances": r.instances_examined,
    });
    println!("{doc}");
    Ok(EXIT_OK)
}

fn cmd_oracle_enumerate(source: &GraphSource, cap: Option<usize>, limit: usize) -> Result<u8> {
    let (g, _name) = input::load_graph(&source.input, &source.gen, source.seed)?;
    let r = oracle::enumerate_decompositions(&g, cap, Some(limit))?;
    let doc = json!({
        "count": r.value.total,
        "instances": r.instances_examined,
        "decompositions": r.value.decompositions.iter().map(|d| d.to_json()).collect::<Vec<_>>(),
    });
    println!("{doc}");
    Ok(EXIT_OK)
}

fn cmd_oracle_round(source: &GraphSource, config: &std::path::Path, samples: usize) -> Result<u8> {
    let (g, _name) = input::load_graph(&source.input, &source.gen, source.seed)?;
    let c = input::load_configuration(config, g.n())?;
    let exact = friendly_split::circle::expected_cut(&g, &c)?;
    let r = oracle::monte_carlo_round(&g, &c, samples, source.seed)?;
    let (mean, variance) = r.value;
    let doc = json!({
        "mean": mean,
        "variance": variance,
        "samples": samples,
        "seed": source.seed,
        "exact_expected": friendly_split::Rational::ratio_string(&exact),
    });
    println!("{doc}");
    Ok(EXIT_OK)
}

fn cmd_compare(source: &GraphSource, seeds: &str, cap: usize, lines: usize) -> Result<u8> {
    let (g, name) = input::load_graph(&source.input, &source.gen, source.seed)?;
    if g.n() == 0 {
        anyhow::bail!("graph has no vertices");
    }
    if !g.is_connected()? {
        anyhow::bail!("graph not connected");
    }
    let seeds: Vec<u64> = seeds
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<u64>().context("bad seed list"))
        .collect::<Result<_>>()?;
    let opts = heur::CompareOptions {
        rounding_lines: lines,
        oracle_cap: cap,
        threads: input::thread_cap(),
        ..Default::default()
    };
    let rows = heur::compare_heuristics::<Rat, Flt>(&g, &name, &seeds, &opts)?;
    println!("{}", heur::CompareRow::csv_header());
    for row in rows {
        println!("{}", row.to_csv());
    }
    Ok(EXIT_OK)
}

fn cmd_gen(
    spec_text: &str,
    seed: u64,
    format: &str,
    output: Option<&std::path::Path>,
) -> Result<u8> {
    let spec: friendly_split::graph::GeneratorSpec = spec_text
        .parse()
        .map_err(|e| anyhow::anyhow!("bad generator spec: {e}"))?;
    let g = friendly_split::graph::generate(&spec.with_seed(seed))?;
    let text = match format {
        "dimacs" => g.to_dimacs(),
        "dot" => output::to_dot(&g, None),
        _ => g.to_edge_list(),
    };
    match output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}
