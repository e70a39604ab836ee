mod source;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use fair_coalition::catalog::cubic_catalog;
use fair_coalition::coalition::{
    cf_bruteforce, cf_solve_with, lower_bound_from_domatic, upper_bound,
    upper_bound_connected_claim, verify_fc_partition, SolveError, SolveOptions,
};
use fair_coalition::fair_domination::{
    fair_domatic_number, min_dominating_set, min_fd_set, min_ifd_set,
};
use fair_coalition::io::{to_edge_list, to_graph6};
use fair_coalition::partition::parse_partition;
use fair_coalition::reproduce::{reproduce, Scope};
use fair_coalition::Graph;

/// Exact fair domination and fair coalition invariants of small graphs.
///
/// GRAPH arguments are a file (graph6 or edge list, detected automatically),
/// `-` for standard input, or a family spec: path:N, cycle:N, complete:N,
/// empty:N, bipartite:A:B, petersen, corona:tree:N[:seed=S], corona:path:N,
/// cubic:ORDER:INDEX, random:N:P[:seed=S].
///
/// Exit status: 0 success, 1 invalid partition or unexpected discrepancy,
/// 2 input error, 3 order above a solver cap.
#[derive(Parser)]
#[command(name = "fairco", version)]
struct Cli {
    /// Search on a single thread so witnesses are reproducible.
    #[arg(long, global = true)]
    sequential: bool,
    /// Also print a human-readable summary on stderr.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants of a graph.
    Compute {
        graph: String,
        /// Comma-separated quantities.
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [
            Quantity::Gamma, Quantity::GammaF, Quantity::DF, Quantity::Cf, Quantity::Bounds
        ])]
        what: Vec<Quantity>,
        /// Fairness constant for fd_i.
        #[arg(long = "i", default_value_t = 1)]
        i: usize,
        /// Include witness sets and partitions.
        #[arg(long)]
        witness: bool,
    },
    /// Check a partition (one class per line) for being an fc-partition.
    Verify {
        graph: String,
        /// Partition file, or `-` for standard input.
        partition: String,
    },
    /// Fair coalition number by exhaustive enumeration (order at most 11).
    Oracle { graph: String },
    /// Recompute the published values and report agreement.
    Reproduce {
        #[arg(default_value = "all")]
        scope: String,
    },
    /// List the cubic graphs of order 6, 8 or 10.
    Catalog {
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Quantity {
    Gamma,
    #[value(name = "gamma_f")]
    GammaF,
    #[value(name = "fd_i")]
    FdI,
    #[value(name = "d_f")]
    DF,
    Cf,
    Bounds,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

enum Failure {
    /// Command ran; the answer is negative.
    Rejected,
    Input(String),
    Cap(String),
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        Failure::Cap(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = if cli.sequential {
        SolveOptions::sequential()
    } else {
        SolveOptions::parallel()
    };
    let result = match &cli.command {
        Command::Compute {
            graph,
            what,
            i,
            witness,
        } => compute(graph, what, *i, *witness, &opts, cli.pretty),
        Command::Verify { graph, partition } => verify(graph, partition, cli.pretty),
        Command::Oracle { graph } => oracle(graph, cli.pretty),
        Command::Reproduce { scope } => run_reproduce(scope, &opts, cli.pretty),
        Command::Catalog { order, format } => catalog(*order, *format, cli.pretty),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn emit(value: &Value) {
    let mut out = std::io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = serde_json::to_writer_pretty(&mut out, value);
    let _ = writeln!(out);
}

fn load(graph: &str) -> Result<Graph, Failure> {
    source::load_graph(graph).map_err(Failure::Input)
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

fn compute(
    graph: &str,
    what: &[Quantity],
    i: usize,
    with_witness: bool,
    opts: &SolveOptions,
    pretty: bool,
) -> Result<(), Failure> {
    let g = load(graph)?;
    if what.contains(&Quantity::FdI) && i == 0 {
        return Err(Failure::Input("--i must be at least 1".into()));
    }
    let start = Instant::now();
    let mut out = Map::new();
    let mut witnesses = Map::new();
    out.insert("order".into(), json!(g.order()));
    out.insert("size".into(), json!(g.size()));

    let mut summary = Vec::new();
    for q in what {
        match q {
            Quantity::Gamma => {
                let d = min_dominating_set(&g);
                out.insert("gamma".into(), json!(d.len()));
                witnesses.insert("gamma".into(), json!(d.to_vec()));
                summary.push(("gamma".to_string(), d.len().to_string()));
            }
            Quantity::GammaF => {
                let d = min_fd_set(&g);
                out.insert("gamma_f".into(), json!(d.len()));
                witnesses.insert("gamma_f".into(), json!(d.to_vec()));
                summary.push(("gamma_f".to_string(), d.len().to_string()));
            }
            Quantity::FdI => {
                let d = min_ifd_set(&g, i).map_err(|e| Failure::Input(e.to_string()))?;
                out.insert("fd_i".into(), json!({ "i": i, "value": d.len() }));
                witnesses.insert("fd_i".into(), json!(d.to_vec()));
                summary.push((format!("fd_{i}"), d.len().to_string()));
            }
            Quantity::DF => {
                let r = fair_domatic_number(&g);
                out.insert("d_f".into(), json!(r.value));
                witnesses.insert("d_f".into(), json!(r.witness));
                summary.push(("d_f".to_string(), r.value.to_string()));
            }
            Quantity::Cf => {
                let r = cf_solve_with(&g, opts)?;
                out.insert("cf".into(), json!(r.value));
                out.insert(
                    "cf_search".into(),
                    json!({
                        "nodes": r.nodes,
                        "lower_bound": r.lower_bound,
                        "upper_bound": r.upper_bound,
                    }),
                );
                witnesses.insert("cf".into(), json!(r.witness));
                witnesses.insert("cf_certificate".into(), json!(r.certificate));
                summary.push(("cf".to_string(), r.value.to_string()));
            }
            Quantity::Bounds => {
                let lb = lower_bound_from_domatic(&g);
                let upper = upper_bound(&g);
                out.insert(
                    "bounds".into(),
                    json!({
                        "upper": upper,
                        "upper_connected_claim": upper_bound_connected_claim(&g),
                        "lower_from_domatic": lb.as_ref().ok().map(|b| b.bound),
                        "lower_route": lb.as_ref().ok().map(|b| b.route),
                        "lower_unavailable": lb.as_ref().err().map(ToString::to_string),
                    }),
                );
                if let Ok(b) = &lb {
                    witnesses.insert("lower_from_domatic".into(), json!(b.witness));
                }
                let lower = lb.map_or_else(|_| "n/a".to_string(), |b| b.bound.to_string());
                summary.push(("bounds".to_string(), format!("{lower} <= cf <= {upper}")));
            }
        }
    }
    if with_witness {
        out.insert("witness".into(), Value::Object(witnesses));
    }
    out.insert("elapsed_ms".into(), json!(millis(start)));
    emit(&Value::Object(out));
    if pretty {
        eprintln!("order {}, size {}", g.order(), g.size());
        for (name, value) in summary {
            eprintln!("  {name:<8} {value}");
        }
    }
    Ok(())
}

fn verify(graph: &str, partition: &str, pretty: bool) -> Result<(), Failure> {
    let g = load(graph)?;
    let text = source::load_text(partition).map_err(Failure::Input)?;
    let p = parse_partition(&text).map_err(|e| Failure::Input(format!("{partition}: {e}")))?;
    match verify_fc_partition(&g, &p) {
        Ok(cert) => {
            emit(&json!({ "valid": true, "classes": p.len(), "certificate": cert }));
            if pretty {
                eprintln!("valid fc-partition with {} classes", p.len());
                for (i, c) in p.classes().iter().enumerate() {
                    eprintln!("  {i}: {c}  {}", cert.entries[i]);
                }
            }
            Ok(())
        }
        Err(v) => {
            emit(&json!({ "valid": false, "classes": p.len(), "violation": v }));
            if pretty {
                eprintln!("invalid: {v}");
            }
            Err(Failure::Rejected)
        }
    }
}

fn oracle(graph: &str, pretty: bool) -> Result<(), Failure> {
    let g = load(graph)?;
    let r = cf_bruteforce(&g)?;
    emit(&json!({
        "cf": r.value,
        "witness": r.witness,
        "certificate": r.certificate,
        "partitions_examined": r.nodes,
        "elapsed_ms": r.elapsed.as_secs_f64() * 1000.0,
    }));
    if pretty {
        eprintln!("cf = {} ({} partitions examined)", r.value, r.nodes);
        eprintln!("  witness {}", r.witness);
    }
    Ok(())
}

fn run_reproduce(scope: &str, opts: &SolveOptions, pretty: bool) -> Result<(), Failure> {
    let scope: Scope = scope.parse().map_err(|e: fair_coalition::reproduce::UnknownScope| {
        Failure::Input(e.to_string())
    })?;
    let report = reproduce(scope, opts);
    emit(&json!(report));
    if pretty {
        eprint!("{}", report.to_table());
    }
    if report.ok() {
        Ok(())
    } else {
        Err(Failure::Rejected)
    }
}

fn catalog(order: usize, format: Format, pretty: bool) -> Result<(), Failure> {
    let entries = cubic_catalog(order).map_err(|e| Failure::Input(e.to_string()))?;
    let mut out = std::io::stdout().lock();
    for e in entries {
        let connectivity = if e.connected { "connected" } else { "disconnected" };
        let text = match format {
            Format::Graph6 => format!("{} {} {}\n", e.graph6, e.index, connectivity),
            Format::Edgelist => format!(
                "# cubic order {order} index {} {connectivity}\n{}\n",
                e.index,
                to_edge_list(e.graph())
            ),
        };
        let _ = out.write_all(text.as_bytes());
    }
    if pretty {
        for e in entries {
            let g6 = to_graph6(e.graph()).unwrap_or_default();
            let known = e.expected_cf.map_or_else(|| "-".to_string(), |v| v.to_string());
            eprintln!("{:>3}  {:<10}  connected={:<5}  known cf={known}", e.index, g6, e.connected);
        }
    }
    Ok(())
}
