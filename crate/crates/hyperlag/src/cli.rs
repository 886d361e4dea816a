//! Argument parsing and dispatch for the `hyperlag` binary.
//!
//! Exit codes: 0 on success, 1 when a check fails (mismatch, failed
//! hypothesis, non-strict counterexample, inconsistent oracle), 2 on usage or
//! input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hyperlag_core::optimizer::check_optimality;
use hyperlag_core::theorems::VerifyOptions;
use hyperlag_core::{
    build_counterexample, catalog, compress_set, eval, gradient, left_compress, theorems,
    threshold, Config, ConstructionId, CounterexampleParams, Hypergraph, TheoremId, Verdict,
    Weighting,
};
use serde::{Deserialize, Serialize};

use crate::io::{read_graph, read_weighting, InputError};
use crate::parallel;
use crate::report::{
    catalog_text, CatalogDto, CliqueReport, CompressReport, CounterexampleDto, Evaluation,
    EvaluationReport, MaximizeReport, OracleReport, VerifyReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Allowed shortfall of the optimizer below the grid optimum.
const ORACLE_SLACK: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(
    name = "hyperlag",
    version,
    about = "Lagrangians of non-uniform hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct OptimizerArgs {
    /// Number of starting points [default: 100]
    #[arg(long)]
    restarts: Option<usize>,
    /// Seed for the random starting points [default: 0]
    #[arg(long)]
    seed: Option<u64>,
    /// Stationarity tolerance per ascent [default: 1e-9]
    #[arg(long)]
    tol: Option<f64>,
    /// Iteration cap per ascent [default: 10000]
    #[arg(long)]
    max_iters: Option<usize>,
    /// Worker threads [default: available parallelism]
    #[arg(long)]
    threads: Option<usize>,
    /// JSON file with optimizer settings: restarts, seed, max_iters, tol, minimize_support
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, Args)]
struct OutputArgs {
    /// Emit a JSON report instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Maximize the Lagrangian, or evaluate it at a given weighting
    Compute {
        /// Graph file (text or JSON)
        graph: PathBuf,
        /// Weighting file; evaluates instead of maximizing
        #[arg(long, value_name = "FILE")]
        weights: Option<PathBuf>,
        #[command(flatten)]
        optimizer: OptimizerArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Largest complete subgraph for a set of edge cardinalities
    Clique {
        graph: PathBuf,
        /// Comma-separated cardinalities [default: all present in the graph]
        #[arg(long, value_delimiter = ',')]
        types: Vec<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Left-compress a graph, or apply one compression L_ij
    Compress {
        graph: PathBuf,
        /// Apply only the compression for this pair, given as I,J with I < J
        #[arg(long, value_delimiter = ',', num_args = 1, value_name = "I,J")]
        pair: Option<Vec<usize>>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a theorem's hypotheses and closed form on a graph
    Verify {
        /// One of: motzkin_straus, peng_3graph, peng_12, onr, on13, on123
        theorem: TheoremId,
        graph: PathBuf,
        /// Run the optimizer even when a hypothesis fails
        #[arg(long)]
        force: bool,
        /// Agreement tolerance [default: 1e-5]
        #[arg(long)]
        tolerance: Option<f64>,
        /// For onr: required cardinality of the non-singleton edges
        #[arg(long)]
        r: Option<usize>,
        #[command(flatten)]
        optimizer: OptimizerArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build a counterexample construction and compare exactly
    Counterexample {
        /// One of: ce_t3, ce_t4, ce_edgebound, ce_peng2
        construction: ConstructionId,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Number of vertices (extra vertices are isolated)
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exhaustive grid search compared against the optimizer
    Oracle {
        graph: PathBuf,
        /// Grid resolution m; points are k/m
        #[arg(long)]
        grid_m: usize,
        /// Refuse grids with more points than this [default: 50000000]
        #[arg(long)]
        cap: Option<u64>,
        #[command(flatten)]
        optimizer: OptimizerArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List the implemented theorems
    Catalog {
        /// Also evaluate the {1,r} threshold for this r
        #[arg(long)]
        r: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Core(#[from] hyperlag_core::Error),
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    restarts: Option<usize>,
    seed: Option<u64>,
    max_iters: Option<usize>,
    tol: Option<f64>,
    minimize_support: Option<bool>,
}

struct Settings {
    config: Config,
    threads: usize,
}

fn settings(args: &OptimizerArgs) -> Result<Settings, CliError> {
    let file = match &args.config {
        Some(path) => read_config(path)?,
        None => ConfigFile::default(),
    };
    let d = Config::default();
    let config = Config {
        restarts: args.restarts.or(file.restarts).unwrap_or(d.restarts),
        seed: args.seed.or(file.seed).unwrap_or(d.seed),
        max_iters: args.max_iters.or(file.max_iters).unwrap_or(d.max_iters),
        tol: args.tol.or(file.tol).unwrap_or(d.tol),
        minimize_support: file.minimize_support.unwrap_or(d.minimize_support),
    };
    if config.restarts == 0 {
        return Err(CliError::Usage("--restarts must be at least 1".into()));
    }
    if !(config.tol.is_finite() && config.tol > 0.0) {
        return Err(CliError::Usage("--tol must be a positive number".into()));
    }
    let threads = args.threads.unwrap_or_else(parallel::available_threads);
    if threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    Ok(Settings { config, threads })
}

fn read_config(path: &Path) -> Result<ConfigFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

struct Emit {
    body: String,
    status: i32,
}

fn emit<T: Serialize>(
    json: bool,
    report: &T,
    text: impl FnOnce(&T) -> String,
    status: i32,
) -> Emit {
    let body = if json {
        let mut s = serde_json::to_string(report).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text(report)
    };
    Emit { body, status }
}

fn dispatch(command: Command) -> Result<Emit, CliError> {
    match command {
        Command::Compute {
            graph,
            weights,
            optimizer,
            output,
        } => {
            let h = read_graph(&graph)?;
            match weights {
                Some(path) => evaluate(&h, &path, output.json),
                None => {
                    let s = settings(&optimizer)?;
                    let res = parallel::maximize(&h, &s.config, s.threads)?;
                    let report = MaximizeReport::new(&res, s.config.seed);
                    Ok(emit(output.json, &report, MaximizeReport::text, EXIT_OK))
                }
            }
        }
        Command::Clique {
            graph,
            types,
            output,
        } => {
            let h = read_graph(&graph)?;
            let mut types = if types.is_empty() {
                h.edge_types()
            } else {
                types
            };
            types.sort_unstable();
            types.dedup();
            let found = h.max_complete_subgraph(&types)?;
            Ok(emit(
                output.json,
                &CliqueReport::new(types, &found),
                CliqueReport::text,
                EXIT_OK,
            ))
        }
        Command::Compress {
            graph,
            pair,
            output,
        } => {
            let h = read_graph(&graph)?;
            let report = match pair.as_deref() {
                None => {
                    let (after, trace) = left_compress(&h);
                    CompressReport::full(&h, &after, &trace)
                }
                Some(&[i, j]) => CompressReport::single(&h, &compress_set(&h, i, j)?, i, j),
                Some(_) => {
                    return Err(CliError::Usage(
                        "--pair takes exactly two labels I,J".into(),
                    ))
                }
            };
            Ok(emit(output.json, &report, CompressReport::text, EXIT_OK))
        }
        Command::Verify {
            theorem,
            graph,
            force,
            tolerance,
            r,
            optimizer,
            output,
        } => {
            let h = read_graph(&graph)?;
            if let Some(r) = r {
                if theorem != TheoremId::OneR {
                    return Err(CliError::Usage("--r applies only to onr".into()));
                }
                if h.edge_types() != [1, r] {
                    return Err(CliError::Usage(format!(
                        "graph has edge types {:?}, expected [1, {r}]",
                        h.edge_types()
                    )));
                }
            }
            let s = settings(&optimizer)?;
            let tolerance = tolerance.unwrap_or(theorems::DEFAULT_TOLERANCE);
            if !(tolerance.is_finite() && tolerance >= 0.0) {
                return Err(CliError::Usage(
                    "--tolerance must be a non-negative number".into(),
                ));
            }
            let opts = VerifyOptions {
                optimizer: s.config,
                tolerance,
                force,
            };
            let threads = s.threads;
            let report = theorems::verify_with(theorem, &h, &opts, |h, cfg| {
                parallel::maximize(h, cfg, threads)
            })?;
            let status = if report.verdict == Verdict::Verified {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Ok(emit(
                output.json,
                &VerifyReport::new(&report, force),
                VerifyReport::text,
                status,
            ))
        }
        Command::Counterexample {
            construction,
            s,
            t,
            n,
            output,
        } => {
            let report = build_counterexample(construction, CounterexampleParams { s, t, n })?;
            let status = if report.strict {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Ok(emit(
                output.json,
                &CounterexampleDto::new(&report),
                CounterexampleDto::text,
                status,
            ))
        }
        Command::Oracle {
            graph,
            grid_m,
            cap,
            optimizer,
            output,
        } => {
            let h = read_graph(&graph)?;
            let s = settings(&optimizer)?;
            let grid = parallel::grid_oracle(&h, grid_m, cap, s.threads)?;
            let best = parallel::maximize(&h, &s.config, s.threads)?;
            let report = OracleReport::new(&grid, best.value, ORACLE_SLACK);
            let status = if report.consistent {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Ok(emit(output.json, &report, OracleReport::text, status))
        }
        Command::Catalog { r, output } => {
            let value = r.map(threshold).transpose()?;
            let entries: Vec<CatalogDto> = catalog()
                .iter()
                .map(|e| CatalogDto::new(e, value.filter(|_| e.id == TheoremId::OneR)))
                .collect();
            Ok(emit(output.json, &entries, |e| catalog_text(e), EXIT_OK))
        }
    }
}

fn evaluate(h: &Hypergraph, path: &Path, json: bool) -> Result<Emit, CliError> {
    let raw = read_weighting(path)?;
    let x = Weighting::from_user(raw)?;
    if x.len() != h.n() {
        return Err(hyperlag_core::Error::LengthMismatch {
            expected: h.n(),
            found: x.len(),
        }
        .into());
    }
    let value = eval(h, &x)?;
    let g = gradient(h, &x)?;
    let check = check_optimality(h, &x)?;
    let uniform_value = match h.edge_types().as_slice() {
        [r] => Some(value / hyperlag_core::factorial(*r).expect("arity checked") as f64),
        _ => None,
    };
    let report: EvaluationReport = Evaluation {
        value,
        uniform_value,
        x: &x,
        gradient: &g,
        support: x.support(hyperlag_core::optimizer::SUPPORT_EPS),
        kkt_residual: check.kkt_residual,
        off_support_excess: check.off_support_excess,
        cover_violations: check.cover_violations,
    }
    .into();
    Ok(emit(json, &report, EvaluationReport::text, EXIT_OK))
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command) {
        Ok(Emit { body, status }) => {
            if out.write_all(body.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
