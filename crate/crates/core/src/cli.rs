//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 invalid input,
//! 3 conformance failure under `verify --strict`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dimacs::write_dimacs;
use crate::formulas::{evaluate, format_value, registry, TheoremId, Variant};
use crate::harness::{run_grid, summarize, to_csv, to_json, write_witnesses, GridSpec};
use crate::setlab::{build_witness, Mark};
use crate::solver::{sparing_bruteforce, sparing_corona, sparing_mwis, Method, SolverConfig};
use crate::spec_string::{Instance, SpecExpr, GRAMMAR};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_STRICT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sparing",
    version,
    about = "Exact sparing numbers of graphs and corona products",
    after_help = format!("Graph specs:\n{GRAMMAR}")
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a graph as DIMACS-like text.
    Gen {
        spec: String,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the sparing number and print the result as JSON.
    Sparing {
        spec: String,
        /// Solver; corona for corona specs and mwis otherwise by default.
        #[arg(long, value_parser = ["bf", "mwis", "corona"])]
        method: Option<String>,
        /// Also write an explicit set-indexer labeling to this file.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Branch-and-bound node budget.
        #[arg(long)]
        node_limit: Option<u64>,
        /// Branch-and-bound time budget in milliseconds.
        #[arg(long)]
        time_limit_ms: Option<u64>,
        /// Largest graph accepted by the bf method.
        #[arg(long, default_value_t = crate::solver::DEFAULT_BRUTEFORCE_CAP)]
        bf_cap: usize,
    },
    /// Evaluate a closed form.
    Formula {
        /// Theorem id, see `sparing theorems`.
        theorem: String,
        #[arg(required = true, allow_negative_numbers = true)]
        params: Vec<i64>,
        #[arg(long, value_enum, default_value_t = VariantArg::Printed)]
        variant: VariantArg,
    },
    /// List the closed forms and their parameters as JSON.
    Theorems,
    /// Check every closed form against the exact solvers.
    Verify {
        /// `defaults` or a JSON grid file.
        #[arg(long, default_value = "defaults")]
        grid: String,
        /// Exit with status 3 if any closed form fails.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
        out: OutFormat,
        /// Report file; stdout when absent.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write one witness labeling per row into this directory.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Printed,
    Derived,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn usage(e: impl ToString) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: e.to_string(),
    }
}

fn invalid(e: impl ToString) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: e.to_string(),
    }
}

#[derive(Serialize)]
struct SparingOutput {
    graph: String,
    vertices: usize,
    edges: usize,
    sparing: usize,
    method: Method,
    optimal: bool,
    witness: BTreeMap<usize, Mark>,
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match execute(cli.command, &mut out) {
        Ok(code) => code,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn parse_spec(text: &str) -> Result<SpecExpr, Failure> {
    SpecExpr::parse(text).map_err(|e| usage(format!("bad graph spec `{text}`: {e}")))
}

fn emit(out: &mut impl Write, path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| invalid(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(invalid),
    }
}

fn execute(command: Command, out: &mut impl Write) -> Result<i32, Failure> {
    match command {
        Command::Gen { spec, out: path } => {
            let g = parse_spec(&spec)?.resolve().map_err(invalid)?.into_graph();
            emit(out, path.as_ref(), &write_dimacs(&g))?;
            Ok(EXIT_OK)
        }
        Command::Sparing {
            spec,
            method,
            witness,
            node_limit,
            time_limit_ms,
            bf_cap,
        } => {
            let expr = parse_spec(&spec)?;
            let instance = expr.resolve().map_err(invalid)?;
            let config = SolverConfig {
                bruteforce_cap: bf_cap,
                node_limit,
                time_limit: time_limit_ms.map(Duration::from_millis),
            };
            let method = match method {
                Some(m) => m.parse::<Method>().map_err(usage)?,
                None if matches!(instance, Instance::Corona(_)) => Method::CoronaDecomp,
                None => Method::MwisBB,
            };
            let result = match (method, &instance) {
                (Method::BruteForce, _) => {
                    sparing_bruteforce(instance.graph(), &config).map_err(invalid)?
                }
                (Method::MwisBB, _) => sparing_mwis(instance.graph(), &config),
                (Method::CoronaDecomp, Instance::Corona(layout)) => sparing_corona(layout, &config),
                (Method::CoronaDecomp, Instance::Plain(_)) => {
                    return Err(usage("the corona method needs a corona(...) spec"))
                }
            };
            let g = instance.graph();
            if let Some(path) = witness {
                let labeling = build_witness(g, &result.witness).map_err(invalid)?;
                emit(out, Some(&path), &(labeling.to_json() + "\n"))?;
            }
            let report = SparingOutput {
                graph: expr.to_string(),
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                sparing: result.value,
                method: result.method,
                optimal: result.optimal,
                witness: result.witness.to_map(),
            };
            let text = serde_json::to_string(&report).expect("result serializes") + "\n";
            emit(out, None, &text)?;
            Ok(EXIT_OK)
        }
        Command::Formula {
            theorem,
            params,
            variant,
        } => {
            let id: TheoremId = theorem.parse().map_err(usage)?;
            let variant = match variant {
                VariantArg::Printed => Variant::Printed,
                VariantArg::Derived => Variant::Derived,
            };
            let value = evaluate(id, &params, variant).map_err(|e| match e {
                crate::formulas::FormulaError::Arity { .. } => usage(e),
                other => invalid(other),
            })?;
            emit(out, None, &format!("{}\n", format_value(&value)))?;
            Ok(EXIT_OK)
        }
        Command::Theorems => {
            let text = serde_json::to_string_pretty(registry()).expect("registry serializes");
            emit(out, None, &(text + "\n"))?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            grid,
            strict,
            out: format,
            output,
            witness_dir,
        } => {
            let spec = if grid == "defaults" {
                GridSpec::default()
            } else {
                let text =
                    std::fs::read_to_string(&grid).map_err(|e| invalid(format!("{grid}: {e}")))?;
                GridSpec::from_json(&text).map_err(invalid)?
            };
            let mut rows = run_grid(&spec).map_err(invalid)?;
            if let Some(dir) = witness_dir {
                write_witnesses(&mut rows, &dir).map_err(invalid)?;
            }
            let text = match format {
                OutFormat::Csv => to_csv(&rows).map_err(invalid)?,
                OutFormat::Json => to_json(&rows),
            };
            emit(out, output.as_ref(), &text)?;
            let summary = summarize(&rows).map_err(invalid)?;
            eprint!("{summary}");
            Ok(if strict && !summary.all_claims_hold {
                EXIT_STRICT
            } else {
                EXIT_OK
            })
        }
    }
}
