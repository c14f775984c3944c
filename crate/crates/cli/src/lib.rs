//! Command-line front end: graph builders, single checks and the full
//! verification pipeline, with JSON reports and verdict exit codes.

pub mod corpus;
pub mod report;
pub mod verify;

use std::error::Error;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use p19free_core::snake::PathDecision;
use p19free_core::{
    build_mk, build_reduction, decide_coloring, has_induced_path, parse_mnae, read_graph,
    write_graph, Budget, ColoringOutcome, ColoringProblem, LabeledGraph, PathQuery,
};

use report::{CheckRecord, Verdict, Witness};
use verify::{decision_label, outcome_label, path_witness, verify_all, VerifyOptions};

type CliResult<T> = Result<T, Box<dyn Error>>;

#[derive(Debug, Parser)]
#[command(
    name = "p19free",
    version,
    about = "Build and verify the (P19, C3)-free 4-coloring hardness construction"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the Mycielski graph M_k.
    Mycielski {
        k: usize,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the reduction graph of an MNAE-3-SAT instance.
    Build {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a single decision procedure on a graph file.
    Check {
        #[command(subcommand)]
        kind: CheckKind,
    },
    /// Run the whole verification pipeline and write a JSON report.
    VerifyAll {
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        threads: Option<usize>,
        /// Seed for the random part of the instance corpus.
        #[arg(long, default_value_t = corpus::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckKind {
    TriangleFree {
        graph: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    Coloring {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    Snake {
        graph: PathBuf,
        #[arg(long)]
        target: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BudgetArgs {
    /// Search-node limit per solver call.
    #[arg(long)]
    pub budget_nodes: Option<u64>,
    /// Wall-clock limit per solver call.
    #[arg(long)]
    pub budget_seconds: Option<f64>,
}

impl BudgetArgs {
    /// Unset limits fall back to the default search budget.
    pub fn budget(self) -> CliResult<Budget> {
        let mut b = Budget::snake_default();
        if let Some(n) = self.budget_nodes {
            b.max_nodes = Some(n);
        }
        if let Some(s) = self.budget_seconds {
            b.max_time =
                Some(Duration::try_from_secs_f64(s).map_err(|e| format!("--budget-seconds: {e}"))?);
        }
        Ok(b)
    }
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn load_graph(path: &Path) -> CliResult<LabeledGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(read_graph(&text).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn finish_check(record: CheckRecord, report: Option<&Path>) -> CliResult<i32> {
    let json = serde_json::to_string_pretty(&record)?;
    if let Some(p) = report {
        std::fs::write(p, &json).map_err(|e| format!("{}: {e}", p.display()))?;
    }
    println!(
        "{}: {} ({})",
        record.name,
        record.decision,
        record.status.as_str()
    );
    Ok(record.status.exit_code())
}

fn check(kind: CheckKind) -> CliResult<i32> {
    match kind {
        CheckKind::TriangleFree { graph, report } => {
            let g = load_graph(&graph)?;
            let start = Instant::now();
            let tri = g.find_triangle();
            let decision = match tri {
                None => "triangle-free".to_string(),
                Some(t) => format!("triangle {t:?}"),
            };
            let record =
                CheckRecord::new("triangle-free", graph.display().to_string(), "a decision")
                    .decided(decision, Some(true), true)
                    .with_cost(0, start.elapsed());
            finish_check(record, report.as_deref())
        }
        CheckKind::Coloring {
            graph,
            k,
            budget,
            report,
        } => {
            let g = load_graph(&graph)?;
            let r = decide_coloring(&ColoringProblem::new(&g, k)?, &budget.budget()?);
            let decided = r.outcome != ColoringOutcome::BudgetExhausted;
            let record = CheckRecord::new(
                format!("{k}-coloring"),
                graph.display().to_string(),
                "a decision",
            )
            .decided(outcome_label(&r.outcome), decided.then_some(true), decided)
            .with_witness(r.outcome.witness().map(|w| Witness::Coloring {
                colors: w.colors.clone(),
            }))
            .with_cost(r.nodes, r.elapsed);
            finish_check(record, report.as_deref())
        }
        CheckKind::Snake {
            graph,
            target,
            budget,
            threads,
            report,
        } => {
            let g = load_graph(&graph)?;
            let q = PathQuery::new(&g, target)
                .with_budget(budget.budget()?)
                .with_threads(threads);
            let r = has_induced_path(&q)?;
            let decided = r.decision != PathDecision::BudgetExhausted;
            let record = CheckRecord::new(
                format!("induced-p{target}"),
                graph.display().to_string(),
                "a decision",
            )
            .decided(
                decision_label(&r.decision),
                decided.then_some(true),
                decided,
            )
            .with_witness(r.witness().map(|w| path_witness(&g, w)))
            .with_cost(r.nodes, r.elapsed);
            finish_check(record, report.as_deref())
        }
    }
}

pub fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Mycielski { k, out } => {
            emit(out.as_deref(), &write_graph(&build_mk(k)?))?;
            Ok(0)
        }
        Command::Build { input, out } => {
            let text =
                std::fs::read_to_string(&input).map_err(|e| format!("{}: {e}", input.display()))?;
            let inst = parse_mnae(&text).map_err(|e| format!("{}: {e}", input.display()))?;
            emit(out.as_deref(), &write_graph(&build_reduction(&inst)))?;
            Ok(0)
        }
        Command::Check { kind } => check(kind),
        Command::VerifyAll {
            report,
            budget,
            threads,
            seed,
        } => {
            let opts = VerifyOptions {
                budget: budget.budget()?,
                threads,
                seed,
            };
            let r = verify_all(&opts);
            if let Some(p) = &report {
                std::fs::write(p, r.to_json()).map_err(|e| format!("{}: {e}", p.display()))?;
            }
            for c in &r.checks {
                println!(
                    "{:<12} {:<40} {:<22} {}",
                    c.status.as_str(),
                    c.name,
                    c.target,
                    c.decision
                );
            }
            println!(
                "verdict: {} ({} checks, {} nodes)",
                r.verdict.as_str(),
                r.checks.len(),
                r.total_nodes
            );
            Ok(r.verdict.exit_code())
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                Verdict::Fail.exit_code()
            } else {
                0
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            Verdict::Fail.exit_code()
        }
    }
}
