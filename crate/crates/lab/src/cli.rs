use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use isolation_core::regular::sample_regular;
use isolation_core::verify::{
    run_extremal_grid, run_instance, sweep_gamma_regular, CheckReport, CorpusSpec, Instance, SuiteCheck,
};
use isolation_core::{Engine, Graph, Limits, Solver};
use rayon::prelude::*;
use serde_json::json;

use crate::error::{exit, LabError, Result};
use crate::expr::{construct, parse_family};
use crate::io::{format_graph, read_graph, write_graph, GraphFormat};
use crate::report::{reports_exit_code, reports_json, to_json};

/// Overrides the solver node budget.
pub const NODE_BUDGET_ENV: &str = "ISOLATION_LAB_NODE_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "isolation-lab", version, about = "Exact isolation, domination and hitting parameters of small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one parameter exactly, with a witness.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
        #[arg(long, value_enum)]
        param: Param,
        /// Family spec such as K3, 2*P3, cycles or file:F.el.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value_t = EngineArg::Pruned)]
        engine: EngineArg,
    },
    /// Build a graph from a construction expression.
    Construct {
        /// attach(G, F@root) | cart(G, F) | subdiv(G, h) | extremalG(k,q,t) | extremalH(k,q,t)
        expr: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
    },
    /// Sample a random d-regular graph.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
    },
    /// Run a verification suite over a corpus.
    Verify {
        /// reduction, bipartite, cartesian, regular-product, sandwich, tfep,
        /// decycling, mod2r, classical, dombound, extremal, sweep or all.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value = "empty")]
        corpus: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = EngineArg::Pruned)]
        engine: EngineArg,
    },
    /// Degree profile, bipartiteness and cycle lengths of a graph.
    Info {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Param {
    Gamma,
    Iota,
    Nabla,
    Hitting,
    Packing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Pruned,
    Exhaustive,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Pruned => Engine::Pruned,
            EngineArg::Exhaustive => Engine::Exhaustive,
        }
    }
}

fn engine_name(engine: Engine) -> &'static str {
    match engine {
        Engine::Pruned => "pruned",
        Engine::Exhaustive => "exhaustive",
    }
}

fn usage(msg: impl Into<String>) -> LabError {
    LabError::Usage(msg.into())
}

/// Limits with the node budget taken from the environment when set.
pub fn limits_from_env() -> Result<Limits> {
    let mut limits = Limits::default();
    if let Ok(value) = std::env::var(NODE_BUDGET_ENV) {
        limits.node_budget = value
            .trim()
            .parse()
            .map_err(|_| usage(format!("{NODE_BUDGET_ENV} must be a non-negative integer, got `{value}`")))?;
    }
    Ok(limits)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, text).map_err(|e| LabError::io(path, e)),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| LabError::io("<stdout>", e)),
    }
}

fn emit_graph(out: &mut dyn Write, path: Option<&Path>, format: Option<GraphFormat>, g: &Graph) -> Result<()> {
    match path {
        Some(path) => write_graph(path, g, format),
        None => emit(out, None, &format_graph(g, format.unwrap_or_default())),
    }
}

fn solve(solver: &Solver, g: &Graph, param: Param, family: Option<&str>) -> Result<serde_json::Value> {
    let family = match (param, family) {
        (Param::Gamma | Param::Nabla, Some(_)) => {
            return Err(usage("--family is not used with gamma or nabla"));
        }
        (Param::Iota | Param::Hitting | Param::Packing, None) => {
            return Err(usage("--family is required for iota, hitting and packing"));
        }
        (_, f) => f.map(parse_family).transpose()?,
    };
    let outcome = match param {
        Param::Gamma => solver.domination(g)?,
        Param::Nabla => solver.decycling(g)?,
        Param::Iota => solver.isolation(g, family.as_ref().expect("checked"))?,
        Param::Hitting => solver.hitting(g, family.as_ref().expect("checked"))?,
        Param::Packing => {
            let packing = solver.packing(g, family.as_ref().expect("checked"))?;
            let copies: Vec<Vec<usize>> = packing.copies.iter().map(|c| c.to_vec()).collect();
            return Ok(json!({
                "engine": "branch-and-bound",
                "nodes": packing.nodes_explored,
                "value": packing.value,
                "witness": copies,
            }));
        }
    };
    Ok(json!({
        "engine": engine_name(outcome.engine),
        "nodes": outcome.nodes_explored,
        "value": outcome.value,
        "witness": outcome.witness.to_vec(),
    }))
}

fn info(solver: &Solver, g: &Graph) -> Result<serde_json::Value> {
    let profile = g.degree_profile().ok();
    let components: Vec<Vec<usize>> = g.components().iter().map(|c| c.to_vec()).collect();
    Ok(json!({
        "order": g.order(),
        "size": g.size(),
        "min_degree": profile.map(|p| p.min_degree),
        "max_degree": profile.map(|p| p.max_degree),
        "regular": profile.map(|p| p.is_regular),
        "bipartite": g.is_bipartite(),
        "connected": g.is_connected(),
        "forest": g.is_forest(),
        "components": components,
        "cycle_lengths": g.cycle_lengths(solver.limits.max_cycles)?,
    }))
}

/// Loads a corpus; file corpora are read here, everything else is generated.
pub fn load_corpus(spec: &CorpusSpec) -> Result<Vec<Instance>> {
    match spec {
        CorpusSpec::Files(paths) => paths
            .iter()
            .map(|p| {
                Ok(Instance {
                    name: p.clone(),
                    graph: read_graph(Path::new(p), None)?,
                })
            })
            .collect(),
        other => Ok(other.generate()?),
    }
}

/// Runs corpus checks in parallel; reports are ordered by (instance, check).
pub fn run_corpus_checks(solver: &Solver, corpus: &[Instance], checks: &[SuiteCheck]) -> Result<Vec<CheckReport>> {
    let per_instance: Vec<Result<Vec<CheckReport>>> = corpus
        .par_iter()
        .map(|instance| Ok(run_instance(solver, instance, checks)?))
        .collect();
    let mut reports = Vec::new();
    for r in per_instance {
        reports.extend(r?);
    }
    Ok(reports)
}

pub fn verify(solver: &Solver, suite: &str, corpus: &str) -> Result<Vec<CheckReport>> {
    let spec: CorpusSpec = corpus.parse()?;
    match suite {
        "extremal" => Ok(run_extremal_grid(solver, &[1, 2], &[1, 2, 3], &[2, 3])?),
        "sweep" => match spec {
            CorpusSpec::Regular { n, d, count, seed } => Ok(vec![sweep_gamma_regular(solver, n, d, count, seed)?]),
            _ => Err(usage("the sweep suite needs a corpus regular:n=N,d=D,count=C,seed=S")),
        },
        name => {
            let checks = SuiteCheck::parse_suite(name)?;
            let corpus = load_corpus(&spec)?;
            run_corpus_checks(solver, &corpus, &checks)
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let limits = limits_from_env()?;
    match cli.command {
        Command::Solve {
            graph,
            format,
            param,
            family,
            engine,
        } => {
            let solver = Solver::new(limits, engine.into());
            let g = read_graph(&graph, format)?;
            let value = solve(&solver, &g, param, family.as_deref())?;
            emit(out, None, &to_json(&value))?;
        }
        Command::Construct { expr, out: path, format } => {
            let g = construct(&expr)?;
            emit_graph(out, path.as_deref(), format, &g)?;
        }
        Command::Sample {
            n,
            d,
            seed,
            out: path,
            format,
        } => {
            let g = sample_regular(n, d, seed)?;
            emit_graph(out, path.as_deref(), format, &g)?;
        }
        Command::Verify {
            suite,
            corpus,
            out: path,
            engine,
        } => {
            let solver = Solver::new(limits, engine.into());
            let reports = verify(&solver, &suite, &corpus)?;
            emit(out, path.as_deref(), &reports_json(&reports))?;
            return Ok(reports_exit_code(&reports));
        }
        Command::Info { graph, format } => {
            let solver = Solver::new(limits, Engine::default());
            let g = read_graph(&graph, format)?;
            emit(out, None, &to_json(&info(&solver, &g)?))?;
        }
    }
    Ok(exit::OK)
}

/// Parses `args` and runs the command, returning the process exit code.
/// Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { exit::USAGE } else { exit::OK };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "isolation-lab: {e}");
            e.exit_code()
        }
    }
}
