use std::fmt::Write as _;
use std::process::ExitCode;

use serde::Serialize;
use wturan_core::extremal::{
    extremal, optimal_product_partition_with, parts_for, upgrade_to_multipartite, ProductOptions,
};
use wturan_core::generate::{random_weights, seeded_rng};
use wturan_core::oracle::{cap_for, certify_with, OracleOptions};
use wturan_core::report::{ExtremalReport, OracleReport, StabilityJson, UpgradeJson};
use wturan_core::stability::verify_stability;
use wturan_core::{Error, ForbiddenPattern, Objective, SimpleGraph, WeightVector, WeightedGraph};

use crate::{Command, ExtremalArgs, GraphArgs, OracleArgs, Output, RunConfig};

/// Environment variable replacing the oracle's vertex caps.
pub const MAX_N_ENV: &str = "WT_MAX_N";

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Cap(String),
    Clique(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Input(_) => 2,
            Self::Cap(_) => 3,
            Self::Clique(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Input(m) | Self::Cap(m) | Self::Clique(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge { .. } | Error::PatternTooLarge { .. } | Error::Overflow => Self::Cap(e.to_string()),
            Error::CliquePresent(_) => Self::Clique(e.to_string()),
            _ => Self::Input(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &str) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

fn load_weights(path: &str) -> CliResult<WeightVector> {
    WeightVector::parse(&read(path)?).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

fn load_graph(spec: &str) -> CliResult<SimpleGraph> {
    if let Some(g) = SimpleGraph::named(spec) {
        return Ok(g);
    }
    SimpleGraph::parse(&read(spec)?).map_err(|e| CliError::Input(format!("{spec}: {e}")))
}

fn weights_or_random(path: Option<&str>, n: Option<usize>, seed: u64) -> CliResult<WeightVector> {
    let w = match path {
        Some(p) => load_weights(p)?,
        None => random_weights(&mut seeded_rng(seed), n.expect("clap requires --n or --weights"), 0, 100),
    };
    if let Some(n) = n {
        if n != w.len() {
            return Err(CliError::Input(format!("--n {n} but the weight file has {} entries", w.len())));
        }
    }
    if w.is_empty() {
        return Err(Error::EmptyWeights.into());
    }
    Ok(w)
}

fn max_n_override() -> CliResult<Option<usize>> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Input(format!("{MAX_N_ENV}={v:?} is not a vertex count"))),
        Err(_) => Ok(None),
    }
}

fn emit<T: Serialize>(output: &Output, value: &T, table: impl FnOnce() -> String) {
    if output.json {
        println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
    } else {
        print!("{}", table());
    }
}

fn fmt_blocks(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| format!("{{{}}}", b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn fmt_edges(edges: &[[usize; 2]]) -> String {
    if edges.is_empty() {
        return "(none)".into();
    }
    edges.iter().map(|[u, v]| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

pub fn run(cfg: RunConfig) -> CliResult<ExitCode> {
    match cfg.command {
        Command::Extremal(args) => cmd_extremal(args, false),
        Command::ErdosStone(args) => cmd_extremal(args, true),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Stability(args) => cmd_stability(args),
        Command::Upgrade(args) => cmd_upgrade(args),
    }
}

fn cmd_extremal(args: ExtremalArgs, general_only: bool) -> CliResult<ExitCode> {
    let mut pattern = ForbiddenPattern::parse(&args.forbid)?;
    if general_only {
        if let ForbiddenPattern::Clique(l) = pattern {
            pattern = ForbiddenPattern::General(SimpleGraph::complete(l)?);
        }
    }
    let w = weights_or_random(args.weights.as_deref(), args.n, args.output.seed)?;
    let result = if args.heuristic_only && args.objective == Objective::Product {
        let (parts, leading) = parts_for(&pattern)?;
        let options = ProductOptions { heuristic_only: true };
        let mut r = optimal_product_partition_with(&w, parts, options, &mut |_| {})?;
        r.leading_term_only = leading;
        r
    } else {
        extremal(&w, &pattern, args.objective)?
    };
    let report = ExtremalReport::from(&result);
    emit(&args.output, &report, || {
        let mut t = String::new();
        let _ = writeln!(t, "objective  {}", report.kind);
        let _ = writeln!(t, "pattern    {}", args.forbid);
        let _ = writeln!(t, "weights    {w}");
        let _ = writeln!(t, "value      {}", report.value);
        let _ = writeln!(t, "blocks     {}", fmt_blocks(&report.blocks));
        let _ = writeln!(t, "edges      {}", fmt_edges(&report.edges));
        if report.leading_term_only {
            let _ = writeln!(t, "note       leading term only: best complete (chi(H)-1)-partite graph, not the exact extremal number");
        }
        t
    });
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(args: OracleArgs) -> CliResult<ExitCode> {
    let pattern = ForbiddenPattern::parse(&args.forbid)?;
    let max_n = max_n_override()?;
    let cap = max_n.unwrap_or_else(|| cap_for(&pattern));
    if let Some(n) = args.n {
        if n > cap {
            return Err(Error::TooLarge { n, cap }.into());
        }
    }
    let w = weights_or_random(args.weights.as_deref(), args.n, args.output.seed)?;
    let options = OracleOptions { max_n, threads: args.threads };
    let certs = certify_with(&w, &pattern, &options)?;
    let report = OracleReport::new(&w, &args.forbid, &certs);
    emit(&args.output, &report, || {
        let mut t = String::new();
        let _ = writeln!(t, "pattern {}  n {}  weights {w}", args.forbid, w.len());
        for (entry, cert) in report.results.iter().zip(&certs) {
            let rel = if entry.relation == "equal" { "==" } else { ">=" };
            let _ = writeln!(
                t,
                "{:<7} oracle {} {rel} formula {}  [{}]  explored {}",
                entry.objective.to_string(),
                entry.oracle_value,
                entry.formula_value,
                if entry.pass { "PASS" } else { "FAIL" },
                cert.oracle.explored
            );
            let _ = writeln!(t, "        witness {}", fmt_edges(&entry.witness_edges));
        }
        t
    });
    Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn load_weighted(args: &GraphArgs) -> CliResult<WeightedGraph> {
    let g = load_graph(&args.graph)?;
    let w = match &args.weights {
        Some(p) => load_weights(p)?,
        None => WeightVector::uniform(g.n(), 1),
    };
    Ok(WeightedGraph::new(g, w)?)
}

fn cmd_stability(args: GraphArgs) -> CliResult<ExitCode> {
    let g = load_weighted(&args)?;
    let report = verify_stability(&g, args.l)?;
    let json = StabilityJson::from(&report);
    emit(&args.output, &json, || {
        let mut t = String::new();
        let _ = writeln!(t, "l               {}", json.l);
        let _ = writeln!(t, "relabeled       {}", report.peel.graph.weights());
        let _ = writeln!(t, "pivots          {:?}", json.pivots);
        let _ = writeln!(t, "blocks          {}", fmt_blocks(&json.blocks));
        let _ = writeln!(t, "removed edges   {}", fmt_edges(&json.removed_edges));
        let _ = writeln!(t, "ex(n,w+,K{})    {}", json.l + 1, json.extremal_value);
        let _ = writeln!(t, "w+(G)           {}", json.graph_weight);
        let _ = writeln!(t, "removed weight  {}", json.removed_weight);
        let _ = writeln!(t, "deficit         {}", json.deficit);
        let _ = writeln!(t, "result          {}", if json.pass { "PASS" } else { "FAIL" });
        t
    });
    Ok(if report.pass && report.structure_ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_upgrade(args: GraphArgs) -> CliResult<ExitCode> {
    let g = load_weighted(&args)?;
    let up = upgrade_to_multipartite(&g, args.l)?;
    let json = UpgradeJson::new(&g, args.l, &up);
    emit(&args.output, &json, || {
        let mut t = String::new();
        let _ = writeln!(t, "blocks   {}", fmt_blocks(&json.blocks));
        let _ = writeln!(t, "edges    {}", fmt_edges(&json.edges));
        let _ = writeln!(t, "w+       {} -> {}", json.weight_before, json.weight_after);
        let _ = writeln!(t, "vertex  before  after");
        for (v, [b, a]) in json.degrees.iter().enumerate() {
            let _ = writeln!(t, "{:>6}  {b:>6}  {a:>5}", v + 1);
        }
        t
    });
    Ok(ExitCode::SUCCESS)
}
