//! `wturan`: weighted Turán numbers from the command line.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use wturan_core::Objective;

#[derive(Debug, Parser)]
#[command(name = "wturan", version, about = "Vertex-weighted Turán numbers and extremal graphs")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Extremal value and witness for a forbidden pattern.
    Extremal(ExtremalArgs),
    /// Multipartite leading term for a general forbidden graph.
    ErdosStone(ExtremalArgs),
    /// Exhaustive search, compared with the partition formulas.
    Oracle(OracleArgs),
    /// Greedy peeling of a K_{l+1}-free graph into l blocks.
    Stability(GraphArgs),
    /// Degree-dominating complete multipartite upgrade of a K_l-free graph.
    Upgrade(GraphArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Emit JSON instead of a table.
    #[arg(long)]
    pub json: bool,
    /// Seed for randomly generated weights.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    /// Weight file: one integer, p/q or decimal per line.
    #[arg(long, required_unless_present = "n")]
    pub weights: Option<String>,
    /// Use n random integer weights in [0, 100] (from --seed) instead of a file.
    #[arg(long)]
    pub n: Option<usize>,
    /// Forbidden pattern: K<l>, C<n>, P<n>, petersen or file:<path>.
    #[arg(long)]
    pub forbid: String,
    /// Edge weight: `sum` (w(u)+w(v)) or `product` (w(u)·w(v)).
    #[arg(long, default_value = "sum")]
    pub objective: Objective,
    /// Product objective only: return the greedy partition without the exact search.
    #[arg(long)]
    pub heuristic_only: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Weight file: one integer, p/q or decimal per line.
    #[arg(long, required_unless_present = "n")]
    pub weights: Option<String>,
    /// Vertex count; without --weights, n random integer weights in [0, 100].
    #[arg(long)]
    pub n: Option<usize>,
    /// Forbidden pattern: K<l>, C<n>, P<n>, petersen or file:<path>.
    #[arg(long)]
    pub forbid: String,
    /// Worker threads for the search; all cores when omitted.
    #[arg(long)]
    pub threads: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Graph file (`n <count>` then `e <u> <v>` lines, 1-based) or a named graph.
    #[arg(long)]
    pub graph: String,
    /// Weight file; unit weights when omitted.
    #[arg(long)]
    pub weights: Option<String>,
    /// stability: blocks allowed (input must be K_{l+1}-free); upgrade: forbidden clique size.
    #[arg(long)]
    pub l: usize,
    #[command(flatten)]
    pub output: Output,
}

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    match commands::run(cfg) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("wturan: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
