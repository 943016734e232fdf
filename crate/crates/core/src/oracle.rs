//! Exhaustive ground truth: the maximum objective over every pattern-free
//! edge subset of `K_n`.
//!
//! The search walks the `C(n,2)` candidate edges in a fixed order (heaviest
//! first), branching include-then-exclude. An edge is included only if the
//! pattern does not appear through it. A subtree is cut when its value plus
//! every remaining candidate edge cannot beat the incumbent, which is exact
//! because all edge weights are non-negative. The first 8 decisions are
//! expanded up front and the resulting subtrees searched in parallel with a
//! shared incumbent.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::extremal::{extremal, Objective};
use crate::graph::SimpleGraph;
use crate::pattern::ForbiddenPattern;
use crate::structure::{embeds_through_edge, has_clique_in};
use crate::weights::{Rational, WeightVector};

pub const CLIQUE_CAP: usize = 8;
pub const GENERAL_CAP: usize = 7;
const SPLIT_DEPTH: usize = 8;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleOptions {
    /// Replaces the vertex caps (searches above them may take very long).
    pub max_n: Option<usize>,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub best_value: Rational,
    pub witness: SimpleGraph,
    /// Search nodes visited. Depends on thread scheduling when parallel.
    pub explored: u64,
    pub pattern: ForbiddenPattern,
    pub objective: Objective,
}

pub fn cap_for(pattern: &ForbiddenPattern) -> usize {
    match pattern {
        ForbiddenPattern::Clique(_) => CLIQUE_CAP,
        ForbiddenPattern::General(_) => GENERAL_CAP,
    }
}

pub fn brute_force_ex(w: &WeightVector, pattern: &ForbiddenPattern, objective: Objective) -> Result<OracleResult> {
    brute_force_ex_with(w, pattern, objective, &OracleOptions::default())
}

struct Problem<'a> {
    n: usize,
    edges: Vec<(usize, usize)>,
    weight: Vec<u64>,
    /// `suffix[i]` = total weight of candidate edges `i..`.
    suffix: Vec<u64>,
    pattern: &'a ForbiddenPattern,
}

impl Problem<'_> {
    /// Adds edge `i` to `rows` if that does not create the pattern.
    fn try_add(&self, rows: &mut [u64], i: usize) -> bool {
        let (u, v) = self.edges[i];
        match self.pattern {
            ForbiddenPattern::Clique(l) => {
                if has_clique_in(rows, rows[u] & rows[v], l - 2) {
                    return false;
                }
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
                true
            }
            ForbiddenPattern::General(h) => {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
                if embeds_through_edge(rows, h, u, v) {
                    remove(rows, u, v);
                    return false;
                }
                true
            }
        }
    }
}

fn remove(rows: &mut [u64], u: usize, v: usize) {
    rows[u] &= !(1u64 << v);
    rows[v] &= !(1u64 << u);
}

struct Task<'a> {
    problem: &'a Problem<'a>,
    shared: &'a AtomicU64,
    rows: Vec<u64>,
    value: u64,
    best: u64,
    best_rows: Vec<u64>,
    explored: u64,
}

impl Task<'_> {
    fn dfs(&mut self, i: usize) {
        self.explored += 1;
        if self.value > self.best {
            self.best = self.value;
            self.best_rows.clone_from(&self.rows);
            self.shared.fetch_max(self.value, Ordering::Relaxed);
        }
        let p = self.problem;
        if i == p.edges.len() {
            return;
        }
        let bound = self.value + p.suffix[i];
        // Local ties are cut; the shared incumbent only cuts strictly, so the
        // first optimum in search order survives in whichever task holds it.
        if bound <= self.best || bound < self.shared.load(Ordering::Relaxed) {
            return;
        }
        if p.try_add(&mut self.rows, i) {
            self.value += p.weight[i];
            self.dfs(i + 1);
            self.value -= p.weight[i];
            let (u, v) = p.edges[i];
            remove(&mut self.rows, u, v);
        }
        self.dfs(i + 1);
    }
}

/// All feasible states after deciding the first `depth` edges, in search
/// order.
fn prefixes(p: &Problem<'_>, depth: usize) -> (Vec<(Vec<u64>, u64)>, u64) {
    fn rec(p: &Problem<'_>, i: usize, depth: usize, rows: &mut Vec<u64>, value: u64, out: &mut Vec<(Vec<u64>, u64)>, nodes: &mut u64) {
        *nodes += 1;
        if i == depth {
            out.push((rows.clone(), value));
            return;
        }
        if p.try_add(rows, i) {
            rec(p, i + 1, depth, rows, value + p.weight[i], out, nodes);
            let (u, v) = p.edges[i];
            remove(rows, u, v);
        }
        rec(p, i + 1, depth, rows, value, out, nodes);
    }
    let mut out = Vec::new();
    let mut nodes = 0;
    rec(p, 0, depth, &mut vec![0; p.n], 0, &mut out, &mut nodes);
    (out, nodes)
}

pub fn brute_force_ex_with(
    w: &WeightVector,
    pattern: &ForbiddenPattern,
    objective: Objective,
    options: &OracleOptions,
) -> Result<OracleResult> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyWeights);
    }
    let cap = options.max_n.unwrap_or_else(|| cap_for(pattern)).min(crate::graph::MAX_VERTICES);
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    if let ForbiddenPattern::Clique(l) = pattern {
        if *l < 2 {
            return Err(Error::CliqueSize(*l));
        }
    }

    let (scaled, lcm) = w.scaled_integers();
    let mut candidates: Vec<(BigInt, (usize, usize))> = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            let ew = match objective {
                Objective::Sum => &scaled[u] + &scaled[v],
                Objective::Product => &scaled[u] * &scaled[v],
            };
            candidates.push((ew, (u, v)));
        }
    }
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let total: BigInt = candidates.iter().map(|c| &c.0).sum();
    if total.to_u64().is_none() {
        return Err(Error::Overflow);
    }
    let weight: Vec<u64> = candidates.iter().map(|c| c.0.to_u64().expect("bounded by total")).collect();
    let mut suffix = vec![0u64; weight.len() + 1];
    for i in (0..weight.len()).rev() {
        suffix[i] = suffix[i + 1] + weight[i];
    }
    let problem = Problem {
        n,
        edges: candidates.into_iter().map(|c| c.1).collect(),
        weight,
        suffix,
        pattern,
    };

    let depth = SPLIT_DEPTH.min(problem.edges.len());
    let (roots, root_nodes) = prefixes(&problem, depth);
    let shared = AtomicU64::new(0);
    let run = || {
        roots
            .par_iter()
            .map(|(rows, value)| {
                let mut task = Task {
                    problem: &problem,
                    shared: &shared,
                    rows: rows.clone(),
                    value: *value,
                    best: 0,
                    best_rows: vec![0; n],
                    explored: 0,
                };
                task.dfs(depth);
                (task.best, task.best_rows, task.explored)
            })
            .collect::<Vec<_>>()
    };
    let results = match options.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?
            .install(run),
        None => run(),
    };

    let explored = root_nodes + results.iter().map(|r| r.2).sum::<u64>();
    let mut best: (u64, Vec<u64>) = (0, vec![0; n]);
    for (value, rows, _) in results {
        if value > best.0 {
            best = (value, rows);
        }
    }
    let denom = match objective {
        Objective::Sum => lcm,
        Objective::Product => &lcm * &lcm,
    };
    Ok(OracleResult {
        best_value: Rational::new(BigInt::from(best.0), denom),
        witness: SimpleGraph::from_rows(best.1).expect("search keeps rows symmetric"),
        explored,
        pattern: pattern.clone(),
        objective,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// Oracle value equals the formula (clique patterns).
    Equal,
    /// Oracle value is at least the leading term (general patterns).
    AtLeast,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub oracle: OracleResult,
    pub formula_value: Rational,
    pub relation: Relation,
    pub pass: bool,
}

/// Compares the oracle with the partition formulas for both objectives.
pub fn certify(w: &WeightVector, pattern: &ForbiddenPattern) -> Result<Vec<Certificate>> {
    certify_with(w, pattern, &OracleOptions::default())
}

pub fn certify_with(w: &WeightVector, pattern: &ForbiddenPattern, options: &OracleOptions) -> Result<Vec<Certificate>> {
    [Objective::Sum, Objective::Product]
        .into_iter()
        .map(|objective| {
            let oracle = brute_force_ex_with(w, pattern, objective, options)?;
            let formula = extremal(w, pattern, objective)?;
            let (relation, pass) = if formula.leading_term_only {
                (Relation::AtLeast, oracle.best_value >= formula.objective_value)
            } else {
                (Relation::Equal, oracle.best_value == formula.objective_value)
            };
            Ok(Certificate { oracle, formula_value: formula.objective_value, relation, pass })
        })
        .collect()
}

/// Objective value of an arbitrary graph, for cross-checking witnesses.
pub fn objective_of(g: &SimpleGraph, w: &WeightVector, objective: Objective) -> Rational {
    g.edges().fold(Rational::zero(), |acc, (u, v)| match objective {
        Objective::Sum => acc + w.get(u) + w.get(v),
        Objective::Product => acc + w.get(u) * w.get(v),
    })
}
