//! Serializable views of results: 1-based vertices, rationals as `"p/q"`.

use serde::Serialize;

use crate::extremal::{ExtremalResult, Objective, Upgrade};
use crate::graph::{SimpleGraph, WeightedGraph};
use crate::oracle::{Certificate, Relation};
use crate::stability::StabilityReport;
use crate::structure::sum_edge_weight;
use crate::weights::{ratio_string, WeightVector};

fn one_based_edges(g: &SimpleGraph) -> Vec<[usize; 2]> {
    g.edges().map(|(u, v)| [u + 1, v + 1]).collect()
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub value: String,
    pub blocks: Vec<Vec<usize>>,
    pub edges: Vec<[usize; 2]>,
    pub kind: Objective,
    pub leading_term_only: bool,
}

impl From<&ExtremalResult> for ExtremalReport {
    fn from(r: &ExtremalResult) -> Self {
        Self {
            value: ratio_string(&r.objective_value),
            blocks: r.partition.one_based(),
            edges: one_based_edges(r.graph.graph()),
            kind: r.kind,
            leading_term_only: r.leading_term_only,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleEntry {
    pub objective: Objective,
    pub oracle_value: String,
    pub formula_value: String,
    pub relation: &'static str,
    pub pass: bool,
    pub witness_edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub pattern: String,
    pub weights: WeightVector,
    pub results: Vec<OracleEntry>,
    pub pass: bool,
}

impl OracleReport {
    pub fn new(weights: &WeightVector, pattern: &str, certs: &[Certificate]) -> Self {
        let results: Vec<OracleEntry> = certs
            .iter()
            .map(|c| OracleEntry {
                objective: c.oracle.objective,
                oracle_value: ratio_string(&c.oracle.best_value),
                formula_value: ratio_string(&c.formula_value),
                relation: match c.relation {
                    Relation::Equal => "equal",
                    Relation::AtLeast => "at_least",
                },
                pass: c.pass,
                witness_edges: one_based_edges(&c.oracle.witness),
            })
            .collect();
        Self {
            n: weights.len(),
            pattern: pattern.to_string(),
            weights: weights.clone(),
            pass: results.iter().all(|r| r.pass),
            results,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityJson {
    pub blocks: Vec<Vec<usize>>,
    pub pivots: Vec<usize>,
    pub removed_weight: String,
    pub deficit: String,
    pub pass: bool,
    pub l: usize,
    pub removed_edges: Vec<[usize; 2]>,
    pub extremal_value: String,
    pub graph_weight: String,
    pub weights: WeightVector,
    pub structure_ok: bool,
}

impl From<&StabilityReport> for StabilityJson {
    fn from(r: &StabilityReport) -> Self {
        let p = &r.peel;
        Self {
            blocks: p.blocks.iter().map(|b| one_based(b)).collect(),
            pivots: one_based(&p.pivots),
            removed_weight: ratio_string(&p.removed_weight),
            deficit: ratio_string(&p.deficit),
            pass: r.pass,
            l: r.l,
            removed_edges: p.removed_edges.iter().map(|&(u, v)| [u + 1, v + 1]).collect(),
            extremal_value: ratio_string(&p.extremal_value),
            graph_weight: ratio_string(&p.graph_weight),
            weights: p.graph.weights().clone(),
            structure_ok: r.structure_ok,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpgradeJson {
    pub l: usize,
    pub blocks: Vec<Vec<usize>>,
    pub edges: Vec<[usize; 2]>,
    /// `[before, after]` per vertex.
    pub degrees: Vec<[usize; 2]>,
    pub weight_before: String,
    pub weight_after: String,
}

impl UpgradeJson {
    pub fn new(input: &WeightedGraph, l: usize, up: &Upgrade) -> Self {
        let before = input.graph().degrees();
        let after = up.graph.graph().degrees();
        Self {
            l,
            blocks: up.partition.one_based(),
            edges: one_based_edges(up.graph.graph()),
            degrees: before.into_iter().zip(after).map(|(b, a)| [b, a]).collect(),
            weight_before: ratio_string(&sum_edge_weight(input)),
            weight_after: ratio_string(&sum_edge_weight(&up.graph)),
        }
    }
}
