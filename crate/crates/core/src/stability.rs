//! Greedy peeling of a `K_{l+1}`-free graph into at most `l` blocks.
//!
//! Step `i` takes the residual set `X_i`, picks the vertex with the most
//! neighbours inside `X_i` (smallest index on ties) and cuts off
//! `V_i = X_i ∖ N(v_i)` as a block. Edges inside the blocks are the ones to
//! delete. For unit weights their total is at most the deficit
//! `ex(n, w₊, K_{l+1}) − w₊(G)`; for general weights the report records
//! whether that bound held.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::extremal::optimal_sum_partition;
use crate::graph::{bits, SimpleGraph, WeightedGraph};
use crate::structure::{contains_clique, sum_edge_weight, sum_weight_of_edges};
use crate::weights::{Rational, WeightVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelResult {
    /// The weight-relabelled graph the peel ran on.
    pub graph: WeightedGraph,
    pub blocks: Vec<Vec<usize>>,
    pub pivots: Vec<usize>,
    pub removed_edges: Vec<(usize, usize)>,
    pub removed_weight: Rational,
    /// `ex(n, w₊, K_{l+1}) − w₊(G′)`.
    pub deficit: Rational,
    pub extremal_value: Rational,
    pub graph_weight: Rational,
}

/// Keeps the graph and redistributes the weights so that a higher-degree
/// vertex never carries less weight: vertices by degree descending (index
/// ascending) receive the weights in descending order.
pub fn weight_relabel(g: &WeightedGraph) -> WeightedGraph {
    let graph = g.graph();
    let mut by_degree: Vec<usize> = (0..graph.n()).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    let mut sorted: Vec<Rational> = g.weights().as_slice().to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let mut out = vec![Rational::zero(); graph.n()];
    for (v, w) in by_degree.into_iter().zip(sorted) {
        out[v] = w;
    }
    let weights = WeightVector::new(out).expect("permutation of non-negative weights");
    WeightedGraph::new(graph.clone(), weights).expect("same vertex count")
}

fn peel_blocks(graph: &SimpleGraph) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut residual = graph.vertex_mask();
    let mut blocks = Vec::new();
    let mut pivots = Vec::new();
    while residual != 0 {
        let pivot = bits(residual)
            .max_by(|&a, &b| {
                graph
                    .degree_in(a, residual)
                    .cmp(&graph.degree_in(b, residual))
                    .then(b.cmp(&a))
            })
            .expect("residual is non-empty");
        let block = residual & !graph.neighbors(pivot);
        blocks.push(bits(block).collect());
        pivots.push(pivot);
        residual &= !block;
    }
    (blocks, pivots)
}

/// Runs the peel on the weight-relabelled graph and evaluates the deficit
/// against the exact `K_{l+1}` extremal number.
pub fn greedy_peel(g: &WeightedGraph, l: usize) -> Result<PeelResult> {
    if l == 0 {
        return Err(Error::ZeroParts);
    }
    if contains_clique(g.graph(), l + 1) {
        return Err(Error::CliquePresent(l + 1));
    }
    let relabeled = weight_relabel(g);
    let graph = relabeled.graph();
    let (blocks, pivots) = peel_blocks(graph);
    let mut removed_edges = Vec::new();
    for block in &blocks {
        let mask = block.iter().fold(0u64, |m, &v| m | 1 << v);
        removed_edges.extend(graph.restricted_to(mask).edges());
    }
    removed_edges.sort_unstable();
    let w = relabeled.weights();
    let removed_weight = removed_edges
        .iter()
        .fold(Rational::zero(), |acc, &(u, v)| acc + w.get(u) + w.get(v));
    let extremal_value = optimal_sum_partition(w, l)?.objective_value;
    let graph_weight = sum_edge_weight(&relabeled);
    let deficit = &extremal_value - &graph_weight;
    Ok(PeelResult {
        graph: relabeled,
        blocks,
        pivots,
        removed_edges,
        removed_weight,
        deficit,
        extremal_value,
        graph_weight,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub l: usize,
    pub peel: PeelResult,
    /// `removed_weight ≤ deficit`.
    pub pass: bool,
    /// Structural checks: at most `l` blocks, each pivot's block avoids its
    /// neighbourhood, and no edge is left inside a block.
    pub structure_ok: bool,
}

/// Runs [`greedy_peel`] and recomputes both sides of the bound through
/// independent paths.
pub fn verify_stability(g: &WeightedGraph, l: usize) -> Result<StabilityReport> {
    let peel = greedy_peel(g, l)?;
    let w = peel.graph.weights();
    let graph = peel.graph.graph();

    let removed = SimpleGraph::from_edges(graph.n(), peel.removed_edges.iter().copied())?;
    let removed_weight = sum_edge_weight(&WeightedGraph::new(removed, w.clone())?);
    assert_eq!(removed_weight, sum_weight_of_edges(w, &peel.removed_edges));
    assert_eq!(removed_weight, peel.removed_weight);
    let deficit = optimal_sum_partition(w, l)?.objective_value - sum_edge_weight(&peel.graph);
    assert_eq!(deficit, peel.deficit);

    let mut remaining = graph.clone();
    for &(u, v) in &peel.removed_edges {
        remaining = remaining.without_edge(u, v);
    }
    let block_masks: Vec<u64> = peel.blocks.iter().map(|b| b.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
    let covered = block_masks.iter().fold(0u64, |a, m| a | m) == graph.vertex_mask();
    let no_inner_edges = block_masks.iter().all(|&m| bits(m).all(|v| remaining.neighbors(v) & m == 0));
    let pivots_ok = peel
        .pivots
        .iter()
        .zip(&block_masks)
        .all(|(&p, &m)| m >> p & 1 == 1 && graph.neighbors(p) & m == 0);
    let structure_ok = peel.blocks.len() <= l && covered && no_inner_edges && pivots_ok;

    Ok(StabilityReport { l, pass: removed_weight <= deficit, structure_ok, peel })
}
