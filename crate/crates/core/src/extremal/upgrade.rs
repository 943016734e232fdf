use crate::error::{Error, Result};
use crate::graph::{bits, SimpleGraph, WeightedGraph};
use crate::partition::Partition;
use crate::structure::contains_clique;
use crate::weights::WeightVector;

/// Output of the degree-dominating upgrade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Upgrade {
    pub graph: WeightedGraph,
    /// The blocks of the complete multipartite output, at most `l − 1`.
    pub partition: Partition,
}

/// Vertex of maximum degree inside `set`; ties go to the heavier vertex,
/// then to the smaller index.
fn pivot(g: &SimpleGraph, w: &WeightVector, set: u64) -> usize {
    bits(set)
        .max_by(|&a, &b| {
            g.degree_in(a, set)
                .cmp(&g.degree_in(b, set))
                .then_with(|| w.get(a).cmp(w.get(b)))
                .then_with(|| b.cmp(&a))
        })
        .expect("set is non-empty")
}

fn split(g: &SimpleGraph, w: &WeightVector, set: u64, l: usize, blocks: &mut Vec<Vec<usize>>) {
    if set == 0 {
        return;
    }
    let v = pivot(g, w, set);
    let nbrs = g.neighbors(v) & set;
    // l == 2 means `set` is independent; nbrs == 0 means the pivot, and so
    // every vertex of `set`, has no neighbours in it.
    if l == 2 || nbrs == 0 {
        blocks.push(bits(set).collect());
        return;
    }
    blocks.push(bits(set & !nbrs).collect());
    split(g, w, nbrs, l - 1, blocks);
}

/// Replaces a `K_l`-free graph by a complete `(≤ l−1)`-partite graph on the
/// same vertices in which no vertex loses degree.
///
/// The pivot `v` is a maximum-degree vertex; `V ∖ N(v)` becomes one block
/// and `N(v)`, which is `K_{l−1}`-free, is split recursively. The output is
/// the join of those blocks.
pub fn upgrade_to_multipartite(g: &WeightedGraph, l: usize) -> Result<Upgrade> {
    if l < 2 {
        return Err(Error::CliqueSize(l));
    }
    let graph = g.graph();
    if contains_clique(graph, l) {
        return Err(Error::CliquePresent(l));
    }
    let mut blocks = Vec::new();
    split(graph, g.weights(), graph.vertex_mask(), l, &mut blocks);
    let partition = Partition::new(graph.n(), blocks, l - 1).expect("blocks partition the vertex set");
    let graph = WeightedGraph::new(partition.to_graph(), g.weights().clone())?;
    Ok(Upgrade { graph, partition })
}
