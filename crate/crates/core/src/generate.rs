//! Seeded random inputs for tests, benchmarks and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::SimpleGraph;
use crate::weights::WeightVector;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer weights drawn uniformly from `lo..=hi`.
pub fn random_weights(rng: &mut impl Rng, n: usize, lo: u64, hi: u64) -> WeightVector {
    WeightVector::from_integers((0..n).map(|_| rng.gen_range(lo..=hi)))
}

/// A random `parts`-partite graph: every vertex gets a random part and each
/// edge between different parts is kept with probability `keep`. The result
/// is `K_{parts+1}`-free.
pub fn random_multipartite(rng: &mut impl Rng, n: usize, parts: usize, keep: f64) -> SimpleGraph {
    let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..parts.max(1))).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if labels[u] != labels[v] && rng.gen_bool(keep) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, edges).expect("n in 1..=64")
}

/// A random complete `parts`-partite graph (some parts may be empty).
pub fn random_complete_multipartite(rng: &mut impl Rng, n: usize, parts: usize) -> SimpleGraph {
    random_multipartite(rng, n, parts, 1.0)
}

/// A random subgraph of `K_n` with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, edges).expect("n in 1..=64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::contains_clique;

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = random_multipartite(&mut seeded_rng(3), 20, 3, 0.5);
        let b = random_multipartite(&mut seeded_rng(3), 20, 3, 0.5);
        assert_eq!(a, b);
        assert_eq!(random_weights(&mut seeded_rng(9), 5, 0, 100), random_weights(&mut seeded_rng(9), 5, 0, 100));
    }

    #[test]
    fn multipartite_graphs_avoid_the_next_clique() {
        let mut rng = seeded_rng(5);
        for parts in 1..5 {
            let g = random_complete_multipartite(&mut rng, 16, parts);
            assert!(!contains_clique(&g, parts + 1));
        }
    }
}
