//! Exact partition optimizers and extremal constructions for `K_l`-free
//! graphs, plus the multipartite leading term for general patterns.

mod product;
mod sum;
mod upgrade;

pub use product::{optimal_product_partition, optimal_product_partition_with, ProductOptions, EXACT_PRODUCT_CAP};
pub use sum::{
    assignment_value, optimal_bipartition_threshold, optimal_sum_partition, size_vectors, SizeVector,
    ThresholdSplit,
};
pub use upgrade::{upgrade_to_multipartite, Upgrade};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::partition::Partition;
use crate::pattern::ForbiddenPattern;
use crate::weights::{Rational, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Sum,
    Product,
}

impl std::str::FromStr for Objective {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "sum" => Ok(Self::Sum),
            "product" => Ok(Self::Product),
            other => Err(format!("unknown objective {other:?} (expected sum|product)")),
        }
    }
}

impl std::fmt::Display for Objective {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Sum => "sum",
            Self::Product => "product",
        })
    }
}

/// An optimal partition together with its complete multipartite witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    pub objective_value: Rational,
    pub partition: Partition,
    pub graph: WeightedGraph,
    pub kind: Objective,
    /// Set when the value is only the multipartite leading term of a general
    /// pattern, not its exact extremal number.
    pub leading_term_only: bool,
}

impl ExtremalResult {
    pub(crate) fn new(w: &WeightVector, partition: Partition, value: Rational, kind: Objective) -> Self {
        let graph = WeightedGraph::new(partition.to_graph(), w.clone()).expect("partition matches weights");
        Self { objective_value: value, partition, graph, kind, leading_term_only: false }
    }
}

/// Completes the blocks into a weighted complete multipartite graph.
pub fn build_complete_multipartite(p: &Partition, w: &WeightVector) -> Result<WeightedGraph> {
    WeightedGraph::new(p.to_graph(), w.clone())
}

/// Number of parts the optimizer runs with, and whether the answer is only a
/// leading term.
pub fn parts_for(pattern: &ForbiddenPattern) -> Result<(usize, bool)> {
    match pattern {
        ForbiddenPattern::Clique(l) if *l >= 2 => Ok((l - 1, false)),
        ForbiddenPattern::Clique(l) => Err(Error::CliqueSize(*l)),
        ForbiddenPattern::General(_) => {
            let chi = pattern.chromatic_number()?;
            if chi <= 2 {
                return Err(Error::BipartitePattern(chi));
            }
            Ok((chi - 1, true))
        }
    }
}

/// Extremal partition for either objective: exact for cliques, the
/// `χ(H)−1`-part leading term for general patterns.
pub fn extremal(w: &WeightVector, pattern: &ForbiddenPattern, kind: Objective) -> Result<ExtremalResult> {
    let (parts, leading) = parts_for(pattern)?;
    let mut result = match kind {
        Objective::Sum => optimal_sum_partition(w, parts)?,
        Objective::Product => optimal_product_partition(w, parts)?,
    };
    result.leading_term_only = leading;
    Ok(result)
}

pub fn ex_sum(w: &WeightVector, pattern: &ForbiddenPattern) -> Result<Rational> {
    Ok(extremal(w, pattern, Objective::Sum)?.objective_value)
}

pub fn ex_product(w: &WeightVector, pattern: &ForbiddenPattern) -> Result<Rational> {
    Ok(extremal(w, pattern, Objective::Product)?.objective_value)
}

/// `Σ_{P≠P'} w(P)·w(P')` over unordered block pairs.
pub fn pair_product_sum(w: &WeightVector, p: &Partition) -> Rational {
    let sums: Vec<Rational> = p.blocks().iter().map(|b| w.block_weight(b)).collect();
    let mut total = Rational::zero();
    for i in 0..sums.len() {
        for j in i + 1..sums.len() {
            total += &sums[i] * &sums[j];
        }
    }
    total
}

/// `Σ_P (n−|P|)·w(P)`.
pub fn sum_objective(w: &WeightVector, p: &Partition) -> Rational {
    let n = p.n();
    p.blocks().iter().fold(Rational::zero(), |acc, b| {
        acc + w.block_weight(b) * num_bigint::BigInt::from(n - b.len())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;
    use crate::structure::{product_edge_weight, sum_edge_weight};
    use num_bigint::BigInt;

    fn worked() -> WeightVector {
        WeightVector::from_integers([41, 33, 29, 13, 11, 7])
    }

    fn int(v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    #[test]
    fn ex_sum_examples() {
        assert_eq!(ex_sum(&worked(), &ForbiddenPattern::Clique(3)), Ok(int(416)));
        assert_eq!(ex_sum(&WeightVector::uniform(4, 1), &ForbiddenPattern::Clique(3)), Ok(int(8)));
        // χ(C5)−1 = 2 parts, unit weights: balanced bipartition K_{3,4} on 7 vertices.
        let c5 = ForbiddenPattern::General(SimpleGraph::cycle(5).unwrap());
        let r = extremal(&WeightVector::uniform(7, 1), &c5, Objective::Sum).unwrap();
        assert!(r.leading_term_only);
        assert_eq!(r.objective_value, int(2 * 12));
        assert_eq!(r.partition.sizes(), vec![4, 3]);
    }

    #[test]
    fn ex_product_examples() {
        assert_eq!(ex_product(&worked(), &ForbiddenPattern::Clique(3)), Ok(int(4485)));
        assert_eq!(ex_product(&WeightVector::uniform(3, 1), &ForbiddenPattern::Clique(3)), Ok(int(2)));
        for pattern in [ForbiddenPattern::Clique(3), ForbiddenPattern::Clique(5)] {
            assert_eq!(ex_product(&WeightVector::from_integers([9]), &pattern), Ok(int(0)));
            assert_eq!(ex_sum(&WeightVector::from_integers([9]), &pattern), Ok(int(0)));
        }
    }

    #[test]
    fn bipartite_patterns_are_rejected() {
        let p3 = ForbiddenPattern::General(SimpleGraph::path(3).unwrap());
        assert_eq!(ex_sum(&worked(), &p3), Err(Error::BipartitePattern(2)));
        assert_eq!(ex_product(&worked(), &p3), Err(Error::BipartitePattern(2)));
    }

    #[test]
    fn clique_two_allows_no_edges() {
        let r = extremal(&worked(), &ForbiddenPattern::Clique(2), Objective::Sum).unwrap();
        assert_eq!(r.objective_value, int(0));
        assert_eq!(r.graph.graph().edge_count(), 0);
    }

    #[test]
    fn results_match_their_witness() {
        for kind in [Objective::Sum, Objective::Product] {
            for l in 2..=7 {
                let r = extremal(&worked(), &ForbiddenPattern::Clique(l), kind).unwrap();
                let direct = match kind {
                    Objective::Sum => sum_edge_weight(&r.graph),
                    Objective::Product => product_edge_weight(&r.graph),
                };
                assert_eq!(r.objective_value, direct, "{kind} l={l}");
                assert!(r.partition.len() < l);
                assert_eq!(
                    crate::structure::complete_multipartite_structure(r.graph.graph()).unwrap(),
                    r.partition
                );
            }
        }
    }

    #[test]
    fn build_complete_multipartite_examples() {
        let w = worked();
        let p = Partition::new(6, vec![vec![0, 1], vec![2, 3, 4, 5]], 2).unwrap();
        assert_eq!(build_complete_multipartite(&p, &w).unwrap().graph().edge_count(), 8);
        let single = Partition::new(6, vec![(0..6).collect()], 1).unwrap();
        assert_eq!(build_complete_multipartite(&single, &w).unwrap().graph().edge_count(), 0);
        let w3 = WeightVector::uniform(3, 1);
        let tri = Partition::new(3, vec![vec![0], vec![1], vec![2]], 3).unwrap();
        assert_eq!(
            build_complete_multipartite(&tri, &w3).unwrap().graph(),
            &SimpleGraph::complete(3).unwrap()
        );
    }
}
