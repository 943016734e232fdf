use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numeric::{below_pow2, ExactInt};
use crate::partition::Partition;
use crate::weights::{Rational, WeightVector};

use super::{ExtremalResult, Objective};

/// Block sizes of a partition, non-increasing, all positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SizeVector(pub Vec<usize>);

/// Visits every partition of `n` into at most `parts` positive parts, in
/// reverse-lexicographic order (`[n]` first).
fn for_each_size_vector(n: usize, parts: usize, visit: &mut impl FnMut(&[usize])) {
    fn rec(rem: usize, max_part: usize, parts_left: usize, cur: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if rem == 0 {
            visit(cur);
            return;
        }
        if parts_left == 0 {
            return;
        }
        for a in (1..=rem.min(max_part)).rev() {
            if a * parts_left < rem {
                break;
            }
            cur.push(a);
            rec(rem - a, a, parts_left - 1, cur, visit);
            cur.pop();
        }
    }
    rec(n, n, parts, &mut Vec::with_capacity(parts), visit);
}

pub fn size_vectors(n: usize, parts: usize) -> Vec<SizeVector> {
    let mut out = Vec::new();
    for_each_size_vector(n, parts, &mut |s| out.push(SizeVector(s.to_vec())));
    out
}

/// Prefix sums of the scaled weights in descending order.
fn prefix<T: ExactInt>(sorted: &[BigInt]) -> Vec<T> {
    let mut acc = T::zero();
    let mut out = Vec::with_capacity(sorted.len() + 1);
    out.push(acc.clone());
    for x in sorted {
        acc = acc + T::from_big(x);
        out.push(acc.clone());
    }
    out
}

/// Value of the descending-weights-to-ascending-sizes assignment.
fn value_of<T: ExactInt>(prefix: &[T], n: usize, sizes: &[usize]) -> T {
    let mut offset = 0;
    let mut value = T::zero();
    for &s in sizes.iter().rev() {
        let block = prefix[offset + s].clone() - prefix[offset].clone();
        value = value + T::from((n - s) as i64) * block;
        offset += s;
    }
    value
}

fn best_sizes<T: ExactInt>(sorted: &[BigInt], parts: usize) -> (Vec<usize>, BigInt) {
    let n = sorted.len();
    let prefix = prefix::<T>(sorted);
    let mut best: Option<(T, Vec<usize>)> = None;
    for_each_size_vector(n, parts, &mut |sizes| {
        let v = value_of(&prefix, n, sizes);
        // Later vectors are lexicographically smaller, so they win ties.
        if best.as_ref().is_none_or(|(b, _)| v >= *b) {
            best = Some((v, sizes.to_vec()));
        }
    });
    let (value, sizes) = best.expect("n >= 1 has a size vector");
    (sizes, value.to_big())
}

/// Blocks for `sizes`: the heaviest vertices fill the smallest blocks.
fn blocks_for(w: &WeightVector, sizes: &[usize]) -> Vec<Vec<usize>> {
    let order = w.descending_order();
    let mut offset = 0;
    sizes
        .iter()
        .rev()
        .map(|&s| {
            let b = order[offset..offset + s].to_vec();
            offset += s;
            b
        })
        .collect()
}

/// Value `Σ_P (n−|P|)·w(P)` of the sorted assignment for a given size vector.
pub fn assignment_value(w: &WeightVector, sizes: &SizeVector) -> Rational {
    let p = Partition::new(w.len(), blocks_for(w, &sizes.0), sizes.0.len()).expect("sizes sum to n");
    super::sum_objective(w, &p)
}

/// Maximises `Σ_P (n−|P|)·w(P)` over partitions into at most `parts`
/// blocks; this is `ex(n, w₊, K_{parts+1})`.
///
/// Every size vector is tried; for a fixed size vector the rearrangement
/// inequality makes the heaviest-into-smallest assignment optimal. Ties go
/// to the lexicographically smallest size vector.
pub fn optimal_sum_partition(w: &WeightVector, parts: usize) -> Result<ExtremalResult> {
    if w.is_empty() {
        return Err(Error::EmptyWeights);
    }
    if parts == 0 {
        return Err(Error::ZeroParts);
    }
    let n = w.len();
    let (scaled, lcm) = w.scaled_integers();
    let order = w.descending_order();
    let sorted: Vec<BigInt> = order.iter().map(|&v| scaled[v].clone()).collect();
    let total: BigInt = sorted.iter().sum();
    let (sizes, value) = if below_pow2(&(total * BigInt::from(n)), 120) {
        best_sizes::<i128>(&sorted, parts)
    } else {
        best_sizes::<BigInt>(&sorted, parts)
    };
    let partition = Partition::new(n, blocks_for(w, &sizes), parts).expect("sizes sum to n");
    let value = Rational::new(value, lcm);
    Ok(ExtremalResult::new(w, partition, value, Objective::Sum))
}

/// The two-block optimum found by scanning prefix splits of the
/// descending-sorted weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdSplit {
    /// Number of heaviest vertices placed in the first block.
    pub r: usize,
    pub result: ExtremalResult,
}

/// `max_r (n−r)·Σ_{i≤r} w_i + r·Σ_{j>r} w_j` over `r = 1..n−1`, weights sorted
/// descending; the smallest maximising `r` is returned.
pub fn optimal_bipartition_threshold(w: &WeightVector) -> Result<ThresholdSplit> {
    let n = w.len();
    if n < 2 {
        return Err(Error::EmptyWeights);
    }
    let order = w.descending_order();
    let total = w.total();
    let mut head = Rational::zero();
    let mut best: Option<(Rational, usize)> = None;
    for r in 1..n {
        head += w.get(order[r - 1]);
        let tail = &total - &head;
        let value = &head * BigInt::from(n - r) + tail * BigInt::from(r);
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, r));
        }
    }
    let (value, r) = best.expect("n >= 2");
    let partition = Partition::new(n, vec![order[..r].to_vec(), order[r..].to_vec()], 2).expect("split covers 0..n");
    Ok(ThresholdSplit { r, result: ExtremalResult::new(w, partition, value, Objective::Sum) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedGraph;
    use crate::structure::sum_edge_weight;
    use proptest::prelude::*;

    fn int(v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    fn worked() -> WeightVector {
        WeightVector::from_integers([41, 33, 29, 13, 11, 7])
    }

    /// Exhaustive oracle: every assignment of labelled vertices to at most
    /// `parts` blocks.
    fn brute_force_best(w: &WeightVector, parts: usize) -> Rational {
        let n = w.len();
        let mut labels = vec![0usize; n];
        let mut best = Rational::zero();
        loop {
            let p = Partition::from_labels(&labels, parts).unwrap();
            let v = crate::extremal::sum_objective(w, &p);
            if v > best {
                best = v;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return best;
                }
                labels[i] += 1;
                if labels[i] < parts {
                    break;
                }
                labels[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn size_vectors_in_reverse_lex_order() {
        let got: Vec<Vec<usize>> = size_vectors(5, 3).into_iter().map(|s| s.0).collect();
        assert_eq!(
            got,
            vec![vec![5], vec![4, 1], vec![3, 2], vec![3, 1, 1], vec![2, 2, 1]]
        );
        assert_eq!(size_vectors(10, 10).len(), 42);
        assert_eq!(size_vectors(3, 1), vec![SizeVector(vec![3])]);
    }

    #[test]
    fn example_two_parts() {
        let r = optimal_sum_partition(&worked(), 2).unwrap();
        assert_eq!(r.objective_value, int(4 * 74 + 2 * 60));
        assert_eq!(r.objective_value, int(416));
        assert_eq!(r.partition.blocks(), &[vec![0, 1], vec![2, 3, 4, 5]]);
        assert_eq!(brute_force_best(&worked(), 2), int(416));
    }

    #[test]
    fn example_three_parts() {
        let r = optimal_sum_partition(&worked(), 3).unwrap();
        assert_eq!(brute_force_best(&worked(), 3), int(546));
        assert_eq!(r.objective_value, int(546));
        assert_eq!(r.partition.blocks(), &[vec![0], vec![1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn uniform_weights_give_balanced_bipartition() {
        for n in [2usize, 4, 6, 10] {
            let c = 3u64;
            let r = optimal_sum_partition(&WeightVector::uniform(n, c), 2).unwrap();
            assert_eq!(r.objective_value, int((c as usize * n * n / 2) as i64));
            assert_eq!(r.partition.sizes(), vec![n / 2, n / 2]);
        }
    }

    #[test]
    fn ties_prefer_lexicographically_smallest_sizes() {
        // All-zero weights: every size vector ties at 0.
        let r = optimal_sum_partition(&WeightVector::uniform(4, 0), 3).unwrap();
        assert_eq!(r.partition.sizes(), vec![2, 1, 1]);
    }

    #[test]
    fn more_parts_than_vertices() {
        let r = optimal_sum_partition(&WeightVector::from_integers([2, 5]), 7).unwrap();
        assert_eq!(r.objective_value, int(7));
        assert_eq!(r.partition.len(), 2);
    }

    #[test]
    fn rational_weights() {
        let w = WeightVector::parse("1/2\n1/3\n0.25\n").unwrap();
        let r = optimal_sum_partition(&w, 2).unwrap();
        let g = WeightedGraph::new(r.partition.to_graph(), w.clone()).unwrap();
        assert_eq!(r.objective_value, sum_edge_weight(&g));
        assert_eq!(r.objective_value, brute_force_best(&w, 2));
    }

    #[test]
    fn errors() {
        assert_eq!(optimal_sum_partition(&WeightVector::from_integers([]), 2).unwrap_err(), Error::EmptyWeights);
        assert_eq!(optimal_sum_partition(&worked(), 0).unwrap_err(), Error::ZeroParts);
        assert_eq!(
            optimal_bipartition_threshold(&WeightVector::from_integers([4])).unwrap_err(),
            Error::EmptyWeights
        );
    }

    #[test]
    fn threshold_examples() {
        let t = optimal_bipartition_threshold(&worked()).unwrap();
        assert_eq!((t.r, t.result.objective_value.clone()), (2, int(416)));
        let t = optimal_bipartition_threshold(&WeightVector::from_integers([1, 1])).unwrap();
        assert_eq!((t.r, t.result.objective_value.clone()), (1, int(2)));
        // r = 1: 3·100 + 1·3 = 303; r = 2: 2·101 + 2·2 = 206; r = 3: 1·102 + 3·1 = 105.
        let t = optimal_bipartition_threshold(&WeightVector::from_integers([100, 1, 1, 1])).unwrap();
        assert_eq!((t.r, t.result.objective_value.clone()), (1, int(303)));
    }

    /// Every assignment of the weights to the fixed block sizes.
    fn best_assignment_brute_force(w: &WeightVector, sizes: &[usize]) -> Rational {
        let n = w.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = Rational::zero();
        fn heap(k: usize, perm: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
            if k == 1 {
                visit(perm);
                return;
            }
            for i in 0..k {
                heap(k - 1, perm, visit);
                let j = if k.is_multiple_of(2) { i } else { 0 };
                perm.swap(j, k - 1);
            }
        }
        heap(n, &mut perm, &mut |p| {
            let mut offset = 0;
            let mut v = Rational::zero();
            for &s in sizes {
                for &x in &p[offset..offset + s] {
                    v += w.get(x) * BigInt::from(n - s);
                }
                offset += s;
            }
            if v > best {
                best = v;
            }
        });
        best
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn sorted_assignment_is_optimal(ws in prop::collection::vec(0u64..50, 1..=8), parts in 1usize..4) {
            let w = WeightVector::from_integers(ws);
            for sv in size_vectors(w.len(), parts) {
                prop_assert_eq!(assignment_value(&w, &sv), best_assignment_brute_force(&w, &sv.0));
            }
        }

        #[test]
        fn optimizer_matches_exhaustive_labelings(ws in prop::collection::vec(0u64..30, 1..=7), parts in 1usize..4) {
            let w = WeightVector::from_integers(ws);
            let r = optimal_sum_partition(&w, parts).unwrap();
            prop_assert_eq!(r.objective_value.clone(), brute_force_best(&w, parts));
            prop_assert!(r.partition.len() <= parts);
        }

        #[test]
        fn threshold_scan_equals_two_part_optimum(ws in prop::collection::vec(0u64..1000, 2..=20)) {
            let w = WeightVector::from_integers(ws);
            prop_assert_eq!(
                optimal_bipartition_threshold(&w).unwrap().result.objective_value,
                optimal_sum_partition(&w, 2).unwrap().objective_value
            );
        }

        #[test]
        fn heavier_vertices_never_have_smaller_degree(ws in prop::collection::vec(0u64..20, 1..=12), parts in 1usize..5) {
            let w = WeightVector::from_integers(ws);
            let r = optimal_sum_partition(&w, parts).unwrap();
            let g = r.graph.graph();
            for u in 0..w.len() {
                for v in 0..w.len() {
                    if w.get(u) > w.get(v) {
                        prop_assert!(g.degree(u) >= g.degree(v));
                    }
                }
            }
        }
    }
}
