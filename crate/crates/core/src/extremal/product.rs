use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::numeric::{below_pow2, ExactInt};
use crate::partition::Partition;
use crate::weights::WeightVector;

use super::{pair_product_sum, ExtremalResult, Objective};

/// Above this many vertices the exact search is seeded with a greedy bound.
pub const EXACT_PRODUCT_CAP: usize = 24;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ProductOptions {
    /// Return the greedy (largest-first, least-loaded block) partition
    /// without running the exact search.
    pub heuristic_only: bool,
}

/// Maximises `Σ_{P≠P'} w(P)·w(P')` over partitions into at most `parts`
/// blocks; this is `ex(n, w_π, K_{parts+1})`.
pub fn optimal_product_partition(w: &WeightVector, parts: usize) -> Result<ExtremalResult> {
    optimal_product_partition_with(w, parts, ProductOptions::default(), &mut |_| {})
}

/// As [`optimal_product_partition`]; `on_leaf` sees every complete
/// assignment the search reaches (including the greedy seed).
pub fn optimal_product_partition_with(
    w: &WeightVector,
    parts: usize,
    options: ProductOptions,
    on_leaf: &mut dyn FnMut(&Partition),
) -> Result<ExtremalResult> {
    if w.is_empty() {
        return Err(Error::EmptyWeights);
    }
    if parts == 0 {
        return Err(Error::ZeroParts);
    }
    let n = w.len();
    let k = parts.min(n);
    let (scaled, _) = w.scaled_integers();
    let order = w.descending_order();
    let total: BigInt = scaled.iter().sum();
    let labels = if below_pow2(&total, 58) {
        search::<i128>(&scaled, &order, k, n, options, on_leaf)
    } else {
        search::<BigInt>(&scaled, &order, k, n, options, on_leaf)
    };
    let partition = Partition::from_labels(&labels, parts).expect("labels cover 0..n");
    let value = pair_product_sum(w, &partition);
    Ok(ExtremalResult::new(w, partition, value, Objective::Product))
}

struct Search<'a, T> {
    items: Vec<T>,
    order: &'a [usize],
    /// Suffix sums of `items`.
    remaining: Vec<T>,
    sums: Vec<T>,
    labels: Vec<usize>,
    best: Option<(T, Vec<usize>)>,
    on_leaf: &'a mut dyn FnMut(&Partition),
}

fn square_sum<T: ExactInt>(xs: &[T]) -> T {
    xs.iter().fold(T::zero(), |acc, x| acc + x.clone() * x.clone())
}

/// Smallest `Σ (s_j + x_j)²` over integers `x_j ≥ 0` with `Σ x_j = rest`:
/// pour `rest` into the lowest blocks until they level out, splitting the
/// final level as evenly as integers allow.
fn water_fill<T: ExactInt>(sums: &[T], rest: &T) -> T {
    let mut sorted = sums.to_vec();
    sorted.sort();
    let k = sorted.len();
    let mut low = T::zero();
    for m in 1..=k {
        low = low + sorted[m - 1].clone();
        let level_total = rest.clone() + low.clone();
        let width = T::from(m as i64);
        if m == k || level_total <= width.clone() * sorted[m].clone() {
            let (q, r) = level_total.div_rem(&width);
            let q1 = q.clone() + T::from(1);
            let filled = (width - r.clone()) * q.clone() * q + r * q1.clone() * q1;
            return square_sum(&sorted[m..]) + filled;
        }
    }
    unreachable!("m == k always terminates")
}

impl<T: ExactInt> Search<'_, T> {
    fn leaf(&mut self) {
        let labels: Vec<usize> = {
            let mut l = vec![0; self.labels.len()];
            for (pos, &b) in self.labels.iter().enumerate() {
                l[self.order[pos]] = b;
            }
            l
        };
        (self.on_leaf)(&Partition::from_labels(&labels, self.sums.len()).expect("complete labelling"));
        let value = square_sum(&self.sums);
        if self.best.as_ref().is_none_or(|(b, _)| value < *b) {
            self.best = Some((value, labels));
        }
    }

    fn pruned(&self, pos: usize) -> bool {
        let Some((best, _)) = &self.best else { return false };
        water_fill(&self.sums, &self.remaining[pos]) >= *best
    }

    fn dfs(&mut self, pos: usize) {
        if pos == self.items.len() {
            self.leaf();
            return;
        }
        if self.pruned(pos) {
            return;
        }
        // Least-loaded block first; blocks with equal loads are interchangeable.
        let mut blocks: Vec<usize> = (0..self.sums.len()).collect();
        blocks.sort_by(|&a, &b| self.sums[a].cmp(&self.sums[b]).then(a.cmp(&b)));
        let mut tried: Vec<T> = Vec::new();
        for b in blocks {
            if tried.contains(&self.sums[b]) {
                continue;
            }
            tried.push(self.sums[b].clone());
            let item = self.items[pos].clone();
            self.sums[b] = self.sums[b].clone() + item.clone();
            self.labels[pos] = b;
            self.dfs(pos + 1);
            self.sums[b] = self.sums[b].clone() - item;
        }
    }

    /// Largest-first, least-loaded-block assignment.
    fn greedy(&mut self) {
        for pos in 0..self.items.len() {
            let b = (0..self.sums.len())
                .min_by(|&a, &b| self.sums[a].cmp(&self.sums[b]).then(a.cmp(&b)))
                .expect("k >= 1");
            self.sums[b] = self.sums[b].clone() + self.items[pos].clone();
            self.labels[pos] = b;
        }
        self.leaf();
        self.sums.iter_mut().for_each(|s| *s = T::zero());
    }
}

fn search<T: ExactInt>(
    scaled: &[BigInt],
    order: &[usize],
    k: usize,
    n: usize,
    options: ProductOptions,
    on_leaf: &mut dyn FnMut(&Partition),
) -> Vec<usize> {
    let items: Vec<T> = order.iter().map(|&v| T::from_big(&scaled[v])).collect();
    let mut remaining = vec![T::zero(); n + 1];
    for i in (0..n).rev() {
        remaining[i] = remaining[i + 1].clone() + items[i].clone();
    }
    let mut s = Search {
        items,
        order,
        remaining,
        sums: vec![T::zero(); k],
        labels: vec![0; n],
        best: None,
        on_leaf,
    };
    if options.heuristic_only || n > EXACT_PRODUCT_CAP {
        s.greedy();
    }
    if !options.heuristic_only {
        s.dfs(0);
    }
    s.best.expect("at least one leaf").1
}
