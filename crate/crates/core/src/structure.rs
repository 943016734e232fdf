//! Edge-weight objectives and structural queries: cliques, subgraph
//! embeddings, multipartite recognition and chromatic number.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{bits, low_mask, SimpleGraph, WeightedGraph};
use crate::partition::Partition;
use crate::weights::{Rational, WeightVector};

pub const CHROMATIC_CAP: usize = 16;

/// `w₊(G)`, evaluated through the degree identity `Σ_v d(v)·w(v)`.
pub fn sum_edge_weight(g: &WeightedGraph) -> Rational {
    let graph = g.graph();
    g.weights()
        .iter()
        .enumerate()
        .filter(|(v, _)| graph.degree(*v) > 0)
        .fold(Rational::zero(), |acc, (v, w)| acc + w * BigInt::from(graph.degree(v)))
}

/// `w_π(G) = Σ_{uv∈E} w(u)·w(v)`.
pub fn product_edge_weight(g: &WeightedGraph) -> Rational {
    let w = g.weights();
    g.graph()
        .edges()
        .fold(Rational::zero(), |acc, (u, v)| acc + w.get(u) * w.get(v))
}

/// Sum-edge-weight of an explicit edge list.
pub fn sum_weight_of_edges(w: &WeightVector, edges: &[(usize, usize)]) -> Rational {
    edges
        .iter()
        .fold(Rational::zero(), |acc, &(u, v)| acc + w.get(u) + w.get(v))
}

/// True if the vertices in `candidates` span a clique of size `k`.
pub fn has_clique_in(rows: &[u64], candidates: u64, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (candidates.count_ones() as usize) < k {
        return false;
    }
    if k == 1 {
        return true;
    }
    bits(candidates).any(|v| has_clique_in(rows, candidates & rows[v] & !low_mask(v + 1), k - 1))
}

pub fn contains_clique(g: &SimpleGraph, l: usize) -> bool {
    has_clique_in(g.rows(), g.vertex_mask(), l)
}

/// Backtracking embedder of a pattern `h` into a host given by adjacency rows.
struct Embedder<'a> {
    host: &'a [u64],
    h: &'a SimpleGraph,
    order: Vec<usize>,
    degree_ok: Vec<u64>,
    image: Vec<usize>,
}

impl<'a> Embedder<'a> {
    fn new(host: &'a [u64], h: &'a SimpleGraph, first: &[usize]) -> Self {
        let hn = h.n();
        let mut order: Vec<usize> = first.to_vec();
        let mut placed: u64 = first.iter().fold(0, |m, &v| m | 1 << v);
        // Connected-first ordering: most already-placed neighbours, then degree.
        while order.len() < hn {
            let next = (0..hn)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| (h.degree_in(v, placed), h.degree(v), std::cmp::Reverse(v)))
                .expect("unplaced vertex exists");
            order.push(next);
            placed |= 1 << next;
        }
        let host_deg: Vec<usize> = host.iter().map(|r| r.count_ones() as usize).collect();
        let degree_ok = (0..hn)
            .map(|hv| {
                host_deg
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d >= h.degree(hv))
                    .fold(0u64, |m, (gv, _)| m | 1 << gv)
            })
            .collect();
        Self { host, h, order, degree_ok, image: vec![usize::MAX; hn] }
    }

    fn candidates(&self, pos: usize, used: u64) -> u64 {
        let hv = self.order[pos];
        let mut cand = self.degree_ok[hv] & !used;
        for &hu in &self.order[..pos] {
            if self.h.has_edge(hu, hv) {
                cand &= self.host[self.image[hu]];
            }
        }
        cand
    }

    fn extend(&mut self, pos: usize, used: u64, fixed: &[usize]) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let cand = self.candidates(pos, used);
        let cand = match fixed.get(pos) {
            Some(&gv) => cand & (1u64 << gv),
            None => cand,
        };
        for gv in bits(cand) {
            self.image[self.order[pos]] = gv;
            if self.extend(pos + 1, used | 1 << gv, fixed) {
                return true;
            }
        }
        self.image[self.order[pos]] = usize::MAX;
        false
    }
}

fn edge_total(rows: &[u64]) -> usize {
    rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
}

/// Non-induced subgraph containment: some injective map sends every edge of
/// `h` onto an edge of `g`.
pub fn contains_subgraph(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    contains_subgraph_rows(g.rows(), h)
}

pub fn contains_subgraph_rows(host: &[u64], h: &SimpleGraph) -> bool {
    if h.n() > host.len() || h.edge_count() > edge_total(host) {
        return false;
    }
    Embedder::new(host, h, &[]).extend(0, 0, &[])
}

/// True if `h` embeds into the host using the host edge `u`–`v`. The host
/// must contain that edge.
pub fn embeds_through_edge(host: &[u64], h: &SimpleGraph, u: usize, v: usize) -> bool {
    if h.n() > host.len() || h.edge_count() > edge_total(host) {
        return false;
    }
    h.edges().any(|(a, b)| {
        [(u, v), (v, u)].iter().any(|&(x, y)| {
            let mut e = Embedder::new(host, h, &[a, b]);
            e.extend(0, 0, &[x, y])
        })
    })
}

/// If non-adjacency is an equivalence relation, returns its classes (the
/// graph is then complete multipartite on them).
pub fn complete_multipartite_structure(g: &SimpleGraph) -> Option<Partition> {
    let all = g.vertex_mask();
    let class = |v: usize| all & !g.neighbors(v);
    let mut blocks = Vec::new();
    let mut seen = 0u64;
    for v in 0..g.n() {
        if seen >> v & 1 == 1 {
            continue;
        }
        let c = class(v);
        if bits(c).any(|u| class(u) != c) {
            return None;
        }
        seen |= c;
        blocks.push(bits(c).collect::<Vec<_>>());
    }
    let count = blocks.len();
    Some(Partition::new(g.n(), blocks, count).expect("classes partition the vertices"))
}

fn colourable(h: &SimpleGraph, order: &[usize], colours: usize) -> bool {
    fn go(h: &SimpleGraph, order: &[usize], k: usize, pos: usize, used: usize, colour: &mut [usize]) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        // A fresh colour is interchangeable with every other unused one.
        for c in 0..(used + 1).min(k) {
            if bits(h.neighbors(v)).all(|u| colour[u] != c) {
                colour[v] = c;
                if go(h, order, k, pos + 1, used.max(c + 1), colour) {
                    return true;
                }
                colour[v] = usize::MAX;
            }
        }
        false
    }
    let mut colour = vec![usize::MAX; h.n()];
    go(h, order, colours, 0, 0, &mut colour)
}

/// Exact chromatic number by iterative deepening over the colour count.
pub fn chromatic_number(h: &SimpleGraph) -> Result<usize> {
    if h.n() > CHROMATIC_CAP {
        return Err(Error::PatternTooLarge { n: h.n(), cap: CHROMATIC_CAP });
    }
    if h.edge_count() == 0 {
        return Ok(1);
    }
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    Ok((2..=h.n()).find(|&k| colourable(h, &order, k)).unwrap_or(h.n()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::WeightVector;

    fn k24() -> SimpleGraph {
        SimpleGraph::complete_multipartite(6, &[vec![0, 1], vec![2, 3, 4, 5]]).unwrap()
    }

    fn weighted(g: SimpleGraph, w: &[u64]) -> WeightedGraph {
        WeightedGraph::new(g, WeightVector::from_integers(w.iter().copied())).unwrap()
    }

    fn int(v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    fn per_edge_sum(g: &WeightedGraph) -> Rational {
        let edges: Vec<_> = g.graph().edges().collect();
        sum_weight_of_edges(g.weights(), &edges)
    }

    #[test]
    fn sum_weight_examples() {
        let edge = weighted(SimpleGraph::path(2).unwrap(), &[3, 5]);
        assert_eq!(sum_edge_weight(&edge), int(8));
        let empty = weighted(SimpleGraph::empty(3).unwrap(), &[4, 9, 2]);
        assert_eq!(sum_edge_weight(&empty), int(0));
        let bipartite_k24 = weighted(k24(), &[41, 33, 29, 13, 11, 7]);
        assert_eq!(sum_edge_weight(&bipartite_k24), int(4 * (41 + 33) + 2 * (29 + 13 + 11 + 7)));
        assert_eq!(sum_edge_weight(&bipartite_k24), int(416));
        assert_eq!(per_edge_sum(&bipartite_k24), int(416));
    }

    #[test]
    fn product_weight_examples() {
        let edge = weighted(SimpleGraph::path(2).unwrap(), &[3, 5]);
        assert_eq!(product_edge_weight(&edge), int(15));
        // weights indexed v1..v6 = 41,33,29,13,11,7; blocks {v2,v3,v6} | {v1,v4,v5}
        let balanced = SimpleGraph::complete_multipartite(6, &[vec![1, 2, 5], vec![0, 3, 4]]).unwrap();
        let balanced = weighted(balanced, &[41, 33, 29, 13, 11, 7]);
        let mut by_hand = 0;
        for a in [33, 29, 7] {
            for b in [41, 13, 11] {
                by_hand += a * b;
            }
        }
        assert_eq!(by_hand, 69 * 65);
        assert_eq!(product_edge_weight(&balanced), int(4485));
        assert_eq!(product_edge_weight(&weighted(SimpleGraph::empty(2).unwrap(), &[3, 5])), int(0));
    }

    fn brute_force_triangle(g: &SimpleGraph) -> bool {
        let n = g.n();
        (0..n).any(|a| {
            (a + 1..n).any(|b| (b + 1..n).any(|c| g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)))
        })
    }

    #[test]
    fn clique_examples() {
        assert!(contains_clique(&SimpleGraph::complete(4).unwrap(), 3));
        assert!(!contains_clique(&SimpleGraph::cycle(5).unwrap(), 3));
        assert!(!contains_clique(&k24(), 3));
        assert_eq!(contains_clique(&k24(), 3), brute_force_triangle(&k24()));
        assert!(contains_clique(&k24(), 2));
        assert!(!contains_clique(&SimpleGraph::empty(4).unwrap(), 2));
        assert!(contains_clique(&SimpleGraph::complete(64).unwrap(), 64));
    }

    fn brute_force_c5(g: &SimpleGraph) -> bool {
        // All injective 5-tuples mapped around the cycle.
        let n = g.n();
        let mut t = [0usize; 5];
        fn rec(g: &SimpleGraph, n: usize, t: &mut [usize; 5], k: usize) -> bool {
            if k == 5 {
                return (0..5).all(|i| g.has_edge(t[i], t[(i + 1) % 5]));
            }
            (0..n).any(|v| {
                if t[..k].contains(&v) {
                    return false;
                }
                t[k] = v;
                rec(g, n, t, k + 1)
            })
        }
        rec(g, n, &mut t, 0)
    }

    #[test]
    fn subgraph_examples() {
        let c5 = SimpleGraph::cycle(5).unwrap();
        assert!(contains_subgraph(&SimpleGraph::complete(5).unwrap(), &c5));
        let k33 = SimpleGraph::complete_multipartite(6, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert!(!contains_subgraph(&k33, &c5));
        assert!(contains_subgraph(&SimpleGraph::petersen(), &c5));
        assert!(brute_force_c5(&SimpleGraph::petersen()));
        assert!(!brute_force_c5(&k33));
        assert!(!contains_subgraph(&SimpleGraph::complete(4).unwrap(), &c5));
    }

    #[test]
    fn subgraph_with_isolated_pattern_vertices() {
        let h = SimpleGraph::from_edges(4, [(0, 1)]).unwrap();
        assert!(contains_subgraph(&SimpleGraph::path(4).unwrap(), &h));
        assert!(!contains_subgraph(&SimpleGraph::path(3).unwrap(), &h));
    }

    #[test]
    fn through_edge_embedding() {
        // Triangle plus pendant edge 2-3: a triangle uses 0-1 but not 2-3.
        let g = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let k3 = SimpleGraph::complete(3).unwrap();
        assert!(embeds_through_edge(g.rows(), &k3, 0, 1));
        assert!(!embeds_through_edge(g.rows(), &k3, 2, 3));
        let p3 = SimpleGraph::path(3).unwrap();
        assert!(embeds_through_edge(g.rows(), &p3, 3, 2));
    }

    #[test]
    fn multipartite_recognition() {
        let p = complete_multipartite_structure(&k24()).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2, 3, 4, 5]]);
        let p3 = complete_multipartite_structure(&SimpleGraph::path(3).unwrap()).unwrap();
        assert_eq!(p3.blocks(), &[vec![0, 2], vec![1]]);
        assert!(complete_multipartite_structure(&SimpleGraph::cycle(5).unwrap()).is_none());
        assert_eq!(complete_multipartite_structure(&SimpleGraph::complete(5).unwrap()).unwrap().len(), 5);
        assert_eq!(complete_multipartite_structure(&SimpleGraph::empty(4).unwrap()).unwrap().len(), 1);
    }

    /// Independent check of non-adjacency transitivity on C5.
    #[test]
    fn c5_non_adjacency_is_not_transitive() {
        let c5 = SimpleGraph::cycle(5).unwrap();
        let non_adj = |a: usize, b: usize| a == b || !c5.has_edge(a, b);
        let transitive = (0..5).all(|a| {
            (0..5).all(|b| (0..5).all(|c| !(non_adj(a, b) && non_adj(b, c)) || non_adj(a, c)))
        });
        assert!(!transitive);
    }

    fn brute_force_colourable(h: &SimpleGraph, k: usize) -> bool {
        let n = h.n();
        let total = k.pow(n as u32);
        (0..total).any(|mut code| {
            let mut col = vec![0; n];
            for c in col.iter_mut() {
                *c = code % k;
                code /= k;
            }
            h.edges().all(|(u, v)| col[u] != col[v])
        })
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&SimpleGraph::complete(4).unwrap()), Ok(4));
        assert_eq!(chromatic_number(&SimpleGraph::cycle(5).unwrap()), Ok(3));
        assert_eq!(chromatic_number(&SimpleGraph::cycle(6).unwrap()), Ok(2));
        assert_eq!(chromatic_number(&SimpleGraph::empty(3).unwrap()), Ok(1));
        let petersen = SimpleGraph::petersen();
        assert!(!brute_force_colourable(&petersen, 2));
        assert!(brute_force_colourable(&petersen, 3));
        assert_eq!(chromatic_number(&petersen), Ok(3));
        assert_eq!(
            chromatic_number(&SimpleGraph::empty(17).unwrap()),
            Err(Error::PatternTooLarge { n: 17, cap: 16 })
        );
    }
}
