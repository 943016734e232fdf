//! Simple graphs on at most 64 vertices with one bitmask row per vertex.

use std::fmt;

use crate::error::{Error, Result};
use crate::weights::WeightVector;

pub const MAX_VERTICES: usize = 64;

/// Iterates the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

pub fn bits(mask: u64) -> Bits {
    Bits(mask)
}

/// Mask with the low `n` bits set.
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An undirected simple graph. Values are immutable; the `with_*` builders
/// return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry, loops and
    /// stray high bits.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let valid = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !valid != 0 {
                return Err(Error::VertexOutOfRange { vertex: (row & !valid).trailing_zeros() as usize, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::Parse { line: 0, msg: format!("asymmetric adjacency between {v} and {u}") });
                }
            }
        }
        Ok(Self { n, adj: rows })
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn complete(n: usize) -> Result<Self> {
        let full = low_mask(n);
        let rows = (0..n).map(|v| full & !(1u64 << v)).collect();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Self { n, adj: rows })
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::VertexCount(n));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::from_edges(10, outer.chain(spokes).chain(inner)).expect("petersen edges are valid")
    }

    /// Complete multipartite graph whose blocks are given as vertex lists
    /// over `0..n`. Vertices in no block stay isolated.
    pub fn complete_multipartite(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let mut seen = 0u64;
        let mut masks = Vec::with_capacity(blocks.len());
        for block in blocks {
            let mut m = 0u64;
            for &v in block {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                m |= 1 << v;
            }
            seen |= m;
            masks.push(m);
        }
        for &m in &masks {
            let others = seen & !m;
            for v in bits(m) {
                g.adj[v] = others;
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Number of neighbours of `v` inside `set`.
    pub fn degree_in(&self, v: usize, set: u64) -> usize {
        (self.adj[v] & set).count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        if u < self.n && v < self.n {
            g.adj[u] &= !(1u64 << v);
            g.adj[v] &= !(1u64 << u);
        }
        g
    }

    /// Same vertex set, only the edges with both ends in `set`.
    pub fn restricted_to(&self, set: u64) -> Self {
        let adj = (0..self.n)
            .map(|v| if set >> v & 1 == 1 { self.adj[v] & set } else { 0 })
            .collect();
        Self { n: self.n, adj }
    }

    /// Parses the text graph format or, failing a `n` header, one of the
    /// named patterns `K3`..`K8`, `C3`..`C12`, `P2`..`P12`, `petersen`.
    pub fn parse(text: &str) -> Result<Self> {
        if let Some(g) = Self::named(text.trim()) {
            return Ok(g);
        }
        let mut n = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
            let num = |s: &str| s.parse::<usize>().map_err(|_| bad(&format!("expected an integer, got {s:?}")));
            match fields.as_slice() {
                ["n", count] if n.is_none() => n = Some(num(count)?),
                ["e", u, v] if n.is_some() => {
                    let (u, v) = (num(u)?, num(v)?);
                    if u == 0 || v == 0 {
                        return Err(bad("vertex indices are 1-based"));
                    }
                    edges.push((line_no, u - 1, v - 1));
                }
                _ if n.is_none() => return Err(bad("expected header `n <count>`")),
                _ => return Err(bad(&format!("unrecognised line {line:?}"))),
            }
        }
        let n = n.ok_or(Error::Parse { line: 0, msg: "missing `n <count>` header".into() })?;
        let mut g = Self::empty(n).map_err(|e| Error::Parse { line: 1, msg: e.to_string() })?;
        for (line, u, v) in edges {
            g.insert_edge(u, v).map_err(|e| Error::Parse { line, msg: e.to_string() })?;
        }
        Ok(g)
    }

    /// Looks up a named pattern (case-insensitive).
    pub fn named(name: &str) -> Option<Self> {
        let lower = name.to_ascii_lowercase();
        if lower == "petersen" {
            return Some(Self::petersen());
        }
        let (kind, size) = lower.split_at(lower.char_indices().nth(1)?.0);
        let size: usize = size.parse().ok()?;
        match kind {
            "k" if (3..=8).contains(&size) => Self::complete(size).ok(),
            "c" if (3..=12).contains(&size) => Self::cycle(size).ok(),
            "p" if (2..=12).contains(&size) => Self::path(size).ok(),
            _ => None,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// A graph together with one weight per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: SimpleGraph,
    weights: WeightVector,
}

impl WeightedGraph {
    pub fn new(graph: SimpleGraph, weights: WeightVector) -> Result<Self> {
        if graph.n() != weights.len() {
            return Err(Error::LengthMismatch { weights: weights.len(), vertices: graph.n() });
        }
        Ok(Self { graph, weights })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn into_parts(self) -> (SimpleGraph, WeightVector) {
        (self.graph, self.weights)
    }
}
