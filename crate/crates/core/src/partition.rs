use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Disjoint vertex blocks covering `0..n`, stored canonically: empty blocks
/// dropped, each block sorted, blocks ordered by their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    cap: usize,
}

impl Partition {
    /// Validates coverage and disjointness, then canonicalises. `cap` is the
    /// intended number of parts; more non-empty blocks than `cap` is an error.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>, cap: usize) -> Result<Self> {
        let mut owner = vec![false; n];
        for block in &blocks {
            for &v in block {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut owner[v], true) {
                    return Err(Error::Parse { line: 0, msg: format!("vertex {v} appears in two blocks") });
                }
            }
        }
        if let Some(v) = owner.iter().position(|&o| !o) {
            return Err(Error::Parse { line: 0, msg: format!("vertex {v} is in no block") });
        }
        let mut blocks: Vec<Vec<usize>> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        if blocks.len() > cap {
            return Err(Error::Parse {
                line: 0,
                msg: format!("{} non-empty blocks exceed the cap of {cap}", blocks.len()),
            });
        }
        Ok(Self { n, blocks, cap })
    }

    /// Partition from a block label per vertex.
    pub fn from_labels(labels: &[usize], cap: usize) -> Result<Self> {
        let parts = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); parts];
        for (v, &b) in labels.iter().enumerate() {
            blocks[b].push(v);
        }
        Self::new(labels.len(), blocks, cap)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block sizes, non-increasing.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// Block index of every vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v] = i;
            }
        }
        out
    }

    pub fn one_based(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.iter().map(|v| v + 1).collect()).collect()
    }

    /// The complete multipartite graph on these blocks.
    pub fn to_graph(&self) -> SimpleGraph {
        SimpleGraph::complete_multipartite(self.n, &self.blocks).expect("partition covers 0..n")
    }
}
