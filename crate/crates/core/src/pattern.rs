use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::structure::chromatic_number;

/// The forbidden subgraph `H`: a clique `K_l` or an arbitrary small graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenPattern {
    Clique(usize),
    General(SimpleGraph),
}

impl ForbiddenPattern {
    pub fn clique(l: usize) -> Result<Self> {
        if l < 2 {
            return Err(Error::CliqueSize(l));
        }
        Ok(Self::Clique(l))
    }

    pub fn general(h: SimpleGraph) -> Result<Self> {
        if h.edge_count() == 0 {
            return Err(Error::EdgelessPattern);
        }
        Ok(Self::General(h))
    }

    /// Parses `K<l>`, `C<n>`, `P<n>`, `petersen` or `file:<path>`. `K<l>` is
    /// always a clique pattern; everything else is a general pattern.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let bad = |msg: String| Error::Parse { line: 0, msg };
        if let Some(path) = spec.strip_prefix("file:") {
            let text = std::fs::read_to_string(path).map_err(|e| bad(format!("{path}: {e}")))?;
            return Self::general(SimpleGraph::parse(&text)?);
        }
        if let Some(l) = spec.strip_prefix(['K', 'k']) {
            let l: usize = l.parse().map_err(|_| bad(format!("bad clique size in {spec:?}")))?;
            if l > crate::graph::MAX_VERTICES {
                return Err(bad(format!("clique size {l} exceeds 64")));
            }
            return Self::clique(l);
        }
        let h = SimpleGraph::named(spec).ok_or_else(|| bad(format!("unknown pattern {spec:?}")))?;
        Self::general(h)
    }

    /// Vertex count of the pattern graph.
    pub fn order(&self) -> usize {
        match self {
            Self::Clique(l) => *l,
            Self::General(h) => h.n(),
        }
    }

    pub fn chromatic_number(&self) -> Result<usize> {
        match self {
            Self::Clique(l) => Ok(*l),
            Self::General(h) => chromatic_number(h),
        }
    }

    /// The pattern as an explicit graph.
    pub fn to_graph(&self) -> SimpleGraph {
        match self {
            Self::Clique(l) => SimpleGraph::complete(*l).expect("clique size validated"),
            Self::General(h) => h.clone(),
        }
    }
}

impl fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Clique(l) => write!(f, "K{l}"),
            Self::General(h) => write!(f, "H(n={}, e={})", h.n(), h.edge_count()),
        }
    }
}
