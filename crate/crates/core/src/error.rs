use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("weight vector is empty (or too short for this operation)")]
    EmptyWeights,
    #[error("negative weight {value} at vertex {vertex}")]
    NegativeWeight { vertex: usize, value: String },
    #[error("weight vector has {weights} entries but the graph has {vertices} vertices")]
    LengthMismatch { weights: usize, vertices: usize },
    #[error("graphs are limited to 1..=64 vertices, got {0}")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("pattern has {n} vertices; exact chromatic number is capped at {cap}")]
    PatternTooLarge { n: usize, cap: usize },
    #[error("forbidden pattern must have at least one edge")]
    EdgelessPattern,
    #[error("clique size must be at least 2, got {0}")]
    CliqueSize(usize),
    #[error("number of parts must be at least 1")]
    ZeroParts,
    #[error("graph contains K_{0}")]
    CliquePresent(usize),
    #[error("pattern is bipartite (chromatic number {0}); the leading term degenerates")]
    BipartitePattern(usize),
    #[error("oracle search capped at n <= {cap} for this pattern, got n = {n}")]
    TooLarge { n: usize, cap: usize },
    #[error("scaled integer weights overflow the oracle's 64-bit accumulator")]
    Overflow,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
