//! Vertex-weighted Turán numbers.
//!
//! A vertex weight `w` induces edge weights `w(u)+w(v)` (sum) or `w(u)·w(v)`
//! (product). This crate computes the maximum total edge weight of a
//! `K_l`-free graph on `n` weighted vertices exactly, builds the complete
//! multipartite graphs that attain it, and provides:
//!
//! * [`extremal`]: partition optimizers for both objectives, the
//!   degree-dominating multipartite upgrade, and the multipartite leading
//!   term for a general forbidden graph;
//! * [`stability`]: greedy peeling of a `K_{l+1}`-free graph into `l` blocks,
//!   with the removed intra-block weight compared to the extremal deficit;
//! * [`oracle`]: an exhaustive branch-and-bound over all pattern-free edge
//!   sets of `K_n`, used to certify the formulas at small `n`.
//!
//! All weights are exact rationals.

pub mod error;
pub mod extremal;
pub mod generate;
pub mod graph;
mod numeric;
pub mod oracle;
pub mod partition;
pub mod pattern;
pub mod report;
pub mod stability;
pub mod structure;
pub mod weights;

pub use error::{Error, Result};
pub use extremal::{ex_product, ex_sum, extremal, ExtremalResult, Objective};
pub use graph::{SimpleGraph, WeightedGraph};
pub use partition::Partition;
pub use pattern::ForbiddenPattern;
pub use weights::{Rational, WeightVector};
