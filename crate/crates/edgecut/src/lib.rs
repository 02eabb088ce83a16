//! Deterministic edge-connectivity toolkit for simple graphs.
//!
//! The crate computes the edge connectivity λ and a concrete minimum cut of a
//! simple undirected graph. The interesting path contracts the graph down to a
//! small multigraph kernel that preserves every non-trivial minimum cut, using
//! personalized-PageRank push, conductance sweeps and a cut/trim/shave/scrap
//! pipeline; an exact Stoer–Wagner finisher then runs on the kernel. Exhaustive
//! brute-force oracles are included for verification at small scale.
//!
//! Entry points:
//! - [`graph::SimpleGraph`] / [`graph::MultiGraph`] — graph representations
//! - [`pagerank`] — push machinery, sweeps, and the nibble procedures
//! - [`pipeline::build_kernel`] — min-cut-preserving kernelization
//! - [`mincut::minimum_cut`] — top-level λ + witness cut
//! - [`mincut::certify_or_cut`] — certify "no non-trivial min-cut" or produce a
//!   low-conductance cut
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod families;
pub mod graph;
pub mod mincut;
pub mod pagerank;
pub mod pipeline;
pub mod report;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: {kind} not allowed in strict mode")]
    Simplicity {
        line: usize,
        kind: SimplicityViolation,
    },
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unknown vertex {0}")]
    UnknownVertex(u32),
    #[error("graph too large for exhaustive enumeration (n={n}, limit={limit})")]
    TooLarge { n: usize, limit: usize },
    #[error("need at least {need} vertices, got {got}")]
    TooFewVertices { need: usize, got: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// What a strict-mode parse rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplicityViolation {
    SelfLoop,
    DuplicateEdge,
}

impl std::fmt::Display for SimplicityViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SimplicityViolation::SelfLoop => write!(f, "self-loop"),
            SimplicityViolation::DuplicateEdge => write!(f, "duplicate edge"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
