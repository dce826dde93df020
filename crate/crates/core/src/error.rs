use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::Vertex;

/// Errors raised by constructions and oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("loop at vertex {0}")]
    Loop(Vertex),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),

    #[error("antiparallel arcs between {0} and {1}")]
    Antiparallel(Vertex, Vertex),

    #[error("hyperedge {index} has {size} vertices; at least 2 required")]
    EdgeTooSmall { index: usize, size: usize },

    #[error("hyperedge {index} repeats vertex {vertex}")]
    RepeatedVertexInEdge { index: usize, vertex: Vertex },

    #[error("order is not a permutation of 0..{0}")]
    BadOrder(usize),

    #[error("digraph contains a directed cycle through vertex {0}")]
    Cyclic(Vertex),

    #[error("two distinct directed paths from {from} to {to}")]
    AmbiguousDistance { from: Vertex, to: Vertex },

    #[error("search budget of {budget} steps exhausted; bounds [{lower}, {upper}]")]
    BudgetExceeded { budget: u64, lower: usize, upper: usize },

    #[error("cycle enumeration budget of {budget} steps exhausted after {cycles} cycles")]
    CycleBudgetExceeded {
        budget: u64,
        cycles: u64,
        partial: crate::base::MinDirectionChanges,
    },

    #[error("size guard: {0}")]
    SizeGuard(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no B_{h} set of size {size} containing the seed exists within [1, {bound}]")]
    BhExhausted { size: usize, h: usize, bound: u64 },

    #[error("interval sum d[{from}..={to}] = {sum} is not a difference of the set")]
    HypothesisViolation { from: usize, to: usize, sum: u64 },

    #[error("internal contradiction: {0}")]
    Contradiction(String),

    #[error("template for stage {stage} must be {expected}-uniform; edge {edge} has size {found}")]
    TemplateMismatch { stage: usize, expected: usize, edge: usize, found: usize },

    #[error("template for stage {stage} has girth {girth}, below the required {required}")]
    TemplateGirth { stage: usize, girth: usize, required: usize },

    #[error("no qualifying hypergraph found within {attempts} attempts")]
    GenerationExhausted { attempts: u32 },

    #[error("path too short: {len} arcs, need at least {needed}")]
    PathTooShort { len: usize, needed: usize },

    #[error("path is not a monochromatic directed path: {0}")]
    NotMonochromatic(String),

    #[error("vertex set contains an induced copy of the target: {0:?}")]
    NotFree(Vec<Vertex>),
}

pub type Result<T> = core::result::Result<T, CoreError>;
