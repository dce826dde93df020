//! Exact decision procedures used to certify constructed instances.

pub mod chromatic;
pub mod clique;
pub mod girth;
pub mod hyper;
pub mod induced;
pub mod longest;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

pub use chromatic::{chromatic_number, dsatur_greedy, k_colorable, ChromaticResult, MAX_COLORS};
pub use clique::{clique_number, CliqueResult};
pub use girth::{girth_stats, Girth, GirthStats};
pub use hyper::{hypergraph_chromatic, hypergraph_girth, hypergraph_k_colorable, strong_chromatic};
pub use induced::{
    contains_induced, contains_induced_hypergraph, is_induced_embedding, is_induced_hyper_embedding,
};
pub use longest::{longest_path_coloring, longest_path_length};

/// A vertex coloring. `assignment[v]` is the color of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    /// Number of distinct colors in `assignment`.
    pub colors_used: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>) -> Self {
        let colors_used = assignment.iter().collect::<BTreeSet<_>>().len();
        Coloring { assignment, colors_used }
    }

    /// Renumbers colors to `0..colors_used` in order of first appearance.
    pub fn normalized(&self) -> Coloring {
        let mut map = alloc::collections::BTreeMap::new();
        let assignment = self
            .assignment
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring { assignment, colors_used: self.colors_used }
    }
}
