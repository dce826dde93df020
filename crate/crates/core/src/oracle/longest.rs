//! Coloring an acyclic digraph by longest outgoing path length.

use alloc::vec;

use super::Coloring;
use crate::error::{CoreError, Result};
use crate::graph::Digraph;

/// Colors each vertex with the number of arcs on the longest directed path
/// starting there. Every arc `u -> v` has `color(u) > color(v)`, so the
/// coloring is proper for the underlying graph.
pub fn longest_path_coloring(d: &Digraph) -> Result<Coloring> {
    let order = d.topological_order().map_err(CoreError::Cyclic)?;
    let mut len = vec![0usize; d.vertex_count()];
    for &u in order.iter().rev() {
        len[u] = d.out_neighbors(u).iter().map(|&w| len[w] + 1).max().unwrap_or(0);
    }
    Ok(Coloring::new(len))
}

/// Number of arcs on a longest directed path; `None` for the empty digraph.
pub fn longest_path_length(d: &Digraph) -> Result<Option<usize>> {
    let c = longest_path_coloring(d)?;
    Ok(c.assignment.iter().copied().max())
}
