//! Maximum clique by degeneracy decomposition and bitset branch and bound.
//!
//! Every clique has a vertex that comes first in a degeneracy order, and all
//! its other members are later neighbors of that vertex. Each subproblem is
//! therefore confined to at most `degeneracy` candidates, solved with a
//! greedy-coloring bound.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{UGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    /// A maximum clique, sorted.
    pub vertices: Vec<Vertex>,
}

/// Exact clique number with a maximum clique as witness.
pub fn clique_number(g: &UGraph) -> CliqueResult {
    let n = g.vertex_count();
    if n == 0 {
        return CliqueResult { size: 0, vertices: Vec::new() };
    }
    let order = degeneracy_order(g);
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut best: Vec<Vertex> = vec![order[0]];
    for &v in &order {
        let later: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        if later.len() < best.len() {
            continue;
        }
        let local = LocalGraph::new(g, &later);
        let mut current = Vec::new();
        let mut found: Vec<usize> = Vec::new();
        let target = best.len() - 1;
        let all = local.full_set();
        local.expand(&mut current, all, target, &mut found);
        if found.len() > target {
            let mut clique: Vec<Vertex> = found.iter().map(|&i| later[i]).collect();
            clique.push(v);
            best = clique;
        }
    }
    best.sort_unstable();
    CliqueResult { size: best.len(), vertices: best }
}

fn degeneracy_order(g: &UGraph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let maxd = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); maxd + 1];
    for v in (0..n).rev() {
        buckets[deg[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    while order.len() < n {
        d = d.min(maxd);
        while buckets[d].is_empty() {
            d += 1;
        }
        let v = buckets[d].pop().unwrap();
        if removed[v] || deg[v] != d {
            continue;
        }
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                buckets[deg[w]].push(w);
            }
        }
        d = d.saturating_sub(1);
    }
    order
}

struct LocalGraph {
    words: usize,
    len: usize,
    adj: Vec<Vec<u64>>,
}

impl LocalGraph {
    fn new(g: &UGraph, vertices: &[Vertex]) -> Self {
        let len = vertices.len();
        let words = len.div_ceil(64).max(1);
        let mut adj = vec![vec![0u64; words]; len];
        for i in 0..len {
            for j in i + 1..len {
                if g.has_edge(vertices[i], vertices[j]) {
                    adj[i][j / 64] |= 1 << (j % 64);
                    adj[j][i / 64] |= 1 << (i % 64);
                }
            }
        }
        LocalGraph { words, len, adj }
    }

    fn full_set(&self) -> Vec<u64> {
        let mut s = vec![0u64; self.words];
        for i in 0..self.len {
            s[i / 64] |= 1 << (i % 64);
        }
        s
    }

    /// Greedy coloring of `set`; returns vertices in color order with their color numbers.
    fn color_sort(&self, set: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = set.to_vec();
        let mut order = Vec::new();
        let mut bounds = Vec::new();
        let mut color = 0;
        while uncolored.iter().any(|&w| w != 0) {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(i) = first_bit(&avail) {
                avail[i / 64] &= !(1 << (i % 64));
                uncolored[i / 64] &= !(1 << (i % 64));
                for (a, m) in avail.iter_mut().zip(&self.adj[i]) {
                    *a &= !m;
                }
                order.push(i);
                bounds.push(color);
            }
        }
        (order, bounds)
    }

    /// Extends `current` within `cand`; records into `best` any clique larger than `target`.
    fn expand(&self, current: &mut Vec<usize>, mut cand: Vec<u64>, target: usize, best: &mut Vec<usize>) {
        let (order, bounds) = self.color_sort(&cand);
        for idx in (0..order.len()).rev() {
            let floor = target.max(best.len());
            if current.len() + bounds[idx] <= floor {
                return;
            }
            let v = order[idx];
            current.push(v);
            let next: Vec<u64> = cand.iter().zip(&self.adj[v]).map(|(c, a)| c & a).collect();
            if next.iter().all(|&w| w == 0) {
                if current.len() > floor {
                    *best = current.clone();
                }
            } else {
                self.expand(current, next, target, best);
            }
            current.pop();
            cand[v / 64] &= !(1 << (v % 64));
        }
    }
}

fn first_bit(set: &[u64]) -> Option<usize> {
    set.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph() {
        let r = clique_number(&UGraph::complete(4));
        assert_eq!(r.size, 4);
        assert_eq!(r.vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn edgeless_and_empty() {
        assert_eq!(clique_number(&UGraph::empty(3)).size, 1);
        assert_eq!(clique_number(&UGraph::empty(0)).size, 0);
    }

    #[test]
    fn cycle_has_clique_two() {
        assert_eq!(clique_number(&UGraph::cycle(5).unwrap()).size, 2);
        assert_eq!(clique_number(&UGraph::cycle(3).unwrap()).size, 3);
    }

    #[test]
    fn finds_hidden_clique() {
        // K_5 on {3,7,11,12,19} inside a sparse 20-vertex graph.
        let k = [3usize, 7, 11, 12, 19];
        let mut edges: Vec<(usize, usize)> = (0..19).map(|i| (i, i + 1)).filter(|&(a, b)| !(k.contains(&a) && k.contains(&b))).collect();
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push((k[i], k[j]));
            }
        }
        let g = UGraph::new(20, edges).unwrap();
        let r = clique_number(&g);
        assert_eq!(r.size, 5);
        assert_eq!(r.vertices, k.to_vec());
    }
}
