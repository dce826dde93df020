//! Induced subgraph and sub-hypergraph containment by backtracking.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Hypergraph, UGraph, Vertex};

/// Finds an injective map `pattern -> host` under which the pattern is an
/// induced subgraph. `result[i]` is the image of pattern vertex `i`.
pub fn contains_induced(host: &UGraph, pattern: &UGraph) -> Option<Vec<Vertex>> {
    let k = pattern.vertex_count();
    if k == 0 {
        return Some(Vec::new());
    }
    if k > host.vertex_count() {
        return None;
    }
    let order = matching_order(pattern);
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; host.vertex_count()];
    if extend(host, pattern, &order, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

/// Most-constrained-first order: each next vertex has the most neighbors
/// among those already placed.
fn matching_order(pattern: &UGraph) -> Vec<Vertex> {
    let k = pattern.vertex_count();
    let mut placed = vec![false; k];
    let mut links = vec![0usize; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let v = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], pattern.degree(v), core::cmp::Reverse(v)))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &w in pattern.neighbors(v) {
            links[w] += 1;
        }
    }
    order
}

fn extend(
    host: &UGraph,
    pattern: &UGraph,
    order: &[Vertex],
    depth: usize,
    image: &mut [Vertex],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let anchor = order[..depth].iter().copied().find(|&q| pattern.has_edge(p, q));
    let all: Vec<Vertex>;
    let candidates: &[Vertex] = match anchor {
        Some(q) => host.neighbors(image[q]),
        None => {
            all = (0..host.vertex_count()).collect();
            &all
        }
    };
    for &h in candidates {
        if used[h] || host.degree(h) < pattern.degree(p) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&q| pattern.has_edge(p, q) == host.has_edge(h, image[q]));
        if !consistent {
            continue;
        }
        image[p] = h;
        used[h] = true;
        if extend(host, pattern, order, depth + 1, image, used) {
            return true;
        }
        used[h] = false;
        image[p] = usize::MAX;
    }
    false
}

/// True when `image` maps `pattern` onto an induced subgraph of `host`.
pub fn is_induced_embedding(host: &UGraph, pattern: &UGraph, image: &[Vertex]) -> bool {
    let k = pattern.vertex_count();
    if image.len() != k || image.iter().any(|&h| h >= host.vertex_count()) {
        return false;
    }
    let distinct: BTreeSet<_> = image.iter().collect();
    if distinct.len() != k {
        return false;
    }
    (0..k).all(|i| (i + 1..k).all(|j| pattern.has_edge(i, j) == host.has_edge(image[i], image[j])))
}

/// True when `image` maps `pattern` onto an induced sub-hypergraph of `host`.
pub fn is_induced_hyper_embedding(host: &Hypergraph, pattern: &Hypergraph, image: &[Vertex]) -> bool {
    let k = pattern.vertex_count();
    if image.len() != k || image.iter().any(|&h| h >= host.vertex_count()) {
        return false;
    }
    let mut sorted = image.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let mut expected: Vec<Vec<Vertex>> = pattern
        .edges()
        .iter()
        .map(|e| {
            let mut m: Vec<Vertex> = e.iter().map(|&v| image[v]).collect();
            m.sort_unstable();
            m
        })
        .collect();
    expected.sort_unstable();
    expected.dedup();
    let mut inside: Vec<Vec<Vertex>> = host
        .edges()
        .iter()
        .filter(|e| e.iter().all(|v| sorted.binary_search(v).is_ok()))
        .cloned()
        .collect();
    inside.sort_unstable();
    inside.dedup();
    expected == inside
}

/// Finds an injective map under which `pattern` is an induced sub-hypergraph
/// of `host`: the host edges inside the image are exactly the images of the
/// pattern edges.
pub fn contains_induced_hypergraph(host: &Hypergraph, pattern: &Hypergraph) -> Option<Vec<Vertex>> {
    let k = pattern.vertex_count();
    if k > host.vertex_count() {
        return None;
    }
    let host_edges: BTreeSet<Vec<Vertex>> = host.edges().iter().cloned().collect();
    let host_inc = host.incidence();
    let pattern_edges: BTreeSet<Vec<Vertex>> = pattern.edges().iter().cloned().collect();
    // Pattern vertices in order of decreasing degree.
    let pat_inc = pattern.incidence();
    let mut order: Vec<Vertex> = (0..k).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(pat_inc[v].len()), v));
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; host.vertex_count()];
    let ctx = HyperCtx { host, host_edges: &host_edges, host_inc: &host_inc, pattern, pattern_edges: &pattern_edges, pat_inc: &pat_inc };
    if ctx.extend(&order, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

struct HyperCtx<'a> {
    host: &'a Hypergraph,
    host_edges: &'a BTreeSet<Vec<Vertex>>,
    host_inc: &'a [Vec<usize>],
    pattern: &'a Hypergraph,
    pattern_edges: &'a BTreeSet<Vec<Vertex>>,
    pat_inc: &'a [Vec<usize>],
}

impl HyperCtx<'_> {
    fn extend(&self, order: &[Vertex], depth: usize, image: &mut [Vertex], used: &mut [bool]) -> bool {
        if depth == order.len() {
            return true;
        }
        let p = order[depth];
        for h in 0..self.host.vertex_count() {
            if used[h] {
                continue;
            }
            image[p] = h;
            used[h] = true;
            if self.consistent(order, depth, image) && self.extend(order, depth + 1, image, used) {
                return true;
            }
            used[h] = false;
            image[p] = usize::MAX;
        }
        false
    }

    /// Checks every pattern edge and every host edge that became fully mapped
    /// when `order[depth]` was placed.
    fn consistent(&self, order: &[Vertex], depth: usize, image: &[Vertex]) -> bool {
        let p = order[depth];
        let placed = &order[..=depth];
        for &ei in &self.pat_inc[p] {
            let e = &self.pattern.edges()[ei];
            if e.iter().all(|v| placed.contains(v)) {
                let mut mapped: Vec<Vertex> = e.iter().map(|&v| image[v]).collect();
                mapped.sort_unstable();
                if !self.host_edges.contains(&mapped) {
                    return false;
                }
            }
        }
        let mut inverse = alloc::collections::BTreeMap::new();
        for &q in placed {
            inverse.insert(image[q], q);
        }
        for &ei in &self.host_inc[image[p]] {
            let e = &self.host.edges()[ei];
            let pre: Option<Vec<Vertex>> = e.iter().map(|h| inverse.get(h).copied()).collect();
            if let Some(mut pre) = pre {
                pre.sort_unstable();
                if !self.pattern_edges.contains(&pre) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_in_c5() {
        let host = UGraph::cycle(5).unwrap();
        let p3 = UGraph::path(3);
        let m = contains_induced(&host, &p3).unwrap();
        assert!(is_induced_embedding(&host, &p3, &m));
    }

    #[test]
    fn no_c4_in_k4() {
        assert_eq!(contains_induced(&UGraph::complete(4), &UGraph::cycle(4).unwrap()), None);
    }

    #[test]
    fn independent_sets_need_non_edges() {
        let host = UGraph::complete(6);
        assert_eq!(contains_induced(&host, &UGraph::empty(2)), None);
        assert_eq!(contains_induced(&host, &UGraph::empty(1)), Some(vec![0]));
        let c6 = UGraph::cycle(6).unwrap();
        let m = contains_induced(&c6, &UGraph::empty(3)).unwrap();
        assert!(is_induced_embedding(&c6, &UGraph::empty(3), &m));
    }

    #[test]
    fn hypergraph_containment() {
        let host = Hypergraph::new(5, [vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let edge = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
        let m = contains_induced_hypergraph(&host, &edge).unwrap();
        assert_eq!(host.induced(&m).edge_count(), 1);
        // Two edges sharing two vertices do not occur.
        let pair = Hypergraph::new(4, [vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert_eq!(contains_induced_hypergraph(&host, &pair), None);
        // Three vertices spanning no edge: {0, 1, 3}.
        let empty3 = Hypergraph::new(3, Vec::<Vec<usize>>::new()).unwrap();
        let m = contains_induced_hypergraph(&host, &empty3).unwrap();
        assert_eq!(host.induced(&m).edge_count(), 0);
    }
}
