//! Graph, digraph and hypergraph containers.
//!
//! Vertices are dense ids `0..n`. Edge lists are kept sorted so that equal
//! structures compare equal and serialize identically.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::ops::Deref;

use crate::error::{CoreError, Result};

pub type Vertex = usize;

fn check_range(v: Vertex, n: usize) -> Result<()> {
    if v >= n {
        return Err(CoreError::VertexOutOfRange { vertex: v, n });
    }
    Ok(())
}

/// Finite simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl UGraph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            check_range(u, n)?;
            check_range(v, n)?;
            if u == v {
                return Err(CoreError::Loop(u));
            }
            list.push(if u < v { (u, v) } else { (v, u) });
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(CoreError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Like [`UGraph::new`] but merges repeated edges instead of rejecting them.
    pub fn new_merging<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            check_range(u, n)?;
            check_range(v, n)?;
            if u == v {
                return Err(CoreError::Loop(u));
            }
            list.push(if u < v { (u, v) } else { (v, u) });
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut deg = vec![0usize; n];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut adj: Vec<Vec<Vertex>> = deg.iter().map(|&d| Vec::with_capacity(d)).collect();
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        UGraph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_sorted(n, edges)
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(CoreError::InvalidArgument(alloc::format!("cycle needs n >= 3, got {n}")));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Path on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Self {
        Self::from_sorted(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[Vertex]) -> UGraph {
        let mut index = alloc::collections::BTreeMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            index.insert(v, i);
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for w in &self.adj[v] {
                if let Some(&j) = index.get(w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        edges.sort_unstable();
        Self::from_sorted(vertices.len(), edges)
    }

    /// True when no edge joins two vertices of equal color.
    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.n && self.edges.iter().all(|&(u, v)| colors[u] != colors[v])
    }
}

/// Finite digraph with no loops, no repeated arcs and no antiparallel pairs,
/// so that its underlying undirected graph is simple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
}

impl Digraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in arcs {
            check_range(u, n)?;
            check_range(v, n)?;
            if u == v {
                return Err(CoreError::Loop(u));
            }
            list.push((u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(CoreError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut und: Vec<(Vertex, Vertex)> =
            list.iter().map(|&(u, v)| if u < v { (u, v) } else { (v, u) }).collect();
        und.sort_unstable();
        if let Some(w) = und.windows(2).find(|w| w[0] == w[1]) {
            return Err(CoreError::Antiparallel(w[0].0, w[0].1));
        }
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in &list {
            out[u].push(v);
            inn[v].push(u);
        }
        for l in &mut inn {
            l.sort_unstable();
        }
        Ok(Digraph { n, arcs: list, out, inn })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs `(tail, head)` sorted lexicographically.
    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.inn[v]
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn underlying(&self) -> UGraph {
        let mut edges: Vec<(Vertex, Vertex)> =
            self.arcs.iter().map(|&(u, v)| if u < v { (u, v) } else { (v, u) }).collect();
        edges.sort_unstable();
        UGraph::from_sorted(self.n, edges)
    }

    /// Kahn's algorithm taking the smallest available vertex first.
    /// On failure returns a vertex lying on a directed cycle.
    pub fn topological_order(&self) -> core::result::Result<Vec<Vertex>, Vertex> {
        let mut indeg: Vec<usize> = self.inn.iter().map(Vec::len).collect();
        let mut heap: BinaryHeap<Reverse<Vertex>> =
            (0..self.n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for &w in &self.out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        if order.len() == self.n {
            Ok(order)
        } else {
            Err(self.cycle_vertex(&indeg))
        }
    }

    fn cycle_vertex(&self, indeg: &[usize]) -> Vertex {
        // Every leftover vertex has a leftover in-neighbor; walking backwards must revisit.
        let start = (0..self.n).find(|&v| indeg[v] > 0).unwrap_or(0);
        let mut seen = vec![false; self.n];
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = *self.inn[v].iter().find(|&&u| indeg[u] > 0).unwrap_or(&v);
        }
        v
    }
}

/// Acyclic digraph together with a topological order certifying acyclicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ADigraph {
    digraph: Digraph,
    topo: Vec<Vertex>,
}

impl ADigraph {
    pub fn new(digraph: Digraph) -> Result<Self> {
        match digraph.topological_order() {
            Ok(topo) => Ok(ADigraph { digraph, topo }),
            Err(v) => Err(CoreError::Cyclic(v)),
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::new(Digraph::new(n, arcs)?)
    }

    pub fn topo_order(&self) -> &[Vertex] {
        &self.topo
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn into_digraph(self) -> Digraph {
        self.digraph
    }
}

impl Deref for ADigraph {
    type Target = Digraph;

    fn deref(&self) -> &Digraph {
        &self.digraph
    }
}

/// Finite hypergraph; every edge is a sorted set of at least two vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<Vertex>>,
}

impl Hypergraph {
    /// Validates edges and sorts each one. Edge order is preserved.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = Vertex>,
    {
        let mut list = Vec::new();
        for (index, e) in edges.into_iter().enumerate() {
            let mut e: Vec<Vertex> = e.into_iter().collect();
            for &v in &e {
                check_range(v, n)?;
            }
            e.sort_unstable();
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(CoreError::RepeatedVertexInEdge { index, vertex: w[0] });
            }
            if e.len() < 2 {
                return Err(CoreError::EdgeTooSmall { index, size: e.len() });
            }
            list.push(e);
        }
        Ok(Hypergraph { n, edges: list })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    /// For each vertex, the indices of the edges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// The graph joining every pair of vertices that share an edge.
    pub fn clique_expansion(&self) -> UGraph {
        let mut pairs = Vec::new();
        for e in &self.edges {
            for (i, &u) in e.iter().enumerate() {
                for &v in &e[i + 1..] {
                    pairs.push((u, v));
                }
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        UGraph::from_sorted(self.n, pairs)
    }

    /// Sub-hypergraph induced on `vertices` (edges fully inside), relabeled in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Hypergraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| index[v] != usize::MAX))
            .map(|e| {
                let mut m: Vec<Vertex> = e.iter().map(|&v| index[v]).collect();
                m.sort_unstable();
                m
            })
            .collect();
        Hypergraph { n: vertices.len(), edges }
    }

    /// True when every edge is exactly `size` vertices.
    pub fn is_uniform(&self, size: usize) -> bool {
        self.edges.iter().all(|e| e.len() == size)
    }

    /// No edge contains two vertices of the same color.
    pub fn is_strong_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.n
            && self.edges.iter().all(|e| {
                let mut c: Vec<usize> = e.iter().map(|&v| colors[v]).collect();
                c.sort_unstable();
                c.windows(2).all(|w| w[0] != w[1])
            })
    }

    /// No edge is monochromatic.
    pub fn is_weak_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.n
            && self.edges.iter().all(|e| e.iter().any(|&v| colors[v] != colors[e[0]]))
    }
}

/// Hypergraph with a total order on its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedHypergraph {
    hypergraph: Hypergraph,
    order: Vec<Vertex>,
    rank: Vec<usize>,
}

impl OrderedHypergraph {
    /// `order[i]` is the `i`-th smallest vertex.
    pub fn new(hypergraph: Hypergraph, order: Vec<Vertex>) -> Result<Self> {
        let n = hypergraph.vertex_count();
        let rank = permutation_rank(&order, n)?;
        Ok(OrderedHypergraph { hypergraph, order, rank })
    }

    pub fn with_natural_order(hypergraph: Hypergraph) -> Self {
        let n = hypergraph.vertex_count();
        OrderedHypergraph { hypergraph, order: (0..n).collect(), rank: (0..n).collect() }
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    /// Position of `v` in the order.
    pub fn rank(&self, v: Vertex) -> usize {
        self.rank[v]
    }

    /// Vertices of edge `i` listed in increasing order.
    pub fn ordered_edge(&self, i: usize) -> Vec<Vertex> {
        let mut e = self.hypergraph.edges[i].clone();
        e.sort_unstable_by_key(|&v| self.rank[v]);
        e
    }
}

/// Inverse of a permutation given as a list; rejects non-permutations.
pub fn permutation_rank(order: &[Vertex], n: usize) -> Result<Vec<usize>> {
    if order.len() != n {
        return Err(CoreError::BadOrder(n));
    }
    let mut rank = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || rank[v] != usize::MAX {
            return Err(CoreError::BadOrder(n));
        }
        rank[v] = i;
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ugraph_rejects_bad_edges() {
        assert_eq!(UGraph::new(3, [(0, 0)]), Err(CoreError::Loop(0)));
        assert_eq!(UGraph::new(3, [(0, 1), (1, 0)]), Err(CoreError::DuplicateEdge(0, 1)));
        assert!(matches!(UGraph::new(3, [(0, 3)]), Err(CoreError::VertexOutOfRange { .. })));
        let g = UGraph::new_merging(3, [(0, 1), (1, 0), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn digraph_rejects_antiparallel() {
        assert_eq!(Digraph::new(2, [(0, 1), (1, 0)]), Err(CoreError::Antiparallel(0, 1)));
    }

    #[test]
    fn topological_order_detects_cycle() {
        let d = Digraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 1)]).unwrap();
        let v = d.topological_order().unwrap_err();
        assert!((1..4).contains(&v));
        assert!(matches!(ADigraph::new(d), Err(CoreError::Cyclic(_))));
        let a = ADigraph::from_arcs(3, [(2, 0), (0, 1)]).unwrap();
        assert_eq!(a.topo_order(), &[2, 0, 1]);
    }

    #[test]
    fn hypergraph_validation() {
        assert!(matches!(
            Hypergraph::new(3, [vec![0]]),
            Err(CoreError::EdgeTooSmall { index: 0, size: 1 })
        ));
        assert!(matches!(
            Hypergraph::new(3, [vec![0, 1, 1]]),
            Err(CoreError::RepeatedVertexInEdge { .. })
        ));
        let h = Hypergraph::new(4, [vec![2, 0, 1], vec![3, 2]]).unwrap();
        assert_eq!(h.edges()[0], vec![0, 1, 2]);
        assert_eq!(h.clique_expansion().edge_count(), 4);
        assert_eq!(h.induced(&[2, 3]).edges(), &[vec![0, 1]]);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c5 = UGraph::cycle(5).unwrap();
        let g = c5.induced(&[4, 0, 1]);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }
}
