//! Reachability, unique-path distances and direction changes of base digraphs.
//!
//! A base digraph is acyclic and has at most one directed path between any
//! two vertices. Reachability then gives a partial order `u < v`, and the
//! length of the unique `u -> v` path is the distance `d(u, v)`, which is
//! additive along chains.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{CoreError, Result};
use crate::graph::{ADigraph, Digraph, Vertex};

/// Smallest number of direction changes over the examined cycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum MinDirectionChanges {
    Changes(usize),
    /// The underlying graph has no cycle (within the length cap, if any).
    NoCycle,
}

impl MinDirectionChanges {
    pub fn at_least(self, g: usize) -> bool {
        match self {
            MinDirectionChanges::NoCycle => true,
            MinDirectionChanges::Changes(c) => c >= g,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionChangeReport {
    pub min: MinDirectionChanges,
    /// A cycle attaining `min`, as a vertex sequence.
    pub witness: Option<Vec<Vertex>>,
    pub cycles_examined: u64,
    pub cycle_cap: Option<usize>,
    pub g_min: usize,
    pub passed: bool,
}

/// Structural properties of a candidate base digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseReport {
    pub acyclic: bool,
    /// Only evaluated on acyclic inputs; `false` otherwise.
    pub unique_paths: bool,
    /// A pair joined by two distinct directed paths, when `unique_paths` fails.
    pub ambiguous_pair: Option<(Vertex, Vertex)>,
    pub direction_changes: Option<DirectionChangeReport>,
}

/// Decides acyclicity and path uniqueness.
pub fn check_base_properties(d: &Digraph) -> BaseReport {
    let topo = match d.topological_order() {
        Ok(t) => t,
        Err(_) => {
            return BaseReport {
                acyclic: false,
                unique_paths: false,
                ambiguous_pair: None,
                direction_changes: None,
            }
        }
    };
    let ambiguous = find_ambiguous_pair(d, &topo);
    BaseReport {
        acyclic: true,
        unique_paths: ambiguous.is_none(),
        ambiguous_pair: ambiguous,
        direction_changes: None,
    }
}

fn is_forest(d: &Digraph) -> bool {
    // Union-find over the underlying edges.
    let n = d.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v) in d.arcs() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Path counting from 64 sources at a time, with counts saturating at 2.
fn find_ambiguous_pair(d: &Digraph, topo: &[Vertex]) -> Option<(Vertex, Vertex)> {
    if is_forest(d) {
        return None;
    }
    let n = d.vertex_count();
    let mut ones = vec![0u64; n];
    let mut twos = vec![0u64; n];
    for block in (0..n).step_by(64) {
        ones.iter_mut().for_each(|x| *x = 0);
        twos.iter_mut().for_each(|x| *x = 0);
        for (bit, x) in ones[block..(block + 64).min(n)].iter_mut().enumerate() {
            *x = 1u64 << bit;
        }
        for &v in topo {
            let (mut one, mut two) = (ones[v], twos[v]);
            for &u in d.in_neighbors(v) {
                two |= twos[u] | (one & ones[u]);
                one |= ones[u];
            }
            ones[v] = one;
            twos[v] = two;
            if two != 0 {
                return Some((block + two.trailing_zeros() as usize, v));
            }
        }
    }
    None
}

/// Length of the unique directed path from `u` to `v`, or `None` if `v` is
/// not reachable from `u` (including `u == v`).
pub fn reach_distance(d: &ADigraph, u: Vertex, v: Vertex) -> Result<Option<u64>> {
    let n = d.vertex_count();
    for x in [u, v] {
        if x >= n {
            return Err(CoreError::VertexOutOfRange { vertex: x, n });
        }
    }
    // Single-source path count (capped at 2) and path length.
    let mut count = vec![0u8; n];
    let mut len = vec![0u64; n];
    count[u] = 1;
    for &x in d.topo_order() {
        if count[x] == 0 {
            continue;
        }
        for &y in d.out_neighbors(x) {
            count[y] = (count[y] + count[x]).min(2);
            len[y] = len[x] + 1;
            if count[y] > 1 {
                return Err(CoreError::AmbiguousDistance { from: u, to: y });
            }
        }
    }
    Ok(if u != v && count[v] == 1 { Some(len[v]) } else { None })
}

/// Decomposition of the out-degree-one successor forest into disjoint paths,
/// letting descendant walks skip along chains.
#[derive(Clone, Debug)]
struct RunIndex {
    paths: Vec<Vec<Vertex>>,
    path_of: Vec<u32>,
    offset: Vec<u32>,
}

impl RunIndex {
    fn new(d: &Digraph) -> Self {
        let n = d.vertex_count();
        let succ = |v: Vertex| -> Option<Vertex> {
            let out = d.out_neighbors(v);
            if out.len() == 1 {
                Some(out[0])
            } else {
                None
            }
        };
        let mut pref_pred = vec![usize::MAX; n];
        for u in 0..n {
            if let Some(w) = succ(u) {
                if pref_pred[w] == usize::MAX {
                    pref_pred[w] = u;
                }
            }
        }
        let mut paths = Vec::new();
        let mut path_of = vec![0u32; n];
        let mut offset = vec![0u32; n];
        for head in 0..n {
            if pref_pred[head] != usize::MAX {
                continue;
            }
            let id = paths.len() as u32;
            let mut path = vec![head];
            let mut cur = head;
            while let Some(w) = succ(cur) {
                if pref_pred[w] != cur {
                    break;
                }
                path.push(w);
                cur = w;
            }
            for (i, &v) in path.iter().enumerate() {
                path_of[v] = id;
                offset[v] = i as u32;
            }
            paths.push(path);
        }
        RunIndex { paths, path_of, offset }
    }
}

/// Distances of a base digraph whose path uniqueness has been verified.
///
/// Small bases get a dense table; larger ones are answered by walking the
/// out-arborescence of the source.
#[derive(Clone, Debug)]
pub struct DistanceTable<'a> {
    dag: &'a ADigraph,
    runs: RunIndex,
    dense: Option<Vec<u32>>,
}

/// Bases up to this many vertices get a dense distance matrix.
pub const DENSE_DISTANCE_LIMIT: usize = 3000;

impl<'a> DistanceTable<'a> {
    pub fn new(dag: &'a ADigraph) -> Result<Self> {
        if let Some((from, to)) = find_ambiguous_pair(dag, dag.topo_order()) {
            return Err(CoreError::AmbiguousDistance { from, to });
        }
        let mut table = DistanceTable { dag, runs: RunIndex::new(dag), dense: None };
        let n = dag.vertex_count();
        if n <= DENSE_DISTANCE_LIMIT {
            let mut dense = vec![0u32; n * n];
            for u in 0..n {
                table.for_each_descendant(u, |v, dist| dense[u * n + v] = dist as u32);
            }
            table.dense = Some(dense);
        }
        Ok(table)
    }

    pub fn dag(&self) -> &'a ADigraph {
        self.dag
    }

    /// `d(u, v)` when `u < v` in reachability.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Option<u64> {
        if u == v {
            return None;
        }
        if let Some(dense) = &self.dense {
            let d = dense[u * self.dag.vertex_count() + v];
            return if d == 0 { None } else { Some(d as u64) };
        }
        let mut found = None;
        self.for_each_descendant(u, |w, dist| {
            if w == v {
                found = Some(dist);
            }
        });
        found
    }

    /// `u` and `v` are comparable in the reachability order.
    pub fn comparable(&self, u: Vertex, v: Vertex) -> bool {
        self.distance(u, v).is_some() || self.distance(v, u).is_some()
    }

    /// Calls `f(v, d(u, v))` for every proper descendant `v` of `u`.
    pub fn for_each_descendant<F: FnMut(Vertex, u64)>(&self, u: Vertex, mut f: F) {
        let mut stack = vec![(u, 0u64)];
        while let Some((x, t)) = stack.pop() {
            if t > 0 {
                f(x, t);
            }
            for &y in self.dag.out_neighbors(x) {
                stack.push((y, t + 1));
            }
        }
    }

    /// Calls `f(v, d(u, v))` for every proper descendant `v` of `u` with
    /// `residues[d(u, v) % p]` set, where `p = residues.len()`.
    pub fn for_each_at_residues<F: FnMut(Vertex, u64)>(&self, u: Vertex, residues: &[bool], mut f: F) {
        let p = residues.len() as u64;
        let targets: Vec<u64> = (0..p).filter(|&r| residues[r as usize]).collect();
        if targets.is_empty() {
            return;
        }
        let mut stack = vec![(u, 0u64)];
        while let Some((start, t0)) = stack.pop() {
            let (mut v, mut t) = (start, t0);
            loop {
                let path = &self.runs.paths[self.runs.path_of[v] as usize];
                let seg = &path[self.runs.offset[v] as usize..];
                let len = seg.len() as u64;
                for &r in &targets {
                    let mut i = (r + p - t % p) % p;
                    while i < len {
                        if t + i > 0 {
                            f(seg[i as usize], t + i);
                        }
                        i += p;
                    }
                }
                let last = seg[seg.len() - 1];
                let t_last = t + len - 1;
                let out = self.dag.out_neighbors(last);
                if out.len() == 1 {
                    v = out[0];
                    t = t_last + 1;
                    continue;
                }
                for &y in out {
                    stack.push((y, t_last + 1));
                }
                break;
            }
        }
    }
}

/// Direction changes along the cycle `cycle[0], cycle[1], ..., cycle[0]`,
/// including the wrap-around vertex.
pub fn count_direction_changes(d: &Digraph, cycle: &[Vertex]) -> usize {
    let k = cycle.len();
    (0..k)
        .filter(|&i| {
            let prev = cycle[(i + k - 1) % k];
            let cur = cycle[i];
            let next = cycle[(i + 1) % k];
            d.has_arc(prev, cur) == d.has_arc(next, cur)
        })
        .count()
}

/// Enumerates every cycle of the underlying graph (up to `cycle_cap` vertices)
/// and reports the fewest direction changes found.
///
/// Each cycle is generated once, rooted at its smallest vertex with its
/// second vertex smaller than its last. Exceeding `budget` DFS steps is an
/// error carrying the partial minimum.
pub fn verify_direction_changes(
    d: &Digraph,
    g_min: usize,
    cycle_cap: Option<usize>,
    budget: u64,
) -> Result<BaseReport> {
    let mut report = check_base_properties(d);
    let g = d.underlying();
    let n = g.vertex_count();
    let cap = cycle_cap.unwrap_or(usize::MAX);
    let mut best = MinDirectionChanges::NoCycle;
    let mut witness: Option<Vec<Vertex>> = None;
    let mut cycles = 0u64;
    let mut steps = 0u64;
    let mut on_path = vec![false; n];
    for root in 0..n {
        let mut path = vec![root];
        let mut cursor = vec![0usize];
        on_path[root] = true;
        while let Some(&v) = path.last() {
            let i = *cursor.last().unwrap();
            let nbrs = g.neighbors(v);
            if i >= nbrs.len() {
                on_path[v] = false;
                path.pop();
                cursor.pop();
                continue;
            }
            *cursor.last_mut().unwrap() += 1;
            steps += 1;
            if steps > budget {
                return Err(CoreError::CycleBudgetExceeded { budget, cycles, partial: best });
            }
            let w = nbrs[i];
            if w == root {
                if path.len() >= 3 && path[1] < *path.last().unwrap() {
                    cycles += 1;
                    let c = MinDirectionChanges::Changes(count_direction_changes(d, &path));
                    if c < best {
                        best = c;
                        witness = Some(path.clone());
                    }
                }
                continue;
            }
            if w < root || on_path[w] || path.len() >= cap {
                continue;
            }
            on_path[w] = true;
            path.push(w);
            cursor.push(0);
        }
    }
    report.direction_changes = Some(DirectionChangeReport {
        min: best,
        witness,
        cycles_examined: cycles,
        cycle_cap,
        g_min,
        passed: best.at_least(g_min),
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dag(n: usize, arcs: &[(usize, usize)]) -> ADigraph {
        ADigraph::from_arcs(n, arcs.iter().copied()).unwrap()
    }

    #[test]
    fn single_arc_is_a_base() {
        let r = check_base_properties(&Digraph::new(2, [(0, 1)]).unwrap());
        assert!(r.acyclic && r.unique_paths);
    }

    #[test]
    fn shortcut_triangle_has_two_paths() {
        let r = check_base_properties(&Digraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap());
        assert!(r.acyclic);
        assert!(!r.unique_paths);
        assert_eq!(r.ambiguous_pair, Some((0, 2)));
    }

    #[test]
    fn directed_cycle_is_not_acyclic() {
        let r = check_base_properties(&Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap());
        assert!(!r.acyclic && !r.unique_paths);
    }

    #[test]
    fn path_distances() {
        let p = dag(3, &[(0, 1), (1, 2)]);
        assert_eq!(reach_distance(&p, 0, 2), Ok(Some(2)));
        assert_eq!(reach_distance(&p, 2, 0), Ok(None));
        assert_eq!(reach_distance(&p, 1, 1), Ok(None));
        let t = DistanceTable::new(&p).unwrap();
        assert_eq!(t.distance(0, 2), Some(2));
        assert_eq!(t.distance(2, 0), None);
    }

    #[test]
    fn ambiguous_distance_is_an_error() {
        let d = dag(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(reach_distance(&d, 0, 3), Err(CoreError::AmbiguousDistance { from: 0, to: 3 }));
        assert!(matches!(DistanceTable::new(&d), Err(CoreError::AmbiguousDistance { .. })));
    }

    #[test]
    fn residue_walk_matches_plain_walk() {
        // Branchy unique-path DAG: two chains joined into a tree plus a merge from a separate source.
        let d = dag(
            12,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (6, 7), (8, 6), (7, 9), (9, 10), (10, 11)],
        );
        let t = DistanceTable::new(&d).unwrap();
        for p in 1..6usize {
            for mask in 0..(1u32 << p) {
                let residues: Vec<bool> = (0..p).map(|r| mask >> r & 1 == 1).collect();
                for u in 0..12 {
                    let mut fast = Vec::new();
                    t.for_each_at_residues(u, &residues, |v, dist| fast.push((v, dist)));
                    let mut slow = Vec::new();
                    t.for_each_descendant(u, |v, dist| {
                        if residues[(dist % p as u64) as usize] {
                            slow.push((v, dist));
                        }
                    });
                    fast.sort_unstable();
                    slow.sort_unstable();
                    assert_eq!(fast, slow, "u={u} p={p} mask={mask:b}");
                }
            }
        }
    }

    #[test]
    fn consistent_four_cycle_has_no_changes() {
        let d = Digraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r = verify_direction_changes(&d, 0, None, 1000).unwrap();
        let dc = r.direction_changes.unwrap();
        assert_eq!(dc.min, MinDirectionChanges::Changes(0));
        assert_eq!(dc.cycles_examined, 1);
    }

    #[test]
    fn alternating_four_cycle_changes_everywhere() {
        let d = Digraph::new(4, [(0, 1), (2, 1), (2, 3), (0, 3)]).unwrap();
        let r = verify_direction_changes(&d, 4, None, 1000).unwrap();
        let dc = r.direction_changes.unwrap();
        assert_eq!(dc.min, MinDirectionChanges::Changes(4));
        assert!(dc.passed);
    }

    #[test]
    fn forest_has_no_cycle() {
        let d = Digraph::new(4, [(0, 1), (2, 1), (1, 3)]).unwrap();
        let dc = verify_direction_changes(&d, 7, None, 1000).unwrap().direction_changes.unwrap();
        assert_eq!(dc.min, MinDirectionChanges::NoCycle);
        assert!(dc.passed);
    }

    #[test]
    fn cycle_budget_is_reported() {
        let arcs: Vec<(usize, usize)> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        let d = Digraph::new(6, arcs).unwrap();
        assert!(matches!(
            verify_direction_changes(&d, 3, None, 10),
            Err(CoreError::CycleBudgetExceeded { .. })
        ));
    }

    #[test]
    fn cycle_cap_limits_length() {
        // Triangle plus a pendant square sharing vertex 0.
        let d = Digraph::new(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
        let full = verify_direction_changes(&d, 0, None, 10_000).unwrap().direction_changes.unwrap();
        assert_eq!(full.cycles_examined, 2);
        let capped = verify_direction_changes(&d, 0, Some(3), 10_000).unwrap().direction_changes.unwrap();
        assert_eq!(capped.cycles_examined, 1);
    }
}
