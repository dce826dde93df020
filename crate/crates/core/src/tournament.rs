//! Ordered tournaments, their back-edge graphs, increasing-subsequence
//! partitions, the tournament chromatic number and an ordered Ramsey check.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{CoreError, Result};
use crate::graph::{permutation_rank, UGraph, Vertex};

/// Tournament with a total order on its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedTournament {
    n: usize,
    beats: Vec<bool>,
    order: Vec<Vertex>,
    rank: Vec<usize>,
}

impl OrderedTournament {
    /// Requires exactly one arc per unordered pair.
    pub fn new<I>(n: usize, arcs: I, order: Vec<Vertex>) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let rank = permutation_rank(&order, n)?;
        let mut beats = vec![false; n * n];
        let mut count = 0usize;
        for (u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(CoreError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(CoreError::Loop(u));
            }
            if beats[u * n + v] {
                return Err(CoreError::DuplicateEdge(u, v));
            }
            if beats[v * n + u] {
                return Err(CoreError::Antiparallel(u, v));
            }
            beats[u * n + v] = true;
            count += 1;
        }
        if count != n * n.saturating_sub(1) / 2 {
            return Err(CoreError::InvalidArgument(format!(
                "a tournament on {n} vertices needs {} arcs, got {count}",
                n * n.saturating_sub(1) / 2
            )));
        }
        Ok(OrderedTournament { n, beats, order, rank })
    }

    /// `u -> v` for `u < v` exactly when `forward(u, v)`; natural order.
    pub fn from_fn<F: FnMut(Vertex, Vertex) -> bool>(n: usize, mut forward: F) -> Self {
        let mut beats = vec![false; n * n];
        for u in 0..n {
            for v in u + 1..n {
                if forward(u, v) {
                    beats[u * n + v] = true;
                } else {
                    beats[v * n + u] = true;
                }
            }
        }
        OrderedTournament { n, beats, order: (0..n).collect(), rank: (0..n).collect() }
    }

    /// Every arc points forward in the natural order.
    pub fn transitive(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn beats(&self, u: Vertex, v: Vertex) -> bool {
        self.beats[u * self.n + v]
    }

    /// All arcs, sorted.
    pub fn arcs(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.n;
        (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| self.beats(u, v)).collect()
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn rank(&self, v: Vertex) -> usize {
        self.rank[v]
    }

    /// Same arcs under a different order.
    pub fn with_order(&self, order: Vec<Vertex>) -> Result<Self> {
        let rank = permutation_rank(&order, self.n)?;
        Ok(OrderedTournament { n: self.n, beats: self.beats.clone(), order, rank })
    }
}

/// Joins `x < y` exactly when the arc goes backwards, `y -> x`. The result
/// keeps the tournament's vertex ids; its order is `t.order()`.
pub fn back_edge_graph(t: &OrderedTournament) -> UGraph {
    let n = t.vertex_count();
    let edges = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| t.rank(u) < t.rank(v) && t.beats(v, u));
    UGraph::new(n, edges).expect("pairs are distinct")
}

/// Orients `x -> y` for `x` before `y` when `xy` is not an edge, and
/// `y -> x` when it is.
pub fn tournament_from(l: &UGraph, order: Vec<Vertex>) -> Result<OrderedTournament> {
    let n = l.vertex_count();
    let rank = permutation_rank(&order, n)?;
    let mut beats = vec![false; n * n];
    for u in 0..n {
        for v in 0..n {
            if rank[u] < rank[v] {
                if l.has_edge(u, v) {
                    beats[v * n + u] = true;
                } else {
                    beats[u * n + v] = true;
                }
            }
        }
    }
    Ok(OrderedTournament { n, beats, order, rank })
}

/// Partitions `seq` into increasing subsequences, as few as the longest
/// decreasing subsequence is long. Each element joins the part whose last
/// element is the largest one below it.
pub fn dilworth_partition<T: Ord + Clone>(seq: &[T]) -> Result<Vec<Vec<T>>> {
    let mut sorted: Vec<&T> = seq.iter().collect();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(CoreError::InvalidArgument("sequence has repeated elements".into()));
    }
    let mut parts: Vec<Vec<T>> = Vec::new();
    for x in seq {
        let best = parts
            .iter()
            .enumerate()
            .filter(|(_, p)| p.last().unwrap() < x)
            .max_by(|a, b| a.1.last().cmp(&b.1.last()))
            .map(|(i, _)| i);
        match best {
            Some(i) => parts[i].push(x.clone()),
            None => parts.push(vec![x.clone()]),
        }
    }
    Ok(parts)
}

/// Length of a longest strictly decreasing subsequence.
pub fn longest_decreasing<T: Ord>(seq: &[T]) -> usize {
    let mut best = vec![1usize; seq.len()];
    for j in 0..seq.len() {
        for i in 0..j {
            if seq[i] > seq[j] {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Largest tournament handled by the exact subset search.
pub const TOURNAMENT_MAX_N: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TournamentChromatic {
    pub value: usize,
    /// Each part induces a transitive tournament.
    pub parts: Vec<Vec<Vertex>>,
}

/// Fewest parts each inducing a transitive sub-tournament, by dynamic
/// programming over vertex subsets.
pub fn tournament_chromatic(t: &OrderedTournament, budget: u64) -> Result<TournamentChromatic> {
    let n = t.vertex_count();
    if n > TOURNAMENT_MAX_N {
        return Err(CoreError::SizeGuard(format!("tournament has {n} vertices, the exact search caps at {TOURNAMENT_MAX_N}")));
    }
    if n == 0 {
        return Ok(TournamentChromatic { value: 0, parts: Vec::new() });
    }
    let full = (1usize << n) - 1;
    let out: Vec<usize> = (0..n).map(|u| (0..n).filter(|&v| t.beats(u, v)).fold(0, |m, v| m | 1 << v)).collect();
    // A tournament is transitive iff its scores are pairwise distinct.
    let transitive: Vec<bool> = (0..=full)
        .map(|mask: usize| {
            let mut seen = 0u32;
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let score = (out[v] & mask).count_ones();
                if seen >> score & 1 == 1 {
                    return false;
                }
                seen |= 1 << score;
            }
            true
        })
        .collect();
    let mut best = vec![u8::MAX; full + 1];
    let mut choice = vec![0usize; full + 1];
    best[0] = 0;
    let mut steps = 0u64;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            steps += 1;
            if steps > budget {
                let upper = greedy_parts(&transitive, full).len();
                return Err(CoreError::BudgetExceeded { budget, lower: 1, upper });
            }
            let part = sub | low;
            if transitive[part] {
                let cand = best[mask ^ part].saturating_add(1);
                if cand < best[mask] {
                    best[mask] = cand;
                    choice[mask] = part;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut parts = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let part = choice[mask];
        parts.push((0..n).filter(|&v| part >> v & 1 == 1).collect());
        mask ^= part;
    }
    Ok(TournamentChromatic { value: best[full] as usize, parts })
}

/// Repeatedly removes a maximal transitive set grown from the lowest vertex.
fn greedy_parts(transitive: &[bool], full: usize) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut left = full;
    while left != 0 {
        let mut part = 0usize;
        let mut rest = left;
        while rest != 0 {
            let v = rest & rest.wrapping_neg();
            rest ^= v;
            if transitive[part | v] {
                part |= v;
            }
        }
        parts.push(part);
        left ^= part;
    }
    parts
}

/// Largest host graph for the ordering enumeration.
pub const RAMSEY_MAX_N: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyOutcome {
    pub holds: bool,
    /// An ordering of `f` avoiding the ordered pattern, when `holds` is false.
    pub violating_order: Option<Vec<Vertex>>,
}

/// Whether every ordering of `f` contains `b`, ordered by vertex id, as an
/// ordered induced subgraph.
pub fn ordered_ramsey_check(f: &UGraph, b: &UGraph) -> Result<RamseyOutcome> {
    let n = f.vertex_count();
    if n > RAMSEY_MAX_N {
        return Err(CoreError::SizeGuard(format!("host has {n} vertices, ordering enumeration caps at {RAMSEY_MAX_N}")));
    }
    let mut order: Vec<Vertex> = (0..n).collect();
    loop {
        if !contains_ordered(f, &order, b) {
            return Ok(RamseyOutcome { holds: false, violating_order: Some(order) });
        }
        if !next_permutation(&mut order) {
            return Ok(RamseyOutcome { holds: true, violating_order: None });
        }
    }
}

/// Some increasing choice of positions in `order` induces `b` in id order.
pub fn contains_ordered(f: &UGraph, order: &[Vertex], b: &UGraph) -> bool {
    let k = b.vertex_count();
    let mut picked: Vec<Vertex> = Vec::with_capacity(k);
    fn go(f: &UGraph, order: &[Vertex], b: &UGraph, from: usize, picked: &mut Vec<Vertex>) -> bool {
        let i = picked.len();
        if i == b.vertex_count() {
            return true;
        }
        for pos in from..order.len() {
            let x = order[pos];
            if (0..i).all(|j| b.has_edge(j, i) == f.has_edge(picked[j], x)) {
                picked.push(x);
                if go(f, order, b, pos + 1, picked) {
                    return true;
                }
                picked.pop();
            }
        }
        false
    }
    go(f, order, b, 0, &mut picked)
}

fn next_permutation(a: &mut [Vertex]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
