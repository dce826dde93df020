//! Hypergraph girth, weak chromatic number and strong chromatic number.

use alloc::vec;
use alloc::vec::Vec;

use super::chromatic::{chromatic_number, ChromaticResult};
use super::girth::{girth_stats, Girth};
use super::Coloring;
use crate::error::{CoreError, Result};
use crate::graph::{Hypergraph, UGraph, Vertex};

/// Length of a shortest cycle `v_1 e_1 v_2 e_2 ... v_k e_k` with distinct
/// vertices, distinct edges and `v_i` in `e_{i-1}` and `e_i`. Two edges
/// sharing two vertices form a cycle of length 2.
///
/// Such cycles are exactly the cycles of the vertex-edge incidence graph,
/// at half the length.
pub fn hypergraph_girth(h: &Hypergraph) -> Girth {
    let n = h.vertex_count();
    let pairs = h.edges().iter().enumerate().flat_map(|(i, e)| e.iter().map(move |&v| (v, n + i)));
    let incidence = UGraph::new(n + h.edge_count(), pairs).expect("edges hold distinct vertices");
    match girth_stats(&incidence).girth {
        Girth::Finite(g) => Girth::Finite(g / 2),
        Girth::Infinite => Girth::Infinite,
    }
}

/// Exact weak chromatic number: fewest colors with no monochromatic edge.
pub fn hypergraph_chromatic(h: &Hypergraph, budget: u64) -> Result<(usize, Coloring)> {
    let n = h.vertex_count();
    if n == 0 {
        return Ok((0, Coloring::new(Vec::new())));
    }
    if h.edge_count() == 0 {
        return Ok((1, Coloring::new(vec![0; n])));
    }
    let mut spent = 0u64;
    for k in 2..=n {
        let mut search = WeakSearch::new(h, k, budget.saturating_sub(spent));
        let outcome = search.run();
        spent += search.steps;
        match outcome {
            Some(Some(c)) => return Ok((k, c)),
            Some(None) => {}
            None => return Err(CoreError::BudgetExceeded { budget, lower: k, upper: n }),
        }
    }
    unreachable!("n distinct colors always split every edge")
}

/// Decides whether a weak `k`-coloring exists.
pub fn hypergraph_k_colorable(h: &Hypergraph, k: usize, budget: u64) -> Result<Option<Coloring>> {
    if h.vertex_count() == 0 {
        return Ok(Some(Coloring::new(Vec::new())));
    }
    if k == 0 {
        return Ok(None);
    }
    if k > super::MAX_COLORS {
        return Err(CoreError::InvalidArgument(alloc::format!("k = {k} exceeds the supported maximum")));
    }
    let mut search = WeakSearch::new(h, k, budget);
    search.run().ok_or(CoreError::BudgetExceeded { budget, lower: 1, upper: h.vertex_count() })
}

/// Exact strong chromatic number, via the clique expansion.
pub fn strong_chromatic(h: &Hypergraph, budget: u64) -> Result<ChromaticResult> {
    chromatic_number(&h.clique_expansion(), budget)
}

const NONE: usize = usize::MAX;

struct WeakSearch<'h> {
    h: &'h Hypergraph,
    inc: Vec<Vec<usize>>,
    k: usize,
    color: Vec<usize>,
    domain: Vec<u128>,
    uncolored: Vec<usize>,
    steps: u64,
    budget: u64,
}

impl<'h> WeakSearch<'h> {
    fn new(h: &'h Hypergraph, k: usize, budget: u64) -> Self {
        let n = h.vertex_count();
        let full = if k >= 128 { u128::MAX } else { (1u128 << k) - 1 };
        WeakSearch {
            h,
            inc: h.incidence(),
            k,
            color: vec![NONE; n],
            domain: vec![full; n],
            uncolored: h.edges().iter().map(|e| e.len()).collect(),
            steps: 0,
            budget,
        }
    }

    /// `Some(Some(c))` colorable, `Some(None)` refuted, `None` out of budget.
    fn run(&mut self) -> Option<Option<Coloring>> {
        match self.descend(0) {
            Some(true) => Some(Some(Coloring::new(self.color.clone()))),
            Some(false) => Some(None),
            None => None,
        }
    }

    /// The single color shared by all colored vertices of edge `e`, if any.
    fn shared_color(&self, e: usize) -> Option<usize> {
        let mut shared = None;
        for &v in &self.h.edges()[e] {
            let c = self.color[v];
            if c == NONE {
                continue;
            }
            match shared {
                None => shared = Some(c),
                Some(s) if s != c => return None,
                _ => {}
            }
        }
        shared
    }

    fn assign(&mut self, v: Vertex, c: usize, trail: &mut Vec<(Vertex, usize)>) -> bool {
        self.color[v] = c;
        let mut ok = true;
        for i in 0..self.inc[v].len() {
            let e = self.inc[v][i];
            self.uncolored[e] -= 1;
            if !ok {
                continue;
            }
            match self.uncolored[e] {
                0 => {
                    if self.shared_color(e).is_some() {
                        ok = false;
                    }
                }
                1 => {
                    if let Some(s) = self.shared_color(e) {
                        let u = *self.h.edges()[e].iter().find(|&&u| self.color[u] == NONE).unwrap();
                        if self.domain[u] >> s & 1 == 1 {
                            self.domain[u] &= !(1u128 << s);
                            trail.push((u, s));
                            if self.domain[u] == 0 {
                                ok = false;
                            }
                        }
                    }
                }
                _ => {}
            }
        }
        ok
    }

    fn undo(&mut self, v: Vertex, trail: &mut Vec<(Vertex, usize)>) {
        for (u, s) in trail.drain(..) {
            self.domain[u] |= 1u128 << s;
        }
        for &e in &self.inc[v] {
            self.uncolored[e] += 1;
        }
        self.color[v] = NONE;
    }

    fn pick(&self) -> Option<Vertex> {
        (0..self.color.len())
            .filter(|&v| self.color[v] == NONE)
            .min_by_key(|&v| (self.domain[v].count_ones(), core::cmp::Reverse(self.inc[v].len()), v))
    }

    fn descend(&mut self, max_used: usize) -> Option<bool> {
        let v = match self.pick() {
            None => return Some(true),
            Some(v) => v,
        };
        let limit = (max_used + 1).min(self.k);
        let mut trail = Vec::new();
        for c in 0..limit {
            if self.domain[v] >> c & 1 == 0 {
                continue;
            }
            self.steps += 1;
            if self.steps > self.budget {
                return None;
            }
            if self.assign(v, c, &mut trail) {
                match self.descend(max_used.max(c + 1)) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
            }
            self.undo(v, &mut trail);
        }
        Some(false)
    }
}
