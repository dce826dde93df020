//! Girth and odd girth by breadth-first search.
//!
//! A shortest cycle, and a shortest odd cycle, is found exactly by a BFS
//! rooted at any of its vertices; rooting at its smallest vertex lets each
//! search stay inside the vertices `>= root`. Odd cycles show up as edges
//! joining two vertices of the same BFS layer. Searches stop at the depth
//! beyond which no improvement on the current bests is possible.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::UGraph;

/// A cycle length, or `Infinite` when no such cycle exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Girth::Infinite
    }
}

impl core::fmt::Display for Girth {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GirthStats {
    pub girth: Girth,
    pub odd_girth: Girth,
}

const UNSEEN: u32 = u32::MAX;

pub fn girth_stats(g: &UGraph) -> GirthStats {
    let n = g.vertex_count();
    let mut best_girth = usize::MAX;
    let mut best_odd = usize::MAX;
    let mut dist = vec![UNSEEN; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched: Vec<usize> = Vec::new();
    let mut layer: Vec<usize> = Vec::new();
    let mut next: Vec<usize> = Vec::new();

    // A layer at depth d can only contribute cycles of length >= 2d.
    let useful = |d: usize, bg: usize, bo: usize| 2 * d < bg || 2 * d + 1 < bo;

    for root in 0..n {
        if best_girth == 3 && best_odd == 3 {
            break;
        }
        for &v in &touched {
            dist[v] = UNSEEN;
        }
        touched.clear();
        layer.clear();
        dist[root] = 0;
        touched.push(root);
        layer.push(root);
        let mut d = 0usize;
        while !layer.is_empty() && useful(d, best_girth, best_odd) {
            let expand = useful(d + 1, best_girth, best_odd);
            next.clear();
            for &u in &layer {
                for &w in g.neighbors(u) {
                    if w < root {
                        continue;
                    }
                    let dw = dist[w];
                    if dw == UNSEEN {
                        if expand {
                            dist[w] = d as u32 + 1;
                            parent[w] = u;
                            touched.push(w);
                            next.push(w);
                        }
                    } else if w != parent[u] {
                        let dw = dw as usize;
                        if dw == d {
                            best_odd = best_odd.min(2 * d + 1);
                            best_girth = best_girth.min(2 * d + 1);
                        } else {
                            // dw is d - 1 (a second parent) or d + 1 (reached twice).
                            best_girth = best_girth.min(d + dw + 1);
                        }
                    }
                }
            }
            core::mem::swap(&mut layer, &mut next);
            d += 1;
        }
    }
    let wrap = |x: usize| if x == usize::MAX { Girth::Infinite } else { Girth::Finite(x) };
    GirthStats { girth: wrap(best_girth), odd_girth: wrap(best_odd) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> UGraph {
        UGraph::new(
            10,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
        )
        .unwrap()
    }

    #[test]
    fn five_cycle() {
        let s = girth_stats(&UGraph::cycle(5).unwrap());
        assert_eq!(s, GirthStats { girth: Girth::Finite(5), odd_girth: Girth::Finite(5) });
    }

    #[test]
    fn complete_bipartite_three_three() {
        let g = UGraph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        assert_eq!(girth_stats(&g), GirthStats { girth: Girth::Finite(4), odd_girth: Girth::Infinite });
    }

    #[test]
    fn petersen_graph() {
        assert_eq!(
            girth_stats(&petersen()),
            GirthStats { girth: Girth::Finite(5), odd_girth: Girth::Finite(5) }
        );
    }

    #[test]
    fn forest_and_even_cycles() {
        assert_eq!(girth_stats(&UGraph::path(6)).girth, Girth::Infinite);
        let c8 = girth_stats(&UGraph::cycle(8).unwrap());
        assert_eq!(c8, GirthStats { girth: Girth::Finite(8), odd_girth: Girth::Infinite });
        // Square with a pendant 7-cycle sharing a vertex.
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        edges.extend([(0, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 0)]);
        let s = girth_stats(&UGraph::new(10, edges).unwrap());
        assert_eq!(s, GirthStats { girth: Girth::Finite(4), odd_girth: Girth::Finite(7) });
    }

    #[test]
    fn infinite_orders_last() {
        assert!(Girth::Finite(1000) < Girth::Infinite);
    }
}
