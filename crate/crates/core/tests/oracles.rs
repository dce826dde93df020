use chiforge_core::oracle::*;
use chiforge_core::{Digraph, Hypergraph, UGraph};
use proptest::prelude::*;

fn petersen() -> UGraph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    UGraph::new(10, outer.chain(spokes).chain(inner)).unwrap()
}

/// Mycielskian of the 5-cycle.
fn grotzsch() -> UGraph {
    let c5: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let mut edges = c5.clone();
    for &(u, v) in &c5 {
        edges.push((u, v + 5));
        edges.push((v, u + 5));
    }
    edges.extend((5..10).map(|i| (i, 10)));
    UGraph::new(11, edges).unwrap()
}

fn graph_from_bits(n: usize, bits: &[bool]) -> UGraph {
    let mut k = 0;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    UGraph::new(n, edges).unwrap()
}

fn random_graph(max_n: usize) -> impl Strategy<Value = UGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn brute_chromatic(g: &UGraph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    (1..=n)
        .find(|&k| {
            let mut colors = vec![0usize; n];
            loop {
                if g.is_proper_coloring(&colors) {
                    return true;
                }
                let mut i = 0;
                while i < n && colors[i] == k - 1 {
                    colors[i] = 0;
                    i += 1;
                }
                if i == n {
                    return false;
                }
                colors[i] += 1;
            }
        })
        .unwrap()
}

fn brute_clique(g: &UGraph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|&mask| {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Every simple cycle length, by exhaustive path extension.
fn brute_cycle_lengths(g: &UGraph) -> Vec<usize> {
    fn go(g: &UGraph, root: usize, path: &mut Vec<usize>, out: &mut Vec<usize>) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == root && path.len() >= 3 {
                out.push(path.len());
            } else if w > root && !path.contains(&w) {
                path.push(w);
                go(g, root, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for root in 0..g.vertex_count() {
        go(g, root, &mut vec![root], &mut out);
    }
    out
}

#[test]
fn frozen_small_graph_values() {
    let p = petersen();
    assert_eq!(chromatic_number(&p, 1 << 20).unwrap().chromatic_number, 3);
    assert_eq!(clique_number(&p).size, 2);
    assert_eq!(girth_stats(&p), GirthStats { girth: Girth::Finite(5), odd_girth: Girth::Finite(5) });

    let g = grotzsch();
    assert_eq!((g.vertex_count(), g.edge_count()), (11, 20));
    assert_eq!(chromatic_number(&g, 1 << 20).unwrap().chromatic_number, 4);
    assert_eq!(clique_number(&g).size, 2);
    assert_eq!(girth_stats(&g).girth, Girth::Finite(4));

    for n in 1..=6 {
        assert_eq!(chromatic_number(&UGraph::complete(n), 1 << 20).unwrap().chromatic_number, n);
        assert_eq!(clique_number(&UGraph::complete(n)).size, n);
    }
    assert_eq!(chromatic_number(&UGraph::cycle(7).unwrap(), 1000).unwrap().chromatic_number, 3);
    assert_eq!(chromatic_number(&UGraph::empty(0), 10).unwrap().chromatic_number, 0);
}

#[test]
fn chromatic_budget_is_reported() {
    let err = chromatic_number(&grotzsch(), 2).unwrap_err();
    assert!(matches!(err, chiforge_core::CoreError::BudgetExceeded { budget: 2, .. }));
}

#[test]
fn strong_equals_expansion_chromatic() {
    let hs = [
        Hypergraph::new(5, [vec![0, 1, 2], vec![2, 3, 4]]).unwrap(),
        Hypergraph::new(6, [vec![0, 1, 2, 3], vec![3, 4, 5], vec![0, 5]]).unwrap(),
        Hypergraph::new(7, [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]]).unwrap(),
    ];
    for h in &hs {
        let strong = strong_chromatic(h, 1 << 20).unwrap();
        let expanded = chromatic_number(&h.clique_expansion(), 1 << 20).unwrap();
        assert_eq!(strong.chromatic_number, expanded.chromatic_number);
        assert!(h.is_strong_coloring(&strong.coloring.assignment));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn girth_matches_cycle_enumeration(g in random_graph(12)) {
        let lengths = brute_cycle_lengths(&g);
        let girth = lengths.iter().copied().min();
        let odd = lengths.iter().copied().filter(|l| l % 2 == 1).min();
        let stats = girth_stats(&g);
        prop_assert_eq!(stats.girth.finite(), girth);
        prop_assert_eq!(stats.odd_girth.finite(), odd);
    }

    #[test]
    fn chromatic_and_clique_match_brute_force(g in random_graph(8)) {
        let chi = chromatic_number(&g, u64::MAX).unwrap();
        prop_assert_eq!(chi.chromatic_number, brute_chromatic(&g));
        prop_assert!(g.is_proper_coloring(&chi.coloring.assignment));
        let omega = clique_number(&g);
        prop_assert_eq!(omega.size, brute_clique(&g));
        prop_assert!(omega.size <= chi.chromatic_number);
        let d = dsatur_greedy(&g);
        prop_assert!(g.is_proper_coloring(&d.assignment));
        prop_assert!(d.colors_used >= chi.chromatic_number);
    }

    #[test]
    fn induced_search_is_sound(host in random_graph(9), pattern in random_graph(4)) {
        match contains_induced(&host, &pattern) {
            Some(image) => prop_assert!(is_induced_embedding(&host, &pattern, &image)),
            None => {
                // No injective map at all is induced.
                let n = host.vertex_count();
                let k = pattern.vertex_count();
                let mut image = vec![0usize; k];
                let mut found = false;
                loop {
                    if is_induced_embedding(&host, &pattern, &image) {
                        found = true;
                        break;
                    }
                    let mut i = 0;
                    while i < k && image[i] == n - 1 {
                        image[i] = 0;
                        i += 1;
                    }
                    if i == k {
                        break;
                    }
                    image[i] += 1;
                }
                prop_assert!(!found);
            }
        }
    }

    #[test]
    fn longest_path_coloring_counts_colors(
        n in 1usize..=40,
        seed in proptest::collection::vec(any::<bool>(), 40 * 39 / 2),
    ) {
        let arcs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .enumerate()
            .filter(|&(i, _)| seed[i] && i % 3 == 0)
            .map(|(_, a)| a)
            .collect();
        let d = Digraph::new(n, arcs).unwrap();
        let c = longest_path_coloring(&d).unwrap();
        prop_assert!(d.underlying().is_proper_coloring(&c.assignment));
        let mut best = vec![0usize; n];
        for u in (0..n).rev() {
            best[u] = d.out_neighbors(u).iter().map(|&w| best[w] + 1).max().unwrap_or(0);
        }
        let longest = best.iter().copied().max().unwrap();
        prop_assert_eq!(c.colors_used, longest + 1);
        prop_assert_eq!(longest_path_length(&d).unwrap(), Some(longest));
    }

    #[test]
    fn hypergraph_chromatic_is_minimal(
        n in 3usize..=7,
        raw in proptest::collection::vec(proptest::collection::btree_set(0usize..7, 2..=3), 1..6),
    ) {
        let edges: Vec<Vec<usize>> = raw
            .into_iter()
            .map(|e| e.into_iter().map(|v| v % n).collect::<std::collections::BTreeSet<_>>())
            .filter(|e| e.len() >= 2)
            .map(|e| e.into_iter().collect())
            .collect();
        let h = Hypergraph::new(n, edges).unwrap();
        let (k, c) = hypergraph_chromatic(&h, u64::MAX).unwrap();
        prop_assert!(h.is_weak_coloring(&c.assignment));
        if k > 1 {
            prop_assert!(hypergraph_k_colorable(&h, k - 1, u64::MAX).unwrap().is_none());
        }
    }
}
