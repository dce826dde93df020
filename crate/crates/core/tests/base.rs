use chiforge_core::base::*;
use chiforge_core::bases::*;
use chiforge_core::{ADigraph, Digraph};
use proptest::prelude::*;

/// Random forest-like DAG: each vertex gets at most one parent, plus a few
/// extra arcs that may break uniqueness.
fn random_dag(n: usize, parents: &[usize], extra: &[(usize, usize)]) -> Digraph {
    let mut arcs: Vec<(usize, usize)> = (1..n).filter(|&v| parents[v] % (v + 1) < v).map(|v| (parents[v] % v, v)).collect();
    for &(a, b) in extra {
        let (u, v) = (a % n, b % n);
        if u < v && !arcs.contains(&(u, v)) {
            arcs.push((u, v));
        }
    }
    Digraph::new(n, arcs).unwrap()
}

#[test]
fn zykov_bases_have_unique_paths() {
    for n in 1..=4 {
        let z = build_zykov(n).unwrap();
        let r = check_base_properties(&z.dag);
        assert!(r.acyclic && r.unique_paths, "Z_{n}");
    }
}

#[test]
fn additivity_on_zykov_four() {
    let z = build_zykov(4).unwrap();
    let t = DistanceTable::new(&z.dag).unwrap();
    let n = z.dag.vertex_count();
    let mut chains = 0u64;
    for u in 0..n {
        let mut below = Vec::new();
        t.for_each_descendant(u, |v, d| below.push((v, d)));
        for &(v, duv) in &below {
            t.for_each_descendant(v, |w, dvw| {
                assert_eq!(t.distance(u, w), Some(duv + dvw));
                chains += 1;
            });
        }
    }
    assert!(chains > 0);
}

#[test]
fn diamond_is_ambiguous() {
    let d = Digraph::new(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
    let r = check_base_properties(&d);
    assert!(r.acyclic && !r.unique_paths);
    assert_eq!(r.ambiguous_pair, Some((0, 3)));
    let dag = ADigraph::new(d).unwrap();
    assert!(DistanceTable::new(&dag).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn distances_are_additive(
        n in 2usize..=30,
        parents in proptest::collection::vec(any::<usize>(), 30),
        extra in proptest::collection::vec((any::<usize>(), any::<usize>()), 0..4),
    ) {
        let d = random_dag(n, &parents, &extra);
        let report = check_base_properties(&d);
        prop_assert!(report.acyclic);
        let dag = ADigraph::new(d).unwrap();
        if !report.unique_paths {
            prop_assert!(DistanceTable::new(&dag).is_err());
            return Ok(());
        }
        for u in 0..n {
            for v in 0..n {
                let duv = reach_distance(&dag, u, v).unwrap();
                for w in 0..n {
                    if let (Some(a), Some(b)) = (duv, reach_distance(&dag, v, w).unwrap()) {
                        prop_assert_eq!(reach_distance(&dag, u, w).unwrap(), Some(a + b));
                    }
                }
            }
        }
    }

    #[test]
    fn direction_changes_are_even(
        n in 3usize..=10,
        arcs in proptest::collection::vec((0usize..10, 0usize..10), 3..16),
    ) {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in arcs {
            let (u, v) = (a % n, b % n);
            if u < v && !list.contains(&(u, v)) {
                list.push((u, v));
            }
        }
        let d = Digraph::new(n, list).unwrap();
        let r = verify_direction_changes(&d, 0, None, 1 << 22).unwrap();
        let dc = r.direction_changes.unwrap();
        if let Some(cycle) = dc.witness {
            prop_assert_eq!(count_direction_changes(&d, &cycle) % 2, 0);
        }
        if let MinDirectionChanges::Changes(c) = dc.min {
            prop_assert_eq!(c % 2, 0);
        }
    }
}
