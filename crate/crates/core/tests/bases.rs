use chiforge_core::base::*;
use chiforge_core::bases::*;
use chiforge_core::oracle::*;
use chiforge_core::{Hypergraph, UGraph};

fn c5_template() -> Template {
    Template { hypergraph: Hypergraph::new(5, (0..5).map(|i| vec![i, (i + 1) % 5])).unwrap(), verified: true }
}

#[test]
fn zykov_certification() {
    for n in 1..=4 {
        let z = build_zykov(n).unwrap();
        let g = z.dag.underlying();
        assert_eq!(chromatic_number(&g, 1 << 26).unwrap().chromatic_number, n, "chi(Z_{n})");
        assert_eq!(clique_number(&g).size, n.min(2), "omega(Z_{n})");
        assert!(check_base_properties(&z.dag).unique_paths);
    }
    let z4 = build_zykov(4).unwrap().dag.underlying();
    assert_eq!((z4.vertex_count(), z4.edge_count()), (536, 1566));
    assert!(k_colorable(&z4, 3, 1 << 30).unwrap().is_none());
    let four = k_colorable(&z4, 4, 1 << 30).unwrap().unwrap();
    assert!(z4.is_proper_coloring(&four.assignment));
}

#[test]
fn nr_stage_one_with_five_cycle() {
    let mut provider = FixedTemplate(c5_template());
    let b = build_nr(3, 3, &mut provider, 1, DEFAULT_MAX_VERTICES).unwrap();
    assert_eq!(b.dag.vertex_count(), 25);
    assert!(b.dag.arcs().iter().all(|&(u, v)| b.parts[u] < b.parts[v]));
    let mut parts = b.parts.clone();
    parts.sort_unstable();
    parts.dedup();
    assert_eq!(parts.len(), 3);
    let r = verify_direction_changes(&b.dag, 3, None, 1 << 30).unwrap();
    assert!(r.unique_paths);
    let dc = r.direction_changes.unwrap();
    assert!(dc.passed && dc.min.at_least(3));
}

#[test]
fn generated_templates_certify() {
    for (s, k, g, seed) in [(2, 3, 5, 1u64), (3, 2, 3, 5), (2, 4, 4, 9)] {
        let mut spec = TemplateSpec::new(s, k, g, seed);
        spec.max_vertices = 30;
        let out = gen_eh_hypergraph(&spec).unwrap();
        assert!(out.verified);
        let h = &out.hypergraph;
        assert!(h.is_uniform(s));
        assert!(hypergraph_girth(h) >= Girth::Finite(g));
        assert!(hypergraph_chromatic(h, u64::MAX).unwrap().0 >= k);
    }
}

#[test]
fn loose_paths_are_bases() {
    for (m, len) in [(2, 5), (3, 30), (4, 7)] {
        let lp = build_loose_hyperpath(m, len).unwrap();
        let pd = prec_digraph(&lp);
        assert!(!pd.flagged());
        let r = check_base_properties(&pd.dag);
        assert!(r.acyclic && r.unique_paths);
        assert_eq!(pd.dag.arc_count(), len * (m - 1));
    }
}

#[test]
fn path_base_distances() {
    let p = build_path_base(10);
    let t = DistanceTable::new(&p).unwrap();
    assert_eq!(t.distance(2, 9), Some(7));
    assert_eq!(t.distance(9, 2), None);
    assert!(UGraph::path(11) == p.underlying());
}
