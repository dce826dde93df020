use std::fs;
use std::path::{Path, PathBuf};

use chiforge::format::{parse_dimacs, parse_json, to_json, write_dimacs};
use chiforge::{run, CliError, CommandResult, Record, Status};
use chiforge_core::UGraph;
use serde_json::Value;
use tempfile::TempDir;

fn go(args: &[&str]) -> CommandResult {
    let mut v = vec!["chiforge"];
    v.extend_from_slice(args);
    run(v)
}

fn p(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn write_record(path: &Path, r: &Record) {
    fs::write(path, to_json(r)).unwrap();
}

fn load(path: &Path) -> Record {
    parse_json(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn zykov_three_has_eight_vertices_and_ten_arcs() {
    let dir = TempDir::new().unwrap();
    let z3 = p(&dir, "z3.json");
    let r = go(&["build", "zykov", "--n", "3", "--out", s(&z3)]);
    assert_eq!(r.status, Status::Ok, "{}", r.render());
    let d = load(&z3).to_digraph().unwrap();
    assert_eq!(d.vertex_count(), 8);
    assert_eq!(d.arc_count(), 10);

    let r = go(&["verify", "chromatic", "--in", s(&z3), "--expect", "3"]);
    assert_eq!(r.status, Status::Ok, "{}", r.render());
    assert_eq!(r.report["result"]["chromatic_number"], 3);

    let r = go(&["verify", "clique", "--in", s(&z3), "--expect", "2"]);
    assert_eq!(r.status, Status::Ok);
    let r = go(&["verify", "base-props", "--in", s(&z3)]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.report["result"]["unique_paths"], true);
}

#[test]
fn wrong_expectation_is_a_violation_with_counterexample() {
    let dir = TempDir::new().unwrap();
    let z3 = p(&dir, "z3.json");
    go(&["build", "zykov", "--n", "3", "--out", s(&z3)]);
    let r = go(&["verify", "chromatic", "--in", s(&z3), "--expect", "2"]);
    assert_eq!(r.status, Status::Violation);
    assert_eq!(r.exit_code(), 1);
    let cx = &r.report["counterexample"];
    assert_eq!(cx["actual"], 3);
    assert_eq!(cx["witness"]["coloring"].as_array().unwrap().len(), 8);
}

#[test]
fn fact_trials_pass() {
    let r = go(&["verify", "facts", "--h", "3", "--trials", "100", "--seed", "7"]);
    assert_eq!(r.status, Status::Ok, "{}", r.render());
    assert_eq!(r.report["result"]["clique_failures"], 0);
    assert_eq!(r.report["result"]["clique_trials"], 100);
}

#[test]
fn c5_json_roundtrip_and_dimacs() {
    let dir = TempDir::new().unwrap();
    let c5 = Record::from_graph(&UGraph::cycle(5).unwrap());
    let text = to_json(&c5);
    assert_eq!(parse_json(&text).unwrap(), c5);
    assert_eq!(to_json(&parse_json(&text).unwrap()), text);

    let src = p(&dir, "c5.json");
    fs::write(&src, &text).unwrap();
    let col = p(&dir, "c5.col");
    let r = go(&["export", "dimacs", "--in", s(&src), "--out", s(&col)]);
    assert_eq!(r.status, Status::Ok);
    let dimacs = fs::read_to_string(&col).unwrap();
    assert_eq!(dimacs.lines().next(), Some("p edge 5 5"));
    assert_eq!(dimacs.lines().filter(|l| l.starts_with("e ")).count(), 5);

    let back = p(&dir, "back.json");
    let r = go(&["export", "json", "--in", s(&col), "--out", s(&back)]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(fs::read_to_string(&back).unwrap(), text);
}

#[test]
fn unsorted_input_is_canonicalized() {
    let dir = TempDir::new().unwrap();
    let src = p(&dir, "g.json");
    fs::write(&src, r#"{"edges": [[3,1],[1,0],[2,1]], "n": 4, "type": "graph"}"#).unwrap();
    let out = p(&dir, "out.json");
    go(&["export", "json", "--in", s(&src), "--out", s(&out)]);
    let Record::Graph { edges, .. } = load(&out) else { panic!("graph expected") };
    assert_eq!(edges, vec![[0, 1], [1, 2], [1, 3]]);
}

#[test]
fn truncated_json_reports_position() {
    let dir = TempDir::new().unwrap();
    let src = p(&dir, "bad.json");
    fs::write(&src, "{\n  \"type\": \"graph\",\n  \"n\": 5,\n  \"edges\": [[0, 1],").unwrap();
    let r = go(&["verify", "clique", "--in", s(&src)]);
    assert_eq!(r.status, Status::Error);
    assert_eq!(r.exit_code(), 3);
    let msg = r.report["error"].as_str().unwrap();
    assert!(msg.contains("line 4"), "{msg}");
    assert!(matches!(parse_json("{\"type\": \"gra"), Err(CliError::Format { line: 1, .. })));
}

#[test]
fn dimacs_parser_rejects_bad_counts() {
    assert!(parse_dimacs("p edge 3 2\ne 1 2\n").is_err());
    let g = UGraph::complete(4);
    assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g);
}

fn p3_plan(dir: &TempDir) -> PathBuf {
    let target = p(dir, "p3.json");
    write_record(&target, &Record::from_graph(&UGraph::path(3)));
    let plan = p(dir, "plan.json");
    let r = go(&["plan", "--target", s(&target), "--theorem", "clique", "--out", s(&plan)]);
    assert_eq!(r.status, Status::Ok, "{}", r.render());
    plan
}

#[test]
fn plan_and_derive_pipeline() {
    let dir = TempDir::new().unwrap();
    let plan = p3_plan(&dir);
    let r = go(&["verify", "clique", "--in", s(&plan)]);
    assert_eq!(r.status, Status::Error);

    let Record::Plan(pr) = load(&plan) else { panic!("plan expected") };
    assert_eq!(pr.p, 11);
    assert_eq!(pr.s, vec![1, 2, 5]);

    let base = p(&dir, "path.json");
    go(&["build", "path", "--length", "40", "--out", s(&base)]);
    let derived = p(&dir, "g.json");
    let r = go(&["derive", "graph", "--base", s(&base), "--plan", s(&plan), "--out", s(&derived)]);
    assert_eq!(r.status, Status::Ok, "{}", r.render());
    let Record::Derived(d) = load(&derived) else { panic!("derived expected") };
    assert_eq!(d.edges.len(), d.edge_color.len());
    assert!(d.edge_color.iter().all(|&c| c == 1 || c == 3));

    let r = go(&["verify", "clique", "--in", s(&derived), "--expect", "2"]);
    assert_eq!(r.status, Status::Ok, "{}", r.render());
}

#[test]
fn tampered_plans_are_rejected() {
    let dir = TempDir::new().unwrap();
    let plan = p3_plan(&dir);
    let base = p(&dir, "path.json");
    go(&["build", "path", "--length", "10", "--out", s(&base)]);
    let original: Value = serde_json::from_str(&fs::read_to_string(&plan).unwrap()).unwrap();
    let tampers: [(&str, Value); 4] = [
        ("p", Value::from(12)),
        ("S", serde_json::json!([1, 2, 3])),
        ("E", serde_json::json!([1, 4])),
        ("p", Value::from(7)),
    ];
    for (field, value) in tampers {
        let mut v = original.clone();
        v[field] = value;
        let bad = p(&dir, "bad.json");
        fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();
        let out = p(&dir, "g.json");
        let r = go(&["derive", "graph", "--base", s(&base), "--plan", s(&bad), "--out", s(&out)]);
        assert_eq!(r.status, Status::Error, "{field} tamper accepted");
        assert!(r.report["error"].as_str().unwrap().contains("rejected plan"));
    }
}

#[test]
fn prime_override_is_validated() {
    let dir = TempDir::new().unwrap();
    let target = p(&dir, "p3.json");
    write_record(&target, &Record::from_graph(&UGraph::path(3)));
    let plan = p(&dir, "plan.json");
    let r = go(&["plan", "--target", s(&target), "--theorem", "clique", "--p", "13", "--out", s(&plan)]);
    assert_eq!(r.status, Status::Ok);
    for bad in ["9", "7"] {
        let r = go(&["plan", "--target", s(&target), "--theorem", "clique", "--p", bad, "--out", s(&plan)]);
        assert_eq!(r.status, Status::Error, "p = {bad}");
    }
}

#[test]
fn hypergraph_pipeline() {
    let dir = TempDir::new().unwrap();
    let target = p(&dir, "edge.json");
    fs::write(&target, r#"{"type":"hypergraph","n":3,"edges":[[0,1,2]]}"#).unwrap();
    let plan = p(&dir, "plan.json");
    let r = go(&["plan", "--target", s(&target), "--theorem", "hypergraph", "--out", s(&plan)]);
    assert_eq!(r.status, Status::Ok, "{}", r.render());
    assert_eq!(r.report["result"]["p"], 61);

    let base = p(&dir, "lp.json");
    go(&["build", "loosepath", "--m", "3", "--length", "30", "--out", s(&base)]);
    let out = p(&dir, "dh.json");
    let r = go(&["derive", "hypergraph", "--base", s(&base), "--plan", s(&plan), "--out", s(&out)]);
    assert_eq!(r.status, Status::Ok, "{}", r.render());
    assert_eq!(r.report["result"]["residue_separated"], true);
    assert_eq!(r.report["result"]["instance"]["base_edges"], 30);

    let r = go(&["verify", "girth", "--in", s(&base), "--expect", "infinite"]);
    assert_eq!(r.status, Status::Ok, "{}", r.render());
}

#[test]
fn tournament_verification() {
    let dir = TempDir::new().unwrap();
    let t = p(&dir, "t.json");
    fs::write(&t, r#"{"type":"tournament","n":3,"arcs":[[0,1],[1,2],[2,0]],"order":[0,1,2]}"#).unwrap();
    let r = go(&["verify", "tournament", "--in", s(&t), "--expect", "2"]);
    assert_eq!(r.status, Status::Ok, "{}", r.render());
    assert_eq!(r.report["result"]["back_edge_graph"]["edges"], 1);
    assert_eq!(r.report["result"]["transfer_holds"], true);

    fs::write(&t, r#"{"type":"tournament","n":3,"arcs":[[0,1],[1,2]],"order":[0,1,2]}"#).unwrap();
    assert_eq!(go(&["verify", "tournament", "--in", s(&t)]).status, Status::Error);
}

#[test]
fn nr_stage_one_with_c5_template() {
    let dir = TempDir::new().unwrap();
    let c5 = p(&dir, "c5.json");
    fs::write(&c5, r#"{"type":"hypergraph","n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4]]}"#).unwrap();
    let out = p(&dir, "nr.json");
    let r = go(&[
        "build", "nr", "--n", "3", "--g", "3", "--stage", "1", "--template", s(&c5), "--out", s(&out),
    ]);
    assert_eq!(r.status, Status::Ok, "{}", r.render());
    assert_eq!(r.report["result"]["instance"]["vertices"], 25);
    assert_eq!(r.report["result"]["part_count"], 3);
    let sidecar = fs::read_to_string(dir.path().join("nr.json.provenance.json")).unwrap();
    assert!(sidecar.contains("template_sha256"));

    let r = go(&["verify", "direction-changes", "--in", s(&out), "--g", "3"]);
    assert_eq!(r.status, Status::Ok, "{}", r.render());
}

#[test]
fn budget_exhaustion_has_its_own_status() {
    let dir = TempDir::new().unwrap();
    let z = p(&dir, "z4.json");
    go(&["build", "zykov", "--n", "4", "--out", s(&z)]);
    let r = go(&["--budget", "10", "verify", "chromatic", "--in", s(&z)]);
    assert_eq!(r.status, Status::BudgetExceeded, "{}", r.render());
    assert_eq!(r.exit_code(), 2);
    assert!(r.report["bounds"]["lower"].is_number());
}

#[test]
fn induced_search_reports_embeddings() {
    let dir = TempDir::new().unwrap();
    let host = p(&dir, "c5.json");
    write_record(&host, &Record::from_graph(&UGraph::cycle(5).unwrap()));
    let pat = p(&dir, "p3.json");
    write_record(&pat, &Record::from_graph(&UGraph::path(3)));
    let r = go(&["verify", "induced", "--in", s(&host), "--pattern", s(&pat), "--expect", "present"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.report["result"]["embedding"].as_array().unwrap().len(), 3);
    let r = go(&["verify", "induced", "--in", s(&host), "--pattern", s(&pat), "--expect", "absent"]);
    assert_eq!(r.status, Status::Violation);
    assert!(r.report["counterexample"]["embedding"].is_array());
}

#[test]
fn identical_invocations_give_identical_reports() {
    let dir = TempDir::new().unwrap();
    let a = p(&dir, "a.json");
    let args = ["build", "eh", "--m", "3", "--n", "3", "--g", "3", "--seed", "11", "--vertices", "9", "--out", s(&a)];
    let r1 = go(&args).render();
    let f1 = fs::read(&a).unwrap();
    let r2 = go(&args).render();
    assert_eq!(r1, r2);
    assert_eq!(f1, fs::read(&a).unwrap());
    let r3 = go(&["verify", "facts", "--h", "4", "--trials", "20", "--seed", "3"]).render();
    assert_eq!(r3, go(&["verify", "facts", "--h", "4", "--trials", "20", "--seed", "3"]).render());
}
