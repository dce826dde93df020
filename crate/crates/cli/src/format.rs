//! JSON interchange records and DIMACS `.col` text.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use chiforge_core::derive::{DistanceClasses, EmbedPlan, Target, Theorem};
use chiforge_core::tournament::OrderedTournament;
use chiforge_core::{ADigraph, Digraph, Hypergraph, OrderedHypergraph, UGraph};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Every file the tool reads or writes, tagged by `"type"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Record {
    Graph {
        n: usize,
        edges: Vec<[usize; 2]>,
    },
    /// Arcs listed as `[tail, head]`.
    Digraph {
        n: usize,
        edges: Vec<[usize; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        parts: Option<Vec<usize>>,
    },
    Hypergraph {
        n: usize,
        edges: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        order: Option<Vec<usize>>,
    },
    Tournament {
        n: usize,
        arcs: Vec<[usize; 2]>,
        order: Vec<usize>,
    },
    Plan(PlanRecord),
    Derived(DerivedRecord),
    DerivedHypergraph(DerivedHyperRecord),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassesRecord {
    Values(Vec<u64>),
    Tuples(Vec<Vec<u64>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanRecord {
    pub theorem: String,
    pub target: Box<Record>,
    pub p: u64,
    pub h: usize,
    #[serde(rename = "S")]
    pub s: Vec<u64>,
    #[serde(rename = "S_prime", default, skip_serializing_if = "Option::is_none")]
    pub s_prime: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(rename = "E")]
    pub e: ClassesRecord,
    #[serde(rename = "Fstar", with = "vertex_keys")]
    pub fstar: BTreeMap<usize, u64>,
}

/// Map keys arrive as strings inside tagged records; parse them explicitly.
mod vertex_keys {
    use std::collections::BTreeMap;

    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(map: &BTreeMap<usize, u64>, s: S) -> Result<S::Ok, S::Error> {
        map.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<usize, u64>, D::Error> {
        BTreeMap::<String, u64>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| k.parse().map(|k| (k, v)).map_err(|_| D::Error::custom(format!("bad vertex key {k:?}"))))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub base: u64,
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedRecord {
    pub n: usize,
    /// Arcs `[tail, head]` of the derived digraph.
    pub edges: Vec<[usize; 2]>,
    /// `d(u, v) mod p` for each arc, parallel to `edges`.
    pub edge_color: Vec<u64>,
    pub base_sha256: String,
    pub plan: PlanRecord,
    pub bound: BoundRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedHyperRecord {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
    pub base_edge_count: usize,
    pub order: Vec<usize>,
    pub base_sha256: String,
    pub plan: PlanRecord,
    pub bound: BoundRecord,
}

impl Record {
    pub fn kind(&self) -> &'static str {
        match self {
            Record::Graph { .. } => "graph",
            Record::Digraph { .. } => "digraph",
            Record::Hypergraph { .. } => "hypergraph",
            Record::Tournament { .. } => "tournament",
            Record::Plan(_) => "plan",
            Record::Derived(_) => "derived",
            Record::DerivedHypergraph(_) => "derived_hypergraph",
        }
    }

    pub fn from_graph(g: &UGraph) -> Record {
        Record::Graph { n: g.vertex_count(), edges: g.edges().iter().map(|&(u, v)| [u, v]).collect() }
    }

    pub fn from_digraph(d: &Digraph, labels: Option<Vec<String>>, parts: Option<Vec<usize>>) -> Record {
        Record::Digraph { n: d.vertex_count(), edges: d.arcs().iter().map(|&(u, v)| [u, v]).collect(), labels, parts }
    }

    pub fn from_hypergraph(h: &Hypergraph, order: Option<Vec<usize>>) -> Record {
        let mut edges = h.edges().to_vec();
        edges.sort();
        Record::Hypergraph { n: h.vertex_count(), edges, order }
    }

    pub fn from_tournament(t: &OrderedTournament) -> Record {
        Record::Tournament {
            n: t.vertex_count(),
            arcs: t.arcs().into_iter().map(|(u, v)| [u, v]).collect(),
            order: t.order().to_vec(),
        }
    }

    /// Undirected view of any graph-like record.
    pub fn to_graph(&self) -> Result<UGraph, CliError> {
        match self {
            Record::Graph { n, edges } => Ok(UGraph::new(*n, edges.iter().map(|e| (e[0], e[1])))?),
            Record::Digraph { .. } => Ok(self.to_digraph()?.underlying()),
            Record::Derived(_) => Ok(self.to_digraph()?.underlying()),
            Record::Tournament { n, arcs, .. } => Ok(UGraph::new(*n, arcs.iter().map(|e| (e[0], e[1])))?),
            other => Err(CliError::Usage(format!("expected a graph, found a {}", other.kind()))),
        }
    }

    pub fn to_digraph(&self) -> Result<Digraph, CliError> {
        match self {
            Record::Digraph { n, edges, .. } => Ok(Digraph::new(*n, edges.iter().map(|e| (e[0], e[1])))?),
            Record::Derived(d) => Ok(Digraph::new(d.n, d.edges.iter().map(|e| (e[0], e[1])))?),
            other => Err(CliError::Usage(format!("expected a digraph, found a {}", other.kind()))),
        }
    }

    pub fn to_hypergraph(&self) -> Result<OrderedHypergraph, CliError> {
        match self {
            Record::Hypergraph { n, edges, order } => {
                let h = Hypergraph::new(*n, edges.iter().cloned())?;
                Ok(match order {
                    Some(o) => OrderedHypergraph::new(h, o.clone())?,
                    None => OrderedHypergraph::with_natural_order(h),
                })
            }
            Record::DerivedHypergraph(d) => {
                let h = Hypergraph::new(d.n, d.edges.iter().cloned())?;
                Ok(OrderedHypergraph::new(h, d.order.clone())?)
            }
            other => Err(CliError::Usage(format!("expected a hypergraph, found a {}", other.kind()))),
        }
    }

    pub fn to_tournament(&self) -> Result<OrderedTournament, CliError> {
        match self {
            Record::Tournament { n, arcs, order } => {
                Ok(OrderedTournament::new(*n, arcs.iter().map(|a| (a[0], a[1])), order.clone())?)
            }
            other => Err(CliError::Usage(format!("expected a tournament, found a {}", other.kind()))),
        }
    }

    /// Same record with every list in canonical sorted order.
    pub fn canonical(&self) -> Result<Record, CliError> {
        Ok(match self {
            Record::Graph { .. } => Record::from_graph(&self.to_graph()?),
            Record::Digraph { labels, parts, .. } => Record::from_digraph(&self.to_digraph()?, labels.clone(), parts.clone()),
            Record::Hypergraph { order, .. } => Record::from_hypergraph(self.to_hypergraph()?.hypergraph(), order.clone()),
            Record::Tournament { .. } => Record::from_tournament(&self.to_tournament()?),
            Record::Plan(p) => Record::Plan(plan_record(&plan_from_record(p)?)),
            Record::Derived(d) => {
                let mut d = d.clone();
                let mut pairs: Vec<([usize; 2], u64)> = d.edges.iter().copied().zip(d.edge_color.iter().copied()).collect();
                pairs.sort_unstable();
                (d.edges, d.edge_color) = pairs.into_iter().unzip();
                Record::Derived(d)
            }
            Record::DerivedHypergraph(d) => Record::DerivedHypergraph(d.clone()),
        })
    }
}

pub fn theorem_name(t: Theorem) -> &'static str {
    match t {
        Theorem::Clique => "clique",
        Theorem::OddGirth => "odd-girth",
        Theorem::Hypergraph => "hypergraph",
    }
}

pub fn parse_theorem(s: &str) -> Result<Theorem, CliError> {
    match s {
        "clique" => Ok(Theorem::Clique),
        "odd-girth" | "odd_girth" => Ok(Theorem::OddGirth),
        "hypergraph" => Ok(Theorem::Hypergraph),
        other => Err(CliError::Usage(format!("unknown theorem {other:?}"))),
    }
}

pub fn target_record(t: &Target) -> Record {
    match t {
        Target::Graph(g) => Record::from_graph(g),
        Target::Hypergraph(h) => Record::from_hypergraph(h, None),
    }
}

pub fn target_from_record(r: &Record) -> Result<Target, CliError> {
    match r {
        Record::Hypergraph { .. } => Ok(Target::Hypergraph(r.to_hypergraph()?.hypergraph().clone())),
        other => Ok(Target::Graph(other.to_graph()?)),
    }
}

pub fn plan_record(plan: &EmbedPlan) -> PlanRecord {
    PlanRecord {
        theorem: theorem_name(plan.theorem).into(),
        target: Box::new(target_record(&plan.target)),
        p: plan.p,
        h: plan.h,
        s: plan.s.elements().to_vec(),
        s_prime: plan.s_prime.as_ref().map(|s| s.elements().to_vec()),
        m: plan.m,
        e: match &plan.classes {
            DistanceClasses::Values(v) => ClassesRecord::Values(v.clone()),
            DistanceClasses::Tuples(t) => ClassesRecord::Tuples(t.clone()),
        },
        fstar: plan.fstar.iter().copied().enumerate().collect(),
    }
}

/// Rebuilds and re-certifies a plan; any field disagreeing with the
/// recomputation is rejected.
pub fn plan_from_record(r: &PlanRecord) -> Result<EmbedPlan, CliError> {
    let theorem = parse_theorem(&r.theorem)?;
    let target = target_from_record(&r.target)?;
    let f = target.vertex_count();
    if r.fstar.len() != f || r.fstar.keys().copied().ne(0..f) {
        return Err(CliError::Tampered("Fstar must list every target vertex once".into()));
    }
    let fstar: Vec<u64> = r.fstar.values().copied().collect();
    let set = match theorem {
        Theorem::Hypergraph => r.s_prime.clone().ok_or_else(|| CliError::Tampered("missing S_prime".into()))?,
        _ => r.s.clone(),
    };
    let plan = EmbedPlan::assemble(theorem, target, r.p, set, fstar).map_err(|e| CliError::Tampered(e.to_string()))?;
    let again = plan_record(&plan);
    for (field, same) in [
        ("h", again.h == r.h),
        ("S", again.s == r.s),
        ("S_prime", again.s_prime == r.s_prime),
        ("m", again.m == r.m),
        ("E", again.e == r.e),
    ] {
        if !same {
            return Err(CliError::Tampered(format!("field {field} disagrees with the recomputed plan")));
        }
    }
    Ok(plan)
}

/// Parses JSON, reporting line and column on failure.
pub fn parse_json(text: &str) -> Result<Record, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Format { line: e.line(), column: e.column(), message: e.to_string() })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

/// DIMACS `.col`: `p edge n m` then one 1-indexed `e u v` line per edge.
pub fn write_dimacs(g: &UGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Reads DIMACS `.col`, skipping `c` comment lines.
pub fn parse_dimacs(text: &str) -> Result<UGraph, CliError> {
    let err = |line: usize, message: String| CliError::Format { line, column: 1, message };
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.first() {
            None | Some(&"c") => {}
            Some(&"p") => {
                if header.is_some() || fields.len() != 4 || !matches!(fields[1], "edge" | "col") {
                    return Err(err(line, format!("bad problem line {raw:?}")));
                }
                let n = fields[2].parse().map_err(|_| err(line, "bad vertex count".into()))?;
                let m = fields[3].parse().map_err(|_| err(line, "bad edge count".into()))?;
                header = Some((n, m));
            }
            Some(&"e") => {
                let (n, _) = header.ok_or_else(|| err(line, "edge before problem line".into()))?;
                if fields.len() != 3 {
                    return Err(err(line, format!("bad edge line {raw:?}")));
                }
                let mut ends = [0usize; 2];
                for (k, f) in fields[1..].iter().enumerate() {
                    let v: usize = f.parse().map_err(|_| err(line, format!("bad vertex {f:?}")))?;
                    if v == 0 || v > n {
                        return Err(err(line, format!("vertex {v} outside 1..={n}")));
                    }
                    ends[k] = v - 1;
                }
                edges.push((ends[0], ends[1]));
            }
            Some(other) => return Err(err(line, format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| err(1, "missing problem line".into()))?;
    let g = UGraph::new_merging(n, edges)?;
    if g.edge_count() != m {
        return Err(err(1, format!("header declares {m} edges, found {}", g.edge_count())));
    }
    Ok(g)
}

/// Canonical record for a graph or acyclic digraph.
pub fn dag_record(d: &ADigraph) -> Record {
    Record::from_digraph(d.digraph(), None, None)
}
