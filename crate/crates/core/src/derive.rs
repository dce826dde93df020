//! Derived constructions: plan selection, the distance edge rule on a base,
//! residue colorings, induced-copy extraction, product colorings and the
//! pair-cover analysis for hypergraphs.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::base::DistanceTable;
use crate::bases::prec_digraph;
use crate::error::{CoreError, Result};
use crate::graph::{ADigraph, Digraph, Hypergraph, OrderedHypergraph, UGraph, Vertex};
use crate::oracle::{
    contains_induced, contains_induced_hypergraph, girth_stats, hypergraph_girth, is_induced_embedding,
    is_induced_hyper_embedding, longest_path_coloring, Coloring, Girth,
};
use crate::sidon::{clique_fact_witness, difference_set, greedy_bh, BhSet};

/// Which construction a plan serves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Clique number preserved.
    Clique,
    /// Odd girth preserved.
    OddGirth,
    /// Hypergraph case with scaled B_3 sets.
    Hypergraph,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::Clique => "clique",
            Theorem::OddGirth => "odd_girth",
            Theorem::Hypergraph => "hypergraph",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Graph(UGraph),
    Hypergraph(Hypergraph),
}

impl Target {
    pub fn vertex_count(&self) -> usize {
        match self {
            Target::Graph(g) => g.vertex_count(),
            Target::Hypergraph(h) => h.vertex_count(),
        }
    }
}

/// Allowed residues: single differences for graphs, consecutive-difference
/// tuples for hypergraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistanceClasses {
    Values(Vec<u64>),
    Tuples(Vec<Vec<u64>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbedPlan {
    pub theorem: Theorem,
    pub target: Target,
    pub f: usize,
    pub h: usize,
    pub p: u64,
    /// The set the target is embedded into.
    pub s: BhSet,
    /// The unscaled B_3 set in the hypergraph case.
    pub s_prime: Option<BhSet>,
    /// Minimum edge size in the hypergraph case.
    pub m: Option<usize>,
    /// `fstar[v]` is the element of `S` assigned to target vertex `v`.
    pub fstar: Vec<u64>,
    pub classes: DistanceClasses,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest odd prime `>= n`.
pub fn next_prime(n: u64) -> u64 {
    let mut p = n.max(3);
    while !is_prime(p) {
        p += 1;
    }
    p
}

impl EmbedPlan {
    /// Largest element allowed in the embedding set for prime `p`
    /// (in the hypergraph case, for the unscaled set).
    pub fn range_bound(theorem: Theorem, p: u64, h: usize, m: usize) -> u64 {
        match theorem {
            Theorem::Clique => (p - 1) / 2,
            Theorem::OddGirth => p / h as u64,
            Theorem::Hypergraph => p / (4 * m as u64),
        }
    }

    /// Builds and validates a plan from explicit choices. `set` is `S` in the
    /// graph cases and the unscaled `S′` in the hypergraph case; `fstar`
    /// assigns elements of the (scaled) `S` to target vertices.
    pub fn assemble(theorem: Theorem, target: Target, p: u64, set: Vec<u64>, fstar: Vec<u64>) -> Result<Self> {
        let (h, m) = fact_order(theorem, &target)?;
        if !is_prime(p) || p < 3 {
            return Err(CoreError::InvalidArgument(format!("p = {p} is not an odd prime")));
        }
        let f = target.vertex_count();
        if set.len() != f {
            return Err(CoreError::InvalidArgument(format!("set has {} elements, target has {f} vertices", set.len())));
        }
        let bound = Self::range_bound(theorem, p, h, m.unwrap_or(1));
        let base = BhSet::new(set, h, bound)?;
        let (s, s_prime) = match m {
            Some(m) => (base.scaled(2 * m as u64), Some(base)),
            None => (base, None),
        };
        if fstar.len() != f {
            return Err(CoreError::InvalidArgument("F* must assign every target vertex".into()));
        }
        let mut image = fstar.clone();
        image.sort_unstable();
        if image != s.elements() {
            return Err(CoreError::InvalidArgument("F* is not a bijection onto S".into()));
        }
        let classes = match &target {
            Target::Graph(g) => {
                let mut e: Vec<u64> = g.edges().iter().map(|&(u, v)| fstar[u].abs_diff(fstar[v])).collect();
                e.sort_unstable();
                e.dedup();
                let lo = fstar.iter().position(|&x| x == 1);
                let hi = fstar.iter().position(|&x| x == 2);
                match (lo, hi) {
                    (Some(a), Some(b)) if g.has_edge(a, b) => {}
                    _ => {
                        return Err(CoreError::InvalidArgument(
                            "graph plans need 1, 2 in S with an edge of F* on them".into(),
                        ))
                    }
                }
                DistanceClasses::Values(e)
            }
            Target::Hypergraph(hg) => {
                let mut e: Vec<Vec<u64>> = hg
                    .edges()
                    .iter()
                    .map(|edge| {
                        let mut xs: Vec<u64> = edge.iter().map(|&v| fstar[v]).collect();
                        xs.sort_unstable();
                        xs.windows(2).map(|w| w[1] - w[0]).collect()
                    })
                    .collect();
                e.sort_unstable();
                e.dedup();
                DistanceClasses::Tuples(e)
            }
        };
        Ok(EmbedPlan { theorem, target, f, h, p, s, s_prime, m, fstar, classes })
    }

    /// Sorted residues allowed on a single derived edge or consecutive pair.
    pub fn class_values(&self) -> Vec<u64> {
        match &self.classes {
            DistanceClasses::Values(e) => e.clone(),
            DistanceClasses::Tuples(t) => {
                let mut v: Vec<u64> = t.iter().flatten().copied().collect();
                v.sort_unstable();
                v.dedup();
                v
            }
        }
    }

    /// Target vertices listed in increasing order of their `S` element.
    pub fn chain_order(&self) -> Vec<Vertex> {
        let mut order: Vec<Vertex> = (0..self.f).collect();
        order.sort_unstable_by_key(|&v| self.fstar[v]);
        order
    }
}

/// `(h, m)` for a theorem and target, checking the theorem's hypotheses.
fn fact_order(theorem: Theorem, target: &Target) -> Result<(usize, Option<usize>)> {
    match (theorem, target) {
        (Theorem::Clique, Target::Graph(g)) => {
            if g.edge_count() == 0 {
                return Err(CoreError::Precondition("the target graph has no edge".into()));
            }
            Ok((3, None))
        }
        (Theorem::OddGirth, Target::Graph(g)) => match girth_stats(g).odd_girth {
            Girth::Finite(h) => Ok((h, None)),
            Girth::Infinite => Err(CoreError::Precondition("the target graph is bipartite".into())),
        },
        (Theorem::Hypergraph, Target::Hypergraph(hg)) => {
            let m = hg
                .edges()
                .iter()
                .map(|e| e.len())
                .min()
                .ok_or_else(|| CoreError::Precondition("the target hypergraph has no edge".into()))?;
            Ok((3, Some(m)))
        }
        (t, _) => Err(CoreError::InvalidArgument(format!("target kind does not fit the {} case", t.name()))),
    }
}

/// Canonical F*: in the graph cases the lexicographically least edge goes
/// to the two smallest elements and the remaining vertices follow in
/// increasing order; hypergraph vertices keep their natural order.
fn canonical_order(target: &Target) -> Vec<Vertex> {
    match target {
        Target::Graph(g) => {
            let (a, b) = g.edges()[0];
            let mut order = vec![a, b];
            order.extend((0..g.vertex_count()).filter(|&v| v != a && v != b));
            order
        }
        Target::Hypergraph(h) => (0..h.vertex_count()).collect(),
    }
}

/// Deterministic plan: the greedy B_h set and the smallest prime whose
/// range admits it.
pub fn plan_embedding(target: Target, theorem: Theorem) -> Result<EmbedPlan> {
    plan_with(target, theorem, None)
}

/// As [`plan_embedding`] but with a caller-chosen prime.
pub fn plan_embedding_with_prime(target: Target, theorem: Theorem, p: u64) -> Result<EmbedPlan> {
    plan_with(target, theorem, Some(p))
}

fn plan_with(target: Target, theorem: Theorem, prime: Option<u64>) -> Result<EmbedPlan> {
    let (h, m) = fact_order(theorem, &target)?;
    let f = target.vertex_count();
    let size = f.max(2);
    let seed: &[u64] = if m.is_some() { &[] } else { &[1, 2] };
    let set = greedy_bh(size, h, u64::MAX / 4, seed)?;
    let mut elements = set.elements().to_vec();
    elements.truncate(f);
    let max = *elements.last().unwrap_or(&1);
    let p = match prime {
        Some(p) => p,
        None => {
            let need = match theorem {
                Theorem::Clique => 2 * max + 1,
                Theorem::OddGirth => h as u64 * max,
                Theorem::Hypergraph => 4 * m.unwrap_or(1) as u64 * max,
            };
            next_prime(need)
        }
    };
    let scale = m.map_or(1, |m| 2 * m as u64);
    let mut fstar = vec![0u64; f];
    for (i, &v) in canonical_order(&target).iter().enumerate() {
        fstar[v] = elements[i] * scale;
    }
    EmbedPlan::assemble(theorem, target, p, elements, fstar)
}

/// The published color bound `base^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorBound {
    pub base: u64,
    pub exponent: u64,
}

impl ColorBound {
    /// Exact value, or `None` past `u128`.
    pub fn value(&self) -> Option<u128> {
        let mut acc: u128 = 1;
        for _ in 0..self.exponent {
            acc = acc.checked_mul(self.base as u128)?;
        }
        Some(acc)
    }

    pub fn admits(&self, colors: usize) -> bool {
        self.value().is_none_or(|v| colors as u128 <= v)
    }
}

/// Derived graph on a digraph base.
#[derive(Clone, Debug)]
pub struct DerivedGraph {
    pub base: ADigraph,
    pub plan: EmbedPlan,
    pub dag: ADigraph,
    pub graph: UGraph,
    /// Residue `d(u, v) mod p` of each arc of `dag.arcs()`.
    pub arc_color: Vec<u64>,
    pub bound: ColorBound,
}

impl DerivedGraph {
    pub fn color(&self, u: Vertex, v: Vertex) -> Option<u64> {
        self.dag.arcs().binary_search(&(u, v)).ok().map(|i| self.arc_color[i])
    }
}

fn residue_mask(p: u64, values: &[u64]) -> Vec<bool> {
    let mut mask = vec![false; p as usize];
    for &x in values {
        mask[(x % p) as usize] = true;
    }
    mask
}

/// Adds `u -> v` whenever `d(u, v) mod p` is an allowed difference.
pub fn derive_graph(base: &ADigraph, plan: &EmbedPlan) -> Result<DerivedGraph> {
    let e = match (&plan.classes, plan.theorem) {
        (DistanceClasses::Values(e), Theorem::Clique | Theorem::OddGirth) => e.clone(),
        _ => return Err(CoreError::InvalidArgument("derive_graph needs a graph-case plan".into())),
    };
    let table = DistanceTable::new(base)?;
    let mask = residue_mask(plan.p, &e);
    let mut arcs: Vec<(Vertex, Vertex, u64)> = Vec::new();
    for u in 0..base.vertex_count() {
        table.for_each_at_residues(u, &mask, |v, d| arcs.push((u, v, d % plan.p)));
    }
    arcs.sort_unstable();
    let arc_color = arcs.iter().map(|a| a.2).collect();
    let digraph = Digraph::new(base.vertex_count(), arcs.iter().map(|a| (a.0, a.1)))?;
    let dag = ADigraph::new(digraph)?;
    let graph = dag.underlying();
    let bound = ColorBound { base: plan.p * plan.f as u64, exponent: e.len() as u64 };
    Ok(DerivedGraph { base: base.clone(), plan: plan.clone(), dag, graph, arc_color, bound })
}

/// Derived hypergraph on an ordered base hypergraph.
#[derive(Clone, Debug)]
pub struct DerivedHypergraph {
    pub base: OrderedHypergraph,
    pub plan: EmbedPlan,
    /// Base edges first, then the added edges in sorted order.
    pub hypergraph: Hypergraph,
    pub base_edge_count: usize,
    /// Arcs `u -> v` for every pair lying in a common edge, `u` before `v`.
    pub cover: ADigraph,
    /// `d(u, v)` in the base ≺-digraph for each arc of `cover.arcs()`.
    pub cover_distance: Vec<u64>,
    pub bound: ColorBound,
}

impl DerivedHypergraph {
    pub fn distance(&self, u: Vertex, v: Vertex) -> Option<u64> {
        self.cover.arcs().binary_search(&(u, v)).ok().map(|i| self.cover_distance[i])
    }

    pub fn color(&self, u: Vertex, v: Vertex) -> Option<u64> {
        self.distance(u, v).map(|d| d % self.plan.p)
    }

    /// Some pair inside a common edge.
    pub fn covers(&self, u: Vertex, v: Vertex) -> bool {
        self.cover.has_arc(u, v) || self.cover.has_arc(v, u)
    }

    /// No covered pair sits at a distance divisible by `p`.
    pub fn residue_separated(&self) -> bool {
        self.cover_distance.iter().all(|d| d % self.plan.p != 0)
    }
}

/// Adds every chain `v_1 < ... < v_a` whose consecutive distances match an
/// allowed tuple modulo `p`.
pub fn derive_hypergraph(base: &OrderedHypergraph, plan: &EmbedPlan) -> Result<DerivedHypergraph> {
    let tuples = match (&plan.classes, plan.theorem) {
        (DistanceClasses::Tuples(t), Theorem::Hypergraph) => t.clone(),
        _ => return Err(CoreError::InvalidArgument("derive_hypergraph needs a hypergraph-case plan".into())),
    };
    if let Girth::Finite(g) = hypergraph_girth(base.hypergraph()) {
        if g < 4 {
            return Err(CoreError::Precondition(format!("base hypergraph has girth {g}, need at least 4")));
        }
    }
    let prec = prec_digraph(base);
    let table = DistanceTable::new(&prec.dag)?;
    let n = base.hypergraph().vertex_count();
    let p = plan.p;

    let mut chains: Vec<(Vec<Vertex>, Vec<u64>)> = Vec::new();
    for i in 0..base.hypergraph().edge_count() {
        let e = base.ordered_edge(i);
        let gaps = vec![1u64; e.len() - 1];
        chains.push((e, gaps));
    }
    let base_edge_count = chains.len();
    let mut added: Vec<(Vec<Vertex>, Vec<u64>)> = Vec::new();
    for t in &tuples {
        let masks: Vec<Vec<bool>> = t.iter().map(|&d| residue_mask(p, &[d])).collect();
        for v1 in 0..n {
            let mut partial: Vec<(Vec<Vertex>, Vec<u64>)> = vec![(vec![v1], Vec::new())];
            for mask in &masks {
                let mut next = Vec::new();
                for (chain, gaps) in &partial {
                    let last = *chain.last().unwrap();
                    table.for_each_at_residues(last, mask, |w, d| {
                        let mut c = chain.clone();
                        c.push(w);
                        let mut g = gaps.clone();
                        g.push(d);
                        next.push((c, g));
                    });
                }
                partial = next;
            }
            added.extend(partial);
        }
    }
    added.sort_unstable();
    added.dedup_by(|a, b| a.0 == b.0);
    chains.extend(added);

    let mut pairs: Vec<(Vertex, Vertex, u64)> = Vec::new();
    for (chain, gaps) in &chains {
        for i in 0..chain.len() {
            let mut d = 0u64;
            for j in i + 1..chain.len() {
                d += gaps[j - 1];
                pairs.push((chain[i], chain[j], d));
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1) {
        return Err(CoreError::Contradiction(format!("pair ({}, {}) has two distances", w[0].0, w[0].1)));
    }
    let cover_distance: Vec<u64> = pairs.iter().map(|x| x.2).collect();
    let cover = ADigraph::from_arcs(n, pairs.iter().map(|x| (x.0, x.1)))?;
    let hypergraph = Hypergraph::new(n, chains.into_iter().map(|c| c.0))?;
    let bound = ColorBound { base: p * plan.f as u64, exponent: p - 1 };
    let derived = DerivedHypergraph {
        base: base.clone(),
        plan: plan.clone(),
        hypergraph,
        base_edge_count,
        cover,
        cover_distance,
        bound,
    };
    if !derived.residue_separated() {
        return Err(CoreError::Contradiction("a covered pair sits at a distance divisible by p".into()));
    }
    Ok(derived)
}

/// Walks a monochromatic path and picks `v_1, ..., v_f` with
/// `d(v_i, v_j) ≡ s_j - s_i (mod p)`.
fn chain_from_path<C: Fn(Vertex, Vertex) -> Option<u64>>(
    plan: &EmbedPlan,
    path: &[Vertex],
    color: C,
) -> Result<Vec<Vertex>> {
    let p = plan.p;
    let needed = (p as usize).saturating_mul(plan.f);
    let len = path.len().saturating_sub(1);
    if len < needed {
        return Err(CoreError::PathTooShort { len, needed });
    }
    let mut class = None;
    for w in path.windows(2) {
        let c = color(w[0], w[1])
            .ok_or_else(|| CoreError::NotMonochromatic(format!("({}, {}) is not an arc", w[0], w[1])))?;
        match class {
            None => class = Some(c),
            Some(k) if k != c => {
                return Err(CoreError::NotMonochromatic(format!("classes {k} and {c} both occur")));
            }
            _ => {}
        }
    }
    let i = class.unwrap_or(0);
    if i % p == 0 {
        return Err(CoreError::NotMonochromatic("the path lies in class 0".into()));
    }
    let s = plan.s.elements();
    let mut chain = vec![path[0]];
    let mut at = 0usize;
    for k in 1..s.len() {
        let want = (s[k] - s[k - 1]) % p;
        let mut step = 1usize;
        while (step as u128 * i as u128 % p as u128) as u64 != want {
            step += 1;
        }
        at += step;
        chain.push(path[at]);
    }
    Ok(chain)
}

fn image_from_chain(plan: &EmbedPlan, chain: &[Vertex]) -> Vec<Vertex> {
    plan.fstar.iter().map(|&x| chain[plan.s.index_of(x).unwrap()]).collect()
}

/// Induced copy of the target found along a long monochromatic path in the
/// derived digraph. `result[v]` is the image of target vertex `v`.
pub fn extract_induced_from_path(dg: &DerivedGraph, path: &[Vertex]) -> Result<Vec<Vertex>> {
    let chain = chain_from_path(&dg.plan, path, |u, v| dg.color(u, v))?;
    let image = image_from_chain(&dg.plan, &chain);
    let Target::Graph(f) = &dg.plan.target else { unreachable!("graph-case plan") };
    if !is_induced_embedding(&dg.graph, f, &image) {
        return Err(CoreError::Contradiction(format!("extracted {image:?} does not induce the target")));
    }
    Ok(image)
}

/// Hypergraph version, walking a monochromatic path of covered pairs.
pub fn extract_induced_hyper_from_path(dh: &DerivedHypergraph, path: &[Vertex]) -> Result<Vec<Vertex>> {
    let chain = chain_from_path(&dh.plan, path, |u, v| dh.color(u, v))?;
    let image = image_from_chain(&dh.plan, &chain);
    let Target::Hypergraph(f) = &dh.plan.target else { unreachable!("hypergraph-case plan") };
    if !is_induced_hyper_embedding(&dh.hypergraph, f, &image) {
        return Err(CoreError::Contradiction(format!("extracted {image:?} does not induce the target")));
    }
    Ok(image)
}

fn check_subset(x: &[Vertex], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    for &v in x {
        if v >= n || core::mem::replace(&mut seen[v], true) {
            return Err(CoreError::InvalidArgument(format!("vertex {v} is out of range or repeated")));
        }
    }
    Ok(())
}

/// Products of per-class longest-path colorings of `arcs` restricted to
/// `x`, relabeled densely in order of first appearance.
fn product_of_classes(x: &[Vertex], n: usize, arcs: &[(Vertex, Vertex)], class: &[u64], limit: usize) -> Result<Coloring> {
    let mut local = vec![usize::MAX; n];
    for (i, &v) in x.iter().enumerate() {
        local[v] = i;
    }
    let mut by_class: BTreeMap<u64, Vec<(Vertex, Vertex)>> = BTreeMap::new();
    for (a, &(u, v)) in arcs.iter().enumerate() {
        if local[u] != usize::MAX && local[v] != usize::MAX {
            by_class.entry(class[a]).or_default().push((local[u], local[v]));
        }
    }
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new(); x.len()];
    for (c, sub) in by_class {
        let coloring = longest_path_coloring(&Digraph::new(x.len(), sub)?)?;
        if let Some(&top) = coloring.assignment.iter().max() {
            if top >= limit {
                return Err(CoreError::Contradiction(format!("class {c} has a directed path of length {top}")));
            }
        }
        for (t, &k) in tuples.iter_mut().zip(&coloring.assignment) {
            t.push(k);
        }
    }
    let mut ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let assignment = tuples
        .into_iter()
        .map(|t| {
            let next = ids.len();
            *ids.entry(t).or_insert(next)
        })
        .collect();
    Ok(Coloring::new(assignment))
}

/// Proper coloring of `G[X]` for a target-free `X`. `result.assignment[i]`
/// colors `x[i]`.
pub fn product_coloring(dg: &DerivedGraph, x: &[Vertex]) -> Result<Coloring> {
    check_subset(x, dg.graph.vertex_count())?;
    let Target::Graph(f) = &dg.plan.target else { unreachable!("graph-case plan") };
    let sub = dg.graph.induced(x);
    if let Some(copy) = contains_induced(&sub, f) {
        return Err(CoreError::NotFree(copy.iter().map(|&i| x[i]).collect()));
    }
    let limit = dg.plan.p as usize * dg.plan.f;
    let coloring = product_of_classes(x, dg.graph.vertex_count(), dg.dag.arcs(), &dg.arc_color, limit)?;
    if !sub.is_proper_coloring(&coloring.assignment) || !dg.bound.admits(coloring.colors_used) {
        return Err(CoreError::Contradiction("product coloring is improper or over the bound".into()));
    }
    Ok(coloring)
}

/// Strong coloring of `𝒢[X]` for a target-free `X`.
pub fn product_coloring_hyper(dh: &DerivedHypergraph, x: &[Vertex]) -> Result<Coloring> {
    let n = dh.hypergraph.vertex_count();
    check_subset(x, n)?;
    let Target::Hypergraph(f) = &dh.plan.target else { unreachable!("hypergraph-case plan") };
    let sub = dh.hypergraph.induced(x);
    if let Some(copy) = contains_induced_hypergraph(&sub, f) {
        return Err(CoreError::NotFree(copy.iter().map(|&i| x[i]).collect()));
    }
    let p = dh.plan.p;
    let classes: Vec<u64> = dh.cover_distance.iter().map(|d| d % p).collect();
    let limit = p as usize * dh.plan.f;
    let coloring = product_of_classes(x, n, dh.cover.arcs(), &classes, limit)?;
    if !sub.is_strong_coloring(&coloring.assignment) || !dh.bound.admits(coloring.colors_used) {
        return Err(CoreError::Contradiction("product coloring is not strong or over the bound".into()));
    }
    Ok(coloring)
}

/// How the consecutive distances of a fully covered set split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverCase {
    /// At most one vertex.
    Trivial,
    /// All consecutive distances below `m`; the set lies in this base edge.
    BaseEdge(usize),
    /// All consecutive distances in the scaled class; `witness` lists the
    /// matching elements of `S`, read against the set in reverse when
    /// `reversed`.
    CliqueFact { witness: Vec<u64>, reversed: bool },
    /// Both kinds of distances occur.
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverVerdict {
    NotAllCovered { pair: (Vertex, Vertex) },
    /// `embedding[i]` is the target vertex matched with the `i`-th vertex of
    /// the set in base order.
    InducedSubOfTarget { case: CoverCase, vertices: Vec<Vertex>, embedding: Vec<Vertex> },
    /// Every pair is covered, yet no induced copy in the target exists.
    NotInducedSub { case: CoverCase, vertices: Vec<Vertex> },
}

/// Decides whether every pair of `x` is covered and, if so, whether `𝒢[X]`
/// is an induced sub-hypergraph of the target.
pub fn cover_check(dh: &DerivedHypergraph, x: &[Vertex]) -> Result<CoverVerdict> {
    let n = dh.hypergraph.vertex_count();
    check_subset(x, n)?;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            if !dh.covers(x[i], x[j]) {
                let (a, b) = (x[i].min(x[j]), x[i].max(x[j]));
                return Ok(CoverVerdict::NotAllCovered { pair: (a, b) });
            }
        }
    }
    let mut vertices = x.to_vec();
    vertices.sort_unstable_by_key(|&v| dh.base.rank(v));
    let Target::Hypergraph(f) = &dh.plan.target else { unreachable!("hypergraph-case plan") };
    let m = dh.plan.m.unwrap_or(2) as u64;
    let p = dh.plan.p;
    let gaps: Vec<u64> =
        vertices.windows(2).map(|w| dh.distance(w[0], w[1]).expect("covered pairs are comparable")).collect();
    let sub = dh.hypergraph.induced(&vertices);
    let mut candidates: Vec<Vec<Vertex>> = Vec::new();
    let case = if gaps.is_empty() {
        CoverCase::Trivial
    } else if gaps.iter().all(|&d| d < m) {
        let edge = (0..dh.base_edge_count)
            .find(|&i| {
                let e = &dh.hypergraph.edges()[i];
                vertices.iter().all(|v| e.binary_search(v).is_ok())
            })
            .ok_or_else(|| CoreError::Contradiction(format!("{vertices:?} lies in no base edge")))?;
        CoverCase::BaseEdge(edge)
    } else if gaps.iter().all(|&d| d >= m) {
        let residues: Vec<u64> = gaps.iter().map(|d| d % p).collect();
        let witness = clique_fact_witness(&dh.plan.s, &residues)?;
        let reversed = witness.windows(2).zip(&residues).any(|(w, &r)| w[1] - w[0] != r);
        let mut b = witness.clone();
        if reversed {
            b.reverse();
        }
        let owner: Vec<Vertex> = b
            .iter()
            .map(|&s| dh.plan.fstar.iter().position(|&y| y == s).expect("witness lies in S"))
            .collect();
        candidates.push(owner);
        CoverCase::CliqueFact { witness, reversed }
    } else {
        CoverCase::Mixed
    };
    let embedding = candidates
        .into_iter()
        .find(|c| is_induced_hyper_embedding(f, &sub, c))
        .or_else(|| contains_induced_hypergraph(f, &sub));
    Ok(match embedding {
        Some(embedding) => CoverVerdict::InducedSubOfTarget { case, vertices, embedding },
        None => CoverVerdict::NotInducedSub { case, vertices },
    })
}

/// Human-readable summary of a plan.
pub fn describe_plan(plan: &EmbedPlan) -> String {
    format!(
        "{} plan: f = {}, h = {}, p = {}, S = {:?}, |E| = {}",
        plan.theorem.name(),
        plan.f,
        plan.h,
        plan.p,
        plan.s.elements(),
        match &plan.classes {
            DistanceClasses::Values(e) => e.len(),
            DistanceClasses::Tuples(t) => t.len(),
        }
    )
}

/// Differences of the embedding set, the class set for covered pairs.
pub fn plan_differences(plan: &EmbedPlan) -> Vec<u64> {
    difference_set(&plan.s).values().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::{build_loose_hyperpath, build_path_base};
    use crate::oracle::clique_number;

    fn p3_plan() -> EmbedPlan {
        plan_embedding(Target::Graph(UGraph::path(3)), Theorem::Clique).unwrap()
    }

    #[test]
    fn p3_clique_plan() {
        let plan = p3_plan();
        assert_eq!(plan.p, 11);
        assert_eq!(plan.s.elements(), &[1, 2, 5]);
        assert_eq!(plan.fstar, vec![1, 2, 5]);
        assert_eq!(plan.classes, DistanceClasses::Values(vec![1, 3]));
    }

    #[test]
    fn plan_preconditions() {
        let k1 = plan_embedding(Target::Graph(UGraph::empty(1)), Theorem::Clique);
        assert!(matches!(k1, Err(CoreError::Precondition(_))));
        let c4 = plan_embedding(Target::Graph(UGraph::cycle(4).unwrap()), Theorem::OddGirth);
        assert!(matches!(c4, Err(CoreError::Precondition(_))));
        assert!(plan_embedding_with_prime(Target::Graph(UGraph::path(3)), Theorem::Clique, 7).is_err());
        assert!(plan_embedding_with_prime(Target::Graph(UGraph::path(3)), Theorem::Clique, 12).is_err());
    }

    #[test]
    fn p3_on_a_path() {
        let dg = derive_graph(&build_path_base(40), &p3_plan()).unwrap();
        for &(u, v) in dg.graph.edges() {
            assert!([1, 3].contains(&((v - u) % 11)));
        }
        assert_eq!(clique_number(&dg.graph).size, 2);
    }

    #[test]
    fn extraction_example() {
        let dg = derive_graph(&build_path_base(44), &p3_plan()).unwrap();
        let path: Vec<usize> = (0..=33).collect();
        assert_eq!(extract_induced_from_path(&dg, &path).unwrap(), vec![0, 1, 4]);
        let short: Vec<usize> = (0..=32).collect();
        assert!(matches!(extract_induced_from_path(&dg, &short), Err(CoreError::PathTooShort { .. })));
    }

    #[test]
    fn product_coloring_example() {
        let dg = derive_graph(&build_path_base(40), &p3_plan()).unwrap();
        let thirds: Vec<usize> = (0..=40).step_by(3).collect();
        assert!(matches!(product_coloring(&dg, &thirds), Err(CoreError::NotFree(_))));
        let x = vec![0, 1, 11, 20, 21];
        let c = product_coloring(&dg, &x).unwrap();
        assert!(dg.graph.induced(&x).is_proper_coloring(&c.assignment));
        assert!(c.colors_used <= 33 * 33);
        assert_eq!(product_coloring(&dg, &[]).unwrap().colors_used, 0);
        assert!(matches!(product_coloring(&dg, &[0, 1, 4]), Err(CoreError::NotFree(_))));
    }

    #[test]
    fn single_edge_hypergraph_plan() {
        let f = Hypergraph::new(3, [[0, 1, 2]]).unwrap();
        let plan = plan_embedding(Target::Hypergraph(f), Theorem::Hypergraph).unwrap();
        assert_eq!(plan.m, Some(3));
        assert_eq!(plan.s_prime.as_ref().unwrap().elements(), &[1, 2, 5]);
        assert_eq!(plan.s.elements(), &[6, 12, 30]);
        assert_eq!(plan.p, 61);
        assert_eq!(plan.classes, DistanceClasses::Tuples(vec![vec![6, 18]]));
    }

    #[test]
    fn loose_path_derivation() {
        let f = Hypergraph::new(3, [[0, 1, 2]]).unwrap();
        let plan = plan_embedding(Target::Hypergraph(f), Theorem::Hypergraph).unwrap();
        let base = build_loose_hyperpath(3, 30).unwrap();
        let dh = derive_hypergraph(&base, &plan).unwrap();
        for e in &dh.hypergraph.edges()[dh.base_edge_count..] {
            assert_eq!((e[1] - e[0], e[2] - e[1]), (6, 18));
        }
        assert!(dh.residue_separated());
        let one = cover_check(&dh, &[0, 1]).unwrap();
        assert!(matches!(one, CoverVerdict::InducedSubOfTarget { case: CoverCase::BaseEdge(0), .. }));
        assert!(matches!(cover_check(&dh, &[0, 5]).unwrap(), CoverVerdict::NotAllCovered { pair: (0, 5) }));
        // Gaps 18 then 6: every pair is covered but no edge spans the three.
        let odd = cover_check(&dh, &[6, 24, 30]).unwrap();
        assert!(matches!(odd, CoverVerdict::NotInducedSub { case: CoverCase::CliqueFact { reversed: true, .. }, .. }));
    }
}
