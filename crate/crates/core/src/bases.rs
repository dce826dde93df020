//! Base structures: oriented Zykov graphs, oriented Nešetřil–Rödl graphs and
//! their hypergraph analogue, random high-girth template hypergraphs, and
//! the small path bases used for desk-scale derivations.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{CoreError, Result};
use crate::graph::{ADigraph, Digraph, Hypergraph, OrderedHypergraph, Vertex};
use crate::oracle::{hypergraph_girth, hypergraph_k_colorable, Girth};

/// Largest Zykov index built; the next one has about 8.3e10 vertices.
pub const ZYKOV_MAX_N: usize = 4;

#[derive(Clone, Debug)]
pub struct Zykov {
    pub dag: ADigraph,
    /// Recursion address of each vertex: `"i."` prefixes descend into copy
    /// `i`, `"a[v_1,...,v_k]"` is the apex over local vertices `v_j`, and
    /// `"r"` is the single vertex of the first graph.
    pub labels: Vec<String>,
}

/// The oriented Zykov digraph: one vertex for `n = 1`; for `n + 1`, `n`
/// disjoint copies of the `n`-th digraph plus, for each tuple with one
/// vertex per copy, an apex receiving an arc from every tuple member.
pub fn build_zykov(n: usize) -> Result<Zykov> {
    if n == 0 || n > ZYKOV_MAX_N {
        return Err(CoreError::SizeGuard(format!("Zykov index must lie in [1, {ZYKOV_MAX_N}], got {n}")));
    }
    let mut size = 1usize;
    let mut arcs: Vec<(Vertex, Vertex)> = Vec::new();
    let mut labels = vec![String::from("r")];
    for k in 1..n {
        let mut next_arcs = Vec::new();
        let mut next_labels = Vec::new();
        for c in 0..k {
            let off = c * size;
            next_arcs.extend(arcs.iter().map(|&(u, v)| (u + off, v + off)));
            next_labels.extend(labels.iter().map(|l| format!("{c}.{l}")));
        }
        let mut tuple = vec![0usize; k];
        let mut apex = k * size;
        loop {
            for (c, &t) in tuple.iter().enumerate() {
                next_arcs.push((c * size + t, apex));
            }
            let parts: Vec<String> = tuple.iter().map(|t| format!("{t}")).collect();
            next_labels.push(format!("a[{}]", parts.join(",")));
            apex += 1;
            let Some(pos) = (0..k).rev().find(|&p| tuple[p] + 1 < size) else { break };
            tuple[pos] += 1;
            for t in &mut tuple[pos + 1..] {
                *t = 0;
            }
        }
        size = apex;
        arcs = next_arcs;
        labels = next_labels;
    }
    Ok(Zykov { dag: ADigraph::from_arcs(size, arcs)?, labels })
}

/// What a builder asks of a template provider.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TemplateRequest {
    /// 1-based stage index; the template is glued onto part `stage - 1`.
    pub stage: usize,
    pub uniformity: usize,
    pub chromatic_target: usize,
    pub girth_target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Template {
    pub hypergraph: Hypergraph,
    /// True when the chromatic bound has been certified by an oracle.
    pub verified: bool,
}

/// Supplies the template hypergraphs for each stage.
pub trait TemplateProvider {
    fn template(&mut self, request: &TemplateRequest) -> Result<Template>;
}

impl<F: FnMut(&TemplateRequest) -> Result<Template>> TemplateProvider for F {
    fn template(&mut self, request: &TemplateRequest) -> Result<Template> {
        self(request)
    }
}

/// Hands out the same template for every stage.
#[derive(Clone, Debug)]
pub struct FixedTemplate(pub Template);

impl TemplateProvider for FixedTemplate {
    fn template(&mut self, _request: &TemplateRequest) -> Result<Template> {
        Ok(self.0.clone())
    }
}

/// Generates each template with [`gen_eh_hypergraph`], seeding stage `i` with `seed + i`.
#[derive(Clone, Debug)]
pub struct GeneratedTemplates {
    pub seed: u64,
    pub mode: TemplateMode,
    pub max_vertices: usize,
    pub attempts: u32,
    pub budget: u64,
}

impl TemplateProvider for GeneratedTemplates {
    fn template(&mut self, r: &TemplateRequest) -> Result<Template> {
        let spec = TemplateSpec {
            uniformity: r.uniformity,
            chromatic_target: r.chromatic_target,
            girth_target: r.girth_target,
            max_vertices: self.max_vertices,
            max_edges: usize::MAX,
            seed: self.seed.wrapping_add(r.stage as u64),
            mode: self.mode,
            attempts: self.attempts,
            budget: self.budget,
        };
        let g = gen_eh_hypergraph(&spec)?;
        Ok(Template { hypergraph: g.hypergraph, verified: g.verified })
    }
}

/// Record of one gluing stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageRecord {
    pub stage: usize,
    pub uniformity: usize,
    pub template: Hypergraph,
    pub verified: bool,
    /// For each template edge, the map from the previous stage's vertex ids
    /// to the new ids.
    pub copy_maps: Vec<Vec<Vertex>>,
}

/// Partite hypergraph under construction.
#[derive(Clone, Debug)]
struct Partite {
    n: usize,
    parts: Vec<usize>,
    edges: Vec<Vec<Vertex>>,
}

impl Partite {
    /// `m` parts, one edge through every `k` parts, edges pairwise disjoint.
    fn initial(k: usize, m: usize) -> Partite {
        let mut parts = Vec::new();
        let mut next_in_part = vec![0usize; m];
        let per_part = binomial(m - 1, k - 1);
        for p in 0..m {
            parts.extend(core::iter::repeat_n(p, per_part));
        }
        let mut edges = Vec::new();
        for_each_subset(m, k, |subset| {
            let e = subset
                .iter()
                .map(|&p| {
                    let v = p * per_part + next_in_part[p];
                    next_in_part[p] += 1;
                    v
                })
                .collect();
            edges.push(e);
        });
        Partite { n: m * per_part, parts, edges }
    }

    fn part_vertices(&self, part: usize) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.parts[v] == part).collect()
    }

    /// One copy per template edge, each with part `part` identified with
    /// that edge in increasing id order. Template vertices come first, then
    /// the remaining vertices of each copy in template edge order.
    fn glue(&self, part: usize, t_vertices: usize, t_edges: &[Vec<Vertex>]) -> (Partite, Vec<Vec<Vertex>>) {
        let glued = self.part_vertices(part);
        let mut slot = vec![usize::MAX; self.n];
        for (i, &v) in glued.iter().enumerate() {
            slot[v] = i;
        }
        let mut n = t_vertices;
        let mut parts = vec![part; t_vertices];
        let mut edges = Vec::new();
        let mut maps = Vec::with_capacity(t_edges.len());
        for e in t_edges {
            let map: Vec<Vertex> = (0..self.n)
                .map(|v| {
                    if slot[v] != usize::MAX {
                        e[slot[v]]
                    } else {
                        parts.push(self.parts[v]);
                        n += 1;
                        n - 1
                    }
                })
                .collect();
            edges.extend(self.edges.iter().map(|f| f.iter().map(|&v| map[v]).collect()));
            maps.push(map);
        }
        (Partite { n, parts, edges }, maps)
    }

    fn size_after_glue(&self, part: usize, t_vertices: usize, t_edges: usize) -> usize {
        let kept = self.n - self.part_vertices(part).len();
        t_vertices.saturating_add(t_edges.saturating_mul(kept))
    }

    /// Part-major order, ties by id.
    fn part_major_order(&self) -> Vec<Vertex> {
        let mut order: Vec<Vertex> = (0..self.n).collect();
        order.sort_by_key(|&v| (self.parts[v], v));
        order
    }
}

/// Calls `f` on every `k`-subset of `0..m` in lexicographic order.
fn for_each_subset<F: FnMut(&[usize])>(m: usize, k: usize, mut f: F) {
    if k > m {
        return;
    }
    let mut s: Vec<usize> = (0..k).collect();
    loop {
        f(&s);
        let Some(pos) = (0..k).rev().find(|&i| s[i] < m - k + i) else { return };
        s[pos] += 1;
        for i in pos + 1..k {
            s[i] = s[i - 1] + 1;
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Vertex budget for staged builds.
pub const DEFAULT_MAX_VERTICES: usize = 5_000_000;

/// Runs stages `1..=stage` on `b`, checking every template.
fn run_stages(
    mut b: Partite,
    chromatic_target: usize,
    g: usize,
    stage: usize,
    provider: &mut dyn TemplateProvider,
    max_vertices: usize,
) -> Result<(Partite, Vec<StageRecord>)> {
    let mut records = Vec::new();
    for i in 1..=stage {
        let part = i - 1;
        let uniformity = b.part_vertices(part).len();
        let (t_vertices, t_edges, template, verified) = if uniformity == 1 {
            // A single one-vertex edge: monochromatic under every coloring, no cycles.
            (1, vec![vec![0]], Hypergraph::new(1, Vec::<Vec<Vertex>>::new())?, true)
        } else {
            let request = TemplateRequest { stage: i, uniformity, chromatic_target, girth_target: g };
            let t = provider.template(&request)?;
            let h = &t.hypergraph;
            if let Some((edge, e)) = h.edges().iter().enumerate().find(|(_, e)| e.len() != uniformity) {
                return Err(CoreError::TemplateMismatch { stage: i, expected: uniformity, edge, found: e.len() });
            }
            if let Girth::Finite(girth) = hypergraph_girth(h) {
                if girth < g {
                    return Err(CoreError::TemplateGirth { stage: i, girth, required: g });
                }
            }
            (h.vertex_count(), h.edges().to_vec(), t.hypergraph.clone(), t.verified)
        };
        let projected = b.size_after_glue(part, t_vertices, t_edges.len());
        if projected > max_vertices {
            return Err(CoreError::SizeGuard(format!(
                "stage {i} would have {projected} vertices; limit {max_vertices}"
            )));
        }
        let (next, copy_maps) = b.glue(part, t_vertices, &t_edges);
        records.push(StageRecord { stage: i, uniformity, template, verified, copy_maps });
        b = next;
    }
    Ok((b, records))
}

/// An oriented Nešetřil–Rödl digraph together with its partition.
#[derive(Clone, Debug)]
pub struct NrBase {
    pub dag: ADigraph,
    /// Part index (`0..n`) of every vertex; arcs go from lower to higher parts.
    pub parts: Vec<usize>,
    pub stages: Vec<StageRecord>,
}

/// Builds stage `stage` (0 to `n`) of the oriented Nešetřil–Rödl
/// construction: `n` parts of size `n - 1` joined by a matching with one
/// edge per pair of parts, then for each stage `i` one copy of the previous
/// digraph per template edge, with part `i` of each copy identified with
/// that edge. All arcs point from lower to higher part.
pub fn build_nr(
    n: usize,
    g: usize,
    provider: &mut dyn TemplateProvider,
    stage: usize,
    max_vertices: usize,
) -> Result<NrBase> {
    if n < 2 || g < 3 {
        return Err(CoreError::InvalidArgument(format!("need n >= 2 and g >= 3, got n = {n}, g = {g}")));
    }
    if stage > n {
        return Err(CoreError::InvalidArgument(format!("stage {stage} exceeds n = {n}")));
    }
    let (b, stages) = run_stages(Partite::initial(2, n), n, g, stage, provider, max_vertices)?;
    let arcs = b.edges.iter().map(|e| {
        let (u, v) = (e[0], e[1]);
        if b.parts[u] < b.parts[v] {
            (u, v)
        } else {
            (v, u)
        }
    });
    let dag = ADigraph::from_arcs(b.n, arcs)?;
    Ok(NrBase { dag, parts: b.parts, stages })
}

/// Hypergraph analogue: a `k`-uniform partite hypergraph with part-major order.
#[derive(Clone, Debug)]
pub struct NrHyperBase {
    pub hypergraph: OrderedHypergraph,
    pub parts: Vec<usize>,
    pub part_count: usize,
    pub stages: Vec<StageRecord>,
}

/// Stage `stage` of the `k`-uniform construction with
/// `m = (k - 1)(n - 1) + 1` parts of size `C(m - 1, k - 1)`, one edge
/// through every `k` parts, edges pairwise disjoint. Gluing proceeds as in
/// [`build_nr`]. The order lists part 0 first, then part 1, and so on.
pub fn build_nr_hypergraph(
    k: usize,
    n: usize,
    g: usize,
    provider: &mut dyn TemplateProvider,
    stage: usize,
    max_vertices: usize,
) -> Result<NrHyperBase> {
    if k < 2 || n < 2 || g < 3 {
        return Err(CoreError::InvalidArgument(format!("need k >= 2, n >= 2, g >= 3, got {k}, {n}, {g}")));
    }
    let m = (k - 1) * (n - 1) + 1;
    if stage > m {
        return Err(CoreError::InvalidArgument(format!("stage {stage} exceeds part count {m}")));
    }
    let initial_size = m.saturating_mul(binomial(m - 1, k - 1));
    if initial_size > max_vertices {
        return Err(CoreError::SizeGuard(format!("initial structure has {initial_size} vertices")));
    }
    let (b, stages) = run_stages(Partite::initial(k, m), n, g, stage, provider, max_vertices)?;
    let order = b.part_major_order();
    let hypergraph = OrderedHypergraph::new(Hypergraph::new(b.n, b.edges.clone())?, order)?;
    Ok(NrHyperBase { hypergraph, parts: b.parts, part_count: m, stages })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TemplateMode {
    /// The chromatic bound is certified before returning.
    Verified,
    /// Returned as sampled and flagged unverified.
    Assumed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemplateSpec {
    pub uniformity: usize,
    pub chromatic_target: usize,
    pub girth_target: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
    pub seed: u64,
    pub mode: TemplateMode,
    pub attempts: u32,
    /// Work budget for each chromatic certification.
    pub budget: u64,
}

impl TemplateSpec {
    pub fn new(uniformity: usize, chromatic_target: usize, girth_target: usize, seed: u64) -> Self {
        TemplateSpec {
            uniformity,
            chromatic_target,
            girth_target,
            max_vertices: 25,
            max_edges: usize::MAX,
            seed,
            mode: TemplateMode::Verified,
            attempts: 64,
            budget: 50_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedHypergraph {
    pub hypergraph: Hypergraph,
    pub verified: bool,
    pub seed: u64,
    /// 1-based attempt that produced the output.
    pub attempt: u32,
}

/// Samples random `s`-subsets of `max_vertices` vertices, keeping each one
/// whose addition leaves the girth at least `g`, until `max_edges` edges or
/// a run of rejections. In verified mode an attempt succeeds only if no
/// `(k - 1)`-coloring exists; the result is then pruned to an edge-minimal
/// such hypergraph and isolated vertices are dropped.
pub fn gen_eh_hypergraph(spec: &TemplateSpec) -> Result<GeneratedHypergraph> {
    let s = spec.uniformity;
    let nv = spec.max_vertices;
    if s < 2 || spec.chromatic_target < 2 || s > nv {
        return Err(CoreError::InvalidArgument(format!(
            "need 2 <= s <= max_vertices and k >= 2 (s = {s}, k = {}, vertices = {nv})",
            spec.chromatic_target
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let patience = 40 * nv;
    for attempt in 1..=spec.attempts {
        let mut edges: Vec<Vec<Vertex>> = Vec::new();
        let mut misses = 0;
        while edges.len() < spec.max_edges && misses < patience {
            let mut e: Vec<Vertex> = index::sample(&mut rng, nv, s).into_vec();
            e.sort_unstable();
            edges.push(e);
            let candidate = Hypergraph::new(nv, edges.iter().cloned())?;
            let ok = match hypergraph_girth(&candidate) {
                Girth::Finite(girth) => girth >= spec.girth_target,
                Girth::Infinite => true,
            };
            if ok {
                misses = 0;
            } else {
                edges.pop();
                misses += 1;
            }
        }
        let h = Hypergraph::new(nv, edges.iter().cloned())?;
        match spec.mode {
            TemplateMode::Assumed => {
                return Ok(GeneratedHypergraph { hypergraph: h, verified: false, seed: spec.seed, attempt });
            }
            TemplateMode::Verified => {
                let k1 = spec.chromatic_target - 1;
                if hypergraph_k_colorable(&h, k1, spec.budget)?.is_some() {
                    continue;
                }
                let mut kept = edges;
                let mut i = 0;
                while i < kept.len() {
                    let e = kept.remove(i);
                    let trial = Hypergraph::new(nv, kept.iter().cloned())?;
                    if hypergraph_k_colorable(&trial, k1, spec.budget)?.is_some() {
                        kept.insert(i, e);
                        i += 1;
                    }
                }
                let h = compact(nv, &kept)?;
                return Ok(GeneratedHypergraph { hypergraph: h, verified: true, seed: spec.seed, attempt });
            }
        }
    }
    Err(CoreError::GenerationExhausted { attempts: spec.attempts })
}

/// Drops vertices in no edge, keeping the relative order of the rest.
fn compact(n: usize, edges: &[Vec<Vertex>]) -> Result<Hypergraph> {
    let mut used = vec![false; n];
    for e in edges {
        for &v in e {
            used[v] = true;
        }
    }
    let mut id = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if used[v] {
            id[v] = next;
            next += 1;
        }
    }
    Hypergraph::new(next, edges.iter().map(|e| e.iter().map(|&v| id[v]).collect::<Vec<_>>()))
}

/// The directed path `0 -> 1 -> ... -> len`.
pub fn build_path_base(len: usize) -> ADigraph {
    ADigraph::from_arcs(len + 1, (0..len).map(|i| (i, i + 1))).expect("a path is acyclic")
}

/// `length` edges of size `m`, consecutive edges sharing exactly one
/// vertex, ordered left to right.
pub fn build_loose_hyperpath(m: usize, length: usize) -> Result<OrderedHypergraph> {
    if m < 2 || length < 1 {
        return Err(CoreError::InvalidArgument(format!("need m >= 2 and length >= 1, got {m}, {length}")));
    }
    let n = length * (m - 1) + 1;
    let edges = (0..length).map(|t| (t * (m - 1)..t * (m - 1) + m).collect::<Vec<_>>());
    Ok(OrderedHypergraph::with_natural_order(Hypergraph::new(n, edges)?))
}

/// The ≺-digraph of an ordered hypergraph.
#[derive(Clone, Debug)]
pub struct PrecDigraph {
    /// Acyclic because every arc points forward in the order.
    pub dag: ADigraph,
    /// For each arc of `dag.arcs()`, the first hyperedge producing it.
    pub arc_source: Vec<usize>,
    /// Arcs produced by more than one hyperedge; empty when girth >= 3.
    pub collisions: Vec<(Vertex, Vertex)>,
}

impl PrecDigraph {
    pub fn flagged(&self) -> bool {
        !self.collisions.is_empty()
    }
}

/// Chains the vertices of each edge in order: `v_1 -> v_2 -> ... -> v_a`.
pub fn prec_digraph(oh: &OrderedHypergraph) -> PrecDigraph {
    let h = oh.hypergraph();
    let mut arcs: Vec<((Vertex, Vertex), usize)> = Vec::new();
    for i in 0..h.edge_count() {
        let e = oh.ordered_edge(i);
        arcs.extend(e.windows(2).map(|w| ((w[0], w[1]), i)));
    }
    arcs.sort_unstable();
    let mut collisions: Vec<(Vertex, Vertex)> = arcs.windows(2).filter(|w| w[0].0 == w[1].0).map(|w| w[0].0).collect();
    collisions.dedup();
    arcs.dedup_by_key(|a| a.0);
    let digraph = Digraph::new(h.vertex_count(), arcs.iter().map(|a| a.0)).expect("order-forward arcs are simple");
    let arc_source = digraph
        .arcs()
        .iter()
        .map(|a| arcs[arcs.binary_search_by_key(a, |x| x.0).unwrap()].1)
        .collect();
    let dag = ADigraph::new(digraph).expect("order-forward arcs are acyclic");
    PrecDigraph { dag, arc_source, collisions }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{check_base_properties, reach_distance};

    #[test]
    fn zykov_sizes() {
        let sizes: Vec<(usize, usize)> = (1..=4)
            .map(|n| {
                let z = build_zykov(n).unwrap();
                (z.dag.vertex_count(), z.dag.arc_count())
            })
            .collect();
        assert_eq!(sizes, vec![(1, 0), (2, 1), (8, 10), (536, 1566)]);
        assert!(matches!(build_zykov(5), Err(CoreError::SizeGuard(_))));
    }

    #[test]
    fn zykov_apex_distance() {
        let z = build_zykov(3).unwrap();
        let apex = z.labels.iter().position(|l| l == "a[1,0]").unwrap();
        let v1 = z.labels.iter().position(|l| l == "0.a[0]").unwrap();
        assert_eq!(reach_distance(&z.dag, v1, apex), Ok(Some(1)));
        assert!(check_base_properties(&z.dag).unique_paths);
    }

    fn c5() -> Template {
        Template { hypergraph: Hypergraph::new(5, (0..5).map(|i| vec![i, (i + 1) % 5])).unwrap(), verified: true }
    }

    #[test]
    fn nr_initial_stages() {
        let mut p = FixedTemplate(c5());
        let b = build_nr(2, 3, &mut p, 0, DEFAULT_MAX_VERTICES).unwrap();
        assert_eq!((b.dag.vertex_count(), b.dag.arc_count()), (2, 1));
        let b = build_nr(3, 3, &mut p, 0, DEFAULT_MAX_VERTICES).unwrap();
        assert_eq!((b.dag.vertex_count(), b.dag.arc_count()), (6, 3));
        let d = b.dag.underlying();
        assert!((0..6).all(|v| d.degree(v) == 1));
        let b = build_nr(3, 3, &mut p, 1, DEFAULT_MAX_VERTICES).unwrap();
        assert_eq!((b.dag.vertex_count(), b.dag.arc_count()), (25, 15));
        assert!(b.dag.arcs().iter().all(|&(u, v)| b.parts[u] < b.parts[v]));
    }

    #[test]
    fn nr_rejects_bad_templates() {
        let mut wrong = FixedTemplate(Template {
            hypergraph: Hypergraph::new(3, [[0, 1, 2]]).unwrap(),
            verified: true,
        });
        assert!(matches!(
            build_nr(3, 3, &mut wrong, 1, DEFAULT_MAX_VERTICES),
            Err(CoreError::TemplateMismatch { stage: 1, expected: 2, .. })
        ));
        let mut short = FixedTemplate(Template {
            hypergraph: Hypergraph::new(3, [[0, 1], [1, 2], [0, 2]]).unwrap(),
            verified: true,
        });
        assert!(matches!(
            build_nr(3, 5, &mut short, 1, DEFAULT_MAX_VERTICES),
            Err(CoreError::TemplateGirth { stage: 1, girth: 3, required: 5 })
        ));
    }

    #[test]
    fn nr_hypergraph_initial() {
        let mut p = FixedTemplate(c5());
        let b = build_nr_hypergraph(3, 3, 3, &mut p, 0, DEFAULT_MAX_VERTICES).unwrap();
        assert_eq!(b.part_count, 5);
        let h = b.hypergraph.hypergraph();
        assert_eq!((h.vertex_count(), h.edge_count()), (30, 10));
        assert!(h.is_uniform(3));
        // Matching: every vertex lies in exactly one edge.
        assert!(h.incidence().iter().all(|i| i.len() == 1));
        let order = b.hypergraph.order();
        assert!(order.windows(2).all(|w| b.parts[w[0]] <= b.parts[w[1]]));
    }

    #[test]
    fn trivial_templates_for_singleton_parts() {
        let mut p = FixedTemplate(c5());
        let b = build_nr(2, 3, &mut p, 2, DEFAULT_MAX_VERTICES).unwrap();
        assert_eq!((b.dag.vertex_count(), b.dag.arc_count()), (2, 1));
    }

    #[test]
    fn path_and_loose_path() {
        let p = build_path_base(3);
        assert_eq!(reach_distance(&p, 0, 3), Ok(Some(3)));
        let lp = build_loose_hyperpath(3, 2).unwrap();
        assert_eq!(lp.hypergraph().edges(), &[vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(hypergraph_girth(lp.hypergraph()), Girth::Infinite);
        let pd = prec_digraph(&lp);
        assert_eq!(pd.dag.arcs(), &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert!(!pd.flagged());
    }

    #[test]
    fn prec_digraph_flags_girth_two() {
        let h = Hypergraph::new(4, [[0, 1, 2], [1, 2, 3]]).unwrap();
        let pd = prec_digraph(&OrderedHypergraph::with_natural_order(h));
        assert_eq!(pd.collisions, vec![(1, 2)]);
    }

    #[test]
    fn generated_graph_template_is_odd_cycle() {
        let g = gen_eh_hypergraph(&TemplateSpec::new(2, 3, 3, 11)).unwrap();
        assert!(g.verified);
        let h = &g.hypergraph;
        // An edge-minimal non-bipartite graph is an odd cycle.
        assert_eq!(h.vertex_count(), h.edge_count());
        assert_eq!(h.vertex_count() % 2, 1);
        assert!(h.incidence().iter().all(|i| i.len() == 2));
        assert_eq!(g, gen_eh_hypergraph(&TemplateSpec::new(2, 3, 3, 11)).unwrap());
    }
}
