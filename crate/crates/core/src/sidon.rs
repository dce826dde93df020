//! B_h sets, difference sets, and executable forms of the interval-sum
//! (clique) and balanced-sum (cycle) facts about them.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CoreError, Result};

/// Outcome of a B_h test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BhVerdict {
    Valid,
    /// Two distinct multisets (as sorted element lists) with equal sums.
    Collision(Vec<u64>, Vec<u64>),
}

impl BhVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, BhVerdict::Valid)
    }
}

fn check_elements(elements: &[u64], h: usize) -> Result<()> {
    if elements.is_empty() {
        return Err(CoreError::InvalidArgument("empty element list".into()));
    }
    if h < 2 {
        return Err(CoreError::InvalidArgument(alloc::format!("h = {h}; need h >= 2")));
    }
    if elements[0] == 0 || elements.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CoreError::InvalidArgument("elements must be positive and strictly increasing".into()));
    }
    Ok(())
}

/// Tests whether all `h`-element multiset sums of `elements` are distinct.
///
/// Multisets are enumerated in lexicographic order of their index tuples;
/// a collision reports the later multiset first.
pub fn is_bh_set(elements: &[u64], h: usize) -> Result<BhVerdict> {
    check_elements(elements, h)?;
    let k = elements.len();
    let mut seen: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    let mut idx = vec![0usize; h];
    loop {
        let sum: u64 = idx.iter().map(|&i| elements[i]).sum();
        if let Some(prev) = seen.get(&sum) {
            let pick = |ix: &[usize]| ix.iter().map(|&i| elements[i]).collect();
            return Ok(BhVerdict::Collision(pick(&idx), pick(prev)));
        }
        seen.insert(sum, idx.clone());
        // Next non-decreasing index tuple.
        let Some(pos) = (0..h).rev().find(|&p| idx[p] + 1 < k) else {
            return Ok(BhVerdict::Valid);
        };
        let v = idx[pos] + 1;
        for slot in &mut idx[pos..] {
            *slot = v;
        }
    }
}

/// A certified B_h set with every element in `[1, bound]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BhSet {
    elements: Vec<u64>,
    h: usize,
    bound: u64,
}

impl BhSet {
    /// Certifies `elements` by brute force.
    pub fn new(elements: Vec<u64>, h: usize, bound: u64) -> Result<Self> {
        match is_bh_set(&elements, h)? {
            BhVerdict::Valid => {}
            BhVerdict::Collision(a, b) => {
                return Err(CoreError::InvalidArgument(alloc::format!(
                    "not a B_{h} set: {a:?} and {b:?} have equal sums"
                )))
            }
        }
        if let Some(&max) = elements.last() {
            if max > bound {
                return Err(CoreError::InvalidArgument(alloc::format!(
                    "element {max} exceeds bound {bound}"
                )));
            }
        }
        Ok(BhSet { elements, h, bound })
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max(&self) -> u64 {
        *self.elements.last().unwrap()
    }

    pub fn index_of(&self, x: u64) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    /// The same set scaled by `factor`, with the bound scaled alike.
    pub fn scaled(&self, factor: u64) -> BhSet {
        BhSet {
            elements: self.elements.iter().map(|&x| x * factor).collect(),
            h: self.h,
            bound: self.bound * factor,
        }
    }

    /// The unique pair `(x, y)`, `y - x = d`. Unique because a B_h set with
    /// `h >= 2` is a Sidon set.
    pub fn pair_at(&self, d: u64) -> Option<(u64, u64)> {
        self.elements.iter().find(|&&x| self.index_of(x + d).is_some()).map(|&x| (x, x + d))
    }
}

/// Greedy B_h set: starting from `seed`, repeatedly adds the smallest
/// integer above the current maximum that keeps the B_h property, until
/// `size` elements are chosen. Since every B_h set extends, this is the
/// lexicographically first such set. Fails if it would leave `[1, bound]`.
pub fn greedy_bh(size: usize, h: usize, bound: u64, seed: &[u64]) -> Result<BhSet> {
    if size < 2 || bound < 2 {
        return Err(CoreError::InvalidArgument("need size >= 2 and bound >= 2".into()));
    }
    let mut elements: Vec<u64> = seed.to_vec();
    if elements.len() > size {
        return Err(CoreError::InvalidArgument("seed is larger than the requested size".into()));
    }
    if !elements.is_empty() && !is_bh_set(&elements, h)?.is_valid() {
        return Err(CoreError::InvalidArgument("seed is not a B_h set".into()));
    }
    if elements.last().is_some_and(|&m| m > bound) {
        return Err(CoreError::BhExhausted { size, h, bound });
    }
    let mut next = elements.last().map_or(1, |&m| m + 1);
    while elements.len() < size {
        if next > bound {
            return Err(CoreError::BhExhausted { size, h, bound });
        }
        elements.push(next);
        if !is_bh_set(&elements, h)?.is_valid() {
            elements.pop();
        }
        next += 1;
    }
    BhSet::new(elements, h, bound)
}

/// Positive pairwise differences of a set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffSet {
    values: Vec<u64>,
}

impl DiffSet {
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn contains(&self, d: u64) -> bool {
        self.values.binary_search(&d).is_ok()
    }
}

pub fn difference_set(s: &BhSet) -> DiffSet {
    let e = s.elements();
    let mut values: Vec<u64> = (0..e.len()).flat_map(|j| (0..j).map(move |i| e[j] - e[i])).collect();
    values.sort_unstable();
    values.dedup();
    DiffSet { values }
}

/// Finds `b_1 < ... < b_{l+1}` in `S` whose consecutive gaps are `d_seq`
/// read forwards or backwards, given that every contiguous interval sum of
/// `d_seq` is a difference of `S`.
pub fn clique_fact_witness(s: &BhSet, d_seq: &[u64]) -> Result<Vec<u64>> {
    if d_seq.is_empty() {
        return Err(CoreError::InvalidArgument("empty difference sequence".into()));
    }
    let diffs = difference_set(s);
    for from in 0..d_seq.len() {
        let mut sum = 0u64;
        for (to, &d) in d_seq.iter().enumerate().skip(from) {
            sum += d;
            if !diffs.contains(sum) {
                return Err(CoreError::HypothesisViolation { from, to, sum });
            }
        }
    }
    let reversed: Vec<u64> = d_seq.iter().rev().copied().collect();
    for gaps in [d_seq, &reversed[..]] {
        for &start in s.elements() {
            let mut b = vec![start];
            let mut cur = start;
            let fits = gaps.iter().all(|&d| {
                cur += d;
                b.push(cur);
                s.index_of(cur).is_some()
            });
            if fits {
                return Ok(b);
            }
        }
    }
    Err(CoreError::Contradiction(alloc::format!(
        "no chain with gaps {d_seq:?} in {:?}",
        s.elements()
    )))
}

/// A closed walk over elements of `S` using each listed edge once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    /// Indices into the difference sequence, in walk order.
    pub edges: Vec<usize>,
    /// `vertices[i]` and `vertices[i + 1]` (cyclically) are joined by `edges[i]`.
    pub vertices: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitDecomposition {
    /// Endpoints `(x_i, y_i)` of edge `i`, `y_i - x_i = d_i`.
    pub edges: Vec<(u64, u64)>,
    pub circuits: Vec<Circuit>,
    /// An odd cycle (distinct vertices) of the simple graph underlying the
    /// multigraph, present whenever the number of edges is odd.
    pub odd_cycle: Option<Vec<u64>>,
}

/// A walk segment: steps `(edge, from, to)`.
type Trail = Vec<(usize, u64, u64)>;

#[derive(Clone, Debug)]
struct Item {
    x: u64,
    y: u64,
    trail: Trail,
}

fn reversed(t: &Trail) -> Trail {
    t.iter().rev().map(|&(e, a, b)| (e, b, a)).collect()
}

/// Splits the multigraph with edges `d_seq` (on the pairs of `S` at those
/// distances) into circuits, following the induction that proves the
/// balanced-sum fact for `d_1 + ... + d_split = d_{split+1} + ... + d_l`.
///
/// `split` counts the terms on the left side. At each step the first left
/// item `(x_1, y_1)` is matched against the left items by `y_1 = x_i`
/// (merged into one longer item) before the right items by `y_1 = y_j`
/// (cancelled when `x_1 = x_j`, otherwise replaced by their difference);
/// the smallest index wins within each case.
pub fn cycle_fact_decompose(s: &BhSet, d_seq: &[u64], split: usize) -> Result<CircuitDecomposition> {
    let l = d_seq.len();
    if l < 2 || l > s.h() {
        return Err(CoreError::Precondition(alloc::format!(
            "sequence length {l} must lie in [2, {}]",
            s.h()
        )));
    }
    if split == 0 || split >= l {
        return Err(CoreError::Precondition(alloc::format!("split {split} must lie in [1, {}]", l - 1)));
    }
    let left: u64 = d_seq[..split].iter().sum();
    let right: u64 = d_seq[split..].iter().sum();
    if left != right {
        return Err(CoreError::Precondition(alloc::format!("unbalanced sums {left} != {right}")));
    }
    let mut edges = Vec::with_capacity(l);
    for &d in d_seq {
        let pair = s
            .pair_at(d)
            .ok_or_else(|| CoreError::Precondition(alloc::format!("{d} is not a difference of the set")))?;
        edges.push(pair);
    }
    let item = |i: usize| Item { x: edges[i].0, y: edges[i].1, trail: vec![(i, edges[i].0, edges[i].1)] };
    let mut lhs: Vec<Item> = (0..split).map(item).collect();
    let mut rhs: Vec<Item> = (split..l).map(item).collect();
    let mut circuits = Vec::new();
    while !lhs.is_empty() {
        if lhs.len() + rhs.len() == 2 {
            let (a, b) = (lhs.pop().unwrap(), rhs.pop().unwrap());
            if (a.x, a.y) != (b.x, b.y) {
                return Err(CoreError::Contradiction("final pair of items disagree".into()));
            }
            let mut t = a.trail;
            t.extend(reversed(&b.trail));
            circuits.push(trail_circuit(&t));
            break;
        }
        let first = &lhs[0];
        if let Some(i) = (1..lhs.len()).find(|&i| lhs[i].x == first.y) {
            let other = lhs.remove(i);
            let first = &mut lhs[0];
            first.y = other.y;
            first.trail.extend(other.trail);
            continue;
        }
        let Some(j) = (0..rhs.len()).find(|&j| rhs[j].y == first.y) else {
            return Err(CoreError::Contradiction(alloc::format!(
                "element {} matches no other endpoint",
                first.y
            )));
        };
        let a = lhs.remove(0);
        let b = rhs.remove(j);
        if a.x == b.x {
            let mut t = a.trail;
            t.extend(reversed(&b.trail));
            circuits.push(trail_circuit(&t));
        } else if b.x > a.x {
            let mut trail = a.trail;
            trail.extend(reversed(&b.trail));
            lhs.insert(0, Item { x: a.x, y: b.x, trail });
        } else {
            let mut trail = b.trail;
            trail.extend(reversed(&a.trail));
            rhs.insert(0, Item { x: b.x, y: a.x, trail });
        }
    }
    if !rhs.is_empty() {
        return Err(CoreError::Contradiction("unmatched right-hand items".into()));
    }
    let odd_cycle = circuits
        .iter()
        .find(|c| c.edges.len() % 2 == 1)
        .map(|c| canonical_cycle(odd_simple_cycle(&c.vertices)));
    if l % 2 == 1 && odd_cycle.is_none() {
        return Err(CoreError::Contradiction("odd edge count without an odd circuit".into()));
    }
    Ok(CircuitDecomposition { edges, circuits, odd_cycle })
}

fn trail_circuit(t: &Trail) -> Circuit {
    Circuit { edges: t.iter().map(|s| s.0).collect(), vertices: t.iter().map(|s| s.1).collect() }
}

/// Shortcuts an odd closed walk at repeated vertices until it is a cycle.
fn odd_simple_cycle(walk: &[u64]) -> Vec<u64> {
    let mut w = walk.to_vec();
    'outer: loop {
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] == w[j] {
                    // Closed walks w[i..j] and w[j..] + w[..i]; exactly one is odd.
                    let inner: Vec<u64> = w[i..j].to_vec();
                    w = if inner.len() % 2 == 1 {
                        inner
                    } else {
                        let mut outer = w[j..].to_vec();
                        outer.extend_from_slice(&w[..i]);
                        outer
                    };
                    continue 'outer;
                }
            }
        }
        return w;
    }
}

/// Rotates to start at the minimum, then picks the direction whose second
/// vertex is smaller.
fn canonical_cycle(c: Vec<u64>) -> Vec<u64> {
    let k = c.len();
    let start = (0..k).min_by_key(|&i| c[i]).unwrap();
    let fwd: Vec<u64> = (0..k).map(|t| c[(start + t) % k]).collect();
    let bwd: Vec<u64> = (0..k).map(|t| c[(start + k - t) % k]).collect();
    if k > 1 && bwd[1] < fwd[1] {
        bwd
    } else {
        fwd
    }
}


/// Outcome of the randomized executable checks of the Clique and Cycle facts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactTrialReport {
    pub h: usize,
    pub clique_trials: usize,
    pub clique_failures: usize,
    pub cycle_trials: usize,
    pub cycle_failures: usize,
    /// First failing trial: the set, the sequence and the split (0 for the
    /// Clique fact).
    pub first_failure: Option<(Vec<u64>, Vec<u64>, usize)>,
}

impl FactTrialReport {
    pub fn passed(&self) -> bool {
        self.clique_failures == 0 && self.cycle_failures == 0
    }
}

/// Random certified B_h set with elements in `[1, max]`, built by accepting
/// random candidates that keep the property.
pub fn random_bh_set<R: Rng>(rng: &mut R, h: usize, size: usize, max: u64) -> Result<BhSet> {
    let mut elements: Vec<u64> = Vec::new();
    for _ in 0..2000 {
        if elements.len() == size {
            break;
        }
        let x = rng.gen_range(1..=max);
        if elements.binary_search(&x).is_ok() {
            continue;
        }
        let mut next = elements.clone();
        next.push(x);
        next.sort_unstable();
        if is_bh_set(&next, h)?.is_valid() {
            elements = next;
        }
    }
    if elements.len() < 2 {
        return Err(CoreError::BhExhausted { size, h, bound: max });
    }
    BhSet::new(elements, h, max)
}

/// Runs `trials` random instances of each fact for order `h`, seeded.
///
/// Clique trials feed gap sequences of random chains of `S`, sometimes
/// reversed, and require a witness whose gaps match. Cycle trials feed the
/// positive and negative steps of a random closed walk of odd length
/// `l <= h` and require an odd cycle of length at most `l`.
pub fn run_fact_trials(h: usize, trials: usize, seed: u64) -> Result<FactTrialReport> {
    if h < 2 {
        return Err(CoreError::InvalidArgument("h must be at least 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = FactTrialReport { h, ..Default::default() };
    for _ in 0..trials {
        let size = rng.gen_range(3..=6);
        let s = random_bh_set(&mut rng, h, size, 500)?;
        let e = s.elements();

        let t = rng.gen_range(2..=e.len());
        let chain: Vec<u64> = rand::seq::index::sample(&mut rng, e.len(), t)
            .into_iter()
            .map(|i| e[i])
            .collect::<alloc::collections::BTreeSet<u64>>()
            .into_iter()
            .collect();
        let mut gaps: Vec<u64> = chain.windows(2).map(|w| w[1] - w[0]).collect();
        if rng.gen_bool(0.5) {
            gaps.reverse();
        }
        report.clique_trials += 1;
        let ok = match clique_fact_witness(&s, &gaps) {
            Ok(b) => {
                let fwd: Vec<u64> = b.windows(2).map(|w| w[1] - w[0]).collect();
                let mut back = fwd.clone();
                back.reverse();
                fwd == gaps || back == gaps
            }
            Err(_) => false,
        };
        if !ok {
            report.clique_failures += 1;
            report.first_failure.get_or_insert((e.to_vec(), gaps, 0));
        }

        if h >= 3 {
            let odd_lengths: Vec<usize> = (3..=h).filter(|l| l % 2 == 1).collect();
            let l = odd_lengths[rng.gen_range(0..odd_lengths.len())];
            let mut walk = vec![e[rng.gen_range(0..e.len())]];
            while walk.len() < l {
                let last = *walk.last().unwrap();
                let closing = walk.len() == l - 1;
                let choices: Vec<u64> =
                    e.iter().copied().filter(|&x| x != last && (!closing || x != walk[0])).collect();
                walk.push(choices[rng.gen_range(0..choices.len())]);
            }
            let steps: Vec<i64> = (0..l).map(|i| walk[(i + 1) % l] as i64 - walk[i] as i64).collect();
            let mut d_seq: Vec<u64> = steps.iter().filter(|&&x| x > 0).map(|&x| x as u64).collect();
            let split = d_seq.len();
            d_seq.extend(steps.iter().filter(|&&x| x < 0).map(|&x| x.unsigned_abs()));
            report.cycle_trials += 1;
            let ok = match cycle_fact_decompose(&s, &d_seq, split) {
                Ok(dec) => dec.odd_cycle.as_ref().is_some_and(|c| {
                    let k = c.len();
                    k % 2 == 1
                        && k <= l
                        && c.iter().all(|x| s.index_of(*x).is_some())
                        && c.iter().collect::<alloc::collections::BTreeSet<_>>().len() == k
                }),
                Err(_) => false,
            };
            if !ok {
                report.cycle_failures += 1;
                report.first_failure.get_or_insert((e.to_vec(), d_seq, split));
            }
        }
    }
    Ok(report)
}
