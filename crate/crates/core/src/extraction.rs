//! Complete bipartite and tripartite extraction.
//!
//! [`find_kst_dense`] and [`find_kst_pigeonhole`] find `K_{s,t}` in dense
//! bipartite graphs by common-neighbourhood counting. [`find_ksss`] chains
//! them into a staged search for a complete `K_{s,s,s}` inside a
//! 3-uniform hypergraph that covers most triangles of a tripartite system.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::bipartite::{BipartiteGraph, TripartiteKind, TripartiteSystem, TripartiteWitness};
use crate::budget::SearchBudget;
use crate::combin::{binom, BitSet, Combinations};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::rational::{self, ratio, Rational};

/// `U ⊆ A`, `T ⊆ B` (global ids, sorted) with every `(u, t)` an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KstWitness {
    pub u: Vec<u32>,
    pub t: Vec<u32>,
}

impl KstWitness {
    /// Builds and checks against the host.
    pub fn new(g: &BipartiteGraph, u: Vec<u32>, t: Vec<u32>) -> Result<Self> {
        let w = KstWitness { u, t };
        if !w.verify(g) {
            return Err(Error::Unverified(format!("{:?} x {:?} is not complete", w.u, w.t)));
        }
        Ok(w)
    }

    pub fn verify(&self, g: &BipartiteGraph) -> bool {
        self.u.iter().all(|&x| self.t.iter().all(|&y| g.has_edge(x, y)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KstMode {
    /// Maximize over every s-subset of `A`.
    Exact,
    /// Grow `U` one vertex at a time; no guarantee.
    Greedy,
}

fn common(g: &BipartiteGraph, idx: &[u32]) -> BitSet {
    let mut acc = BitSet::full(g.b().len());
    for &i in idx {
        acc.intersect_with(g.row(i as usize));
    }
    acc
}

fn witness_from_local(g: &BipartiteGraph, idx: &[u32], nbhd: &BitSet) -> Result<KstWitness> {
    let u = idx.iter().map(|&i| g.a()[i as usize]).collect();
    let t = nbhd.iter().map(|j| g.b()[j]).collect();
    KstWitness::new(g, u, t)
}

/// Best `s`-subset of `A` among lexicographic ranks `start..end`: the
/// largest common neighbourhood, earliest rank on ties. Returns
/// `(|T|, local indices)`.
pub fn kst_exact_range(g: &BipartiteGraph, s: usize, start: u64, end: u64) -> Option<(usize, Vec<u32>)> {
    let mut it = Combinations::starting_at(g.a().len() as u32, s, start);
    let mut best: Option<(usize, Vec<u32>)> = None;
    for _ in start..end {
        let Some(c) = it.next_ref() else { break };
        let size = common(g, c).count();
        if best.as_ref().map_or(true, |b| size > b.0) {
            best = Some((size, c.to_vec()));
        }
    }
    best
}

/// `K_{s,t}` with `|U| = s`. Exact mode is refused when `C(|A|, s)`
/// exceeds the budget's node cap.
pub fn find_kst_dense(g: &BipartiteGraph, s: usize, mode: KstMode, budget: &SearchBudget<'_>) -> Result<KstWitness> {
    let a = g.a().len();
    if s > a {
        return Err(Error::Param(format!("s = {s} exceeds |A| = {a}")));
    }
    match mode {
        KstMode::Exact => {
            let total = binom(a as u64, s as u64);
            if let Some(cap) = budget.node_cap {
                if total > cap {
                    return Err(Error::OverBudget { needed: total, cap });
                }
            }
            let (_, idx) = kst_exact_range(g, s, 0, total).expect("at least one subset");
            witness_from_local(g, &idx, &common(g, &idx))
        }
        KstMode::Greedy => {
            let mut idx: Vec<u32> = Vec::with_capacity(s);
            let mut acc = BitSet::full(g.b().len());
            for _ in 0..s {
                let pick = (0..a as u32)
                    .filter(|i| !idx.contains(i))
                    .max_by_key(|&i| (acc.intersection_count(g.row(i as usize)), core::cmp::Reverse(i)))
                    .expect("s <= |A|");
                acc.intersect_with(g.row(pick as usize));
                idx.push(pick);
            }
            idx.sort_unstable();
            witness_from_local(g, &idx, &acc)
        }
    }
}

/// A rational lower bound on `e^(-sqrt(s))`.
pub fn exp_neg_sqrt_lower(s: usize) -> Rational {
    let f = libm::exp(-libm::sqrt(s as f64));
    let scale: i64 = 1 << 52;
    let m = (f * scale as f64).floor() as i64 - 1;
    ratio(m.max(0), scale)
}

/// `⌈e^(-sqrt(s)) ε^s |B|⌉` with the exponential rounded down.
pub fn dense_guarantee(eps: &Rational, s: usize, b: usize) -> u64 {
    let r = exp_neg_sqrt_lower(s) * rational::pow(eps, s as u32);
    rational::ceil_mul_u64(&r, b as u64)
}

/// `e(G) >= ε|A||B|` and `s^(3/2) <= (ε/2)|A|`.
pub fn dense_preconditions(g: &BipartiteGraph, eps: &Rational, s: usize) -> bool {
    let (a, b) = (g.a().len() as u64, g.b().len() as u64);
    let dense = rational::at_least(g.edge_count() as u64, eps, a * b);
    let half = eps * rational::from_int(a) / rational::from_int(2);
    let small = half >= Rational::zero() && rational::from_int((s as u64).pow(3)) <= &half * &half;
    dense && small
}

/// `Σ_{v∈B} C(d(v), s)` and, separately, the number of pairs `(U, v)` with
/// `|U| = s`, `U ⊆ N(v)`, counted by enumerating `U`.
pub fn incidence_counts(g: &BipartiteGraph, s: usize) -> (u64, u64) {
    let t = g.transpose();
    let by_degree = (0..t.a().len()).map(|j| binom(t.row(j).count() as u64, s as u64)).sum();
    let by_subsets = Combinations::new(g.a().len() as u32, s)
        .map(|c| common(g, &c).count() as u64)
        .sum();
    (by_degree, by_subsets)
}

/// Outcome of the trace-bucketing extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PigeonholeResult {
    pub witness: KstWitness,
    pub s: usize,
    /// `⌈2^(-|A|) |B|⌉`.
    pub guaranteed_t: u64,
    /// `e(G) >= ε|A||B|` held; without it nothing is promised.
    pub precondition_met: bool,
    /// Every s-subset was scored. Otherwise only subsets of traces were.
    pub exhaustive: bool,
}

/// Largest `|A|` accepted by trace bucketing.
pub const MAX_TRACE_BITS: usize = 30;
const PIGEONHOLE_SUBSET_CAP: u64 = 1 << 22;

/// `K_{s,t}` with `s = ⌈ε|A|⌉`.
pub fn find_kst_pigeonhole(g: &BipartiteGraph, eps: &Rational) -> Result<PigeonholeResult> {
    let a = g.a().len() as u64;
    let s = rational::ceil_mul_u64(eps, a) as usize;
    let mut r = find_kst_pigeonhole_s(g, s)?;
    r.precondition_met = rational::at_least(g.edge_count() as u64, eps, a * g.b().len() as u64);
    Ok(r)
}

/// Trace bucketing with an explicit `s`: each `B` vertex is filed under its
/// neighbourhood in `A`, and an s-subset scores the number of vertices
/// whose trace contains it. The top scorer, earliest lexicographically, is
/// returned. `precondition_met` is computed as `e(G) >= (s/|A|)|A||B|`.
pub fn find_kst_pigeonhole_s(g: &BipartiteGraph, s: usize) -> Result<PigeonholeResult> {
    let a = g.a().len();
    if a > MAX_TRACE_BITS {
        return Err(Error::Param(format!("|A| = {a} exceeds the trace cap {MAX_TRACE_BITS}")));
    }
    if s > a {
        return Err(Error::Param(format!("s = {s} exceeds |A| = {a}")));
    }
    let t = g.transpose();
    let mut traces: BTreeMap<u32, u64> = BTreeMap::new();
    for j in 0..t.a().len() {
        let mask = t.row(j).iter().fold(0u32, |m, i| m | 1 << i);
        *traces.entry(mask).or_default() += 1;
    }
    let score = |mask: u32| -> u64 {
        traces
            .iter()
            .filter(|(&tr, _)| tr & mask == mask)
            .map(|(_, &c)| c)
            .sum()
    };
    let to_mask = |c: &[u32]| c.iter().fold(0u32, |m, &i| m | 1 << i);
    let total = binom(a as u64, s as u64);
    let exhaustive = total <= PIGEONHOLE_SUBSET_CAP;
    let mut candidates: Vec<Vec<u32>> = Vec::new();
    if exhaustive {
        candidates.extend(Combinations::new(a as u32, s));
    } else {
        for &tr in traces.keys() {
            let members: Vec<u32> = (0..a as u32).filter(|i| tr >> i & 1 == 1).collect();
            if members.len() >= s {
                candidates.push(members[..s].to_vec());
            }
        }
        candidates.push((0..s as u32).collect());
    }
    let mut best: Option<(u64, Vec<u32>)> = None;
    for c in candidates {
        let sc = score(to_mask(&c));
        let better = match &best {
            None => true,
            Some((bs, bc)) => sc > *bs || (sc == *bs && c < *bc),
        };
        if better {
            best = Some((sc, c));
        }
    }
    let (_, idx) = best.expect("some subset offered");
    let witness = witness_from_local(g, &idx, &common(g, &idx))?;
    let b = g.b().len() as u64;
    let guaranteed_t = if a >= 64 { 1.min(b) } else { b.div_ceil(1u64 << a) };
    let precondition_met =
        a == 0 || rational::at_least(g.edge_count() as u64, &ratio(s as i64, a as i64), a as u64 * b);
    Ok(PigeonholeResult {
        witness,
        s,
        guaranteed_t,
        precondition_met,
        exhaustive,
    })
}

/// Which link graph a goodness filter runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkPair {
    G12,
    G23,
    G31,
}

/// Edges of a link graph classified by how many of their triangles are
/// hyperedges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodEdgeReport {
    /// Good edges `(x, y)` in the link graph's own orientation.
    pub good: Vec<(u32, u32)>,
    /// Good edges lying in at least `floor` triangles.
    pub heavy: Vec<(u32, u32)>,
    pub proportion: Rational,
    pub floor: Rational,
}

/// Goodness at proportion `1 - 2η`, `0 <= η <= 1/8`.
pub fn good_edges(
    t: &TripartiteSystem,
    g3: &UniformHypergraph,
    eta: &Rational,
    pair: LinkPair,
    floor: &Rational,
) -> Result<GoodEdgeReport> {
    check_eta(eta)?;
    check_within_triangles(t, g3)?;
    let proportion = Rational::from_integer(BigInt::from(1)) - eta * rational::from_int(2);
    Ok(good_edges_at(t, g3, &proportion, pair, floor))
}

fn check_eta(eta: &Rational) -> Result<()> {
    if eta < &Rational::zero() || eta > &ratio(1, 8) {
        return Err(Error::Param(format!("η = {eta} outside [0, 1/8]")));
    }
    Ok(())
}

/// Every hyperedge with one vertex in each part must be a triangle.
fn check_within_triangles(t: &TripartiteSystem, g3: &UniformHypergraph) -> Result<()> {
    let [p1, p2, p3] = t.parts();
    let part_of = |v: u32| -> Option<usize> {
        [p1, p2, p3].iter().position(|p| p.binary_search(&v).is_ok())
    };
    for e in g3.edges() {
        let mut slot: [Option<u32>; 3] = [None; 3];
        let mut transversal = true;
        for &v in e {
            match part_of(v) {
                Some(i) if slot[i].is_none() => slot[i] = Some(v),
                _ => transversal = false,
            }
        }
        if !transversal {
            return Err(Error::Param(format!("hyperedge {e:?} is not a transversal triple")));
        }
        let [Some(x), Some(y), Some(z)] = slot else { unreachable!() };
        if !(t.g12().has_edge(x, y) && t.g23().has_edge(y, z) && t.g31().has_edge(z, x)) {
            return Err(Error::Param(format!("hyperedge {e:?} is not a triangle")));
        }
    }
    Ok(())
}

fn good_edges_at(
    t: &TripartiteSystem,
    g3: &UniformHypergraph,
    proportion: &Rational,
    pair: LinkPair,
    floor: &Rational,
) -> GoodEdgeReport {
    let rotated;
    let sys = match pair {
        LinkPair::G12 => t,
        LinkPair::G23 => {
            rotated = t.rotate();
            &rotated
        }
        LinkPair::G31 => {
            rotated = t.rotate().rotate();
            &rotated
        }
    };
    let (g, third_from_b, third_from_a) = (sys.g12(), sys.g23(), sys.g13());
    let third = sys.part(2);
    let mut good = Vec::new();
    let mut heavy = Vec::new();
    for (i, &x) in g.a().iter().enumerate() {
        for j in g.row(i).iter() {
            let y = g.b()[j];
            let mut tri = 0u64;
            let mut hit = 0u64;
            for k in third_from_b.row(j).iter() {
                if third_from_a.row(i).contains(k) {
                    tri += 1;
                    if g3.contains_unsorted(&[x, y, third[k]]) {
                        hit += 1;
                    }
                }
            }
            if rational::at_least(hit, proportion, tri) {
                good.push((x, y));
                if rational::from_int(tri) >= *floor {
                    heavy.push((x, y));
                }
            }
        }
    }
    GoodEdgeReport {
        good,
        heavy,
        proportion: proportion.clone(),
        floor: floor.clone(),
    }
}

/// Replacements for the formula-derived sizes, which degenerate at small `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KsssOverrides {
    pub s1: Option<usize>,
    pub s2: Option<usize>,
    pub t2: Option<usize>,
    pub t3: Option<usize>,
}

/// Sizes used by the pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KsssParams {
    /// Largest part size.
    pub n: usize,
    /// Isolated vertices that would pad each part up to `n`.
    pub padding: [usize; 3],
    pub s: usize,
    pub s1: usize,
    pub s2: usize,
    pub t2: usize,
    pub t3: usize,
}

/// `s1 = ⌊(δ/16) ln n⌋`, `s2 = ⌊(δ/16)² ln n⌋`, `t2 = t3 = ⌈n^(1/4)⌉`,
/// each replaced by its override when given.
pub fn ksss_params(n: usize, parts: [usize; 3], delta: &Rational, s: usize, o: &KsssOverrides) -> KsssParams {
    let ln = libm::log(n.max(1) as f64);
    let d16 = rational::to_f64(delta) / 16.0;
    let quarter = {
        let mut t = libm::ceil(libm::pow(n as f64, 0.25)) as usize;
        // correct float error at exact fourth powers
        while t > 0 && (t - 1).pow(4) >= n {
            t -= 1;
        }
        while t.pow(4) < n {
            t += 1;
        }
        t
    };
    KsssParams {
        n,
        padding: parts.map(|p| n - p),
        s,
        s1: o.s1.unwrap_or(libm::floor(d16 * ln) as usize),
        s2: o.s2.unwrap_or(libm::floor(d16 * d16 * ln) as usize),
        t2: o.t2.unwrap_or(quarter),
        t3: o.t3.unwrap_or(quarter),
    }
}

/// Hypotheses of the pipeline, checked and reported but never enforced.
#[derive(Clone, Debug, PartialEq)]
pub struct KsssPreconditions {
    pub triangles: u64,
    /// `triangles >= δ n³`.
    pub enough_triangles: bool,
    pub covered: u64,
    /// `covered >= (1 - η) triangles`.
    pub enough_coverage: bool,
    /// Natural log of the left side of the size condition
    /// `e^(2^10 δ^-2 s^(3/2)) (1-4η)^(-4s²) (16/δ)^(4s) <= n`.
    pub size_condition_log: f64,
    pub size_condition: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    /// Good and heavy edges of `G12`.
    GoodEdges,
    /// `S1 ⊆ V1` with common neighbourhood `T2`.
    FirstExtraction,
    /// Good and heavy edges between `S1` and `V3`.
    Refilter,
    /// `S2 ⊆ S1` with common neighbourhood `T3`.
    SecondExtraction,
    /// `S ⊆ S2` against link edges, then `S', S''`.
    Final,
}

/// Where the pipeline stopped and what was short.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageFailure {
    pub stage: Stage,
    pub reason: String,
    pub available: u64,
    pub required: u64,
}

/// One completed stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageRecord {
    pub stage: Stage,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KsssReport {
    pub params: KsssParams,
    pub preconditions: KsssPreconditions,
    pub stages: Vec<StageRecord>,
    pub outcome: core::result::Result<TripartiteWitness, StageFailure>,
}

fn fail(stage: Stage, reason: &str, available: u64, required: u64) -> core::result::Result<TripartiteWitness, StageFailure> {
    Err(StageFailure {
        stage,
        reason: reason.into(),
        available,
        required,
    })
}

/// Extraction with exact search when affordable, greedy otherwise.
fn extract(g: &BipartiteGraph, s: usize, cap: u64) -> (KstWitness, bool) {
    let exact = binom(g.a().len() as u64, s as u64) <= cap;
    let mode = if exact { KstMode::Exact } else { KstMode::Greedy };
    let w = find_kst_dense(g, s, mode, &SearchBudget::unlimited()).expect("s <= |A| checked by caller");
    (w, exact)
}

/// Subset count above which pipeline extractions fall back to greedy.
pub const PIPELINE_EXACT_CAP: u64 = 1 << 20;

/// Staged search for a complete `K_{s,s,s}` of `g3` across the parts of
/// `t`. `g3` may only contain triangles of `t`; `δ` is the triangle
/// density and `η` the fraction of triangles `g3` may miss.
pub fn find_ksss(
    t: &TripartiteSystem,
    g3: &UniformHypergraph,
    delta: &Rational,
    eta: &Rational,
    s: usize,
    overrides: &KsssOverrides,
) -> Result<KsssReport> {
    check_eta(eta)?;
    check_within_triangles(t, g3)?;
    if delta <= &Rational::zero() {
        return Err(Error::Param("δ must be positive".into()));
    }
    if s == 0 {
        return Err(Error::Param("s must be positive".into()));
    }
    let sizes = t.parts().map(|p| p.len());
    let n = t.max_part();
    let params = ksss_params(n, sizes, delta, s, overrides);
    let one = Rational::from_integer(BigInt::from(1));

    let triangles = t.triangle_count();
    let covered = t.triangles().filter(|x| g3.contains_unsorted(x)).count() as u64;
    let n3 = (n as u64).pow(3);
    let sf = s as f64;
    let d = rational::to_f64(delta);
    let e = rational::to_f64(eta);
    let size_condition_log =
        1024.0 / (d * d) * libm::pow(sf, 1.5) - 4.0 * sf * sf * libm::log(1.0 - 4.0 * e) + 4.0 * sf * libm::log(16.0 / d);
    let preconditions = KsssPreconditions {
        triangles,
        enough_triangles: rational::at_least(triangles, delta, n3),
        covered,
        enough_coverage: rational::at_least(covered, &(&one - eta), triangles),
        size_condition_log,
        size_condition: size_condition_log <= libm::log(n.max(1) as f64),
    };
    let mut report = KsssReport {
        params: params.clone(),
        preconditions,
        stages: Vec::new(),
        outcome: fail(Stage::GoodEdges, "not run", 0, 0),
    };
    let p = &params;
    let [v1, _, v3] = t.parts();

    // (i) good edges of G12 in at least δn/4 triangles
    let floor1 = delta * rational::from_int(n as u64) / rational::from_int(4);
    let prop1 = &one - eta * rational::from_int(2);
    let r1 = good_edges_at(t, g3, &prop1, LinkPair::G12, &floor1);
    report.stages.push(StageRecord {
        stage: Stage::GoodEdges,
        detail: format!("{} good, {} heavy (floor {floor1})", r1.good.len(), r1.heavy.len()),
    });
    if r1.heavy.is_empty() {
        report.outcome = fail(Stage::GoodEdges, "no good edge lies in enough triangles", 0, 1);
        return Ok(report);
    }
    let h12 = BipartiteGraph::new(t.g12().a(), t.g12().b(), r1.heavy.iter().copied())?;

    // (ii) S1 ⊆ V1 with common heavy neighbourhood T2
    if p.s1 == 0 || p.s1 > v1.len() {
        report.outcome = fail(Stage::FirstExtraction, "s1 unusable for |V1|", v1.len() as u64, p.s1 as u64);
        return Ok(report);
    }
    let (w2, exact2) = extract(&h12, p.s1, PIPELINE_EXACT_CAP);
    report.stages.push(StageRecord {
        stage: Stage::FirstExtraction,
        detail: format!("|S1| = {}, |T2| = {}, exact = {exact2}", w2.u.len(), w2.t.len()),
    });
    if w2.t.len() < p.t2.max(1) {
        report.outcome = fail(Stage::FirstExtraction, "common neighbourhood T2 too small", w2.t.len() as u64, p.t2.max(1) as u64);
        return Ok(report);
    }
    let (s1, t2) = (w2.u, w2.t);

    // (iii) goodness at 1 - 4η between S1 and V3, floor (δ/16)|T2|
    let sub = t.restrict(&s1, &t2, v3)?;
    let floor3 = delta * rational::from_int(t2.len() as u64) / rational::from_int(16);
    let prop3 = &one - eta * rational::from_int(4);
    let r3 = good_edges_at(&sub, g3, &prop3, LinkPair::G31, &floor3);
    report.stages.push(StageRecord {
        stage: Stage::Refilter,
        detail: format!("{} good, {} heavy (floor {floor3})", r3.good.len(), r3.heavy.len()),
    });
    if r3.heavy.is_empty() {
        report.outcome = fail(Stage::Refilter, "no good S1-V3 edge lies in enough triangles", 0, 1);
        return Ok(report);
    }
    // heavy edges are (v3, s1) pairs; orient from S1
    let h13 = BipartiteGraph::new(&s1, sub.part(2), r3.heavy.iter().map(|&(z, x)| (x, z)))?;

    // (iv) S2 ⊆ S1 with common neighbourhood T3 ⊆ V3
    if p.s2 == 0 || p.s2 > s1.len() {
        report.outcome = fail(Stage::SecondExtraction, "s2 unusable for |S1|", s1.len() as u64, p.s2 as u64);
        return Ok(report);
    }
    let r4 = find_kst_pigeonhole_s(&h13, p.s2)?;
    report.stages.push(StageRecord {
        stage: Stage::SecondExtraction,
        detail: format!("|S2| = {}, |T3| = {}", r4.witness.u.len(), r4.witness.t.len()),
    });
    if r4.witness.t.len() < p.t3.max(1) {
        report.outcome = fail(
            Stage::SecondExtraction,
            "common neighbourhood T3 too small",
            r4.witness.t.len() as u64,
            p.t3.max(1) as u64,
        );
        return Ok(report);
    }
    let (s2, t3) = (r4.witness.u, r4.witness.t);

    // (v) S2 against the link edges E23 between T2 and T3
    let e23: Vec<(u32, u32)> = t.g23().restrict(&t2, &t3)?.edges().collect();
    if e23.is_empty() || s > s2.len() {
        report.outcome = fail(Stage::Final, "no link edges between T2 and T3, or s > |S2|", e23.len() as u64, 1);
        return Ok(report);
    }
    let mut k_edges = Vec::new();
    for (i, &v) in s2.iter().enumerate() {
        for (j, &(y, z)) in e23.iter().enumerate() {
            if g3.contains_unsorted(&[v, y, z]) {
                k_edges.push((i as u32, (s2.len() + j) as u32));
            }
        }
    }
    let k = BipartiteGraph::with_ranges(s2.len() as u32, e23.len() as u32, k_edges)?;
    let (wk, _) = extract(&k, s, PIPELINE_EXACT_CAP);
    let big_s: Vec<u32> = wk.u.iter().map(|&i| s2[i as usize]).collect();
    let h23_edges: Vec<(u32, u32)> = wk.t.iter().map(|&j| e23[j as usize - s2.len()]).collect();
    if h23_edges.is_empty() {
        report.outcome = fail(Stage::Final, "no link edge spans hyperedges with all of S", 0, 1);
        return Ok(report);
    }
    let h23 = BipartiteGraph::new(&t2, &t3, h23_edges.iter().copied())?;
    if s > t2.len() {
        report.outcome = fail(Stage::Final, "|T2| below s", t2.len() as u64, s as u64);
        return Ok(report);
    }
    let (wf, _) = extract(&h23, s, PIPELINE_EXACT_CAP);
    report.stages.push(StageRecord {
        stage: Stage::Final,
        detail: format!("|H23| = {}, common neighbourhood of S' = {}", h23_edges.len(), wf.t.len()),
    });
    if wf.t.len() < s {
        report.outcome = fail(Stage::Final, "S' has fewer than s common neighbours", wf.t.len() as u64, s as u64);
        return Ok(report);
    }
    let witness = TripartiteWitness {
        parts: [big_s, wf.u, wf.t[..s].to_vec()],
        kind: TripartiteKind::Complete,
    };
    if !witness.verify(g3)? {
        return Err(Error::Unverified("pipeline witness is not complete".into()));
    }
    report.outcome = Ok(witness);
    Ok(report)
}

/// Rounds a rational to the nearest `u64` below, for display.
pub fn floor_u64(r: &Rational) -> u64 {
    r.floor().to_integer().to_u64().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles;
    use alloc::vec;

    fn example_3x4() -> BipartiteGraph {
        BipartiteGraph::new(
            &[0, 1, 2],
            &[3, 4, 5, 6],
            [(0, 3), (0, 4), (0, 5), (1, 4), (1, 5), (1, 6), (2, 3), (2, 5)],
        )
        .unwrap()
    }

    #[test]
    fn dense_examples() {
        let g = BipartiteGraph::complete(&[0, 1, 2], &[3, 4, 5, 6]).unwrap();
        let w = find_kst_dense(&g, 2, KstMode::Exact, &SearchBudget::unlimited()).unwrap();
        assert_eq!(w.t.len(), 4);
        assert_eq!(dense_guarantee(&ratio(1, 1), 2, 4), 1);
        let w = find_kst_dense(&example_3x4(), 2, KstMode::Exact, &SearchBudget::unlimited()).unwrap();
        assert_eq!(w, KstWitness { u: vec![0, 1], t: vec![4, 5] });
        let e = BipartiteGraph::new(&[0, 1], &[2, 3], []).unwrap();
        let w = find_kst_dense(&e, 1, KstMode::Exact, &SearchBudget::unlimited()).unwrap();
        assert!(w.t.is_empty());
        assert!(find_kst_dense(&e, 3, KstMode::Exact, &SearchBudget::unlimited()).is_err());
        assert!(matches!(
            find_kst_dense(&example_3x4(), 2, KstMode::Exact, &SearchBudget::nodes(2)),
            Err(Error::OverBudget { .. })
        ));
        let w = find_kst_dense(&example_3x4(), 2, KstMode::Greedy, &SearchBudget::unlimited()).unwrap();
        assert!(w.verify(&example_3x4()));
    }

    #[test]
    fn pigeonhole_examples() {
        let g = BipartiteGraph::complete(&[0, 1], &[2, 3, 4, 5]).unwrap();
        let r = find_kst_pigeonhole(&g, &ratio(1, 1)).unwrap();
        assert_eq!((r.s, r.witness.t.len()), (2, 4));
        // K_{2,4} minus (a2, b4)
        let g = BipartiteGraph::new(&[0, 1], &[2, 3, 4, 5], [(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4)]).unwrap();
        let r = find_kst_pigeonhole(&g, &ratio(3, 4)).unwrap();
        assert_eq!(r.s, 2);
        assert_eq!(r.witness, KstWitness { u: vec![0, 1], t: vec![2, 3, 4] });
        assert_eq!(r.guaranteed_t, 1);
        assert!(r.precondition_met);
        let e = BipartiteGraph::new(&[0, 1], &[2, 3], []).unwrap();
        let r = find_kst_pigeonhole(&e, &ratio(0, 1)).unwrap();
        assert_eq!((r.s, r.witness.u.len(), r.witness.t.len()), (0, 0, 2));
    }

    #[test]
    fn incidence_identity() {
        let g = example_3x4();
        for s in 0..=3 {
            let (a, b) = incidence_counts(&g, s);
            assert_eq!(a, b, "s = {s}");
        }
    }

    #[test]
    fn exact_matches_oracle() {
        for seed in 0..40u64 {
            let mut x = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) | 1;
            let g = BipartiteGraph::from_fn(&(0..7).collect::<Vec<_>>(), &(7..16).collect::<Vec<_>>(), |_, _| {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                x % 3 != 0
            })
            .unwrap();
            for s in 1..=4 {
                let w = find_kst_dense(&g, s, KstMode::Exact, &SearchBudget::unlimited()).unwrap();
                let (u, t) = oracles::max_kst_bf(&g, s).unwrap();
                assert_eq!((w.u, w.t), (u, t));
            }
        }
    }

    fn complete_system(size: u32) -> (TripartiteSystem, UniformHypergraph) {
        let v1: Vec<u32> = (0..size).collect();
        let v2: Vec<u32> = (size..2 * size).collect();
        let v3: Vec<u32> = (2 * size..3 * size).collect();
        let t = TripartiteSystem::complete(&v1, &v2, &v3).unwrap();
        let g3 = UniformHypergraph::new(3, 3 * size, t.triangles()).unwrap();
        (t, g3)
    }

    #[test]
    fn good_edge_examples() {
        let (t, all) = complete_system(2);
        let r = good_edges(&t, &all, &ratio(1, 8), LinkPair::G12, &ratio(1, 1)).unwrap();
        assert_eq!(r.good.len(), 4);
        let none = UniformHypergraph::empty(3, 6).unwrap();
        let r = good_edges(&t, &none, &ratio(1, 8), LinkPair::G12, &ratio(0, 1)).unwrap();
        assert!(r.good.is_empty());
        // drop triangle (0, 2, 4): edge (0, 2) keeps 1 of 2
        let missing = UniformHypergraph::new(3, 6, t.triangles().filter(|x| *x != [0, 2, 4])).unwrap();
        let r = good_edges(&t, &missing, &ratio(1, 8), LinkPair::G12, &ratio(0, 1)).unwrap();
        assert_eq!(r.good, vec![(0, 3), (1, 2), (1, 3)]);
        assert!(good_edges(&t, &all, &ratio(1, 4), LinkPair::G12, &ratio(0, 1)).is_err());
        let stray = UniformHypergraph::new(3, 6, [[0, 1, 2]]).unwrap();
        assert!(good_edges(&t, &stray, &ratio(1, 8), LinkPair::G12, &ratio(0, 1)).is_err());
        let r = good_edges(&t, &missing, &ratio(1, 8), LinkPair::G23, &ratio(0, 1)).unwrap();
        assert_eq!(r.good.len(), 3);
        let r = good_edges(&t, &missing, &ratio(1, 8), LinkPair::G31, &ratio(0, 1)).unwrap();
        assert_eq!(r.good.len(), 3);
    }

    #[test]
    fn pipeline_complete_host() {
        let (t, g3) = complete_system(8);
        let o = KsssOverrides {
            s1: Some(3),
            s2: Some(2),
            t2: Some(4),
            t3: Some(4),
        };
        let r = find_ksss(&t, &g3, &ratio(1, 1), &ratio(0, 1), 2, &o).unwrap();
        let w = r.outcome.unwrap();
        assert!(w.verify(&g3).unwrap());
        assert_eq!(w.size(), 2);
        let none = UniformHypergraph::empty(3, 24).unwrap();
        let r = find_ksss(&t, &none, &ratio(1, 1), &ratio(1, 8), 2, &o).unwrap();
        assert_eq!(r.outcome.unwrap_err().stage, Stage::GoodEdges);
    }

    #[test]
    fn default_params() {
        let p = ksss_params(16, [16, 16, 10], &ratio(1, 1), 2, &KsssOverrides::default());
        assert_eq!((p.t2, p.t3), (2, 2));
        assert_eq!(p.padding, [0, 0, 6]);
        assert_eq!(p.s1, 0);
        let p = ksss_params(17, [17; 3], &ratio(1, 1), 2, &KsssOverrides::default());
        assert_eq!(p.t2, 3);
    }
}
