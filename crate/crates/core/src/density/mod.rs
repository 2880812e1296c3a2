//! Bi-density and tri-density checkers, parameter calculators, the
//! vertex-by-vertex embedder and the embed-or-extract driver.

mod dichotomy;
mod embed;

pub use dichotomy::{dichotomy, DichotomyOutcome, DichotomyReport, DichotomySettings};
pub use embed::{
    embed, verify_certificate, EmbedOptions, EmbedOutcome, EmbeddingState, FailureCertificate, FailureKind,
    EmbedReport, SparseCandidate, StepRecord, is_induced_copy,
};

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::bipartite::{BipartiteGraph, TripartiteSystem};
use crate::budget::SearchBudget;
use crate::combin::{binom, next_combination};
use crate::error::{Error, Result};
use crate::hypergraph::TupleColouring;
use crate::rational::{self, Rational};
use crate::rng::{self, stream};

/// `ρ` and target size `t` for the embedder, with the derived sequences
/// `c_i = ρ^{i²/2}/t` and `ε_i = ρ^{t²−i²/2}/(2t²)`.
///
/// Both involve half-integer powers of `ρ`, so they are exposed squared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityParams {
    pub t: usize,
    pub rho: Rational,
}

impl DensityParams {
    pub fn new(t: usize, rho: Rational) -> Result<Self> {
        if t < 3 {
            return Err(Error::Param(alloc::format!("t must be at least 3, got {t}")));
        }
        check_unit_interval(&rho, "ρ")?;
        Ok(DensityParams { t, rho })
    }

    pub fn rho_pow(&self, i: usize) -> Rational {
        rational::pow(&self.rho, i as u32)
    }

    /// `c_i²  = ρ^{i²} / t²`.
    pub fn c_sq(&self, i: usize) -> Rational {
        rational::pow(&self.rho, (i * i) as u32) / rational::from_int((self.t * self.t) as u64)
    }

    /// `ε_i² = ρ^{2t²−i²} / (4t⁴)`.
    pub fn eps_sq(&self, i: usize) -> Rational {
        let t = self.t;
        rational::pow(&self.rho, (2 * t * t - i * i) as u32) / rational::from_int(4 * (t as u64).pow(4))
    }
}

fn check_unit_interval(r: &Rational, name: &str) -> Result<()> {
    if r <= &Rational::zero() || r > &Rational::one() {
        return Err(Error::Param(alloc::format!("{name} must lie in (0, 1]")));
    }
    Ok(())
}

/// `ε` and the size threshold of the embedding lemma.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaParams {
    /// `(2t)^{-10} ρ^{3t²}`.
    pub eps: Rational,
    /// `⌈(2t)^{10} ρ^{-3t²}⌉`.
    pub n_min: BigUint,
}

pub fn lemma_params(t: usize, rho: &Rational) -> Result<LemmaParams> {
    let p = DensityParams::new(t, rho.clone())?;
    let two_t = rational::from_int(2 * t as u64);
    let eps = p.rho_pow(3 * t * t) / rational::pow(&two_t, 10);
    let inv = eps.recip();
    let n_min = inv.ceil().to_integer().to_biguint().expect("positive");
    Ok(LemmaParams { eps, n_min })
}

/// Parameters of the tripartite theorem at a given `n`, with the three
/// exponent terms of the size condition evaluated numerically.
#[derive(Clone, Debug, PartialEq)]
pub struct TheoremParams {
    pub t: usize,
    pub log_n: f64,
    /// `1/(55t²)`.
    pub delta_h: Rational,
    /// `(log n)^{-1/(27t²)}`.
    pub rho: f64,
    /// `(2t)^{-10} ρ^{3t²}`.
    pub eps: f64,
    /// `⌊(log n)^{1/2 + δH}⌋`.
    pub s: u64,
    /// `2^10 ε^{-2} s^{3/2}`, `32 ρ s²` and `64 s / ε`.
    pub terms: [f64; 3],
    /// Each term compared with `log n`.
    pub terms_below_log_n: [bool; 3],
    pub rho_below_one: bool,
    pub rho_at_most_eighth: bool,
}

/// [`theorem_params_log`] at `log n` for an integer `n >= 3`.
pub fn theorem_params(t: usize, n: u64) -> Result<TheoremParams> {
    if n < 3 {
        return Err(Error::Param("n must be at least 3".into()));
    }
    theorem_params_log(t, libm::log(n as f64))
}

/// Natural logarithm throughout.
pub fn theorem_params_log(t: usize, log_n: f64) -> Result<TheoremParams> {
    if t < 3 {
        return Err(Error::Param(alloc::format!("t must be at least 3, got {t}")));
    }
    if !(log_n >= 1.0) || !log_n.is_finite() {
        return Err(Error::Param("log n must be finite and at least 1".into()));
    }
    let tt = (t * t) as f64;
    let delta_h = Rational::new(BigInt::one(), BigInt::from(55 * t * t));
    let rho = libm::pow(log_n, -1.0 / (27.0 * tt));
    let eps = libm::pow(2.0 * t as f64, -10.0) * libm::pow(rho, 3.0 * tt);
    let s = libm::floor(libm::pow(log_n, 0.5 + 1.0 / (55.0 * tt))) as u64;
    let sf = s as f64;
    let terms = [
        1024.0 / (eps * eps) * libm::pow(sf, 1.5),
        32.0 * rho * sf * sf,
        64.0 * sf / eps,
    ];
    Ok(TheoremParams {
        t,
        log_n,
        delta_h,
        rho,
        eps,
        s,
        terms_below_log_n: terms.map(|x| x < log_n),
        terms,
        rho_below_one: rho < 1.0,
        rho_at_most_eighth: rho <= 0.125,
    })
}

/// Pair `(X, Y)` with `d(X, Y) < ρ` and both sets above their size floors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiWitness {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
    pub edges: u64,
}

impl BiWitness {
    /// Recounts the edges and checks the floors and `d(X, Y) < ρ`.
    pub fn verify(&self, g: &BipartiteGraph, eps: &Rational, rho: &Rational) -> Result<bool> {
        let (m1, m2) = size_floors(g, eps);
        let e = g.edges_between(&self.x, &self.y)?;
        Ok(e == self.edges
            && self.x.len() >= m1
            && self.y.len() >= m2
            && rational::fraction_below(e, (self.x.len() * self.y.len()) as u64, rho))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BiDensity {
    Dense,
    Sparse(BiWitness),
    /// Sampling found no violation; never returned by exact mode.
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DensityMode {
    Exact,
    Sampled { seed: u64, samples: u32 },
}

/// Exact bi-density work cap, in adjacency probes.
pub const BIDENSE_EXACT_CAP: u64 = 50_000_000;

/// `(max(1, ⌈ε|A|⌉), max(1, ⌈ε|B|⌉))`.
pub fn size_floors(g: &BipartiteGraph, eps: &Rational) -> (usize, usize) {
    let f = |n: usize| (rational::ceil_mul_u64(eps, n as u64) as usize).max(1);
    (f(g.a().len()), f(g.b().len()))
}

/// Is `g` bi-`(ε, ρ)`-dense: `d(X, Y) >= ρ` whenever `|X| >= ε|A|` and
/// `|Y| >= ε|B|`?
///
/// The density of a pair is the average density of its sub-pairs of any
/// fixed smaller sizes, so it suffices to test `|X| = m1`, `|Y| = m2` at the
/// size floors, and for each `X` the `m2` vertices of `B` with fewest
/// neighbours in `X`. Exact mode enumerates the `m1`-subsets of `A` in
/// lexicographic order (or of `B` when that side is much cheaper) and
/// returns the first violation, with `Y` chosen by degree and then id.
pub fn is_bidense(g: &BipartiteGraph, eps: &Rational, rho: &Rational, mode: DensityMode) -> Result<BiDensity> {
    check_unit_interval(eps, "ε")?;
    if rho <= &Rational::zero() {
        return Err(Error::Param("ρ must be positive".into()));
    }
    let (m1, m2) = size_floors(g, eps);
    bidense_floors(g, m1, m2, rho, mode)
}

/// [`is_bidense`] with explicit size floors `m1`, `m2`.
pub fn bidense_floors(g: &BipartiteGraph, m1: usize, m2: usize, rho: &Rational, mode: DensityMode) -> Result<BiDensity> {
    let (a, b) = (g.a().len(), g.b().len());
    if a == 0 || b == 0 {
        return Err(Error::EmptySet);
    }
    if m1 == 0 || m2 == 0 || m1 > a || m2 > b {
        return Err(Error::Param("size floors out of range".into()));
    }
    match mode {
        DensityMode::Exact => {
            let cost_a = binom(a as u64, m1 as u64).saturating_mul((m1 * b) as u64);
            let cost_b = binom(b as u64, m2 as u64).saturating_mul((m2 * a) as u64);
            if cost_a.min(cost_b) > BIDENSE_EXACT_CAP {
                return Err(Error::OverBudget {
                    needed: cost_a.min(cost_b),
                    cap: BIDENSE_EXACT_CAP,
                });
            }
            // prefer the lexicographic side unless the other is far cheaper
            let found = if cost_a <= cost_b.saturating_mul(16) {
                exact_side(g, m1, m2, rho)
            } else {
                exact_side(&g.transpose(), m2, m1, rho).map(|w| BiWitness {
                    x: w.y,
                    y: w.x,
                    edges: w.edges,
                })
            };
            Ok(found.map_or(BiDensity::Dense, BiDensity::Sparse))
        }
        DensityMode::Sampled { seed, samples } => Ok(sampled(g, m1, m2, rho, seed, samples)),
    }
}

/// The `m2` local `B` indices of least degree, ties by index, and their
/// degree sum.
fn lightest(deg: &[u64], m2: usize) -> (Vec<usize>, u64) {
    let mut idx: Vec<usize> = (0..deg.len()).collect();
    idx.sort_by_key(|&j| (deg[j], j));
    idx.truncate(m2);
    let sum = idx.iter().map(|&j| deg[j]).sum();
    idx.sort_unstable();
    (idx, sum)
}

fn witness_from_local(g: &BipartiteGraph, xs: &[usize], ys: &[usize], edges: u64) -> BiWitness {
    BiWitness {
        x: xs.iter().map(|&i| g.a()[i]).collect(),
        y: ys.iter().map(|&j| g.b()[j]).collect(),
        edges,
    }
}

fn exact_side(g: &BipartiteGraph, m1: usize, m2: usize, rho: &Rational) -> Option<BiWitness> {
    let a = g.a().len();
    let b = g.b().len();
    let mut comb: Vec<u32> = (0..m1 as u32).collect();
    let mut deg = vec![0u64; b];
    loop {
        deg.iter_mut().for_each(|d| *d = 0);
        for &i in &comb {
            for j in g.row(i as usize).iter() {
                deg[j] += 1;
            }
        }
        let (ys, sum) = lightest(&deg, m2);
        if rational::fraction_below(sum, (m1 * m2) as u64, rho) {
            let xs: Vec<usize> = comb.iter().map(|&i| i as usize).collect();
            return Some(witness_from_local(g, &xs, &ys, sum));
        }
        if !next_combination(&mut comb, a as u32) {
            return None;
        }
    }
}

fn degrees_into(g: &BipartiteGraph, xs: &[usize]) -> Vec<u64> {
    let mut deg = vec![0u64; g.b().len()];
    for &i in xs {
        for j in g.row(i).iter() {
            deg[j] += 1;
        }
    }
    deg
}

fn sampled(g: &BipartiteGraph, m1: usize, m2: usize, rho: &Rational, seed: u64, samples: u32) -> BiDensity {
    let a = g.a().len();
    let check = |xs: &[usize]| {
        let deg = degrees_into(g, xs);
        let (ys, sum) = lightest(&deg, m2);
        rational::fraction_below(sum, (xs.len() * m2) as u64, rho).then(|| witness_from_local(g, xs, &ys, sum))
    };
    // peeling: drop the X vertex with most edges into the current best Y
    let mut xs: Vec<usize> = (0..a).collect();
    loop {
        if let Some(w) = check(&xs) {
            return BiDensity::Sparse(w);
        }
        if xs.len() <= m1 {
            break;
        }
        let (ys, _) = lightest(&degrees_into(g, &xs), m2);
        let worst = (0..xs.len())
            .max_by_key(|&p| (ys.iter().filter(|&&j| g.has_local(xs[p], j)).count(), core::cmp::Reverse(p)))
            .expect("non-empty");
        xs.remove(worst);
    }
    let mut r = rng::rng(seed, stream::BIDENSE);
    for _ in 0..samples {
        let xs: Vec<usize> = rng::sample_subset(&mut r, a as u32, m1).into_iter().map(|i| i as usize).collect();
        if let Some(w) = check(&xs) {
            return BiDensity::Sparse(w);
        }
    }
    BiDensity::Unknown
}

/// Disjoint parts with link graphs whose triangles are numerous but rarely
/// carry `colour`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriDensityWitness {
    pub system: TripartiteSystem,
    pub colour: u8,
    pub triangles: u64,
    /// Triangles whose triple has `colour`.
    pub coloured: u64,
}

impl TriDensityWitness {
    /// Recounts from `host`. Returns `(counts match, coloured < ρ·triangles)`.
    pub fn recount<C: TupleColouring + ?Sized>(&self, host: &C, rho: &Rational) -> (bool, bool) {
        let (triangles, coloured) = count_coloured(&self.system, host, self.colour);
        let matches = triangles == self.triangles && coloured == self.coloured;
        (matches, triangles > 0 && rational::fraction_below(coloured, triangles, rho))
    }

    /// Counts match, `triangles >= ε n³` and `coloured < ρ · triangles`.
    pub fn verify<C: TupleColouring + ?Sized>(&self, host: &C, eps: &Rational, rho: &Rational) -> bool {
        let (matches, sparse) = self.recount(host, rho);
        let n = host.vertex_count() as u64;
        matches && sparse && rational::at_least(self.triangles, eps, n * n * n)
    }
}

/// `(triangles, triangles whose triple has colour)`.
pub fn count_coloured<C: TupleColouring + ?Sized>(t: &TripartiteSystem, host: &C, colour: u8) -> (u64, u64) {
    let mut total = 0;
    let mut hit = 0;
    for tri in t.triangles() {
        total += 1;
        if host.colour_unsorted(&tri) == colour {
            hit += 1;
        }
    }
    (total, hit)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriDensity {
    Dense,
    Sparse(TriDensityWitness),
    Unknown,
}

/// Largest vertex count for exact tri-density search.
pub const TRIDENSE_EXACT_MAX_N: u32 = 9;
/// Link-graph bits up to which every link subgraph is tried in exact mode.
pub const TRIDENSE_LINK_BITS: usize = 12;

/// Is `host` tri-`(ε, ρ)`-dense for `colour`: among the triangles of any
/// link-graph system with at least `ε n³` triangles, at least a
/// `ρ`-proportion carry `colour`?
///
/// Exact mode (`n <= 9`) tries every ordered triple of disjoint parts with
/// complete link graphs, then every link subgraph of the systems with at
/// most [`TRIDENSE_LINK_BITS`] possible link edges, within `budget`. It is
/// exhaustive over that restricted family only; a budget stop gives
/// `Unknown`. Sampled mode draws random parts with complete links or links
/// induced by a random auxiliary graph.
pub fn is_tridense<C: TupleColouring + ?Sized>(
    host: &C,
    eps: &Rational,
    rho: &Rational,
    colour: u8,
    mode: DensityMode,
    budget: &SearchBudget<'_>,
) -> Result<TriDensity> {
    if host.uniformity() != 3 {
        return Err(Error::Uniformity {
            k: host.uniformity(),
            n: host.vertex_count() as u64,
        });
    }
    if colour >= host.colour_count() {
        return Err(Error::ColourOutOfRange {
            colour,
            count: host.colour_count(),
        });
    }
    check_unit_interval(eps, "ε")?;
    check_unit_interval(rho, "ρ")?;
    let n = host.vertex_count();
    let n3 = (n as u64).pow(3);
    let judge = |sys: TripartiteSystem| -> Option<TriDensityWitness> {
        let (triangles, coloured) = count_coloured(&sys, host, colour);
        (triangles > 0
            && rational::at_least(triangles, eps, n3)
            && rational::fraction_below(coloured, triangles, rho))
        .then_some(TriDensityWitness {
            system: sys,
            colour,
            triangles,
            coloured,
        })
    };
    match mode {
        DensityMode::Exact => {
            if n > TRIDENSE_EXACT_MAX_N {
                return Err(Error::Param(alloc::format!(
                    "exact tri-density needs n <= {TRIDENSE_EXACT_MAX_N}, got {n}"
                )));
            }
            let triples = part_triples(n);
            let mut meter = budget.meter();
            for [v1, v2, v3] in &triples {
                if !meter.tick() {
                    return Ok(TriDensity::Unknown);
                }
                let sys = TripartiteSystem::complete(v1, v2, v3)?;
                if let Some(w) = judge(sys) {
                    return Ok(TriDensity::Sparse(w));
                }
            }
            for [v1, v2, v3] in &triples {
                let pairs = [(v1, v2), (v2, v3), (v3, v1)];
                let sizes: Vec<usize> = pairs.iter().map(|(x, y)| x.len() * y.len()).collect();
                let bits: usize = sizes.iter().sum();
                let most = (v1.len() * v2.len() * v3.len()) as u64;
                if bits > TRIDENSE_LINK_BITS || !rational::at_least(most, eps, n3) {
                    continue;
                }
                // a violating triangle set keeps every off-colour transversal
                // and as few coloured ones as the size floor allows
                let (_, hit) = count_coloured(&TripartiteSystem::complete(v1, v2, v3)?, host, colour);
                let off = most - hit;
                let need = rational::ceil_mul_u64(eps, n3).saturating_sub(off);
                if off == 0 || need > hit || rational::from_int(need) * (Rational::one() - rho) >= rho * rational::from_int(off) {
                    continue;
                }
                for mask in 0u64..(1u64 << bits) {
                    if !meter.tick() {
                        return Ok(TriDensity::Unknown);
                    }
                    let mut offset = 0;
                    let mut links = Vec::with_capacity(3);
                    for (&(x, y), &size) in pairs.iter().zip(&sizes) {
                        let yl = y.len();
                        let g = BipartiteGraph::from_fn(x, y, |i, j| mask >> (offset + i * yl + j) & 1 == 1)?;
                        offset += size;
                        links.push(g);
                    }
                    let g31 = links.pop().expect("three");
                    let g23 = links.pop().expect("three");
                    let g12 = links.pop().expect("three");
                    if let Some(w) = judge(TripartiteSystem::new(g12, g23, g31)?) {
                        return Ok(TriDensity::Sparse(w));
                    }
                }
            }
            Ok(TriDensity::Dense)
        }
        DensityMode::Sampled { seed, samples } => {
            let mut r = rng::rng(seed, stream::TRIDENSE);
            for _ in 0..samples {
                let mut parts: [Vec<u32>; 3] = Default::default();
                for v in 0..n {
                    let slot = rng::below(&mut r, 4) as usize;
                    if slot < 3 {
                        parts[slot].push(v);
                    }
                }
                if parts.iter().any(Vec::is_empty) {
                    continue;
                }
                let [v1, v2, v3] = &parts;
                let sys = if rng::bernoulli(&mut r, 1, 2) {
                    TripartiteSystem::complete(v1, v2, v3)?
                } else {
                    let aux = crate::constructions::random_graph(n, &rational::ratio(1, 2), rng::below(&mut r, u64::MAX))?;
                    let link = |x: &[u32], y: &[u32]| {
                        BipartiteGraph::from_fn(x, y, |i, j| aux.contains_unsorted(&[x[i], y[j]]))
                    };
                    TripartiteSystem::new(link(v1, v2)?, link(v2, v3)?, link(v3, v1)?)?
                };
                if let Some(w) = judge(sys) {
                    return Ok(TriDensity::Sparse(w));
                }
            }
            Ok(TriDensity::Unknown)
        }
    }
}

/// Ordered triples of nonempty disjoint parts of `0..n`, by assignment
/// code: each vertex goes to none, `V1`, `V2` or `V3`.
fn part_triples(n: u32) -> Vec<[Vec<u32>; 3]> {
    let mut out = Vec::new();
    let total = 4u64.pow(n);
    for code in 0..total {
        let mut parts: [Vec<u32>; 3] = Default::default();
        let mut c = code;
        for v in 0..n {
            let slot = (c % 4) as usize;
            c /= 4;
            if slot > 0 {
                parts[slot - 1].push(v);
            }
        }
        if parts.iter().all(|p| !p.is_empty()) {
            out.push(parts);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::UniformHypergraph;
    use crate::rational::ratio;

    fn brute_bidense(g: &BipartiteGraph, eps: &Rational, rho: &Rational) -> bool {
        let (m1, m2) = size_floors(g, eps);
        let (a, b) = (g.a().len(), g.b().len());
        for xm in 1u32..(1 << a) {
            for ym in 1u32..(1 << b) {
                if (xm.count_ones() as usize) < m1 || (ym.count_ones() as usize) < m2 {
                    continue;
                }
                let mut e = 0u64;
                for i in 0..a {
                    for j in 0..b {
                        if xm >> i & 1 == 1 && ym >> j & 1 == 1 && g.has_local(i, j) {
                            e += 1;
                        }
                    }
                }
                if rational::fraction_below(e, (xm.count_ones() * ym.count_ones()) as u64, rho) {
                    return false;
                }
            }
        }
        true
    }

    fn pseudo_graph(a: u32, b: u32, seed: u64) -> BipartiteGraph {
        let r = crate::constructions::random_graph(a + b, &ratio(1, 2), seed).unwrap();
        BipartiteGraph::from_fn(&(0..a).collect::<Vec<_>>(), &(a..a + b).collect::<Vec<_>>(), |i, j| {
            r.contains_unsorted(&[i as u32, a + j as u32])
        })
        .unwrap()
    }

    #[test]
    fn bidense_examples() {
        let a: Vec<u32> = (0..4).collect();
        let b: Vec<u32> = (4..8).collect();
        let full = BipartiteGraph::complete(&a, &b).unwrap();
        assert_eq!(is_bidense(&full, &ratio(1, 3), &Rational::one(), DensityMode::Exact).unwrap(), BiDensity::Dense);
        let empty = BipartiteGraph::new(&a, &b, []).unwrap();
        let r = is_bidense(&empty, &ratio(1, 4), &ratio(1, 10), DensityMode::Exact).unwrap();
        assert_eq!(
            r,
            BiDensity::Sparse(BiWitness {
                x: vec![0],
                y: vec![4],
                edges: 0
            })
        );
        let matching = BipartiteGraph::from_fn(&a, &b, |i, j| i != j).unwrap();
        let r = is_bidense(&matching, &ratio(1, 2), &ratio(1, 2), DensityMode::Exact).unwrap();
        assert_eq!(matches!(r, BiDensity::Dense), brute_bidense(&matching, &ratio(1, 2), &ratio(1, 2)));
    }

    #[test]
    fn bidense_exact_matches_brute_force() {
        for seed in 0..40u64 {
            let g = pseudo_graph(4 + (seed % 3) as u32, 5, seed);
            for (eps, rho) in [(ratio(1, 3), ratio(1, 2)), (ratio(1, 2), ratio(2, 5)), (ratio(1, 5), ratio(1, 4))] {
                let r = is_bidense(&g, &eps, &rho, DensityMode::Exact).unwrap();
                assert_eq!(matches!(r, BiDensity::Dense), brute_bidense(&g, &eps, &rho), "seed {seed}");
                if let BiDensity::Sparse(w) = r {
                    assert!(w.verify(&g, &eps, &rho).unwrap());
                }
                let s = is_bidense(&g, &eps, &rho, DensityMode::Sampled { seed, samples: 20 }).unwrap();
                match s {
                    BiDensity::Sparse(w) => assert!(w.verify(&g, &eps, &rho).unwrap()),
                    BiDensity::Unknown => {}
                    BiDensity::Dense => panic!("sampled mode claimed dense"),
                }
            }
        }
    }

    #[test]
    fn tridense_examples() {
        let full = UniformHypergraph::complete(3, 6).unwrap();
        let budget = SearchBudget::unlimited();
        let r = is_tridense(&full, &ratio(1, 54), &Rational::one(), 0, DensityMode::Exact, &budget).unwrap();
        assert_eq!(r, TriDensity::Dense);
        let empty = UniformHypergraph::empty(3, 6).unwrap();
        let r = is_tridense(&empty, &ratio(1, 1000), &ratio(1, 2), 0, DensityMode::Exact, &budget).unwrap();
        match r {
            TriDensity::Sparse(w) => {
                assert_eq!(w.coloured, 0);
                assert!(w.verify(&empty, &ratio(1, 1000), &ratio(1, 2)));
            }
            other => panic!("{other:?}"),
        }
        let r = is_tridense(
            &empty,
            &ratio(1, 1000),
            &ratio(1, 2),
            0,
            DensityMode::Sampled { seed: 3, samples: 10 },
            &budget,
        )
        .unwrap();
        assert!(matches!(r, TriDensity::Sparse(_)));
    }

    #[test]
    fn tridense_exact_matches_naive_enumeration() {
        let budget = SearchBudget::unlimited();
        let mut cases = vec![(6u32, 7u64, ratio(1, 2), ratio(1, 54), ratio(1, 4))];
        for seed in 0..6 {
            cases.push((5, seed, ratio(7, 8), ratio(2, 125), ratio(1, 2)));
        }
        for (n, seed, p, eps, rho) in cases {
            let g = crate::constructions::random_hypergraph(3, n, &p, seed).unwrap();
            for colour in [0, 1] {
                let r = is_tridense(&g, &eps, &rho, colour, DensityMode::Exact, &budget).unwrap();
                let naive = crate::oracles::tridense_violation_bf(&g, &eps, &rho, colour, TRIDENSE_LINK_BITS, &budget);
                assert_eq!(Some(matches!(r, TriDensity::Sparse(_))), naive, "n {n} seed {seed} colour {colour}");
                if let TriDensity::Sparse(w) = r {
                    assert!(w.verify(&g, &eps, &rho));
                }
            }
        }
    }

    #[test]
    fn params() {
        let p = lemma_params(3, &ratio(1, 2)).unwrap();
        assert_eq!(p.eps, Rational::new(BigInt::one(), BigInt::from(6u64.pow(10)) * (BigInt::one() << 27)));
        assert_eq!(p.n_min, BigUint::from(6u64.pow(10)) << 27);
        let p = lemma_params(4, &Rational::one()).unwrap();
        assert_eq!(p.n_min, BigUint::from(8u64.pow(10)));
        let th = theorem_params(3, 1_000_000).unwrap();
        assert_eq!(th.delta_h, ratio(1, 495));
        assert!(th.rho_below_one && !th.rho_at_most_eighth);
        let unit = theorem_params_log(3, 1.0).unwrap();
        assert_eq!((unit.rho, unit.s), (1.0, 1));
        let d = DensityParams::new(4, ratio(1, 3)).unwrap();
        for i in 0..4 {
            assert!(d.c_sq(i) > d.c_sq(i + 1));
            assert!(d.eps_sq(i) < d.eps_sq(i + 1));
        }
        let lp = lemma_params(4, &ratio(1, 3)).unwrap();
        assert!(d.eps_sq(0) >= &lp.eps * &lp.eps);
    }
}
