//! The acceptance suite: eleven checks, each against an independent
//! recomputation, each under a wall-clock limit.
//!
//! Records produced by a check depend only on its seeds, never on the
//! thread count; the determinism check reruns the randomized checks with a
//! different thread count and compares record bytes.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde_json::{json, Value};

use ehyper_core::bipartite::{TripartiteKind, TripartiteWitness};
use ehyper_core::combin::{binom, Combinations};
use ehyper_core::constructions::{self, random_colouring, random_lift, tight_cycle5};
use ehyper_core::density::{
    dichotomy, embed, verify_certificate, DichotomyOutcome, DichotomySettings, EmbedOptions, EmbedOutcome,
    FailureCertificate, FailureKind,
};
use ehyper_core::extraction::{dense_preconditions, find_ksss, find_kst_pigeonhole, floor_u64, KsssOverrides};
use ehyper_core::oracles::{self, naive_stepup_colour};
use ehyper_core::rational::{self, ratio, Rational};
use ehyper_core::rng::{self, stream};
use ehyper_core::stepup::{
    count_bound_check, delta_ij, delta_sequence, max_mono_clique, ordered_bell, stepping_up_verify, StepUpColouring,
};
use ehyper_core::{
    BipartiteGraph, EdgeColouring, SearchBudget, TripartiteSystem, TupleColouring, UniformHypergraph,
};

use crate::parallel::{kst_exact_par, par_map};
use crate::record::{ResultRecord, Verdict};

/// Deliberate defects the suite must detect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Local maxima of the δ-sequence coloured red, minima blue.
    SwapExtrema,
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub threads: usize,
    pub mutate: Option<Mutation>,
    /// Criterion ids or group names; empty runs everything.
    pub only: Vec<String>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            threads: default_threads(),
            mutate: None,
            only: Vec::new(),
        }
    }
}

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    /// Name accepted by `--only`; several criteria may share one.
    pub group: &'static str,
    pub limit: Duration,
}

const fn crit(id: u8, name: &'static str, group: &'static str, secs: u64) -> Criterion {
    Criterion {
        id,
        name,
        group,
        limit: Duration::from_secs(secs),
    }
}

pub const CRITERIA: [Criterion; 11] = [
    crit(1, "delta sequence and running maximum", "delta", 5),
    crit(2, "patterns determined by preorder and base colours", "determination", 60),
    crit(3, "ordered Bell numbers and pattern counts", "counting", 5),
    crit(4, "dense K_{s,t} guarantee and optimality", "zarankiewicz", 120),
    crit(5, "pigeonhole K_{s,t} guarantee", "zarankiewicz", 60),
    crit(6, "K_{s,s,s} pipeline", "pipeline", 300),
    crit(7, "embedding soundness", "embedding", 300),
    crit(8, "dichotomy honesty", "dichotomy", 300),
    crit(9, "lift properties", "constructions", 120),
    crit(10, "step-up clique agreement", "clique", 300),
    crit(11, "thread-count determinism", "determinism", 60),
];

/// Criteria rerun by the determinism check.
pub const DETERMINISM_SET: [u8; 6] = [2, 4, 5, 6, 7, 8];

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
    /// JSON lines, independent of thread count.
    pub records: Vec<String>,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {:<48} {:>8.2}s / {:>3}s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.detail
        )
    }
}

/// Ids selected by `only`; unknown names are an error.
pub fn select(only: &[String]) -> Result<Vec<u8>, String> {
    if only.is_empty() {
        return Ok(CRITERIA.iter().map(|c| c.id).collect());
    }
    let mut ids = Vec::new();
    for name in only {
        let hit: Vec<u8> = CRITERIA
            .iter()
            .filter(|c| c.group == name || name.parse::<u8>() == Ok(c.id))
            .map(|c| c.id)
            .collect();
        if hit.is_empty() {
            return Err(format!("unknown criterion {name:?}"));
        }
        ids.extend(hit);
    }
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

struct Outcome {
    passed: bool,
    detail: String,
    records: Vec<String>,
}

impl Outcome {
    fn new(passed: bool, detail: String) -> Self {
        Outcome {
            passed,
            detail,
            records: Vec::new(),
        }
    }
}

fn run_body(id: u8, opts: &SuiteOptions) -> Outcome {
    match id {
        1 => delta_property(),
        2 => determination(opts),
        3 => counting(),
        4 => dense_extraction(opts),
        5 => pigeonhole_extraction(opts),
        6 => pipeline(opts),
        7 => embedding(opts),
        8 => dichotomy_honesty(opts),
        9 => lift_properties(opts),
        10 => clique_agreement(opts),
        _ => unreachable!("criterion 11 runs through run_suite"),
    }
}

fn timed(c: &Criterion, f: impl FnOnce() -> Outcome) -> CriterionResult {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= c.limit;
    let mut detail = out.detail;
    if !in_time {
        detail.push_str(" (over time limit)");
    }
    CriterionResult {
        id: c.id,
        name: c.name,
        passed: out.passed && in_time,
        detail,
        elapsed,
        limit: c.limit,
        records: out.records,
    }
}

/// Runs one criterion other than the determinism check.
pub fn run_criterion(id: u8, opts: &SuiteOptions) -> CriterionResult {
    let c = CRITERIA.iter().find(|c| c.id == id).expect("known id");
    timed(c, || run_body(id, opts))
}

/// Runs the selected criteria in order, calling `report` after each.
pub fn run_suite(opts: &SuiteOptions, mut report: impl FnMut(&CriterionResult)) -> Result<Vec<CriterionResult>, String> {
    let ids = select(&opts.only)?;
    let mut results: Vec<CriterionResult> = Vec::new();
    for &id in &ids {
        let r = if id == 11 {
            let first: BTreeMap<u8, Vec<String>> = DETERMINISM_SET
                .iter()
                .map(|&d| {
                    let recs = match results.iter().find(|r| r.id == d) {
                        Some(r) => r.records.clone(),
                        None => run_body(d, opts).records,
                    };
                    (d, recs)
                })
                .collect();
            timed(&CRITERIA[10], || determinism(opts, &first))
        } else {
            run_criterion(id, opts)
        };
        report(&r);
        results.push(r);
    }
    Ok(results)
}

fn record(command: &str, config: Value, verdict: Verdict, witness: Option<Value>, details: Value) -> String {
    let mut r = ResultRecord::new(command, config);
    r.verdict = verdict;
    if let Some(w) = witness {
        r = r.with_witness(w);
    }
    r.details = details;
    r.to_line()
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Positive
    } else {
        Verdict::Negative
    }
}

/// Highest differing bit of two ids, 1-based, read bit by bit.
fn naive_delta(a: u32, b: u32, n: u32) -> u32 {
    (1..=n)
        .rev()
        .find(|&i| (a >> (i - 1)) & 1 != (b >> (i - 1)) & 1)
        .expect("distinct ids")
}

fn delta_property() -> Outcome {
    let n = 4;
    let mut checked = 0u64;
    let mut bad = 0u64;
    for t in Combinations::new(1 << n, 4) {
        checked += 1;
        let naive: Vec<u32> = t.windows(2).map(|w| naive_delta(w[0], w[1], n)).collect();
        let ok_seq = match delta_sequence(&t) {
            Ok(d) => d.values() == naive.as_slice(),
            Err(_) => false,
        };
        let adjacent = naive.windows(2).all(|w| w[0] != w[1]);
        let mut ok_ij = true;
        for i in 1..=4 {
            for j in i + 1..=4 {
                let running = naive[i - 1..j - 1].iter().copied().max().expect("i < j");
                let direct = naive_delta(t[i - 1], t[j - 1], n);
                ok_ij &= direct == running && delta_ij(&t, i, j) == Ok(direct);
            }
        }
        if !(ok_seq && adjacent && ok_ij) {
            bad += 1;
        }
    }
    Outcome::new(bad == 0 && checked == 1820, format!("{checked} tuples, {bad} violations"))
}

/// The step-up colouring under test, mutated if asked.
fn stepup_under_test(base: EdgeColouring, opts: &SuiteOptions) -> StepUpColouring {
    let s = StepUpColouring::new(base).expect("3-uniform base");
    match opts.mutate {
        Some(Mutation::SwapExtrema) => s.with_swapped_extrema(),
        None => s,
    }
}

/// Rank vector of the δ-sequence and the base colour of every triple of
/// its distinct values.
fn pattern_signature(base: &EdgeColouring, n: u32, tuple: &[u32]) -> (Vec<u32>, Vec<u8>) {
    let d: Vec<u32> = tuple.windows(2).map(|w| naive_delta(w[0], w[1], n)).collect();
    let mut distinct = d.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let ranks = d
        .iter()
        .map(|v| distinct.iter().position(|x| x == v).expect("present") as u32)
        .collect();
    let mut colours = Vec::new();
    for a in 0..distinct.len() {
        for b in a + 1..distinct.len() {
            for c in b + 1..distinct.len() {
                colours.push(base.colour(&[distinct[a] - 1, distinct[b] - 1, distinct[c] - 1]));
            }
        }
    }
    (ranks, colours)
}

const DETERMINATION_CONFIGS: [(u32, usize); 10] =
    [(4, 4), (4, 5), (4, 6), (5, 4), (5, 5), (5, 6), (6, 5), (6, 6), (8, 5), (10, 6)];
const PAIRS_PER_CONFIG: usize = 100;
const DRAW_CAP: u64 = 400_000;

fn determination(opts: &SuiteOptions) -> Outcome {
    let jobs: Vec<(usize, u32, usize)> = DETERMINATION_CONFIGS
        .iter()
        .enumerate()
        .map(|(i, &(n, h))| (i, n, h))
        .collect();
    let rows = par_map(&jobs, opts.threads, |&(i, n, h)| {
        let seed = 200 + i as u64;
        let base = random_colouring(3, n, 2, seed, 1 << 20).expect("small base");
        let s = stepup_under_test(base.clone(), opts);
        let mut r = rng::rng(seed, stream::INSTANCE);
        let mut seen: BTreeMap<(Vec<u32>, Vec<u8>), Vec<u32>> = BTreeMap::new();
        let (mut pairs, mut mismatches, mut oracle_bad, mut draws) = (0usize, 0usize, 0usize, 0u64);
        let naive_ok = |t: &[u32]| -> bool {
            let p = s.pattern_of(t).expect("valid tuple");
            Combinations::new(t.len() as u32, 4)
                .enumerate()
                .all(|(idx, sub)| {
                    let img: Vec<u32> = sub.iter().map(|&x| t[x as usize]).collect();
                    naive_stepup_colour(&base, n, &img) == p.colour_at(idx)
                })
        };
        while pairs < PAIRS_PER_CONFIG && draws < DRAW_CAP {
            draws += 1;
            let t = rng::sample_subset(&mut r, 1 << n, h);
            let sig = pattern_signature(&base, n, &t);
            match seen.get(&sig) {
                Some(other) if *other != t => {
                    pairs += 1;
                    if s.pattern_of(other).expect("valid") != s.pattern_of(&t).expect("valid") {
                        mismatches += 1;
                    }
                    if !naive_ok(other) || !naive_ok(&t) {
                        oracle_bad += 1;
                    }
                }
                Some(_) => {}
                None => {
                    seen.insert(sig, t);
                }
            }
        }
        let ok = pairs == PAIRS_PER_CONFIG && mismatches == 0 && oracle_bad == 0;
        let line = record(
            "acceptance determination",
            json!({"n": n, "h": h, "seed": seed}),
            verdict(ok),
            None,
            json!({"pairs": pairs, "mismatches": mismatches, "oracle_disagreements": oracle_bad, "draws": draws}),
        );
        (pairs, mismatches, oracle_bad, line)
    });
    let pairs: usize = rows.iter().map(|r| r.0).sum();
    let mismatches: usize = rows.iter().map(|r| r.1).sum();
    let oracle_bad: usize = rows.iter().map(|r| r.2).sum();
    Outcome {
        passed: pairs == 1000 && mismatches == 0 && oracle_bad == 0,
        detail: format!("{pairs} pairs, {mismatches} mismatches, {oracle_bad} tuples disagreeing with the oracle"),
        records: rows.into_iter().map(|r| r.3).collect(),
    }
}

/// `Σ_j j! S(m, j)` with Stirling numbers of the second kind.
fn ordered_bell_stirling(m: usize) -> BigUint {
    let mut s = vec![vec![BigUint::from(0u32); m + 1]; m + 1];
    s[0][0] = BigUint::from(1u32);
    for i in 1..=m {
        for j in 1..=i {
            s[i][j] = &s[i - 1][j] * BigUint::from(j) + &s[i - 1][j - 1];
        }
    }
    let mut fact = BigUint::from(1u32);
    let mut total = if m == 0 { BigUint::from(1u32) } else { BigUint::from(0u32) };
    for (j, sj) in s[m].iter().enumerate().skip(1) {
        fact *= BigUint::from(j);
        total += &fact * sj;
    }
    total
}

fn counting() -> Outcome {
    let mut failures = Vec::new();
    let pinned = [1u32, 1, 3, 13, 75, 541, 4683];
    for m in 0..=7usize {
        let rec = ordered_bell(m as u32);
        let enumerated = oracles::enumerate_preorders(m).map(|v| BigUint::from(v.len()));
        if enumerated.as_ref() != Ok(&rec) {
            failures.push(format!("H_{m} recurrence vs enumeration"));
        }
        if m < pinned.len() && rec != BigUint::from(pinned[m]) {
            failures.push(format!("H_{m} = {rec}"));
        }
    }
    for m in 0..=12usize {
        let rec = ordered_bell(m as u32);
        if rec != ordered_bell_stirling(m) {
            failures.push(format!("H_{m} recurrence vs Stirling sum"));
        }
        if m >= 1 && rec > BigUint::from(m).pow(m as u32) {
            failures.push(format!("H_{m} > {m}^{m}"));
        }
    }
    for (k, h) in [(3u32, 8u32), (3, 9), (4, 9), (5, 10)] {
        let Ok(b) = count_bound_check(h, k) else {
            failures.push(format!("count_bound_check({h}, {k}) refused"));
            continue;
        };
        let two = BigUint::from(2u32);
        let slots = two.pow(binom(h as u64 - 1, k as u64) as u32);
        let a = ordered_bell_stirling(h as usize - 1) * &slots;
        let a_relaxed = BigUint::from(h - 1).pow(h - 1) * &slots;
        let fact: BigUint = (1..=h).map(BigUint::from).product();
        let b_num = two.pow(binom(h as u64, k as u64 + 1) as u32);
        let a_below = &a * &fact < b_num;
        let relaxed_below = &a_relaxed * &fact < b_num;
        let b_exact = Rational::new(b_num.into(), fact.into());
        if b.a != a || b.a_relaxed != a_relaxed || b.b != b_exact {
            failures.push(format!("(k,h)=({k},{h}): counts differ from recomputation"));
        }
        if !(a_below && relaxed_below && b.a_below_b && b.a_relaxed_below_b) {
            failures.push(format!("(k,h)=({k},{h}): A < B fails"));
        }
    }
    Outcome::new(
        failures.is_empty(),
        if failures.is_empty() {
            "H_0..H_12 agree, A < B and A' < B at all four (k,h)".into()
        } else {
            failures.join("; ")
        },
    )
}

fn random_bipartite(r: &mut rng::Rng, a: u32, b: u32, p_per_mille: u64) -> BipartiteGraph {
    let edges: Vec<(u32, u32)> = (0..a)
        .flat_map(|x| (a..a + b).map(move |y| (x, y)))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| rng::bernoulli(r, p_per_mille, 1000))
        .collect();
    BipartiteGraph::with_ranges(a, b, edges).expect("valid ranges")
}

/// Every `(u, t)` an edge, `U ⊆ A`, `T ⊆ B`, no repeats.
fn kst_ok(g: &BipartiteGraph, u: &[u32], t: &[u32]) -> bool {
    let distinct = |v: &[u32]| v.windows(2).all(|w| w[0] < w[1]);
    distinct(u)
        && distinct(t)
        && u.iter().all(|x| g.a().contains(x))
        && t.iter().all(|y| g.b().contains(y))
        && u.iter().all(|&x| t.iter().all(|&y| g.has_edge(x, y)))
}

const EXTRACTION_INSTANCES: u64 = 200;

fn dense_extraction(opts: &SuiteOptions) -> Outcome {
    let ids: Vec<u64> = (0..EXTRACTION_INSTANCES).collect();
    let rows = par_map(&ids, opts.threads, |&i| {
        let mut r = rng::rng(400 + i, stream::INSTANCE);
        let (g, s, e) = loop {
            let a = 6 + rng::below(&mut r, 7) as u32;
            let b = 20 + rng::below(&mut r, 181) as u32;
            let s = 1 + rng::below(&mut r, 3) as usize;
            let eps_min = 2.0 * (s as f64).powf(1.5) / a as f64;
            if eps_min > 0.95 {
                continue;
            }
            let u = 0.1 + 0.8 * rng::below(&mut r, 1000) as f64 / 1000.0;
            let p = ((eps_min + (1.0 - eps_min) * u) * 1000.0).ceil() as u64;
            let g = random_bipartite(&mut r, a, b, p.min(1000));
            let e = g.edge_count() as u64;
            // s^{3/2} <= (ε/2)|A| with ε = e/(|A||B|), squared and cleared
            if 4 * (s as u64).pow(3) * (b as u64).pow(2) <= e * e {
                break (g, s, e);
            }
        };
        let (a, b) = (g.a().len(), g.b().len());
        let eps = Rational::new((e as i64).into(), ((a * b) as i64).into());
        let pre = dense_preconditions(&g, &eps, s);
        let guarantee = ((-(s as f64).sqrt()).exp() * (e as f64 / (a * b) as f64).powi(s as i32) * b as f64 - 1e-9).ceil();
        let w = kst_exact_par(&g, s, opts.threads.min(2)).expect("s <= |A|");
        let valid = w.u.len() == s && kst_ok(&g, &w.u, &w.t);
        let meets = w.t.len() as f64 >= guarantee;
        let optimum = (a <= 10).then(|| oracles::max_kst_bf(&g, s).map_or(0, |(_, t)| t.len()));
        let optimal = optimum.map_or(true, |o| o == w.t.len());
        let ok = pre && valid && meets && optimal;
        let line = record(
            "acceptance kst-dense",
            json!({"instance": i, "a": a, "b": b, "s": s, "edges": e}),
            verdict(ok),
            valid.then(|| json!({"u": w.u, "t": w.t})),
            json!({"t": w.t.len(), "guarantee": guarantee as u64, "optimum": optimum}),
        );
        (ok, optimum.is_some(), line)
    });
    let failures = rows.iter().filter(|r| !r.0).count();
    let compared = rows.iter().filter(|r| r.1).count();
    Outcome {
        passed: failures == 0,
        detail: format!("{} instances, {compared} checked against brute force, {failures} failures", rows.len()),
        records: rows.into_iter().map(|r| r.2).collect(),
    }
}

fn pigeonhole_extraction(opts: &SuiteOptions) -> Outcome {
    let ids: Vec<u64> = (0..EXTRACTION_INSTANCES).collect();
    let rows = par_map(&ids, opts.threads, |&i| {
        let mut r = rng::rng(600 + i, stream::INSTANCE);
        let (g, e) = loop {
            let a = 3 + rng::below(&mut r, 10) as u32;
            let b = 20 + rng::below(&mut r, 181) as u32;
            let p = 200 + rng::below(&mut r, 701);
            let g = random_bipartite(&mut r, a, b, p);
            let e = g.edge_count() as u64;
            if e > 0 {
                break (g, e);
            }
        };
        let (a, b) = (g.a().len() as u64, g.b().len() as u64);
        let eps = Rational::new((e as i64).into(), ((a * b) as i64).into());
        let s = e.div_ceil(b) as usize;
        let guarantee = b.div_ceil(1 << a);
        let res = find_kst_pigeonhole(&g, &eps).expect("|A| within trace cap");
        let w = &res.witness;
        let valid = res.s == s && w.u.len() == s && kst_ok(&g, &w.u, &w.t);
        let ok = valid && res.precondition_met && w.t.len() as u64 >= guarantee;
        let line = record(
            "acceptance kst-pigeonhole",
            json!({"instance": i, "a": a, "b": b, "edges": e}),
            verdict(ok),
            valid.then(|| json!({"u": w.u, "t": w.t})),
            json!({"s": s, "t": w.t.len(), "guarantee": guarantee, "exhaustive": res.exhaustive}),
        );
        (ok, line)
    });
    let failures = rows.iter().filter(|r| !r.0).count();
    Outcome {
        passed: failures == 0,
        detail: format!("{} instances, {failures} failures", rows.len()),
        records: rows.into_iter().map(|r| r.1).collect(),
    }
}

fn sorted3(mut t: [u32; 3]) -> [u32; 3] {
    t.sort_unstable();
    t
}

/// Parts inside the system's parts, all `s³` transversals edges of `g3`.
fn ksss_ok(sys: &TripartiteSystem, g3: &UniformHypergraph, w: &TripartiteWitness, s: usize) -> bool {
    let parts = sys.parts();
    w.parts.iter().zip(parts).all(|(p, q)| p.len() >= s && p.iter().all(|v| q.contains(v)))
        && w.parts[0].iter().all(|&x| {
            w.parts[1]
                .iter()
                .all(|&y| w.parts[2].iter().all(|&z| g3.contains(&sorted3([x, y, z]))))
        })
}

const PIPELINE_INSTANCES: u64 = 50;
/// Share of oracle-positive instances on which the pipeline must succeed.
const PIPELINE_RATE_FLOOR: f64 = 0.8;

fn pipeline(opts: &SuiteOptions) -> Outcome {
    let overrides = KsssOverrides {
        s1: Some(3),
        s2: Some(2),
        t2: Some(4),
        t3: Some(4),
    };
    let etas = [ratio(1, 32), ratio(1, 16), ratio(1, 10), ratio(1, 8)];
    let ids: Vec<u64> = (0..PIPELINE_INSTANCES).collect();
    let rows = par_map(&ids, opts.threads, |&i| {
        let mut r = rng::rng(800 + i, stream::INSTANCE);
        let sizes: Vec<u32> = (0..3).map(|_| 8 + rng::below(&mut r, 5) as u32).collect();
        let eta = etas[(i % 4) as usize].clone();
        let (n1, n2, n3) = (sizes[0], sizes[1], sizes[2]);
        let v1: Vec<u32> = (0..n1).collect();
        let v2: Vec<u32> = (n1..n1 + n2).collect();
        let v3: Vec<u32> = (n1 + n2..n1 + n2 + n3).collect();
        let sys = TripartiteSystem::complete(&v1, &v2, &v3).expect("disjoint parts");
        let all: Vec<[u32; 3]> = sys.triangles().map(sorted3).collect();
        let total = all.len() as u64;
        let missing = floor_u64(&(&eta * rational::from_int(total)));
        let drop: std::collections::BTreeSet<u32> =
            rng::sample_subset(&mut r, total as u32, missing as usize).into_iter().collect();
        let kept: Vec<[u32; 3]> = all
            .iter()
            .enumerate()
            .filter(|(j, _)| !drop.contains(&(*j as u32)))
            .map(|(_, t)| *t)
            .collect();
        let g3 = UniformHypergraph::new(3, n1 + n2 + n3, kept).expect("sorted triples");
        let n = *sizes.iter().max().expect("three parts") as i64;
        let delta = Rational::new((g3.edge_count() as i64).into(), (n * n * n).into());
        let report = find_ksss(&sys, &g3, &delta, &eta, 2, &overrides).expect("valid inputs");
        let (oracle, _) = oracles::exists_ksss_bf(&sys, &g3, 2, &SearchBudget::unlimited());
        let success = report.outcome.as_ref().ok();
        let valid = success.map_or(true, |w| ksss_ok(&sys, &g3, w, 2));
        let implied = success.is_none() || oracle.is_some();
        let line = record(
            "acceptance ksss",
            json!({"instance": i, "parts": sizes, "eta": eta.to_string(), "s": 2}),
            verdict(success.is_some() && valid),
            success.filter(|_| valid).map(|w| json!(w.parts)),
            json!({
                "missing": missing,
                "oracle": oracle.is_some(),
                "failure": report.outcome.as_ref().err().map(|f| format!("{:?}: {}", f.stage, f.reason)),
            }),
        );
        (success.is_some(), oracle.is_some(), valid && implied, line)
    });
    let bad = rows.iter().filter(|r| !r.2).count();
    let positives = rows.iter().filter(|r| r.1).count();
    let hits = rows.iter().filter(|r| r.0 && r.1).count();
    let rate = if positives == 0 { 0.0 } else { hits as f64 / positives as f64 };
    Outcome {
        passed: bad == 0 && positives > 0 && rate >= PIPELINE_RATE_FLOOR,
        detail: format!(
            "{hits}/{positives} oracle-positive instances solved ({:.0}%), {bad} unsound",
            rate * 100.0
        ),
        records: rows.into_iter().map(|r| r.3).collect(),
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn hash3(seed: u64, t: &[u32]) -> u64 {
    splitmix(seed ^ splitmix(((t[0] as u64) << 42) ^ ((t[1] as u64) << 21) ^ t[2] as u64))
}

/// Host on `t·m` vertices whose classes `[jm, (j+1)m)` copy the pattern;
/// triples inside a class pair are coloured at random, and every triple is
/// flipped with probability `noise/1000`.
fn blow_up(pattern: &EdgeColouring, m: u32, seed: u64, noise: u64) -> EdgeColouring {
    let t = pattern.vertex_count();
    let p = pattern.clone();
    EdgeColouring::implicit(3, t * m, 2, move |x| {
        let c = [x[0] / m, x[1] / m, x[2] / m];
        let h = hash3(seed, x);
        let base = if c[0] != c[1] && c[1] != c[2] {
            p.colour(&c)
        } else {
            (h & 1) as u8
        };
        if (h >> 8) % 1000 < noise {
            1 - base
        } else {
            base
        }
    })
    .expect("3-uniform")
}

/// Triple-by-triple check of an embedding, written out here.
fn copy_ok(h: &EdgeColouring, g: &EdgeColouring, f: &[u32]) -> bool {
    let t = h.vertex_count() as usize;
    if f.len() != t || f.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    for a in 0..t {
        for b in a + 1..t {
            if f[a] == f[b] {
                return false;
            }
            for c in b + 1..t {
                if g.colour(&sorted3([f[a], f[b], f[c]])) != h.colour(&[a as u32, b as u32, c as u32]) {
                    return false;
                }
            }
        }
    }
    true
}

fn rho_pow(rho: &Rational, e: usize) -> Rational {
    rational::pow(rho, e as u32)
}

/// Recounts a failure certificate from its stored state without the
/// embedder's code: the candidate set, the pair counts and the chosen
/// pair, and every member's Y-sets, floors, edges and density.
fn certificate_recount(cert: &FailureCertificate, h: &EdgeColouring, g: &EdgeColouring) -> Result<(), String> {
    let st = &cert.state;
    let (t, p) = (st.t, cert.vertex);
    if st.images.len() != p {
        return Err("placed count differs from the failing vertex".into());
    }
    let rho = &cert.rho;
    let nbhd = |j: usize, w: u32| -> Vec<u32> {
        let link = &st.links[&(p, j)];
        st.survivors[j].iter().copied().filter(|&x| link.has_edge(w, x)).collect()
    };
    let threshold = rho_pow(rho, p);
    let w_set: Vec<u32> = st.survivors[p]
        .iter()
        .copied()
        .filter(|&w| {
            (p + 1..t).all(|j| {
                rational::from_int(nbhd(j, w).len() as u64) >= &threshold * rational::from_int(st.survivors[j].len() as u64)
            })
        })
        .collect();
    if w_set != cert.candidates {
        return Err(format!("candidate set has {} vertices, recount gives {}", cert.candidates.len(), w_set.len()));
    }
    let (j, k, family, pair_counts) = match &cert.kind {
        FailureKind::NoCandidates => {
            return if w_set.is_empty() {
                Ok(())
            } else {
                Err("no-candidate certificate with candidates".into())
            }
        }
        FailureKind::NotDense {
            j,
            k,
            family,
            pair_counts,
        } => (*j, *k, family, pair_counts),
    };
    let pairs: Vec<(usize, usize)> = (p + 1..t).flat_map(|a| (a + 1..t).map(move |b| (a, b))).collect();
    if pair_counts.iter().map(|&(q, _)| q).collect::<Vec<_>>() != pairs {
        return Err("pair counts do not list every later pair".into());
    }
    let best = pair_counts.iter().map(|&(_, c)| c).max().unwrap_or(0);
    let chosen = pair_counts.iter().find(|&&(_, c)| c == best).map(|&(q, _)| q);
    if chosen != Some((j, k)) || family.len() != best {
        return Err("reported pair is not the first with the largest family".into());
    }
    if family.windows(2).any(|w| w[0].w >= w[1].w) || family.iter().any(|c| !w_set.contains(&c.w)) {
        return Err("family is not a sorted subset of the candidates".into());
    }
    let tt = (t * t) as u32;
    let four_t4 = rational::from_int(4 * (t as u64).pow(4));
    let q = (p + 1) as u32;
    let eps_sq = rational::pow(rho, 2 * tt - q * q) / four_t4;
    let rho_next = rho_pow(rho, p + 1);
    let want = h.colour(&[p as u32, j as u32, k as u32]);
    for c in family {
        let (uj, uk) = (nbhd(j, c.w), nbhd(k, c.w));
        let inside = |ys: &[u32], us: &[u32]| ys.iter().all(|y| us.contains(y));
        if !inside(&c.y_j, &uj) || !inside(&c.y_k, &uk) {
            return Err(format!("Y-sets of {} leave its neighbourhoods", c.w));
        }
        let floor_ok = |y: usize, u: usize| {
            y >= 1 && rational::from_int((y * y) as u64) >= &eps_sq * rational::from_int((u * u) as u64)
        };
        if !floor_ok(c.y_j.len(), uj.len()) || !floor_ok(c.y_k.len(), uk.len()) {
            return Err(format!("Y-sets of {} below their size floors", c.w));
        }
        let link = &st.links[&(j, k)];
        let mut e = 0u64;
        for &x in &c.y_j {
            for &y in &c.y_k {
                if link.has_edge(x, y) && g.colour(&sorted3([c.w, x, y])) == want {
                    e += 1;
                }
            }
        }
        let size = (c.y_j.len() * c.y_k.len()) as u64;
        if e != c.edges || rational::from_int(e) >= &rho_next * rational::from_int(size) {
            return Err(format!("edge recount for {} gives {e}, recorded {}", c.w, c.edges));
        }
    }
    Ok(())
}

const EMBED_RUNS: u64 = 100;

fn embedding(opts: &SuiteOptions) -> Outcome {
    let ids: Vec<u64> = (0..EMBED_RUNS).collect();
    let rows = par_map(&ids, opts.threads, |&i| {
        let mut r = rng::rng(1000 + i, stream::INSTANCE);
        let t = 3 + (i % 2) as u32;
        let rho = if i % 3 == 0 { ratio(3, 10) } else { ratio(1, 5) };
        let h = random_colouring(3, t, 2, 1000 + i, 1 << 10).expect("small pattern");
        let (kind, g) = match i % 4 {
            0 => {
                let n = 24 + rng::below(&mut r, 40) as u32;
                ("random", random_colouring(3, n, 2, 5000 + i, 1 << 20).expect("small host"))
            }
            1 => {
                let m = 8 + rng::below(&mut r, (500 / t - 7) as u64) as u32;
                ("blow-up", blow_up(&h, m, 7000 + i, 0))
            }
            2 => {
                let n = 20 + rng::below(&mut r, 40) as u32;
                let l = random_lift(n, &ratio(1, 2), 9000 + i).expect("small lift");
                ("lift", EdgeColouring::from_hypergraph(&l.lifted))
            }
            _ => {
                let m = 8 + rng::below(&mut r, 60) as u32;
                ("noisy blow-up", blow_up(&h, m, 11000 + i, 20))
            }
        };
        let eopts = EmbedOptions {
            seed: 13000 + i,
            ..EmbedOptions::default()
        };
        let config = json!({"run": i, "host": kind, "n": g.vertex_count(), "t": t, "rho": rho.to_string()});
        let (ok, embedded, line) = match embed(&h, &g, &rho, eopts) {
            Err(e) => (false, false, record("acceptance embed", config, Verdict::Negative, None, json!({"error": e.to_string()}))),
            Ok(rep) => match &rep.outcome {
                EmbedOutcome::Embedded(f) => {
                    let ok = copy_ok(&h, &g, f);
                    let line = record("acceptance embed", config, verdict(ok), ok.then(|| json!(f)), json!({"steps": rep.steps.len()}));
                    (ok, true, line)
                }
                EmbedOutcome::Failed(cert) => {
                    let core_check = verify_certificate(cert, &h, &g, eopts).unwrap_or(false);
                    let recount = certificate_recount(cert, &h, &g);
                    let ok = core_check && recount.is_ok();
                    let (pair, family) = match &cert.kind {
                        FailureKind::NotDense { j, k, family, .. } => (Some((*j, *k)), family.len()),
                        FailureKind::NoCandidates => (None, 0),
                    };
                    let line = record(
                        "acceptance embed",
                        config,
                        Verdict::Negative,
                        None,
                        json!({
                            "failed_vertex": cert.vertex,
                            "candidates": cert.candidates.len(),
                            "pair": pair,
                            "family": family,
                            "certificate_checks": ok,
                            "recount_error": recount.err(),
                        }),
                    );
                    (ok, false, line)
                }
            },
        };
        (ok, embedded, line)
    });
    let unsound = rows.iter().filter(|r| !r.0).count();
    let embedded = rows.iter().filter(|r| r.1).count();
    Outcome {
        passed: unsound == 0,
        detail: format!(
            "{} runs: {embedded} embeddings, {} certificates, {unsound} soundness failures",
            rows.len(),
            rows.len() - embedded
        ),
        records: rows.into_iter().map(|r| r.2).collect(),
    }
}

/// Disjoint non-empty parts whose transversals all have the kind's colour.
fn tripartite_ok(g: &EdgeColouring, w: &TripartiteWitness) -> bool {
    let colour = match w.kind {
        TripartiteKind::Complete => 0,
        TripartiteKind::Empty => 1,
    };
    let [a, b, c] = &w.parts;
    let disjoint = a.iter().all(|x| !b.contains(x) && !c.contains(x)) && b.iter().all(|x| !c.contains(x));
    disjoint
        && !a.is_empty()
        && !b.is_empty()
        && !c.is_empty()
        && a.iter()
            .all(|&x| b.iter().all(|&y| c.iter().all(|&z| g.colour(&sorted3([x, y, z])) == colour)))
}

const DICHOTOMY_RUNS: u64 = 50;

fn dichotomy_honesty(opts: &SuiteOptions) -> Outcome {
    let tc5 = EdgeColouring::from_hypergraph(&tight_cycle5());
    let k4 = EdgeColouring::constant(3, 4, 2, 0).expect("K4");
    let ids: Vec<u64> = (0..DICHOTOMY_RUNS).collect();
    let rows = par_map(&ids, opts.threads, |&i| {
        let mut r = rng::rng(1200 + i, stream::INSTANCE);
        let (pname, h) = if i % 2 == 0 { ("tc5", &tc5) } else { ("k4", &k4) };
        let t = h.vertex_count();
        let (kind, g) = match i % 5 {
            0 | 1 => {
                let n = 20 + rng::below(&mut r, 41) as u32;
                let l = random_lift(n, &ratio(1, 2), 1400 + i).expect("small lift");
                ("lift", EdgeColouring::from_hypergraph(&l.lifted))
            }
            2 => {
                let n = 20 + rng::below(&mut r, 41) as u32;
                ("random", random_colouring(3, n, 2, 1600 + i, 1 << 20).expect("small host"))
            }
            3 => {
                let m = 6 + rng::below(&mut r, (200 / t - 5) as u64) as u32;
                ("blow-up", blow_up(h, m, 1800 + i, 0))
            }
            _ => {
                let n = 30 + rng::below(&mut r, 171) as u32;
                ("constant", EdgeColouring::constant(3, n, 2, (i / 5 % 2) as u8).expect("constant"))
            }
        };
        let rho = if i % 3 == 0 { ratio(3, 10) } else { ratio(1, 5) };
        let mut st = DichotomySettings::new(rho.clone(), 2);
        st.overrides = KsssOverrides {
            s1: Some(4),
            s2: Some(3),
            t2: Some(2),
            t3: Some(2),
        };
        st.embed.seed = 1900 + i;
        let config = json!({"run": i, "host": kind, "n": g.vertex_count(), "pattern": pname, "rho": rho.to_string(), "s": 2});
        let (ok, line) = match dichotomy(&g, h, &st) {
            Err(e) => (false, record("acceptance dichotomy", config, Verdict::Negative, None, json!({"error": e.to_string()}))),
            Ok(rep) => match &rep.outcome {
                DichotomyOutcome::InducedCopy(f) => {
                    let ok = copy_ok(h, &g, f) && !(kind == "lift" && pname == "tc5");
                    (ok, record("acceptance dichotomy", config, verdict(ok), ok.then(|| json!({"copy": f})), Value::Null))
                }
                DichotomyOutcome::Tripartite(w) => {
                    let ok = tripartite_ok(&g, w);
                    let witness = json!({"kind": format!("{:?}", w.kind), "parts": w.parts});
                    (ok, record("acceptance dichotomy", config, verdict(ok), ok.then_some(witness), Value::Null))
                }
                DichotomyOutcome::DoubleFailure { vertex, extraction } => (
                    true,
                    record(
                        "acceptance dichotomy",
                        config,
                        Verdict::Negative,
                        None,
                        json!({"double_failure": vertex, "extraction": extraction.as_ref().map(|f| format!("{:?}: {}", f.stage, f.reason))}),
                    ),
                ),
            },
        };
        (ok, line)
    });
    let bad = rows.iter().filter(|r| !r.0).count();
    let tally = |pat: &str| rows.iter().filter(|r| r.1.contains(pat)).count();
    Outcome {
        passed: bad == 0,
        detail: format!(
            "{} runs: {} copies, {} tripartite, {} double failures, {bad} violations",
            rows.len(),
            tally("\"copy\""),
            tally("\"parts\""),
            tally("double_failure")
        ),
        records: rows.into_iter().map(|r| r.1).collect(),
    }
}

fn lift_properties(opts: &SuiteOptions) -> Outcome {
    let mut jobs: Vec<(u32, u64)> = Vec::new();
    for n in 3..=12 {
        for seed in 0..3 {
            jobs.push((n, seed));
        }
    }
    let lift_bad: usize = par_map(&jobs, opts.threads, |&(n, seed)| {
        let l = random_lift(n, &ratio(1, 2), 2000 + seed).expect("small lift");
        let mut bad = usize::from(!l.verify());
        for t in Combinations::new(n, 3) {
            if l.lifted.contains(&t) != l.base.contains(&t[..2]) {
                bad += 1;
            }
        }
        for size in 3..=6usize.min(n as usize) {
            for x in Combinations::new(n, size) {
                let first = l.base.contains(&x[..2]);
                let expected = x[2..].iter().all(|&v| l.lifted.contains(&[x[0], x[1], v]) == first);
                if !expected || constructions::pair_determination_check(&l.lifted, &x) != Ok(true) {
                    bad += 1;
                }
            }
        }
        bad
    })
    .into_iter()
    .sum();
    let seeds: Vec<u64> = (0..10).collect();
    let tc5 = tight_cycle5();
    let hfree: Vec<bool> = par_map(&seeds, opts.threads, |&seed| {
        constructions::verify_hfree_lift(20, 2100 + seed, &tc5, &SearchBudget::unlimited()).is_ok_and(|r| r.h_free)
    });
    let free = hfree.iter().filter(|&&b| b).count();
    Outcome::new(
        lift_bad == 0 && free == seeds.len(),
        format!("{} lifts with n <= 12, {lift_bad} violations; {free}/10 lifts on 20 vertices free of the tight 5-cycle", jobs.len()),
    )
}

fn clique_agreement(opts: &SuiteOptions) -> Outcome {
    let mut jobs: Vec<(u32, u64)> = Vec::new();
    for n in 3..=5 {
        for seed in 0..10 {
            jobs.push((n, seed));
        }
    }
    let rows = par_map(&jobs, opts.threads, |&(n, seed)| {
        let base = random_colouring(3, n, 2, 2200 + seed, 1 << 10).expect("small base");
        let s = stepup_under_test(base.clone(), opts);
        let naive = EdgeColouring::from_fn(4, 1 << n, 2, 1 << 20, |t| naive_stepup_colour(&base, n, t)).expect("small");
        let mut bad = 0;
        for colour in [0u8, 1] {
            let fast = max_mono_clique(&s, colour, &SearchBudget::unlimited()).expect("valid colour");
            let brute = oracles::max_mono_clique_bf(&naive, colour, &SearchBudget::unlimited());
            let witness_ok = fast.witness.len() == fast.size
                && (fast.vacuous || Combinations::new(fast.size as u32, 4).all(|sub| {
                    let img: Vec<u32> = sub.iter().map(|&x| fast.witness[x as usize]).collect();
                    naive.colour(&img) == colour
                }));
            if fast.size != brute.size || fast.vacuous != brute.vacuous || !witness_ok || fast.incomplete {
                bad += 1;
            }
        }
        bad
    });
    let bad: usize = rows.iter().sum();
    let mut reports = Vec::new();
    for n in [4u32, 5] {
        let base = random_colouring(3, n, 2, 2200, 1 << 10).expect("small base");
        match stepping_up_verify(&base, None, &SearchBudget::unlimited()) {
            Ok(r) => reports.push(format!(
                "n={n}: base {} -> red {}, blue {} vs bound {}",
                r.base_clique.size, r.red.size, r.blue.size, r.target
            )),
            Err(e) => reports.push(format!("n={n}: {e}")),
        }
    }
    let generated = reports.iter().all(|r| r.contains("bound"));
    Outcome::new(
        bad == 0 && generated,
        format!("{} searches, {bad} disagreements; {}", jobs.len() * 2, reports.join("; ")),
    )
}

fn determinism(opts: &SuiteOptions, first: &BTreeMap<u8, Vec<String>>) -> Outcome {
    let other = SuiteOptions {
        threads: if opts.threads == 1 { 2 } else { 1 },
        ..opts.clone()
    };
    let mut differing = Vec::new();
    for (&id, recs) in first {
        let again = run_body(id, &other).records;
        if recs.is_empty() || &again != recs {
            differing.push(id.to_string());
        }
    }
    Outcome::new(
        differing.is_empty(),
        if differing.is_empty() {
            format!("criteria 2, 4-8 identical at {} and {} threads", opts.threads, other.threads)
        } else {
            format!("records differ for criteria {}", differing.join(", "))
        },
    )
}
