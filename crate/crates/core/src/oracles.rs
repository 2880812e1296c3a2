//! Brute-force ground truth.
//!
//! Everything here is deliberately naive and shares no search code with the
//! optimized paths elsewhere in the crate, so agreement between the two is
//! evidence rather than tautology.

use alloc::vec;
use alloc::vec::Vec;

use crate::bipartite::{BipartiteGraph, TripartiteKind, TripartiteSystem, TripartiteWitness};
use crate::budget::{Meter, SearchBudget};
use crate::colouring::{EdgeColouring, BLUE, RED};
use crate::error::{Error, Result};
use crate::hypergraph::{TupleColouring, UniformHypergraph};
use crate::stepup::TotalPreorder;
use crate::vacuous_clique_size;

/// Exact answer of a brute-force clique search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteClique {
    pub size: usize,
    pub witness: Vec<u32>,
    pub vacuous: bool,
    pub exhausted: bool,
}

/// All `r`-subsets of `items`, in lexicographic order.
fn subsets(items: &[u32], r: usize) -> Vec<Vec<u32>> {
    fn go(items: &[u32], r: usize, from: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in from..items.len() {
            cur.push(items[i]);
            go(items, r, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, r, 0, &mut Vec::new(), &mut out);
    out
}

fn sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v
}

/// Largest set whose every `uniformity`-subset has `colour`, by plain
/// lexicographic backtracking. The first maximum found is the
/// lexicographically smallest.
pub fn max_mono_clique_bf<C: TupleColouring + ?Sized>(
    c: &C,
    colour: u8,
    budget: &SearchBudget<'_>,
) -> BruteClique {
    let n = c.vertex_count();
    let u = c.uniformity();
    let mut best: Vec<u32> = Vec::new();
    let mut meter = budget.meter();

    fn go<C: TupleColouring + ?Sized>(
        c: &C,
        colour: u8,
        n: u32,
        u: usize,
        cur: &mut Vec<u32>,
        from: u32,
        best: &mut Vec<u32>,
        meter: &mut Meter<'_>,
    ) {
        if !meter.tick() {
            return;
        }
        if cur.len() >= u && cur.len() > best.len() {
            *best = cur.clone();
        }
        for v in from..n {
            if cur.len() + (n - v) as usize <= best.len().max(u - 1) {
                return;
            }
            // every new u-set contains v and u-1 old vertices
            let fits = cur.len() + 1 < u
                || subsets(cur, u - 1).into_iter().all(|mut s| {
                    s.push(v);
                    c.colour(&s) == colour
                });
            if fits {
                cur.push(v);
                go(c, colour, n, u, cur, v + 1, best, meter);
                cur.pop();
            }
        }
    }

    go(c, colour, n, u, &mut Vec::new(), 0, &mut best, &mut meter);
    let exhausted = meter.exhausted();
    if best.is_empty() {
        let size = vacuous_clique_size(u, n);
        return BruteClique {
            size,
            witness: (0..size as u32).collect(),
            vacuous: true,
            exhausted,
        };
    }
    BruteClique {
        size: best.len(),
        witness: best,
        vacuous: false,
        exhausted,
    }
}

/// Largest clique: every k-subset of the witness is an edge.
pub fn max_clique_bf(h: &UniformHypergraph, budget: &SearchBudget<'_>) -> BruteClique {
    max_mono_clique_bf(h, 0, budget)
}

/// Largest independent set, as a clique of the complement.
pub fn max_independent_bf(h: &UniformHypergraph, budget: &SearchBudget<'_>) -> BruteClique {
    max_clique_bf(&h.complement(), budget)
}

/// Result of an induced-copy search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSearch {
    /// `embedding[i]` is the host vertex playing pattern vertex `i`.
    pub embedding: Option<Vec<u32>>,
    pub exhausted: bool,
}

/// Injection `f` of the pattern's vertices into the host with
/// `host(f(e)) = pattern(e)` for every `uniformity`-set `e`. For hypergraphs
/// this means edges go to edges and non-edges to non-edges.
pub fn induced_copy_bf<G, H>(host: &G, pattern: &H, budget: &SearchBudget<'_>) -> Result<InducedSearch>
where
    G: TupleColouring + ?Sized,
    H: TupleColouring + ?Sized,
{
    let u = host.uniformity();
    if pattern.uniformity() != u {
        return Err(Error::Param("pattern and host differ in uniformity".into()));
    }
    let h = pattern.vertex_count();
    let n = host.vertex_count();
    if h > n {
        return Ok(InducedSearch {
            embedding: None,
            exhausted: false,
        });
    }
    let mut meter = budget.meter();
    let mut map: Vec<u32> = Vec::new();
    let mut used = vec![false; n as usize];

    fn consistent<G: TupleColouring + ?Sized, H: TupleColouring + ?Sized>(
        host: &G,
        pattern: &H,
        map: &[u32],
        u: usize,
    ) -> bool {
        let i = map.len() as u32 - 1;
        let earlier: Vec<u32> = (0..i).collect();
        subsets(&earlier, u - 1).into_iter().all(|mut e| {
            e.push(i);
            let img = sorted(e.iter().map(|&p| map[p as usize]).collect());
            host.colour(&img) == pattern.colour(&e)
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn go<G: TupleColouring + ?Sized, H: TupleColouring + ?Sized>(
        host: &G,
        pattern: &H,
        u: usize,
        h: u32,
        n: u32,
        map: &mut Vec<u32>,
        used: &mut [bool],
        meter: &mut Meter<'_>,
    ) -> bool {
        if map.len() as u32 == h {
            return true;
        }
        for v in 0..n {
            if used[v as usize] {
                continue;
            }
            if !meter.tick() {
                return false;
            }
            map.push(v);
            used[v as usize] = true;
            if consistent(host, pattern, map, u) && go(host, pattern, u, h, n, map, used, meter) {
                return true;
            }
            used[v as usize] = false;
            map.pop();
        }
        false
    }

    let found = go(host, pattern, u, h, n, &mut map, &mut used, &mut meter);
    if found {
        let all: Vec<u32> = (0..h).collect();
        for e in subsets(&all, u) {
            let img = sorted(e.iter().map(|&p| map[p as usize]).collect());
            if host.colour(&img) != pattern.colour(&e) {
                return Err(Error::Unverified("induced copy failed re-check".into()));
            }
        }
    }
    Ok(InducedSearch {
        embedding: found.then_some(map),
        exhausted: meter.exhausted(),
    })
}

/// `U ⊆ A`, `T ⊆ B` with every pair an edge, as global ids.
pub type KstPair = (Vec<u32>, Vec<u32>);

fn common_bf(g: &BipartiteGraph, us: &[u32]) -> Vec<u32> {
    g.b()
        .iter()
        .copied()
        .filter(|&y| us.iter().all(|&x| g.has_edge(x, y)))
        .collect()
}

/// First `s`-subset of `A` (lexicographic by id) with at least `t` common
/// neighbours.
pub fn exists_kst_bf(g: &BipartiteGraph, s: usize, t: usize) -> Option<KstPair> {
    let a = sorted(g.a().to_vec());
    subsets(&a, s).into_iter().find_map(|us| {
        let ts = common_bf(g, &us);
        (ts.len() >= t).then_some((us, ts))
    })
}

/// The `s`-subset of `A` with the largest common neighbourhood, ties to the
/// lexicographically first.
pub fn max_kst_bf(g: &BipartiteGraph, s: usize) -> Option<KstPair> {
    let a = sorted(g.a().to_vec());
    let mut best: Option<KstPair> = None;
    for us in subsets(&a, s) {
        let ts = common_bf(g, &us);
        if best.as_ref().map_or(true, |(_, bt)| ts.len() > bt.len()) {
            best = Some((us, ts));
        }
    }
    best
}

/// First triple of `s`-subsets of the three parts whose transversals are
/// all edges (`Complete`) or all non-edges (`Empty`).
pub fn exists_tripartite_bf(
    parts: [&[u32]; 3],
    g3: &UniformHypergraph,
    s: usize,
    kind: TripartiteKind,
    budget: &SearchBudget<'_>,
) -> (Option<TripartiteWitness>, bool) {
    let want = matches!(kind, TripartiteKind::Complete);
    let mut meter = budget.meter();
    let p: Vec<Vec<Vec<u32>>> = parts
        .iter()
        .map(|part| subsets(&sorted(part.to_vec()), s))
        .collect();
    for s1 in &p[0] {
        for s2 in &p[1] {
            for s3 in &p[2] {
                if !meter.tick() {
                    return (None, true);
                }
                let ok = s1.iter().all(|&x| {
                    s2.iter().all(|&y| {
                        s3.iter()
                            .all(|&z| g3.contains(&sorted(vec![x, y, z])) == want)
                    })
                });
                if ok {
                    return (
                        Some(TripartiteWitness {
                            parts: [s1.clone(), s2.clone(), s3.clone()],
                            kind,
                        }),
                        false,
                    );
                }
            }
        }
    }
    (None, false)
}

/// Complete `K_{s,s,s}` of `g3` across the parts of `t`.
pub fn exists_ksss_bf(
    t: &TripartiteSystem,
    g3: &UniformHypergraph,
    s: usize,
    budget: &SearchBudget<'_>,
) -> (Option<TripartiteWitness>, bool) {
    exists_tripartite_bf(t.parts(), g3, s, TripartiteKind::Complete, budget)
}

/// Largest `m` for which preorders are enumerated.
pub const MAX_PREORDER_LEN: usize = 7;

/// Every total preorder on `m` positions, as rank vectors, sorted.
///
/// An ordered partition into `t` blocks is the same thing as a map onto
/// `1..=t`; all maps `[m] -> [m]` are scanned and the onto-a-prefix ones kept.
pub fn enumerate_preorders(m: usize) -> Result<Vec<TotalPreorder>> {
    if m > MAX_PREORDER_LEN {
        return Err(Error::Param(alloc::format!("m = {m} exceeds {MAX_PREORDER_LEN}")));
    }
    let mut out = Vec::new();
    let total = (m as u64).pow(m as u32);
    for code in 0..total {
        let mut x = code;
        let mut ranks = Vec::with_capacity(m);
        for _ in 0..m {
            ranks.push((x % m as u64) as u32 + 1);
            x /= m as u64;
        }
        let top = ranks.iter().copied().max().unwrap_or(0);
        if (1..=top).all(|r| ranks.contains(&r)) {
            out.push(TotalPreorder(ranks));
        }
    }
    out.sort();
    Ok(out)
}

/// Step-up colour computed from explicit bit vectors: sort by the
/// highest-differing-bit rule, read off δs, apply the monotone and
/// extremum rules. Ids are `b(ε)` for vectors of length `n`.
pub fn naive_stepup_colour(base: &EdgeColouring, n: u32, tuple: &[u32]) -> u8 {
    let bits = |id: u32| -> Vec<u8> { (0..n).map(|i| (id >> i & 1) as u8).collect() };
    let mut vs: Vec<Vec<u8>> = tuple.iter().map(|&id| bits(id)).collect();
    let highest_diff = |x: &[u8], y: &[u8]| -> usize {
        (0..n as usize).rev().find(|&i| x[i] != y[i]).expect("distinct") + 1
    };
    vs.sort_by(|x, y| {
        if x == y {
            core::cmp::Ordering::Equal
        } else if x[highest_diff(x, y) - 1] == 0 {
            core::cmp::Ordering::Less
        } else {
            core::cmp::Ordering::Greater
        }
    });
    let d: Vec<usize> = vs.windows(2).map(|w| highest_diff(&w[0], &w[1])).collect();
    let increasing = d.windows(2).all(|w| w[0] < w[1]);
    let decreasing = d.windows(2).all(|w| w[0] > w[1]);
    if increasing || decreasing {
        let set = sorted(d.iter().map(|&x| x as u32 - 1).collect());
        return base.colour(&set);
    }
    for j in 1..d.len() - 1 {
        if d[j] > d[j - 1] && d[j] > d[j + 1] {
            return BLUE;
        }
        if d[j] < d[j - 1] && d[j] < d[j + 1] {
            return RED;
        }
    }
    unreachable!("non-monotone sequence without an extremum")
}

/// Is there a link-graph system violating tri-density for `colour`,
/// among disjoint part triples with complete links, or with arbitrary
/// links when the parts allow at most `link_bits` link pairs? Counts each
/// triangle directly. `None` when the budget runs out.
pub fn tridense_violation_bf<C: TupleColouring + ?Sized>(
    host: &C,
    eps: &crate::rational::Rational,
    rho: &crate::rational::Rational,
    colour: u8,
    link_bits: usize,
    budget: &SearchBudget<'_>,
) -> Option<bool> {
    let n = host.vertex_count();
    let n3 = crate::rational::from_int((n as u64).pow(3));
    let mut meter = budget.meter();
    for code in 0..4u64.pow(n) {
        let mut parts: [Vec<u32>; 3] = Default::default();
        let mut c = code;
        for v in 0..n {
            if c % 4 > 0 {
                parts[(c % 4) as usize - 1].push(v);
            }
            c /= 4;
        }
        if parts.iter().any(Vec::is_empty) {
            continue;
        }
        let [a, b, z] = &parts;
        let pairs: Vec<(u32, u32)> = a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y)))
            .chain(b.iter().flat_map(|&x| z.iter().map(move |&y| (x, y))))
            .chain(z.iter().flat_map(|&x| a.iter().map(move |&y| (x, y))))
            .collect();
        let masks: u64 = if pairs.len() <= link_bits { 1 << pairs.len() } else { 1 };
        for m in 0..masks {
            if !meter.tick() {
                return None;
            }
            let on = |x: u32, y: u32| {
                masks == 1 || pairs.iter().position(|&q| q == (x, y)).is_some_and(|i| m >> i & 1 == 1)
            };
            let (mut total, mut hit) = (0u64, 0u64);
            for &x in a {
                for &y in b {
                    for &w in z {
                        if on(x, y) && on(y, w) && on(w, x) {
                            total += 1;
                            if host.colour_unsorted(&[x, y, w]) == colour {
                                hit += 1;
                            }
                        }
                    }
                }
            }
            let t = crate::rational::from_int(total);
            if total > 0 && t >= eps * &n3 && crate::rational::from_int(hit) < rho * &t {
                return Some(true);
            }
        }
    }
    Some(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stepup::StepUpColouring;

    #[test]
    fn clique_examples() {
        let h = UniformHypergraph::complete(3, 7).unwrap();
        let r = max_clique_bf(&h, &SearchBudget::unlimited());
        assert_eq!((r.size, r.vacuous), (7, false));
        let e = UniformHypergraph::empty(3, 7).unwrap();
        let r = max_clique_bf(&e, &SearchBudget::unlimited());
        assert_eq!((r.size, r.vacuous), (2, true));
        let r = max_independent_bf(&e, &SearchBudget::unlimited());
        assert_eq!(r.size, 7);
        let tc5 = UniformHypergraph::new(3, 5, [[0, 1, 2], [1, 2, 3], [2, 3, 4], [0, 3, 4], [0, 1, 4]]).unwrap();
        let r = max_clique_bf(&tc5, &SearchBudget::unlimited());
        assert_eq!((r.size, r.witness), (3, vec![0, 1, 2]));
    }

    #[test]
    fn induced_examples() {
        let tri = UniformHypergraph::complete(3, 3).unwrap();
        let g = UniformHypergraph::complete(3, 6).unwrap();
        let r = induced_copy_bf(&g, &tri, &SearchBudget::unlimited()).unwrap();
        assert_eq!(r.embedding, Some(vec![0, 1, 2]));
        let tc5 = UniformHypergraph::new(3, 5, [[0, 1, 2], [1, 2, 3], [2, 3, 4], [0, 3, 4], [0, 1, 4]]).unwrap();
        let r = induced_copy_bf(&g, &tc5, &SearchBudget::unlimited()).unwrap();
        assert_eq!(r.embedding, None);
        assert!(!r.exhausted);
        let r = induced_copy_bf(&tc5, &tc5, &SearchBudget::unlimited()).unwrap();
        assert!(r.embedding.is_some());
    }

    #[test]
    fn kst_examples() {
        let g = BipartiteGraph::complete(&[0, 1, 2], &[3, 4, 5]).unwrap();
        assert!(exists_kst_bf(&g, 3, 3).is_some());
        let e = BipartiteGraph::new(&[0, 1, 2], &[3, 4, 5], []).unwrap();
        assert!(exists_kst_bf(&e, 1, 1).is_none());
        // a1,a2,a3 = 0,1,2; b1..b4 = 3..6
        let g = BipartiteGraph::new(
            &[0, 1, 2],
            &[3, 4, 5, 6],
            [(0, 3), (0, 4), (0, 5), (1, 4), (1, 5), (1, 6), (2, 3), (2, 5)],
        )
        .unwrap();
        assert_eq!(exists_kst_bf(&g, 2, 2), Some((vec![0, 1], vec![4, 5])));
        assert_eq!(max_kst_bf(&g, 2), Some((vec![0, 1], vec![4, 5])));
    }

    #[test]
    fn ksss_examples() {
        let t = TripartiteSystem::complete(&[0, 1, 2], &[3, 4, 5], &[6, 7, 8]).unwrap();
        let all = UniformHypergraph::new(3, 9, t.triangles()).unwrap();
        let (w, _) = exists_ksss_bf(&t, &all, 3, &SearchBudget::unlimited());
        assert!(w.unwrap().verify(&all).unwrap());
        let none = UniformHypergraph::empty(3, 9).unwrap();
        assert!(exists_ksss_bf(&t, &none, 1, &SearchBudget::unlimited()).0.is_none());
    }

    #[test]
    fn preorder_examples() {
        let one = enumerate_preorders(1).unwrap();
        assert_eq!(one, vec![TotalPreorder(vec![1])]);
        let two = enumerate_preorders(2).unwrap();
        assert_eq!(
            two,
            vec![TotalPreorder(vec![1, 1]), TotalPreorder(vec![1, 2]), TotalPreorder(vec![2, 1])]
        );
        assert_eq!(enumerate_preorders(3).unwrap().len(), 13);
        assert_eq!(enumerate_preorders(0).unwrap().len(), 1);
        assert!(enumerate_preorders(8).is_err());
    }

    #[test]
    fn naive_stepup_agrees() {
        let base = EdgeColouring::from_fn(3, 4, 2, 100, |t| ((t[0] + 2 * t[1] + t[2]) % 2) as u8).unwrap();
        let s = StepUpColouring::new(base.clone()).unwrap();
        for t in crate::combin::Combinations::new(16, 4) {
            assert_eq!(naive_stepup_colour(&base, 4, &t), s.colour(&t), "{t:?}");
        }
    }
}
