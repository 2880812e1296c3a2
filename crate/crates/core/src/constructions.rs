//! Instances without large structure: random graphs, their lifts, and the
//! tight 5-cycle that no lift contains.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use crate::bipartite::{TripartiteKind, TripartiteWitness};
use crate::budget::{Meter, SearchBudget};
use crate::colouring::EdgeColouring;
use crate::combin::Combinations;
use crate::error::{Error, Result};
use crate::hypergraph::{UniformHypergraph, MAX_UNIFORMITY};
use crate::oracles;
use crate::rational::Rational;
use crate::rng::{self, stream};

/// `G(n, p)` as a 2-uniform hypergraph. Pair `(i, j)` consumes the next
/// Bernoulli draw in lexicographic pair order.
pub fn random_graph(n: u32, p: &Rational, seed: u64) -> Result<UniformHypergraph> {
    let (num, den) = probability_parts(p)?;
    let mut r = rng::rng(seed, stream::RANDOM_GRAPH);
    UniformHypergraph::from_predicate(2, n, |_| rng::bernoulli(&mut r, num, den))
}

/// Random `k`-uniform hypergraph: each `k`-set is an edge with
/// probability `p`, drawn in lexicographic order.
pub fn random_hypergraph(k: usize, n: u32, p: &Rational, seed: u64) -> Result<UniformHypergraph> {
    let (num, den) = probability_parts(p)?;
    let mut r = rng::rng(seed, stream::RANDOM_COLOURING);
    UniformHypergraph::from_predicate(k, n, |_| rng::bernoulli(&mut r, num, den))
}

/// Uniformly random `colour_count`-colouring of the `k`-sets, drawn in
/// lexicographic order; refuses more than `cap` tuples.
pub fn random_colouring(k: usize, n: u32, colour_count: u8, seed: u64, cap: u64) -> Result<EdgeColouring> {
    if colour_count == 0 {
        return Err(Error::Param("need at least one colour".into()));
    }
    let mut r = rng::rng(seed, stream::RANDOM_COLOURING);
    EdgeColouring::from_fn(k, n, colour_count, cap, |_| rng::below(&mut r, colour_count as u64) as u8)
}

fn probability_parts(p: &Rational) -> Result<(u64, u64)> {
    if p < &Rational::zero() || p.numer() > p.denom() {
        return Err(Error::Param(alloc::format!("probability {p} outside [0, 1]")));
    }
    match (p.numer().to_u64(), p.denom().to_u64()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::Param(alloc::format!("probability {p} has a huge denominator"))),
    }
}

/// Where a random base came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub seed: u64,
    pub p: String,
}

/// A `(k-1)`-uniform base and the `k`-uniform hypergraph whose edges are
/// the k-sets whose first `k-1` vertices form a base edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedHypergraph {
    pub base: UniformHypergraph,
    pub lifted: UniformHypergraph,
    pub provenance: Option<Provenance>,
}

impl LiftedHypergraph {
    /// Checks the defining property on every k-subset.
    pub fn verify(&self) -> bool {
        let k = self.lifted.uniformity();
        let mut it = Combinations::new(self.lifted.vertex_count(), k);
        while let Some(t) = it.next_ref() {
            let prefix = &t[..k - 1];
            let in_base = prefix.iter().all(|&v| v < self.base.vertex_count()) && self.base.contains(prefix);
            if in_base != self.lifted.contains(t) {
                return false;
            }
        }
        true
    }
}

/// Lifts `base` to uniformity one higher on `n >= base.vertex_count()`
/// vertices.
pub fn lift(base: &UniformHypergraph, n: u32) -> Result<LiftedHypergraph> {
    let k = base.uniformity() + 1;
    if n < base.vertex_count() {
        return Err(Error::Param(alloc::format!(
            "lift size {n} below base size {}",
            base.vertex_count()
        )));
    }
    if k > MAX_UNIFORMITY || (n as usize) < k {
        return Err(Error::Uniformity { k, n: n as u64 });
    }
    let mut edges: Vec<Vec<u32>> = Vec::new();
    for e in base.edges() {
        let last = *e.last().expect("nonempty edge");
        for x in last + 1..n {
            let mut t = e.to_vec();
            t.push(x);
            edges.push(t);
        }
    }
    Ok(LiftedHypergraph {
        base: base.clone(),
        lifted: UniformHypergraph::new(k, n, edges)?,
        provenance: None,
    })
}

/// Lift of `random_graph(n, p, seed)` with its provenance recorded.
pub fn random_lift(n: u32, p: &Rational, seed: u64) -> Result<LiftedHypergraph> {
    let g = random_graph(n, p, seed)?;
    let mut l = lift(&g, n)?;
    l.provenance = Some(Provenance {
        seed,
        p: alloc::format!("{p}"),
    });
    Ok(l)
}

/// Edges 012, 123, 234, 034, 014.
pub fn tight_cycle5() -> UniformHypergraph {
    UniformHypergraph::new(3, 5, [[0, 1, 2], [1, 2, 3], [2, 3, 4], [0, 3, 4], [0, 1, 4]])
        .expect("fixed edge list")
}

/// With `x1 < x2` the two smallest ids in `x`: are the triples `x1 x2 x`
/// for the remaining `x` all edges or all non-edges?
pub fn pair_determination_check(g3: &UniformHypergraph, x: &[u32]) -> Result<bool> {
    if g3.uniformity() != 3 {
        return Err(Error::Param("pair determination needs a 3-uniform hypergraph".into()));
    }
    let mut s = x.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() < 3 {
        return Err(Error::Param("need at least three distinct vertices".into()));
    }
    if let Some(&v) = s.iter().find(|&&v| v >= g3.vertex_count()) {
        return Err(Error::VertexOutOfRange {
            vertex: v as u64,
            n: g3.vertex_count() as u64,
        });
    }
    let first = g3.contains(&[s[0], s[1], s[2]]);
    Ok(s[3..].iter().all(|&v| g3.contains(&[s[0], s[1], v]) == first))
}

/// Pairs `{a, b}` of a 3-uniform hypergraph whose triples with every other
/// vertex are all edges or all non-edges. A pattern with no such pair never
/// occurs induced in a lift.
pub fn determined_pairs(h: &UniformHypergraph) -> Vec<(u32, u32)> {
    let n = h.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let states: Vec<bool> = (0..n)
                .filter(|&x| x != a && x != b)
                .map(|x| h.contains_unsorted(&[a, b, x]))
                .collect();
            if states.windows(2).all(|w| w[0] == w[1]) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Outcome of searching a random lift for an induced pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HFreeReport {
    pub n: u32,
    pub seed: u64,
    pub base_edges: usize,
    pub embedding: Option<Vec<u32>>,
    pub exhausted: bool,
    /// Search completed and found nothing.
    pub h_free: bool,
}

/// Lifts `random_graph(n, 1/2, seed)` and searches it for an induced copy
/// of `pattern` by brute force.
pub fn verify_hfree_lift(
    n: u32,
    seed: u64,
    pattern: &UniformHypergraph,
    budget: &SearchBudget<'_>,
) -> Result<HFreeReport> {
    let l = random_lift(n, &crate::rational::ratio(1, 2), seed)?;
    let r = oracles::induced_copy_bf(&l.lifted, pattern, budget)?;
    Ok(HFreeReport {
        n,
        seed,
        base_edges: l.base.edge_count(),
        h_free: r.embedding.is_none() && !r.exhausted,
        embedding: r.embedding,
        exhausted: r.exhausted,
    })
}

/// Largest balanced tripartite structure found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedTripartite {
    pub s: usize,
    /// `None` when `s = 0`.
    pub witness: Option<TripartiteWitness>,
    /// The search ran out of budget; `s` is a lower bound.
    pub exhausted: bool,
}

/// Disjoint `S1, S2, S3` of size `s` with all transversals edges (or all
/// non-edges), for the largest such `s`. Parts are found with
/// `min S1 < min S2 < min S3`.
pub fn max_balanced_tripartite(
    g3: &UniformHypergraph,
    kind: TripartiteKind,
    budget: &SearchBudget<'_>,
) -> Result<BalancedTripartite> {
    if g3.uniformity() != 3 {
        return Err(Error::Param("tripartite search needs a 3-uniform hypergraph".into()));
    }
    let mut meter = budget.meter();
    let mut best = BalancedTripartite {
        s: 0,
        witness: None,
        exhausted: false,
    };
    let n = g3.vertex_count();
    for s in 1..=(n as usize / 3) {
        match balanced_of_size(g3, kind, s, &mut meter) {
            Some(w) => {
                best.s = s;
                best.witness = Some(w);
            }
            None => break,
        }
    }
    best.exhausted = meter.exhausted();
    if let Some(w) = &best.witness {
        if !w.verify(g3)? {
            return Err(Error::Unverified("tripartite witness failed re-check".into()));
        }
    }
    Ok(best)
}

fn balanced_of_size(
    g3: &UniformHypergraph,
    kind: TripartiteKind,
    s: usize,
    meter: &mut Meter<'_>,
) -> Option<TripartiteWitness> {
    let n = g3.vertex_count();
    let want = matches!(kind, TripartiteKind::Complete);
    let fits = |x: u32, y: u32, z: u32| g3.contains_unsorted(&[x, y, z]) == want;
    for s1 in Combinations::new(n, s) {
        let rest2: Vec<u32> = (s1[0] + 1..n).filter(|v| !s1.contains(v)).collect();
        for i2 in Combinations::new(rest2.len() as u32, s) {
            if !meter.tick() {
                return None;
            }
            let s2: Vec<u32> = i2.iter().map(|&i| rest2[i as usize]).collect();
            let pool: Vec<u32> = (s2[0] + 1..n)
                .filter(|v| !s1.contains(v) && !s2.contains(v))
                .filter(|&z| s1.iter().all(|&x| s2.iter().all(|&y| fits(x, y, z))))
                .collect();
            if pool.len() >= s {
                return Some(TripartiteWitness {
                    parts: [s1, s2, pool[..s].to_vec()],
                    kind,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use alloc::vec;

    #[test]
    fn random_graph_extremes() {
        let g = random_graph(8, &ratio(0, 1), 1).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = random_graph(8, &ratio(1, 1), 1).unwrap();
        assert_eq!(g.edge_count(), 28);
        assert_eq!(random_graph(10, &ratio(1, 2), 42).unwrap(), random_graph(10, &ratio(1, 2), 42).unwrap());
        assert!(random_graph(5, &ratio(3, 2), 0).is_err());
    }

    #[test]
    fn lift_examples() {
        let base = UniformHypergraph::new(2, 4, [[0, 1]]).unwrap();
        let l = lift(&base, 4).unwrap();
        assert_eq!(l.lifted.edges().collect::<Vec<_>>(), [[0, 1, 2], [0, 1, 3]]);
        assert!(l.verify());
        let l = lift(&UniformHypergraph::empty(2, 5).unwrap(), 5).unwrap();
        assert_eq!(l.lifted.edge_count(), 0);
        let l = lift(&UniformHypergraph::complete(2, 5).unwrap(), 5).unwrap();
        assert_eq!(l.lifted, UniformHypergraph::complete(3, 5).unwrap());
    }

    #[test]
    fn tight_cycle_shape() {
        let h = tight_cycle5();
        assert_eq!(h.edge_count(), 5);
        for v in 0..5 {
            assert_eq!(h.edges().filter(|e| e.contains(&v)).count(), 3);
        }
        assert_eq!(h.complement().edge_count(), 5);
        assert!(determined_pairs(&h).is_empty());
    }

    #[test]
    fn pair_determination_examples() {
        let g = UniformHypergraph::new(3, 4, [[0, 1, 2]]).unwrap();
        assert!(!pair_determination_check(&g, &[0, 1, 2, 3]).unwrap());
        let c = UniformHypergraph::complete(3, 6).unwrap();
        assert!(pair_determination_check(&c, &[5, 1, 3]).unwrap());
        assert!(pair_determination_check(&c, &[1, 3]).is_err());
        let l = random_lift(9, &ratio(1, 2), 4).unwrap();
        for x in Combinations::new(9, 4) {
            assert!(pair_determination_check(&l.lifted, &x).unwrap());
        }
    }

    #[test]
    fn hfree_small() {
        let r = verify_hfree_lift(10, 3, &tight_cycle5(), &SearchBudget::unlimited()).unwrap();
        assert!(r.h_free);
        let single = UniformHypergraph::complete(3, 3).unwrap();
        let r = verify_hfree_lift(10, 3, &single, &SearchBudget::unlimited()).unwrap();
        assert_eq!(r.embedding.is_some(), r.base_edges > 0);
    }

    #[test]
    fn balanced_examples() {
        let c = UniformHypergraph::complete(3, 9).unwrap();
        let r = max_balanced_tripartite(&c, TripartiteKind::Complete, &SearchBudget::unlimited()).unwrap();
        assert_eq!(r.s, 3);
        let e = UniformHypergraph::empty(3, 9).unwrap();
        let r = max_balanced_tripartite(&e, TripartiteKind::Complete, &SearchBudget::unlimited()).unwrap();
        assert_eq!((r.s, r.witness), (0, None));
        let r = max_balanced_tripartite(&e, TripartiteKind::Empty, &SearchBudget::unlimited()).unwrap();
        assert_eq!(r.s, 3);
        assert_eq!(r.witness.unwrap().parts, [vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]);
    }
}
