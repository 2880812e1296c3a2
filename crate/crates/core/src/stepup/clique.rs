//! Exact monochromatic clique search by branch and bound.

use alloc::vec;
use alloc::vec::Vec;

use super::StepUpColouring;
use crate::budget::{Meter, SearchBudget};
use crate::colouring::{EdgeColouring, BLUE, RED};
use crate::combin::{binom, Combinations};
use crate::error::{Error, Result};
use crate::hypergraph::{TupleColouring, MAX_UNIFORMITY};
use crate::vacuous_clique_size;

/// Outcome of a clique search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    pub colour: u8,
    pub size: usize,
    /// Sorted vertex set. For a vacuous result, the first `size` vertices.
    pub witness: Vec<u32>,
    /// No set of `uniformity` vertices is monochromatic in the colour.
    pub vacuous: bool,
    /// The search stopped on its budget; `size` is then a lower bound.
    pub incomplete: bool,
    pub nodes: u64,
}

/// Colour-degree work above which vertices are searched in id order.
const DEGREE_WORK_CAP: u64 = 4_000_000;
/// Candidate-set size up to which the colouring bound is computed.
const COLOURING_BOUND_CAP: usize = 96;

struct Search<'c, 'b, C: TupleColouring + ?Sized> {
    c: &'c C,
    colour: u8,
    u: usize,
    meter: Meter<'b>,
    best: Vec<u32>,
}

impl<C: TupleColouring + ?Sized> Search<'_, '_, C> {
    /// Does every `(u-2)`-subset of `clique` together with `v, w` have the
    /// colour?
    fn pair_ok(&self, clique: &[u32], v: u32, w: u32) -> bool {
        let u = self.u;
        let mut buf = [0u32; MAX_UNIFORMITY];
        let mut it = Combinations::new(clique.len() as u32, u - 2);
        while let Some(idx) = it.next_ref() {
            for (slot, &i) in buf.iter_mut().zip(idx) {
                *slot = clique[i as usize];
            }
            buf[u - 2] = v;
            buf[u - 1] = w;
            if self.c.colour_unsorted(&buf[..u]) != self.colour {
                return false;
            }
        }
        true
    }

    fn floor(&self) -> usize {
        self.best.len().max(self.u)
    }

    fn consider(&mut self, clique: &[u32]) {
        if clique.len() < self.u || clique.len() < self.best.len() {
            return;
        }
        let mut sorted = clique.to_vec();
        sorted.sort_unstable();
        if sorted.len() > self.best.len() || sorted < self.best {
            self.best = sorted;
        }
    }

    /// Greedy colouring of the graph on `cands` whose edges are pairs that
    /// may both join `clique`; the number of colours bounds the extension.
    fn colouring_bound(&self, clique: &[u32], cands: &[u32]) -> usize {
        let m = cands.len();
        let mut adj = vec![false; m * m];
        for i in 0..m {
            for j in i + 1..m {
                let ok = self.pair_ok(clique, cands[i], cands[j]);
                adj[i * m + j] = ok;
                adj[j * m + i] = ok;
            }
        }
        let mut class = vec![usize::MAX; m];
        let mut classes = 0;
        for i in 0..m {
            let mut used = vec![false; classes + 1];
            for j in 0..i {
                if adj[i * m + j] {
                    used[class[j]] = true;
                }
            }
            class[i] = used.iter().position(|&b| !b).expect("spare slot");
            classes = classes.max(class[i] + 1);
        }
        classes
    }

    fn expand(&mut self, clique: &mut Vec<u32>, cands: &[u32]) {
        if !self.meter.tick() {
            return;
        }
        self.consider(clique);
        if clique.len() + cands.len() < self.floor() {
            return;
        }
        if clique.len() + 2 >= self.u && cands.len() > 2 && cands.len() <= COLOURING_BOUND_CAP {
            let bound = clique.len() + self.colouring_bound(clique, cands);
            if bound < self.floor() {
                return;
            }
        }
        for (idx, &v) in cands.iter().enumerate() {
            let rest = &cands[idx + 1..];
            if clique.len() + 1 + rest.len() < self.floor() {
                break;
            }
            let next: Vec<u32> = if clique.len() + 2 < self.u {
                rest.to_vec()
            } else {
                rest.iter()
                    .copied()
                    .filter(|&w| self.pair_ok(clique, v, w))
                    .collect()
            };
            clique.push(v);
            self.expand(clique, &next);
            clique.pop();
            if self.meter.exhausted() {
                return;
            }
        }
    }
}

/// Largest vertex set all of whose `uniformity`-subsets have `colour`.
///
/// Among maximum sets the lexicographically smallest is returned, so the
/// answer does not depend on the search order. When no `uniformity`-set has
/// the colour the result is vacuous and reports `uniformity - 1` vertices.
pub fn max_mono_clique<C: TupleColouring + ?Sized>(
    c: &C,
    colour: u8,
    budget: &SearchBudget<'_>,
) -> Result<CliqueResult> {
    if colour >= c.colour_count() {
        return Err(Error::ColourOutOfRange {
            colour,
            count: c.colour_count(),
        });
    }
    let u = c.uniformity();
    let n = c.vertex_count();
    let mut order: Vec<u32> = (0..n).collect();
    let work = (n as u64).saturating_mul(binom((n as u64).saturating_sub(1), u as u64 - 1));
    if (n as usize) >= u && work <= DEGREE_WORK_CAP {
        let mut degree = vec![0u64; n as usize];
        let mut it = Combinations::new(n, u);
        while let Some(t) = it.next_ref() {
            if c.colour(t) == colour {
                for &v in t {
                    degree[v as usize] += 1;
                }
            }
        }
        order.sort_by_key(|&v| (core::cmp::Reverse(degree[v as usize]), v));
    }
    let mut search = Search {
        c,
        colour,
        u,
        meter: budget.meter(),
        best: Vec::new(),
    };
    search.expand(&mut Vec::new(), &order);
    let incomplete = search.meter.exhausted();
    let nodes = search.meter.nodes();
    let best = search.best;
    if best.is_empty() {
        let size = vacuous_clique_size(u, n);
        return Ok(CliqueResult {
            colour,
            size,
            witness: (0..size as u32).collect(),
            vacuous: true,
            incomplete,
            nodes,
        });
    }
    let mut it = Combinations::new(best.len() as u32, u);
    let mut buf = [0u32; MAX_UNIFORMITY];
    while let Some(idx) = it.next_ref() {
        for (slot, &i) in buf.iter_mut().zip(idx) {
            *slot = best[i as usize];
        }
        if c.colour(&buf[..u]) != colour {
            return Err(Error::Unverified("clique witness has a wrong-coloured edge".into()));
        }
    }
    Ok(CliqueResult {
        colour,
        size: best.len(),
        witness: best,
        vacuous: false,
        incomplete,
        nodes,
    })
}

/// Observed clique sizes of a step-up colouring against the
/// stepping-up target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteppingUpReport {
    /// Base uniformity `k`; the derived colouring is `(k+1)`-uniform.
    pub k: usize,
    pub n: u32,
    /// Largest monochromatic clique of the base, over both colours.
    pub base_clique: CliqueResult,
    /// The base is taken to have no monochromatic clique of this size.
    pub ell: usize,
    /// `2·ell + (k+1) - 5`: the derived colouring should have no
    /// monochromatic clique of this size.
    pub target: usize,
    pub red: CliqueResult,
    pub blue: CliqueResult,
    /// Both derived searches completed and stayed below `target`.
    pub holds: bool,
}

/// Steps up `base` and measures its monochromatic cliques. `ell` defaults
/// to one more than the base's largest monochromatic clique.
pub fn stepping_up_verify(
    base: &EdgeColouring,
    ell: Option<usize>,
    budget: &SearchBudget<'_>,
) -> Result<SteppingUpReport> {
    let k = base.uniformity();
    if k < 3 {
        return Err(Error::Param("stepping up needs base uniformity at least 3".into()));
    }
    let base_red = max_mono_clique(base, RED, budget)?;
    let base_blue = max_mono_clique(base, BLUE, budget)?;
    let base_clique = if base_blue.size > base_red.size {
        base_blue
    } else {
        base_red
    };
    let ell = ell.unwrap_or(base_clique.size + 1);
    let target = 2 * ell + k + 1 - 5;
    let s = StepUpColouring::new(base.clone())?;
    let red = max_mono_clique(&s, RED, budget)?;
    let blue = max_mono_clique(&s, BLUE, budget)?;
    let holds = !red.incomplete && !blue.incomplete && red.size.max(blue.size) < target;
    Ok(SteppingUpReport {
        k,
        n: base.vertex_count(),
        base_clique,
        ell,
        target,
        red,
        blue,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::UniformHypergraph;

    /// Brute force over all subsets, largest first, lexicographic within a size.
    fn brute(c: &impl TupleColouring, colour: u8) -> (usize, Vec<u32>) {
        let n = c.vertex_count();
        let u = c.uniformity();
        for size in (u..=n as usize).rev() {
            for s in Combinations::new(n, size) {
                if Combinations::new(size as u32, u).all(|idx| {
                    let t: Vec<u32> = idx.iter().map(|&i| s[i as usize]).collect();
                    c.colour(&t) == colour
                }) {
                    return (size, s);
                }
            }
        }
        (u - 1, (0..u as u32 - 1).collect())
    }

    #[test]
    fn constant_colourings() {
        let c = EdgeColouring::constant(3, 7, 2, RED).unwrap();
        let r = max_mono_clique(&c, RED, &SearchBudget::unlimited()).unwrap();
        assert_eq!((r.size, r.vacuous), (7, false));
        assert_eq!(r.witness, (0..7).collect::<Vec<_>>());
        let b = max_mono_clique(&c, BLUE, &SearchBudget::unlimited()).unwrap();
        assert_eq!((b.size, b.vacuous), (2, true));
    }

    #[test]
    fn matches_brute_force_on_small_hosts() {
        for seed in 0..12u64 {
            let h = UniformHypergraph::from_predicate(3, 9, |t| {
                let x = (t[0] as u64 * 131 + t[1] as u64 * 17 + t[2] as u64 + seed * 7919)
                    .wrapping_mul(0x9e37_79b9_7f4a_7c15);
                (x >> 61) < 5
            })
            .unwrap();
            for colour in [0, 1] {
                let r = max_mono_clique(&h, colour, &SearchBudget::unlimited()).unwrap();
                let (size, witness) = brute(&h, colour);
                assert_eq!(r.size, size, "seed {seed} colour {colour}");
                assert_eq!(r.witness, witness, "seed {seed} colour {colour}");
            }
        }
    }

    #[test]
    fn stepup_all_red_blue_cliques() {
        let base = EdgeColouring::constant(3, 4, 2, RED).unwrap();
        let s = StepUpColouring::new(base).unwrap();
        let r = max_mono_clique(&s, BLUE, &SearchBudget::unlimited()).unwrap();
        let (size, witness) = brute(&s, BLUE);
        assert_eq!((r.size, r.witness.clone()), (size, witness));
        assert!(!r.incomplete);
    }

    #[test]
    fn budget_flags_incomplete() {
        let base = EdgeColouring::constant(3, 4, 2, RED).unwrap();
        let s = StepUpColouring::new(base).unwrap();
        let r = max_mono_clique(&s, BLUE, &SearchBudget::nodes(5)).unwrap();
        assert!(r.incomplete);
    }

    #[test]
    fn stepping_up_report() {
        let base = EdgeColouring::from_fn(3, 4, 2, 100, |t| (t[0] % 2) as u8).unwrap();
        let rep = stepping_up_verify(&base, Some(4), &SearchBudget::unlimited()).unwrap();
        assert_eq!(rep.target, 7);
        assert_eq!(rep.base_clique.size, 3);
        let s = StepUpColouring::new(base).unwrap();
        assert_eq!(rep.red.size, brute(&s, RED).0);
        assert_eq!(rep.blue.size, brute(&s, BLUE).0);
        assert_eq!(rep.holds, rep.red.size.max(rep.blue.size) < 7);
    }
}
