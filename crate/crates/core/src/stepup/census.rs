//! Which coloured patterns occur on h-subsets of a step-up colouring.

use alloc::collections::BTreeSet;

use super::{ColouredPattern, StepUpColouring};
use crate::combin::{binom, Combinations};
use crate::error::{Error, Result};
use crate::hypergraph::TupleColouring;
use crate::rng::{self, stream};

/// Distinct patterns seen on h-subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub h: usize,
    pub patterns: BTreeSet<ColouredPattern>,
    /// Every h-subset was examined. Otherwise the set is a lower bound.
    pub exhaustive: bool,
    /// Number of h-subsets examined.
    pub examined: u64,
}

/// Patterns over the h-subsets with lexicographic ranks in `start..end`.
pub fn census_range(
    s: &StepUpColouring,
    h: usize,
    start: u64,
    end: u64,
) -> BTreeSet<ColouredPattern> {
    let mut out = BTreeSet::new();
    if start >= end {
        return out;
    }
    let mut it = Combinations::starting_at(s.vertex_count(), h, start);
    let mut left = end - start;
    while left > 0 {
        let Some(c) = it.next_ref() else { break };
        out.insert(s.pattern_unchecked(c));
        left -= 1;
    }
    out
}

fn check_h(s: &StepUpColouring, h: usize) -> Result<()> {
    let u = s.uniformity();
    if h < u {
        return Err(Error::Param(alloc::format!(
            "census needs h >= {u}, got {h}"
        )));
    }
    if h as u64 > s.vertex_count() as u64 {
        return Err(Error::Param(alloc::format!(
            "h = {h} exceeds the {} vertices",
            s.vertex_count()
        )));
    }
    Ok(())
}

/// Exhaustive census when `C(2^n, h) <= budget`, otherwise `budget` random
/// h-subsets drawn from `seed`.
pub fn realizable_pattern_census(
    s: &StepUpColouring,
    h: usize,
    budget: u64,
    seed: u64,
) -> Result<Census> {
    check_h(s, h)?;
    let total = binom(s.vertex_count() as u64, h as u64);
    if total <= budget {
        return Ok(Census {
            h,
            patterns: census_range(s, h, 0, total),
            exhaustive: true,
            examined: total,
        });
    }
    let mut r = rng::rng(seed, stream::CENSUS);
    let mut patterns = BTreeSet::new();
    for _ in 0..budget {
        let t = rng::sample_subset(&mut r, s.vertex_count(), h);
        patterns.insert(s.pattern_unchecked(&t));
    }
    Ok(Census {
        h,
        patterns,
        exhaustive: false,
        examined: budget,
    })
}

/// Outcome of searching for a pattern that never occurs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AvoidedPattern {
    /// Absent from an exhaustive census: never occurs.
    Found(ColouredPattern),
    /// Absent from a sampled census only.
    Candidate(ColouredPattern),
    /// Every pattern occurs.
    AllRealized,
    /// Budget too small to examine anything, or the pattern space is too
    /// large to enumerate.
    Budget,
}

/// Largest pattern space (in edge slots) enumerated when looking for an
/// absent pattern.
const MAX_PATTERN_SLOTS: usize = 24;

/// The lexicographically first pattern (by colour index) missing from the
/// census.
pub fn find_avoided_pattern(
    s: &StepUpColouring,
    h: usize,
    budget: u64,
    seed: u64,
) -> Result<AvoidedPattern> {
    check_h(s, h)?;
    let slots = binom(h as u64, s.uniformity() as u64) as usize;
    if budget == 0 || slots > MAX_PATTERN_SLOTS {
        return Ok(AvoidedPattern::Budget);
    }
    let census = realizable_pattern_census(s, h, budget, seed)?;
    Ok(first_absent(&census, s.uniformity(), slots))
}

pub(crate) fn first_absent(census: &Census, uniformity: usize, slots: usize) -> AvoidedPattern {
    for index in 0..1u64 << slots {
        let p = ColouredPattern::from_index(census.h, uniformity, index);
        if !census.patterns.contains(&p) {
            return if census.exhaustive {
                AvoidedPattern::Found(p)
            } else {
                AvoidedPattern::Candidate(p)
            };
        }
    }
    AvoidedPattern::AllRealized
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{EdgeColouring, BLUE, RED};
    use crate::stepup::{count_bound_check, ordered_bell};
    use num_bigint::BigUint;

    #[test]
    fn tiny_census_is_exhaustive() {
        let base = EdgeColouring::constant(2, 2, 2, RED).unwrap();
        let s = StepUpColouring::new(base).unwrap();
        let c = realizable_pattern_census(&s, 3, 100, 0).unwrap();
        assert!(c.exhaustive);
        assert_eq!(c.examined, 4);
        // triples of 0..4: (0,1,2) δ=(1,2), (0,1,3) δ=(1,2), (0,2,3) δ=(2,1),
        // (1,2,3) δ=(2,1): all monotone, all red
        let expect: BTreeSet<_> = [ColouredPattern::from_colours(3, 3, &[RED]).unwrap()].into();
        assert_eq!(c.patterns, expect);
        assert_eq!(
            find_avoided_pattern(&s, 3, 100, 0).unwrap(),
            AvoidedPattern::Found(ColouredPattern::from_colours(3, 3, &[BLUE]).unwrap())
        );
    }

    #[test]
    fn sampled_census_is_deterministic() {
        let base = EdgeColouring::from_fn(2, 5, 2, 100, |t| ((t[0] + t[1]) % 2) as u8).unwrap();
        let s = StepUpColouring::new(base).unwrap();
        let a = realizable_pattern_census(&s, 5, 300, 9).unwrap();
        let b = realizable_pattern_census(&s, 5, 300, 9).unwrap();
        assert!(!a.exhaustive);
        assert_eq!(a, b);
        assert!(matches!(
            find_avoided_pattern(&s, 5, 300, 9).unwrap(),
            AvoidedPattern::Candidate(_)
        ));
    }

    #[test]
    fn census_respects_counting_bound() {
        let base = EdgeColouring::from_fn(2, 4, 2, 100, |t| ((t[0] * 3 + t[1]) % 2) as u8).unwrap();
        let s = StepUpColouring::new(base).unwrap();
        for h in 3..=5 {
            let c = realizable_pattern_census(&s, h, u64::MAX, 0).unwrap();
            let bound = ordered_bell(h as u32 - 1) << binom(h as u64 - 1, 2) as usize;
            assert!(BigUint::from(c.patterns.len()) <= bound, "h = {h}");
        }
        let _ = count_bound_check(5, 2).unwrap();
    }

    #[test]
    fn zero_budget() {
        let base = EdgeColouring::constant(2, 3, 2, RED).unwrap();
        let s = StepUpColouring::new(base).unwrap();
        assert_eq!(find_avoided_pattern(&s, 4, 0, 0).unwrap(), AvoidedPattern::Budget);
        assert!(find_avoided_pattern(&s, 2, 10, 0).is_err());
    }
}
