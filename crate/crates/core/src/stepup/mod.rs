//! Step-up colourings.
//!
//! The ground set is `T = {0,1}^n`. A [`LabelVector`] `(γ_1, …, γ_n)` is
//! identified with the integer `b = Σ γ_i 2^(i-1)`, and that integer is its
//! public vertex id, so id order is the step-up order on `T`. Coordinates
//! and δ values are 1-based; base colouring vertex `v` stands for δ value
//! `v + 1`.
//!
//! Given a red/blue colouring of the k-subsets of `{1..n}`, a sorted
//! `(k+1)`-tuple `ε_1 < … < ε_{k+1}` gets the colour of `{δ_1..δ_k}` when
//! its δ-sequence is monotone, otherwise blue if the first local extremum
//! is a maximum and red if it is a minimum.

mod census;
mod clique;
mod counting;

pub use census::{
    census_range, find_avoided_pattern, realizable_pattern_census, AvoidedPattern, Census,
};
pub use clique::{max_mono_clique, stepping_up_verify, CliqueResult, SteppingUpReport};
pub use counting::{count_bound_check, ordered_bell, ordered_bell_verified, BoundCheck};

use alloc::format;
use alloc::vec::Vec;

use crate::colouring::{EdgeColouring, BLUE, RED};
use crate::combin::{binom, Combinations};
use crate::error::{Error, Result};
use crate::hypergraph::TupleColouring;

/// Largest supported step-up dimension (ids must fit in `u32`).
pub const MAX_DIMENSION: u32 = 24;

/// A binary vector of length `n`, stored as its value `b(ε)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LabelVector {
    value: u32,
    len: u8,
}

impl LabelVector {
    pub fn from_value(value: u32, len: u32) -> Result<Self> {
        if len == 0 || len > MAX_DIMENSION || (value as u64) >= 1u64 << len {
            return Err(Error::Param(format!("value {value} does not fit {len} bits")));
        }
        Ok(LabelVector {
            value,
            len: len as u8,
        })
    }

    /// From `(γ_1, …, γ_n)`.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut value = 0u32;
        for (i, &g) in bits.iter().enumerate() {
            match g {
                0 => {}
                1 => value |= 1 << i,
                _ => return Err(Error::Param(format!("coordinate {g} is not binary"))),
            }
        }
        Self::from_value(value, bits.len() as u32)
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn len(&self) -> u32 {
        self.len as u32
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `γ_i`, 1-based.
    pub fn coordinate(&self, i: u32) -> u8 {
        (self.value >> (i - 1) & 1) as u8
    }
}

#[inline]
fn delta_raw(a: u32, b: u32) -> u32 {
    32 - (a ^ b).leading_zeros()
}

/// Largest coordinate at which two label vectors differ (1-based).
pub fn delta(e: &LabelVector, f: &LabelVector) -> Result<u32> {
    if e.len != f.len {
        return Err(Error::Param("label vectors of different lengths".into()));
    }
    if e.value == f.value {
        return Err(Error::EqualLabels);
    }
    Ok(delta_raw(e.value, f.value))
}

/// Step-up order: `e < f` iff `γ_i(e) = 0` at `i = δ(e, f)`.
pub fn compare(e: &LabelVector, f: &LabelVector) -> Result<core::cmp::Ordering> {
    let i = delta(e, f)?;
    Ok(if e.coordinate(i) == 0 {
        core::cmp::Ordering::Less
    } else {
        core::cmp::Ordering::Greater
    })
}

/// Consecutive δ values of a strictly increasing tuple of ids.
pub fn delta_sequence(tuple: &[u32]) -> Result<DeltaSequence> {
    for w in tuple.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::BadTuple(format!("{tuple:?}")));
        }
    }
    DeltaSequence::new(tuple.windows(2).map(|w| delta_raw(w[0], w[1])).collect())
}

/// `δ_{i,j}` (1-based `i < j`) for a strictly increasing tuple, computed
/// directly and as the running maximum of consecutive δs; the two must
/// agree.
pub fn delta_ij(tuple: &[u32], i: usize, j: usize) -> Result<u32> {
    if i == 0 || i >= j || j > tuple.len() {
        return Err(Error::Index(format!("({i}, {j}) for a tuple of length {}", tuple.len())));
    }
    let seq = delta_sequence(tuple)?;
    let direct = delta_raw(tuple[i - 1], tuple[j - 1]);
    let running = seq.values()[i - 1..j - 1].iter().copied().max().unwrap_or(0);
    if direct != running {
        return Err(Error::Unverified(format!(
            "delta({i},{j}) = {direct} but running max = {running}"
        )));
    }
    Ok(direct)
}

/// δ_1..δ_{h-1}; adjacent entries always differ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeltaSequence(Vec<u32>);

impl DeltaSequence {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if let Some(w) = values.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Param(format!("adjacent equal δ values {}", w[0])));
        }
        if values.contains(&0) {
            return Err(Error::Param("δ values are 1-based".into()));
        }
        Ok(DeltaSequence(values))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }
}

/// Canonical rank vector of a total preorder: ranks run over `1..=t`, ties
/// share a rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotalPreorder(pub Vec<u32>);

impl TotalPreorder {
    pub fn ranks(&self) -> &[u32] {
        &self.0
    }

    /// Number of classes.
    pub fn classes(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

/// Total preorder induced by a sequence of integers.
pub fn preorder_of(values: &[u32]) -> TotalPreorder {
    let mut distinct = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    TotalPreorder(
        values
            .iter()
            .map(|v| distinct.binary_search(v).expect("present") as u32 + 1)
            .collect(),
    )
}

/// Which colour a first local maximum gets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ExtremumRule {
    MaxBlue,
    MaxRed,
}

/// The derived `(k+1)`-uniform colouring on `2^n` vertices.
#[derive(Clone, Debug)]
pub struct StepUpColouring {
    base: EdgeColouring,
    n: u32,
    k: usize,
    rule: ExtremumRule,
}

impl StepUpColouring {
    /// `base` must be a 2-colouring of the k-subsets of `n` vertices.
    pub fn new(base: EdgeColouring) -> Result<Self> {
        let n = base.vertex_count();
        let k = base.uniformity();
        if base.colour_count() != 2 {
            return Err(Error::Param("step-up base must be 2-coloured".into()));
        }
        if n > MAX_DIMENSION {
            return Err(Error::Param(format!("dimension {n} exceeds {MAX_DIMENSION}")));
        }
        Ok(StepUpColouring {
            base,
            n,
            k,
            rule: ExtremumRule::MaxBlue,
        })
    }

    /// The colouring with the local-maximum and local-minimum colours
    /// swapped. Only useful for checking that test harnesses notice a wrong
    /// rule.
    #[doc(hidden)]
    pub fn with_swapped_extrema(mut self) -> Self {
        self.rule = ExtremumRule::MaxRed;
        self
    }

    pub fn base(&self) -> &EdgeColouring {
        &self.base
    }

    /// Base dimension `n`.
    pub fn dimension(&self) -> u32 {
        self.n
    }

    /// Base uniformity `k`; the derived colouring is `(k+1)`-uniform.
    pub fn base_uniformity(&self) -> usize {
        self.k
    }

    /// Colour of a `(k+1)`-set of ids in any order, with validation.
    pub fn stepup_colour(&self, tuple: &[u32]) -> Result<u8> {
        if tuple.len() != self.k + 1 {
            return Err(Error::BadTuple(format!(
                "{tuple:?} has length {}, want {}",
                tuple.len(),
                self.k + 1
            )));
        }
        let mut t = tuple.to_vec();
        t.sort_unstable();
        for w in t.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0] as u64));
            }
        }
        let size = 1u64 << self.n;
        if let Some(&v) = t.last().filter(|&&v| v as u64 >= size) {
            return Err(Error::VertexOutOfRange {
                vertex: v as u64,
                n: size,
            });
        }
        Ok(self.colour(&t))
    }

    /// Colour from a δ-sequence of length k.
    fn colour_of_deltas(&self, d: &[u32]) -> u8 {
        for j in 1..d.len().saturating_sub(1) {
            let (a, b, c) = (d[j - 1], d[j], d[j + 1]);
            if a < b && b > c {
                return match self.rule {
                    ExtremumRule::MaxBlue => BLUE,
                    ExtremumRule::MaxRed => RED,
                };
            }
            if a > b && b < c {
                return match self.rule {
                    ExtremumRule::MaxBlue => RED,
                    ExtremumRule::MaxRed => BLUE,
                };
            }
        }
        // no local extremum and adjacent values differ: strictly monotone
        let mut set = [0u32; crate::hypergraph::MAX_UNIFORMITY];
        let s = &mut set[..d.len()];
        for (slot, &v) in s.iter_mut().zip(d) {
            *slot = v - 1;
        }
        s.sort_unstable();
        debug_assert!(s.windows(2).all(|w| w[0] < w[1]));
        self.base.colour(s)
    }

    /// The coloured pattern induced on a strictly increasing `h`-tuple.
    pub fn pattern_of(&self, tuple: &[u32]) -> Result<ColouredPattern> {
        let u = self.k + 1;
        if tuple.len() < u {
            return Err(Error::Param(format!(
                "pattern needs at least {u} vertices, got {}",
                tuple.len()
            )));
        }
        for w in tuple.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::BadTuple(format!("{tuple:?}")));
            }
        }
        Ok(self.pattern_unchecked(tuple))
    }

    pub(crate) fn pattern_unchecked(&self, tuple: &[u32]) -> ColouredPattern {
        let u = self.k + 1;
        let h = tuple.len();
        let mut p = ColouredPattern::blank(h, u);
        let mut img = [0u32; crate::hypergraph::MAX_UNIFORMITY];
        let mut it = Combinations::new(h as u32, u);
        let mut idx = 0;
        while let Some(c) = it.next_ref() {
            for (slot, &i) in img.iter_mut().zip(c) {
                *slot = tuple[i as usize];
            }
            if self.colour(&img[..u]) == BLUE {
                p.set(idx);
            }
            idx += 1;
        }
        p
    }
}

impl TupleColouring for StepUpColouring {
    fn uniformity(&self) -> usize {
        self.k + 1
    }
    fn vertex_count(&self) -> u32 {
        1 << self.n
    }
    fn colour_count(&self) -> u8 {
        2
    }
    fn colour(&self, tuple: &[u32]) -> u8 {
        let mut d = [0u32; crate::hypergraph::MAX_UNIFORMITY];
        for (slot, w) in d.iter_mut().zip(tuple.windows(2)) {
            *slot = delta_raw(w[0], w[1]);
        }
        self.colour_of_deltas(&d[..tuple.len() - 1])
    }
}

/// A 2-colouring of all `u`-subsets of `0..h` (positions in order); bit set
/// means blue. Bits are indexed by lexicographic rank of the subset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColouredPattern {
    h: usize,
    uniformity: usize,
    bits: Vec<u64>,
}

impl ColouredPattern {
    pub fn blank(h: usize, uniformity: usize) -> Self {
        let len = binom(h as u64, uniformity as u64) as usize;
        ColouredPattern {
            h,
            uniformity,
            bits: alloc::vec![0; len.div_ceil(64)],
        }
    }

    /// The pattern whose lexicographic colour vector is the binary expansion
    /// of `index` (bit `i` = colour of the i-th subset).
    pub fn from_index(h: usize, uniformity: usize, index: u64) -> Self {
        let mut p = Self::blank(h, uniformity);
        for i in 0..p.edge_slots().min(64) {
            if index >> i & 1 == 1 {
                p.set(i);
            }
        }
        p
    }

    /// Builds from colours listed in lexicographic order of subsets.
    pub fn from_colours(h: usize, uniformity: usize, colours: &[u8]) -> Result<Self> {
        let mut p = Self::blank(h, uniformity);
        if colours.len() != p.edge_slots() {
            return Err(Error::Param("wrong number of pattern colours".into()));
        }
        for (i, &c) in colours.iter().enumerate() {
            match c {
                RED => {}
                BLUE => p.set(i),
                other => return Err(Error::ColourOutOfRange { colour: other, count: 2 }),
            }
        }
        Ok(p)
    }

    fn set(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn vertex_count(&self) -> usize {
        self.h
    }

    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    /// Number of `u`-subsets.
    pub fn edge_slots(&self) -> usize {
        binom(self.h as u64, self.uniformity as u64) as usize
    }

    /// Colour of the `i`-th subset in lexicographic order.
    pub fn colour_at(&self, i: usize) -> u8 {
        (self.bits[i / 64] >> (i % 64) & 1) as u8
    }

    pub fn colours(&self) -> Vec<u8> {
        (0..self.edge_slots()).map(|i| self.colour_at(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::EdgeColouring;
    use alloc::vec;
    use proptest::prelude::*;

    fn lv(bits: &[u8]) -> LabelVector {
        LabelVector::from_bits(bits).unwrap()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&lv(&[0, 1, 0]), &lv(&[0, 1, 1])).unwrap(), 3);
        assert_eq!(delta(&lv(&[0, 0, 0]), &lv(&[1, 0, 0])).unwrap(), 1);
        assert_eq!(delta(&lv(&[1, 0, 1]), &lv(&[0, 1, 1])).unwrap(), 2);
        assert_eq!(delta(&lv(&[1, 0, 1]), &lv(&[1, 0, 1])), Err(Error::EqualLabels));
    }

    #[test]
    fn compare_examples() {
        use core::cmp::Ordering::Less;
        assert_eq!(lv(&[0, 1, 0]).value(), 2);
        assert_eq!(compare(&lv(&[0, 1, 0]), &lv(&[0, 1, 1])).unwrap(), Less);
        assert_eq!(compare(&lv(&[1, 0, 1]), &lv(&[0, 1, 1])).unwrap(), Less);
        assert_eq!(compare(&lv(&[1, 1, 0]), &lv(&[0, 0, 1])).unwrap(), Less);
    }

    #[test]
    fn delta_ij_examples() {
        // (000, 100, 010, 110)
        let t = [0, 1, 2, 3];
        assert_eq!(delta_sequence(&t).unwrap().values(), [1, 2, 1]);
        assert_eq!(delta_ij(&t, 1, 3).unwrap(), 2);
        assert_eq!(delta_ij(&t, 1, 4).unwrap(), 2);
        assert_eq!(delta_ij(&t, 2, 4).unwrap(), 2);
        assert!(matches!(delta_ij(&t, 3, 5), Err(Error::Index(_))));
    }

    #[test]
    fn stepup_colour_examples() {
        // k = 2, n = 2, base colour of {1,2} is red
        let base = EdgeColouring::constant(2, 2, 2, RED).unwrap();
        let s = StepUpColouring::new(base).unwrap();
        assert_eq!(s.stepup_colour(&[0, 1, 2]).unwrap(), RED);

        // k = 3, n = 3: (000,100,010,110) has δ = (1,2,1), local max
        let base = EdgeColouring::constant(3, 3, 2, RED).unwrap();
        let s = StepUpColouring::new(base).unwrap();
        assert_eq!(s.stepup_colour(&[0, 1, 2, 3]).unwrap(), BLUE);
        // (000,010,110,001): b = 0,2,3,4, δ = (2,1,3), local min
        assert_eq!(delta_sequence(&[0, 2, 3, 4]).unwrap().values(), [2, 1, 3]);
        assert_eq!(s.stepup_colour(&[0, 2, 3, 4]).unwrap(), RED);
        assert_eq!(s.stepup_colour(&[4, 3, 0, 2]).unwrap(), RED);
        assert!(matches!(s.stepup_colour(&[0, 0, 1, 2]), Err(Error::DuplicateVertex(0))));
        assert!(s.stepup_colour(&[0, 1, 2, 8]).is_err());
        assert!(s.stepup_colour(&[0, 1, 2]).is_err());
    }

    #[test]
    fn monotone_tuples_use_base_colour() {
        // base: only {1,2,3} (ids 0,1,2) blue
        let base = EdgeColouring::from_fn(3, 4, 2, 100, |t| (t == [0, 1, 2]) as u8).unwrap();
        let s = StepUpColouring::new(base).unwrap();
        // b = 0,1,2,4: δ = (1,2,3) increasing -> colour of {1,2,3}
        assert_eq!(s.stepup_colour(&[0, 1, 2, 4]).unwrap(), BLUE);
        // b = 0,1,2,8: δ = (1,2,4) -> colour of {1,2,4}
        assert_eq!(s.stepup_colour(&[0, 1, 2, 8]).unwrap(), RED);
        // b = 0,4,6,7: δ = (3,2,1) decreasing -> colour of {1,2,3}
        assert_eq!(s.stepup_colour(&[0, 4, 6, 7]).unwrap(), BLUE);
    }

    #[test]
    fn preorder_examples() {
        assert_eq!(preorder_of(&[1, 2, 1]).ranks(), [1, 2, 1]);
        assert_eq!(preorder_of(&[5, 9, 5]).ranks(), [1, 2, 1]);
        assert_eq!(preorder_of(&[2, 1, 3]).ranks(), [2, 1, 3]);
        assert_eq!(preorder_of(&[]).ranks(), [] as [u32; 0]);
    }

    #[test]
    fn pattern_examples() {
        let base = EdgeColouring::constant(3, 4, 2, RED).unwrap();
        let s = StepUpColouring::new(base).unwrap();
        let p = s.pattern_of(&[0, 1, 2, 3]).unwrap();
        assert_eq!(p.colours(), vec![s.stepup_colour(&[0, 1, 2, 3]).unwrap()]);
        // b = 0,1,2,4,8: consecutive δ = (1,2,3,4); check edge by edge
        let t = [0u32, 1, 2, 4, 8];
        let p = s.pattern_of(&t).unwrap();
        for (i, c) in Combinations::new(5, 4).enumerate() {
            let tuple: Vec<u32> = c.iter().map(|&j| t[j as usize]).collect();
            let d = delta_sequence(&tuple).unwrap();
            let v = d.values();
            let monotone = v.windows(2).all(|w| w[0] < w[1]) || v.windows(2).all(|w| w[0] > w[1]);
            let expect = if monotone {
                RED
            } else if v[0] < v[1] {
                BLUE
            } else {
                RED
            };
            assert_eq!(p.colour_at(i), expect, "tuple {tuple:?} δ {v:?}");
        }
        assert!(s.pattern_of(&[0, 1, 2]).is_err());
        assert!(s.pattern_of(&[0, 2, 1, 3]).is_err());
    }

    proptest! {
        #[test]
        fn compare_agrees_with_value_order(n in 1u32..12, a in any::<u32>(), b in any::<u32>()) {
            let mask = (1u32 << n) - 1;
            let (a, b) = (a & mask, b & mask);
            prop_assume!(a != b);
            let ea = LabelVector::from_value(a, n).unwrap();
            let eb = LabelVector::from_value(b, n).unwrap();
            prop_assert_eq!(compare(&ea, &eb).unwrap(), a.cmp(&b));
            prop_assert_eq!(compare(&eb, &ea).unwrap(), b.cmp(&a));
        }

        #[test]
        fn preorder_is_order_isomorphism_invariant(v in proptest::collection::vec(0u32..6, 0..8)) {
            let scaled: Vec<u32> = v.iter().map(|x| 3 * x + 11).collect();
            prop_assert_eq!(preorder_of(&v), preorder_of(&scaled));
            let p = preorder_of(&v);
            let t = p.classes();
            for r in 1..=t {
                prop_assert!(p.ranks().contains(&r));
            }
        }
    }
}
