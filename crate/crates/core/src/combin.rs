//! Binomials, lexicographic subset enumeration, colex ranking and a small
//! fixed-width bitset.

use alloc::vec;
use alloc::vec::Vec;

/// `C(n, k)` with saturation at `u64::MAX`.
pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Pascal table of `C(i, j)` for `i <= n`, `j <= k`, saturating.
#[derive(Clone, Debug)]
pub struct BinomTable {
    k: usize,
    rows: Vec<u64>,
}

impl BinomTable {
    pub fn new(n: usize, k: usize) -> Self {
        let w = k + 1;
        let mut rows = vec![0u64; (n + 1) * w];
        for i in 0..=n {
            rows[i * w] = 1;
            for j in 1..=k.min(i) {
                let a = rows[(i - 1) * w + j - 1];
                let b = if j <= i - 1 { rows[(i - 1) * w + j] } else { 0 };
                rows[i * w + j] = a.saturating_add(b);
            }
        }
        BinomTable { k, rows }
    }

    #[inline]
    pub fn get(&self, n: usize, k: usize) -> u64 {
        if k > self.k || k > n {
            return 0;
        }
        self.rows[n * (self.k + 1) + k]
    }

    /// Colex rank of a strictly increasing tuple: `sum C(v_i, i + 1)`.
    #[inline]
    pub fn colex_rank(&self, tuple: &[u32]) -> u64 {
        tuple
            .iter()
            .enumerate()
            .map(|(i, &v)| self.get(v as usize, i + 1))
            .sum()
    }
}

/// Advances `c` (a strictly increasing `k`-subset of `0..n`) to the next
/// subset in lexicographic order. Returns `false` after the last one.
pub fn next_combination(c: &mut [u32], n: u32) -> bool {
    let k = c.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - (k - i) as u32 {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Iterator over all `k`-subsets of `0..n` in lexicographic order.
pub struct Combinations {
    n: u32,
    cur: Vec<u32>,
    started: bool,
    done: bool,
}

impl Combinations {
    pub fn new(n: u32, k: usize) -> Self {
        let done = k as u64 > n as u64;
        Combinations {
            n,
            cur: (0..k as u32).collect(),
            started: false,
            done,
        }
    }

    /// Starts at the subset of lexicographic rank `rank`.
    pub fn starting_at(n: u32, k: usize, rank: u64) -> Self {
        let total = binom(n as u64, k as u64);
        if rank >= total || k as u64 > n as u64 {
            return Combinations {
                n,
                cur: Vec::new(),
                started: true,
                done: true,
            };
        }
        Combinations {
            n,
            cur: lex_unrank(n, k, rank),
            started: false,
            done: false,
        }
    }

    /// Lends the current subset without allocating; `None` when exhausted.
    pub fn next_ref(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if self.started {
            if !next_combination(&mut self.cur, self.n) {
                self.done = true;
                return None;
            }
        } else {
            self.started = true;
        }
        Some(&self.cur)
    }
}

impl Iterator for Combinations {
    type Item = Vec<u32>;
    fn next(&mut self) -> Option<Vec<u32>> {
        self.next_ref().map(|c| c.to_vec())
    }
}

/// The `k`-subset of `0..n` at lexicographic position `rank`.
pub fn lex_unrank(n: u32, k: usize, mut rank: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(k);
    let mut x = 0u32;
    for i in 0..k {
        loop {
            // subsets starting with x at position i
            let cnt = binom((n - x - 1) as u64, (k - i - 1) as u64);
            if rank < cnt {
                break;
            }
            rank -= cnt;
            x += 1;
        }
        out.push(x);
        x += 1;
    }
    out
}

/// Lexicographic rank of a strictly increasing `k`-subset of `0..n`.
pub fn lex_rank(n: u32, subset: &[u32]) -> u64 {
    let k = subset.len();
    let mut rank = 0u64;
    let mut x = 0u32;
    for (i, &v) in subset.iter().enumerate() {
        while x < v {
            rank += binom((n - x - 1) as u64, (k - i - 1) as u64);
            x += 1;
        }
        x = v + 1;
    }
    rank
}

/// Dense bitset over `0..len`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Self::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i >> 6] &= !(1 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(16, 5), 4368);
        assert_eq!(binom(3, 5), 0);
        assert_eq!(binom(0, 0), 1);
        let t = BinomTable::new(40, 5);
        for n in 0..=40u64 {
            for k in 0..=5u64 {
                assert_eq!(t.get(n as usize, k as usize), binom(n, k));
            }
        }
    }

    #[test]
    fn lex_order_and_ranks() {
        let all: Vec<_> = Combinations::new(5, 3).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(all[0], [0, 1, 2]);
        assert_eq!(all[9], [2, 3, 4]);
        for (r, c) in all.iter().enumerate() {
            assert_eq!(lex_rank(5, c), r as u64);
            assert_eq!(&lex_unrank(5, 3, r as u64), c);
        }
        let tail: Vec<_> = Combinations::starting_at(5, 3, 7).collect();
        assert_eq!(tail, all[7..].to_vec());
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn colex_is_bijective() {
        let t = BinomTable::new(7, 3);
        let mut seen = vec![false; 35];
        for c in Combinations::new(7, 3) {
            let r = t.colex_rank(&c) as usize;
            assert!(!seen[r]);
            seen[r] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn bitset_basics() {
        let mut b = BitSet::new(130);
        b.insert(0);
        b.insert(64);
        b.insert(129);
        assert_eq!(b.count(), 3);
        assert_eq!(b.to_vec(), [0, 64, 129]);
        b.remove(64);
        assert!(!b.contains(64));
        let f = BitSet::full(130);
        assert_eq!(f.intersection_count(&b), 2);
    }
}
