//! Seeded, splittable randomness.
//!
//! Every random path draws from ChaCha8 seeded with `seed_from_u64(seed)`
//! and switched to an explicit stream id, so two call sites sharing a seed
//! never share draws. Integers in `0..n` come from rejection sampling on
//! raw `next_u64` output; Bernoulli(p) for rational `p = num/den` accepts a
//! draw `x` iff `x * den < num * 2^64`. Nothing here depends on float
//! rounding, so streams are reproducible across platforms.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub type Rng = ChaCha8Rng;

/// Named streams used inside the crate.
pub mod stream {
    pub const RANDOM_GRAPH: u64 = 1;
    pub const RANDOM_COLOURING: u64 = 2;
    pub const CENSUS: u64 = 3;
    pub const BIDENSE: u64 = 4;
    pub const TRIDENSE: u64 = 5;
    pub const EMBED: u64 = 6;
    pub const INSTANCE: u64 = 7;
}

pub fn rng(seed: u64, stream: u64) -> Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Uniform integer in `0..n`; `n` must be positive.
pub fn below(rng: &mut Rng, n: u64) -> u64 {
    assert!(n > 0);
    let zone = u64::MAX - (u64::MAX - n + 1) % n;
    loop {
        let x = rng.next_u64();
        if x <= zone {
            return x % n;
        }
    }
}

/// True with probability `num / den` (`num <= den`).
pub fn bernoulli(rng: &mut Rng, num: u64, den: u64) -> bool {
    let x = rng.next_u64() as u128;
    x * (den as u128) < (num as u128) << 64
}

pub fn shuffle<T>(rng: &mut Rng, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = below(rng, i as u64 + 1) as usize;
        items.swap(i, j);
    }
}

/// Uniform `k`-subset of `0..n`, sorted (Floyd's algorithm).
pub fn sample_subset(rng: &mut Rng, n: u32, k: usize) -> Vec<u32> {
    assert!(k as u64 <= n as u64);
    let mut set = BTreeSet::new();
    for j in (n - k as u32)..n {
        let t = below(rng, j as u64 + 1) as u32;
        if !set.insert(t) {
            set.insert(j);
        }
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_independent_and_reproducible() {
        let a: Vec<u64> = (0..4).map(|_| 0).scan(rng(5, 1), |r, _| Some(r.next_u64())).collect();
        let b: Vec<u64> = (0..4).map(|_| 0).scan(rng(5, 1), |r, _| Some(r.next_u64())).collect();
        let c: Vec<u64> = (0..4).map(|_| 0).scan(rng(5, 2), |r, _| Some(r.next_u64())).collect();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn bernoulli_extremes() {
        let mut r = rng(1, 0);
        assert!((0..100).all(|_| bernoulli(&mut r, 1, 1)));
        assert!((0..100).all(|_| !bernoulli(&mut r, 0, 1)));
    }

    #[test]
    fn subsets_are_sorted_and_in_range() {
        let mut r = rng(9, 0);
        for _ in 0..50 {
            let s = sample_subset(&mut r, 20, 7);
            assert_eq!(s.len(), 7);
            assert!(s.windows(2).all(|w| w[0] < w[1]));
            assert!(s.iter().all(|&v| v < 20));
        }
        assert_eq!(sample_subset(&mut r, 5, 5), [0, 1, 2, 3, 4]);
    }
}
