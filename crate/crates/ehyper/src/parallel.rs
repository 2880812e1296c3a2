//! Threaded drivers over lexicographic subset ranges.
//!
//! Work is cut into contiguous rank ranges and results are merged in range
//! order, so every answer is independent of the thread count.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};

use ehyper_core::combin::binom;
use ehyper_core::extraction::{kst_exact_range, KstWitness};
use ehyper_core::stepup::{census_range, Census, ColouredPattern, StepUpColouring};
use ehyper_core::{BipartiteGraph, Error, Result, TupleColouring};

/// Splits `0..total` into at most `parts` contiguous ranges of near-equal
/// length.
pub fn split_ranges(total: u64, parts: usize) -> Vec<(u64, u64)> {
    let parts = (parts.max(1) as u64).min(total.max(1));
    let base = total / parts;
    let extra = total % parts;
    let mut out = Vec::with_capacity(parts as usize);
    let mut start = 0;
    for i in 0..parts {
        let len = base + u64::from(i < extra);
        out.push((start, start + len));
        start += len;
    }
    out
}

/// `f` over `items` on `threads` workers; output order follows `items`.
pub fn par_map<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let threads = threads.max(1).min(items.len().max(1));
    if threads == 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<R>> = Vec::with_capacity(items.len());
    slots.resize_with(items.len(), || None);
    let done: Vec<Vec<(usize, R)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|_| {
                scope.spawn(|| {
                    let mut local = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= items.len() {
                            break;
                        }
                        local.push((i, f(&items[i])));
                    }
                    local
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    for (i, r) in done.into_iter().flatten() {
        slots[i] = Some(r);
    }
    slots.into_iter().map(|r| r.expect("every index visited")).collect()
}

/// Number of rank ranges handed out per thread, to even out load.
const CHUNKS_PER_THREAD: usize = 4;

/// Exact `K_{s,t}` search split over rank ranges of the `s`-subsets of `A`.
/// Same answer as the sequential exact mode: largest `|T|`, earliest rank.
pub fn kst_exact_par(g: &BipartiteGraph, s: usize, threads: usize) -> Result<KstWitness> {
    let a = g.a().len();
    if s == 0 || s > a {
        return Err(Error::Param(format!("need 1 <= s <= |A| = {a}, got {s}")));
    }
    let total = binom(a as u64, s as u64);
    let ranges = split_ranges(total, threads * CHUNKS_PER_THREAD);
    let found = par_map(&ranges, threads, |&(lo, hi)| kst_exact_range(g, s, lo, hi));
    let mut best: Option<(usize, Vec<u32>)> = None;
    for r in found.into_iter().flatten() {
        if best.as_ref().map_or(true, |b| r.0 > b.0) {
            best = Some(r);
        }
    }
    let (_, idx) = best.ok_or_else(|| Error::Param("no s-subsets to search".into()))?;
    let u: Vec<u32> = idx.iter().map(|&i| g.a()[i as usize]).collect();
    let t: Vec<u32> = g.b().iter().copied().filter(|&y| u.iter().all(|&x| g.has_edge(x, y))).collect();
    KstWitness::new(g, u, t)
}

/// Exhaustive pattern census over all `h`-subsets, split over rank ranges.
pub fn census_par(s: &StepUpColouring, h: usize, threads: usize) -> Census {
    let total = binom(s.vertex_count() as u64, h as u64);
    let ranges = split_ranges(total, threads * CHUNKS_PER_THREAD);
    let parts = par_map(&ranges, threads, |&(lo, hi)| census_range(s, h, lo, hi));
    let patterns: BTreeSet<ColouredPattern> = parts.into_iter().flatten().collect();
    Census {
        h,
        patterns,
        exhaustive: true,
        examined: total,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ehyper_core::constructions::random_colouring;
    use ehyper_core::extraction::{find_kst_dense, KstMode};
    use ehyper_core::rng;
    use ehyper_core::stepup::realizable_pattern_census;
    use ehyper_core::SearchBudget;

    #[test]
    fn ranges_cover_exactly() {
        for total in [0u64, 1, 7, 100] {
            for parts in [1, 3, 8, 200] {
                let r = split_ranges(total, parts);
                assert_eq!(r.first().unwrap().0, 0);
                assert_eq!(r.last().unwrap().1, total);
                assert!(r.windows(2).all(|w| w[0].1 == w[1].0));
            }
        }
    }

    #[test]
    fn par_map_keeps_order() {
        let v: Vec<u64> = (0..50).collect();
        assert_eq!(par_map(&v, 7, |x| x * x), v.iter().map(|x| x * x).collect::<Vec<_>>());
    }

    #[test]
    fn parallel_kst_matches_sequential() {
        for seed in 0..20 {
            let mut r = rng::rng(seed, rng::stream::INSTANCE);
            let edges: Vec<(u32, u32)> = (0..9u32)
                .flat_map(|x| (9..25u32).map(move |y| (x, y)))
                .filter(|_| rng::bernoulli(&mut r, 1, 2))
                .collect();
            let g = BipartiteGraph::with_ranges(9, 16, edges).unwrap();
            let seq = find_kst_dense(&g, 3, KstMode::Exact, &SearchBudget::unlimited()).unwrap();
            for threads in [1, 3, 8] {
                assert_eq!(kst_exact_par(&g, 3, threads).unwrap(), seq);
            }
        }
    }

    #[test]
    fn parallel_census_matches_sequential() {
        let base = random_colouring(3, 4, 2, 11, 1 << 20).unwrap();
        let s = StepUpColouring::new(base).unwrap();
        let seq = realizable_pattern_census(&s, 5, u64::MAX, 0).unwrap();
        assert_eq!(census_par(&s, 5, 4), seq);
    }
}
