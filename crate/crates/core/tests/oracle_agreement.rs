use ehyper_core::bipartite::transversals_all;
use ehyper_core::combin::Combinations;
use ehyper_core::constructions::{lift, pair_determination_check, random_colouring, random_graph};
use ehyper_core::density::{
    embed, is_bidense, is_induced_copy, verify_certificate, BiDensity, DensityMode, EmbedOptions, EmbedOutcome,
};
use ehyper_core::extraction::{find_ksss, find_kst_dense, KsssOverrides, KstMode};
use ehyper_core::oracles::{self, enumerate_preorders, max_kst_bf, naive_stepup_colour};
use ehyper_core::rational::{self, Rational};
use ehyper_core::stepup::{delta_sequence, max_mono_clique, ordered_bell, StepUpColouring};
use ehyper_core::{BipartiteGraph, EdgeColouring, SearchBudget, TripartiteSystem, TupleColouring, UniformHypergraph};
use proptest::prelude::*;

fn bipartite(a: u32, b: u32, bits: &[bool]) -> BipartiteGraph {
    let edges = (0..a)
        .flat_map(|x| (0..b).map(move |y| (x, y)))
        .filter(|&(x, y)| bits[(x * b + y) as usize % bits.len()])
        .map(|(x, y)| (x, a + y));
    BipartiteGraph::with_ranges(a, b, edges).unwrap()
}

fn subsets(items: &[u32], min: usize) -> Vec<Vec<u32>> {
    (0u32..1 << items.len())
        .filter(|m| m.count_ones() as usize >= min)
        .map(|m| (0..items.len()).filter(|i| m >> i & 1 == 1).map(|i| items[i]).collect())
        .collect()
}

/// Some pair of large enough sets has density below ρ.
fn bidense_violated(g: &BipartiteGraph, eps: &Rational, rho: &Rational) -> bool {
    let floor = |n: usize| (rational::ceil_mul_u64(eps, n as u64) as usize).max(1);
    let (m1, m2) = (floor(g.a().len()), floor(g.b().len()));
    let ys = subsets(g.b(), m2);
    subsets(g.a(), m1).iter().any(|x| {
        ys.iter().any(|y| {
            let e = x.iter().flat_map(|&u| y.iter().map(move |&v| (u, v))).filter(|&(u, v)| g.has_edge(u, v)).count();
            rational::from_int(e as u64) < rho * rational::from_int((x.len() * y.len()) as u64)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn stepup_matches_bitwise_rule(seed in 0u64..1000, n in 3u32..6) {
        let base = random_colouring(3, n, 2, seed, 1 << 16).unwrap();
        let s = StepUpColouring::new(base.clone()).unwrap();
        for t in Combinations::new(1 << n, 4) {
            prop_assert_eq!(s.colour(&t), naive_stepup_colour(&base, n, &t));
        }
    }

    #[test]
    fn delta_sequence_is_highest_differing_bit(t in proptest::collection::btree_set(0u32..64, 2..7)) {
        let t: Vec<u32> = t.into_iter().collect();
        let d = delta_sequence(&t).unwrap();
        for (i, w) in t.windows(2).enumerate() {
            prop_assert_eq!(d.values()[i], 32 - (w[0] ^ w[1]).leading_zeros());
        }
    }

    #[test]
    fn clique_search_matches_brute_force(seed in 0u64..1000, n in 4u32..9, colour in 0u8..2) {
        let c = random_colouring(3, n, 2, seed, 1 << 16).unwrap();
        let fast = max_mono_clique(&c, colour, &SearchBudget::unlimited()).unwrap();
        let slow = oracles::max_mono_clique_bf(&c, colour, &SearchBudget::unlimited());
        prop_assert_eq!(fast.size, slow.size);
        prop_assert!(!fast.incomplete);
    }

    #[test]
    fn exact_kst_is_optimal(a in 2u32..8, b in 1u32..12, s in 1usize..4, bits in proptest::collection::vec(any::<bool>(), 1..97)) {
        let g = bipartite(a, b, &bits);
        prop_assume!(s <= a as usize);
        let w = find_kst_dense(&g, s, KstMode::Exact, &SearchBudget::unlimited()).unwrap();
        prop_assert!(w.verify(&g));
        let (_, t) = max_kst_bf(&g, s).unwrap();
        prop_assert_eq!(w.t.len(), t.len());
    }

    #[test]
    fn bidensity_matches_brute_force(
        a in 1u32..6, b in 1u32..6,
        bits in proptest::collection::vec(any::<bool>(), 1..37),
        e in 1i64..5, r in 1i64..5,
    ) {
        let g = bipartite(a, b, &bits);
        let (eps, rho) = (rational::ratio(e, 4), rational::ratio(r, 5));
        let res = is_bidense(&g, &eps, &rho, DensityMode::Exact).unwrap();
        prop_assert_eq!(matches!(res, BiDensity::Sparse(_)), bidense_violated(&g, &eps, &rho));
        if let BiDensity::Sparse(w) = res {
            prop_assert!(w.verify(&g, &eps, &rho).unwrap());
        }
    }

    #[test]
    fn lift_pairs_are_determined(seed in 0u64..500, n in 3u32..10) {
        let base = random_graph(n, &rational::ratio(1, 2), seed).unwrap();
        let l = lift(&base, n).unwrap();
        prop_assert!(l.verify());
        let all: Vec<u32> = (0..n).collect();
        for x in subsets(&all, 3).into_iter().filter(|x| x.len() <= 5) {
            prop_assert!(pair_determination_check(&l.lifted, &x).unwrap());
        }
    }

    #[test]
    fn embedding_outcomes_verify(seed in 0u64..300, n in 8u32..22) {
        let host = EdgeColouring::from_hypergraph(&lift(&random_graph(n, &rational::ratio(1, 2), seed).unwrap(), n).unwrap().lifted);
        let pattern = EdgeColouring::from_hypergraph(&UniformHypergraph::new(3, 4, [[0, 1, 2]]).unwrap());
        let opts = EmbedOptions { seed, ..EmbedOptions::default() };
        let rep = embed(&pattern, &host, &rational::ratio(1, 5), opts).unwrap();
        match rep.outcome {
            EmbedOutcome::Embedded(f) => prop_assert!(is_induced_copy(&pattern, &host, &f)),
            EmbedOutcome::Failed(c) => prop_assert!(verify_certificate(&c, &pattern, &host, opts).unwrap()),
        }
    }
}

#[test]
fn preorder_counts_are_ordered_bell_numbers() {
    for m in 0..=6 {
        let all = enumerate_preorders(m).unwrap();
        assert_eq!(num_bigint::BigUint::from(all.len()), ordered_bell(m as u32));
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }
}

#[test]
fn ksss_success_is_a_real_complete_tripartite() {
    let sys = TripartiteSystem::complete(&[0, 1, 2, 3, 4, 5], &[6, 7, 8, 9, 10, 11], &[12, 13, 14, 15, 16, 17]).unwrap();
    let tris: Vec<[u32; 3]> = sys.triangles().filter(|t| (t[0] + t[1] + t[2]) % 7 != 0).collect();
    let g3 = UniformHypergraph::new(3, 18, tris.iter().map(|t| {
        let mut t = *t;
        t.sort_unstable();
        t
    }))
    .unwrap();
    let delta = rational::ratio(tris.len() as i64, 6 * 6 * 6);
    let o = KsssOverrides { s1: Some(3), s2: Some(2), t2: Some(4), t3: Some(4) };
    let rep = find_ksss(&sys, &g3, &delta, &rational::ratio(1, 8), 2, &o).unwrap();
    let (oracle, exhausted) = oracles::exists_ksss_bf(&sys, &g3, 2, &SearchBudget::unlimited());
    assert!(!exhausted);
    if let Ok(w) = rep.outcome {
        let [a, b, c] = &w.parts;
        assert!(transversals_all(&g3, a, b, c, 0).unwrap());
        assert!(oracle.is_some());
    }
}
