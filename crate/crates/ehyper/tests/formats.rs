use ehyper::format::*;
use ehyper_core::{BipartiteGraph, EdgeColouring, TupleColouring, UniformHypergraph};
use proptest::prelude::*;

proptest! {
    #[test]
    fn hypergraph_round_trip(n in 3u32..9, bits in proptest::collection::vec(any::<bool>(), 84)) {
        let h = UniformHypergraph::from_predicate(3, n, |t| bits[(t[0] * 49 + t[1] * 7 + t[2]) as usize % 84]).unwrap();
        let back = parse_hypergraph(&write_hypergraph(&h, Some("x"))).unwrap();
        prop_assert_eq!(back, h);
    }

    #[test]
    fn colouring_round_trip(n in 3u32..8, colours in 2u8..5, seed in 0u64..100) {
        let c = ehyper_core::constructions::random_colouring(3, n, colours, seed, 1 << 16).unwrap();
        let back = parse_colouring(&write_colouring(&c, None)).unwrap();
        prop_assert_eq!(back.lex_colours().collect::<Vec<_>>(), c.lex_colours().collect::<Vec<_>>());
        prop_assert_eq!(back.colour_count(), c.colour_count());
    }

    #[test]
    fn bipartite_round_trip(a in 1u32..6, b in 1u32..6, bits in proptest::collection::vec(any::<bool>(), 36)) {
        let edges = (0..a).flat_map(|x| (0..b).map(move |y| (x, y))).filter(|&(x, y)| bits[(x * 6 + y) as usize]).map(|(x, y)| (x, a + y));
        let g = BipartiteGraph::with_ranges(a, b, edges).unwrap();
        let back = parse_bipartite(&write_bipartite(&g)).unwrap();
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }
}

#[test]
fn instances_detect_colourings() {
    let h = ehyper_core::constructions::tight_cycle5();
    let as_colouring = parse_instance(&write_hypergraph(&h, None)).unwrap();
    assert_eq!(as_colouring.colour(&[0, 1, 2]), 0);
    assert_eq!(as_colouring.colour(&[0, 2, 4]), 1);
    let c = EdgeColouring::constant(3, 4, 3, 2).unwrap();
    assert_eq!(parse_instance(&write_colouring(&c, None)).unwrap().colour(&[1, 2, 3]), 2);
}

#[test]
fn errors_carry_line_numbers() {
    let e = parse_hypergraph("3 4 2\n0 1 2\n\n# gap\n0 1\n").unwrap_err();
    assert_eq!(e.line, 5);
    let e = parse_bipartite("bipartite 2 2 1\n0 1\n").unwrap_err();
    assert_eq!(e.line, 2);
}
