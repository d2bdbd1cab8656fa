use hadlab_core::classify::{bipartite_chain, clique_chain, hadwiger_number};
use hadlab_core::hunt::expand_by_uncontraction;
use hadlab_core::minor::{has_minor_bruteforce, subgraph_embedding};
use hadlab_core::*;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(graph_on)
}

fn graph_on(n: usize) -> impl Strategy<Value = Graph> {
    proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 0..n {
            for i in 0..j {
                if bits[k] {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", |g| g.is_connected())
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_form_ignores_labels((g, perm) in with_permutation(10)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(to_graph6(&canonical_graph(&g)), to_graph6(&canonical_graph(&h)));
    }

    #[test]
    fn graph6_round_trip_large(n in 1usize..=64, seed in any::<u64>()) {
        let mut state = seed | 1;
        let mut rows = vec![0u64; n];
        for j in 0..n {
            for i in 0..j {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                if state % 3 == 0 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        let g = Graph::from_rows(rows).unwrap();
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn contraction_arithmetic(g in connected(9)) {
        for e in g.edges() {
            let common = (g.neighbors(e.u) & g.neighbors(e.v)).count_ones() as usize;
            let h = g.contract_edge(e).unwrap();
            prop_assert_eq!(h.n(), g.n() - 1);
            prop_assert_eq!(h.m(), g.m() - 1 - common);
            prop_assert!(h.is_connected());
        }
    }

    #[test]
    fn subdivision_and_split_arithmetic(g in connected(9)) {
        for e in g.edges() {
            let s = g.subdivide_edge(e).unwrap();
            prop_assert_eq!((s.n(), s.m()), (g.n() + 1, g.m() + 1));
            prop_assert_eq!(s.degree(g.n()), 2);
            prop_assert!(is_isomorphic(&s.contract_edge(Edge::new(e.u, g.n())).unwrap(), &g));
        }
        for v in 0..g.n() {
            let nbrs: Vec<usize> = (0..g.n()).filter(|&w| g.has_edge(v, w)).collect();
            if nbrs.len() >= 2 {
                let (a, b) = nbrs.split_at(nbrs.len() / 2);
                let s = g.split_vertex(v, a, b).unwrap();
                prop_assert_eq!((s.n(), s.m()), (g.n() + 1, g.m()));
                let joined = s.with_edge(v, g.n()).unwrap();
                prop_assert!(is_isomorphic(&joined.contract_edge(Edge::new(v, g.n())).unwrap(), &g));
            }
        }
    }

    #[test]
    fn colouring_is_exact(g in graph(7)) {
        let (chi, c) = chromatic_number(&g);
        prop_assert!(c.is_proper(&g));
        prop_assert_eq!(c.k, chi);
        prop_assert_eq!(Some(chi), oracle::chromatic_bruteforce(&g, 7).unwrap());
        for e in g.edges() {
            let d = chromatic_number(&g.delete_edge(e).unwrap()).0;
            prop_assert!(d == chi || d + 1 == chi);
        }
    }

    #[test]
    fn fast_criticality_agrees(g in connected(8), k in 3usize..=5) {
        prop_assert_eq!(is_critical_fast(&g, k), is_k_critical(&g, k).unwrap().is_critical());
    }

    #[test]
    fn minor_engine_matches_brute_force(g in graph(7), h in connected(5)) {
        let ours = has_minor(&g, &h).unwrap();
        if let Some(model) = &ours {
            prop_assert!(model.validate(&g, &h).is_ok());
        }
        prop_assert_eq!(ours.is_some(), has_minor_bruteforce(&g, &h).unwrap());
    }

    #[test]
    fn minor_relation_is_monotone(g in connected(8), h in connected(5)) {
        prop_assert!(has_minor(&g, &g).unwrap().is_some());
        if let Some(e) = g.edges().first() {
            prop_assert!(has_minor(&g, &g.contract_edge(*e).unwrap()).unwrap().is_some());
        }
        if has_minor(&g, &h).unwrap().is_some() {
            for e in g.non_edges() {
                prop_assert!(has_minor(&g.with_edge(e.u, e.v).unwrap(), &h).unwrap().is_some());
            }
        }
    }

    #[test]
    fn equal_order_minor_is_spanning_subgraph(
        (g, h) in (1usize..=7).prop_flat_map(|n| (graph_on(n), graph_on(n).prop_filter("connected", |h| h.is_connected())))
    ) {
        prop_assert_eq!(has_minor(&g, &h).unwrap().is_some(), subgraph_embedding(&g, &h).is_some());
    }

    #[test]
    fn hadwiger_number_steps_by_at_most_one(g in connected(8)) {
        let h = hadwiger_number(&g);
        prop_assert!(has_minor(&g, &Graph::complete(h).unwrap()).unwrap().is_some());
        for e in g.edges() {
            prop_assert!(hadwiger_number(&g.contract_edge(e).unwrap()) <= h);
            prop_assert!(hadwiger_number(&g.delete_edge(e).unwrap()) <= h);
        }
        for e in g.non_edges() {
            let h2 = hadwiger_number(&g.with_edge(e.u, e.v).unwrap());
            prop_assert!(h2 == h || h2 == h + 1);
        }
    }

    #[test]
    fn free_classes_are_minor_closed(g in connected(8)) {
        let fh = is_free_hadwiger(&g, 4).unwrap().verdict;
        let fp = is_free_planar(&g).verdict;
        for e in g.edges() {
            let d = g.delete_edge(e).unwrap();
            prop_assert!(!fh || is_free_hadwiger(&d, 4).unwrap().verdict);
            prop_assert!(!fp || is_free_planar(&d).verdict);
        }
        // every free-planar graph is free-Hadwiger(4): K5- is one of the planar obstructions
        prop_assert!(!fp || fh);
    }

    #[test]
    fn violations_carry_valid_witnesses(g in connected(8)) {
        for v in [is_free_hadwiger(&g, 4).unwrap(), is_free_planar(&g)] {
            if let Some(w) = v.violation {
                prop_assert!(!v.verdict);
                prop_assert!(w.model.validate(&g, &w.pattern.graph).is_ok());
            }
        }
    }

    #[test]
    fn brackets_are_tight(g in connected(8)) {
        for chain in [clique_chain(), bipartite_chain()] {
            if let Ok(b) = minor_bracket(&g, &chain) {
                prop_assert!(b.lower_model.validate(&g, &b.lower.graph).is_ok());
                prop_assert!(has_minor(&g, &b.upper.graph).unwrap().is_none());
            }
        }
    }

    #[test]
    fn uncontraction_inverts_contraction(g in connected(5)) {
        for e in expand_by_uncontraction(&g).unwrap() {
            prop_assert_eq!(e.graph.n(), g.n() + 1);
            prop_assert!(is_isomorphic(&e.graph.contract_edge(e.split).unwrap(), &g));
        }
        // and every single contraction of an expansion target is reachable
        for e in g.edges() {
            let c = g.contract_edge(e).unwrap();
            let back: Vec<_> = expand_by_uncontraction(&c).unwrap().iter().map(|x| canonical_form(&x.graph)).collect();
            prop_assert!(back.contains(&canonical_form(&g)));
        }
    }

    #[test]
    fn truncation_removes_corners(d in 2usize..=4, a in 0usize..16, b in 0usize..16) {
        let q = hypercube(d).unwrap();
        let n = q.n();
        let corners: Vec<usize> = if a % n == b % n { vec![a % n] } else { vec![a % n, b % n] };
        let t = truncate_corners(&q, &corners).unwrap();
        prop_assert_eq!(t.n(), n - corners.len());
        prop_assert!(chromatic_number(&t).0 <= 4);
    }
}
