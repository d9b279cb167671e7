//! Property tests for the structural invariants.

mod common;

use proptest::prelude::*;

use strongclique::clique;
use strongclique::families::standard;
use strongclique::graph::Graph;
use strongclique::io as gio;
use strongclique::perm;
use strongclique::strong;

/// Arbitrary graph on up to `max_n` vertices.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).expect("valid edges")
        })
    })
}

/// Pool of small regular graphs for the product-valency laws.
fn arb_regular() -> impl Strategy<Value = Graph> {
    prop_oneof![
        (1usize..=6).prop_map(standard::complete),
        (3usize..=8).prop_map(standard::cycle),
        (1usize..=3).prop_map(|m| standard::complete_bipartite(m, m)),
        (1usize..=5).prop_map(standard::empty),
    ]
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph(12)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_edge_counts_add_up(g in arb_graph(12)) {
        let n = g.n();
        prop_assert_eq!(
            g.edge_count() + g.complement().edge_count(),
            n * n.saturating_sub(1) / 2
        );
    }

    #[test]
    fn product_valency_laws(g1 in arb_regular(), g2 in arb_regular()) {
        let v1 = g1.valency().unwrap();
        let v2 = g2.valency().unwrap();
        let cart = g1.cartesian_product(&g2).unwrap();
        let lex = g1.lexicographic_product(&g2).unwrap();
        if cart.n() > 0 {
            prop_assert_eq!(cart.valency(), Some(v1 + v2));
            prop_assert_eq!(lex.valency(), Some(g2.n() * v1 + v2));
        }
    }

    #[test]
    fn line_graph_edge_count(g in arb_graph(10)) {
        let lg = g.line_graph().unwrap();
        let expected: usize = (0..g.n())
            .map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2)
            .sum();
        prop_assert_eq!(lg.edge_count(), expected);
        prop_assert_eq!(lg.n(), g.edge_count());
    }

    #[test]
    fn graph6_roundtrip(g in arb_graph(20)) {
        prop_assert_eq!(gio::from_graph6(&gio::to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn dimacs_roundtrip(g in arb_graph(12)) {
        prop_assert_eq!(gio::from_dimacs(&gio::to_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn bron_kerbosch_matches_subset_enumeration(g in arb_graph(10)) {
        let fast: Vec<_> = clique::maximal_cliques(&g).cliques().to_vec();
        let slow = common::brute_force_maximal_cliques(&g);
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn strong_clique_methods_agree(g in arb_graph(10)) {
        let mis = clique::maximal_independent_sets(&g);
        for c in clique::maximal_cliques(&g).iter() {
            let scan = strong::strong_by_scan(c, &mis).is_strong;
            let dom = strong::strong_by_domination(&g, c);
            prop_assert_eq!(scan, dom, "clique {:?}", c.members());
        }
    }

    #[test]
    fn omega_at_most_chi(g in arb_graph(10)) {
        let omega = clique::clique_number(&g);
        let chi = clique::chromatic_number(&g).unwrap();
        prop_assert!(omega <= chi);
    }

    #[test]
    fn chain_order_matches_closure(g in arb_graph(7)) {
        let a = perm::automorphisms(&g).unwrap();
        prop_assert_eq!(a.order().unwrap(), a.elements().unwrap().len() as u128);
    }

    #[test]
    fn isomorphism_is_reflexive_and_respects_relabeling(g in arb_graph(8), seed in any::<u64>()) {
        prop_assert!(perm::are_isomorphic(&g, &g));
        // relabel by a pseudo-random permutation
        let n = g.n();
        let mut images: Vec<usize> = (0..n).collect();
        let mut state = seed.max(1);
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            images.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let h = Graph::from_fn(n, |u, v| {
            g.has_edge(images[u], images[v])
        }).unwrap();
        prop_assert!(perm::are_isomorphic(&g, &h));
    }

    #[test]
    fn twin_quotient_recovers_blowups(base in arb_graph(5), t in 2usize..4) {
        // an irreducible base graph blown up by tK1 quotients back to itself
        if base.twins(false).is_empty() && base.n() > 0 {
            let blown = base.lexicographic_product(&standard::empty(t)).unwrap();
            let (q, sizes) = blown.twin_quotient();
            prop_assert!(sizes.iter().all(|&s| s == t));
            prop_assert!(perm::are_isomorphic(&q, &base));
        }
    }
}
