//! Oracle checks for derived values: results computed by an independent
//! brute-force route and frozen here, then compared with the library's
//! search kernels.

mod common;

use strongclique::clique;
use strongclique::families::{self, johnson_induced_perm, johnson_vertex, standard};
use strongclique::graph::{Graph, VertexSet};
use strongclique::perm::{self, Permutation};
use strongclique::verify::Verifier;

#[test]
fn c5_is_self_complementary_by_brute_force() {
    let c5 = standard::cycle(5);
    let comp = c5.complement();
    assert!(common::brute_force_isomorphic(&c5, &comp));
    assert!(perm::are_isomorphic(&c5, &comp));
}

#[test]
fn isomorphism_search_agrees_with_brute_force() {
    let two_k3 =
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    let prism = standard::complete(2)
        .cartesian_product(&standard::cycle(3))
        .unwrap();
    let k6_minus_pm = Graph::from_fn(6, |u, v| !(u / 2 == v / 2)).unwrap();
    let lk4 = standard::complete(4).line_graph().unwrap();
    let pairs: Vec<(&Graph, &Graph)> = vec![
        (&two_k3, &prism),
        (&k6_minus_pm, &lk4),
        (&prism, &k6_minus_pm),
    ];
    for (g, h) in pairs {
        assert_eq!(
            common::brute_force_isomorphic(g, h),
            perm::are_isomorphic(g, h)
        );
    }
    // the line graph of K4 is K6 minus a perfect matching (the octahedron)
    assert!(common::brute_force_isomorphic(&k6_minus_pm, &lk4));
}

#[test]
fn automorphism_orders_match_brute_force_counts() {
    use itertools::Itertools;
    for g in [
        standard::complete(4),
        standard::cycle(4),
        standard::cycle(5),
        standard::path(3),
        standard::complete_bipartite(2, 3),
        standard::cycle(7),
    ] {
        let n = g.n();
        let brute = (0..n)
            .permutations(n)
            .filter(|p| {
                (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == g.has_edge(p[u], p[v])))
            })
            .count() as u128;
        let chain = perm::automorphisms(&g).unwrap().order().unwrap();
        assert_eq!(chain, brute);
    }
}

#[test]
fn petersen_group_order_matches_closure() {
    let a = perm::automorphisms(&standard::petersen()).unwrap();
    assert_eq!(a.order().unwrap(), 120);
    assert_eq!(a.elements().unwrap().len(), 120);
}

#[test]
fn johnson_731_group_order_is_divisible_by_5040() {
    let j = families::johnson(7, 3, 1).unwrap();
    let a = perm::automorphisms(&j).unwrap();
    assert_eq!(a.order().unwrap() % 5040, 0);
}

#[test]
fn johnson_731_valency_by_direct_count() {
    // neighbors of {1,2,3}: pick the shared element (3 ways) and two of
    // the four outside elements (6 ways)
    let j = families::johnson(7, 3, 1).unwrap();
    assert_eq!(j.valency(), Some(3 * 6));
    let v0 = johnson_vertex(&[1, 2, 3]);
    let count = (0..j.n()).filter(|&u| j.has_edge(v0, u)).count();
    assert_eq!(count, 18);
}

#[test]
fn johnson_731_named_cliques_and_independent_sets() {
    let j = families::johnson(7, 3, 1).unwrap();
    let cliques = clique::maximal_cliques(&j);
    let mis = clique::maximal_independent_sets(&j);
    let to_set = |triples: &[[usize; 3]]| -> VertexSet {
        triples.iter().map(|t| johnson_vertex(t)).collect()
    };
    // the two maximal cliques through 123, 145, 167
    let c1 = to_set(&[
        [1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6],
    ]);
    let c2 = to_set(&[
        [1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 7], [2, 5, 6], [3, 4, 6], [3, 5, 7],
    ]);
    assert!(cliques.iter().any(|c| c == &c1));
    assert!(cliques.iter().any(|c| c == &c2));
    // the two shapes of maximal independent set
    let disjoint_type = to_set(&[[1, 2, 3], [4, 5, 6], [1, 2, 7], [1, 3, 7], [2, 3, 7]]);
    let star_type = to_set(&[[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 2, 6], [1, 2, 7]]);
    assert!(mis.iter().any(|s| s == &disjoint_type));
    assert!(mis.iter().any(|s| s == &star_type));
    // a clique cover needs more than alpha = 5 cliques
    assert!(clique::clique_cover_number(&j).unwrap() > 5);
}

#[test]
fn fano_clique_orbit_under_the_seven_cycle() {
    let j = families::johnson(7, 3, 1).unwrap();
    let cliques = clique::maximal_cliques(&j);
    let c1: VertexSet = [
        [1, 2, 3],
        [1, 4, 5],
        [1, 6, 7],
        [2, 4, 6],
        [2, 5, 7],
        [3, 4, 7],
        [3, 5, 6],
    ]
    .iter()
    .map(|t| johnson_vertex(t))
    .collect();
    // the permutation induced on triples by the ground cycle (1 2 3 4 5 6 7)
    let ground = Permutation::new(vec![1, 2, 3, 4, 5, 6, 0]).unwrap();
    let phi = johnson_induced_perm(7, 3, &ground).unwrap();
    assert!(phi.is_automorphism(&j));
    let mut orbit = vec![c1.clone()];
    loop {
        let next = phi.apply_set(orbit.last().unwrap());
        if next == c1 {
            break;
        }
        orbit.push(next);
    }
    assert_eq!(orbit.len(), 7);
    for c in &orbit {
        assert!(j.is_clique(c));
        assert!(
            cliques.iter().any(|m| m == c),
            "orbit member is a maximal clique"
        );
    }
    // pairwise intersecting: a 7-clique in the clique graph
    for (i, a) in orbit.iter().enumerate() {
        for b in orbit.iter().skip(i + 1) {
            assert!(a.intersects(b));
        }
    }
}

#[test]
fn torus_cayley_graph_is_c3_box_cn() {
    use strongclique::group::{ConnectionSet, GroupSpec};
    for n in 3..=7 {
        let grp = GroupSpec::DirectProduct(vec![n, 3]);
        let els = vec![
            grp.element_from_tuple(&[1, 0]).unwrap(),
            grp.element_from_tuple(&[n - 1, 0]).unwrap(),
            grp.element_from_tuple(&[0, 1]).unwrap(),
            grp.element_from_tuple(&[0, 2]).unwrap(),
        ];
        let cay = families::cayley(&grp, &ConnectionSet::new(&grp, els).unwrap()).unwrap();
        let prod = standard::complete(3)
            .cartesian_product(&standard::cycle(n))
            .unwrap();
        assert!(perm::are_isomorphic(&cay, &prod), "n = {n}");
    }
}

#[test]
fn local_graph_of_c4_k2_has_a_universal_vertex() {
    let g = standard::cycle(4)
        .lexicographic_product(&standard::complete(2))
        .unwrap();
    for v in 0..g.n() {
        let l = g.local_graph(v).unwrap();
        assert!(
            (0..l.n()).any(|u| l.degree(u) == l.n() - 1),
            "local graph at {v} must have a universal vertex"
        );
    }
}

#[test]
fn h_graphs_are_vertex_transitive_with_disjoint_quadruples() {
    for n in 2..=8 {
        let h = families::h_graph(n).unwrap();
        assert!(perm::is_vertex_transitive(&h), "H_{n}");
        let quads: Vec<VertexSet> = clique::maximal_cliques(&h)
            .iter()
            .filter(|c| c.len() == 4)
            .cloned()
            .collect();
        assert_eq!(quads.len(), n, "H_{n} has exactly {n} quadruple cliques");
        let mut covered = 0;
        for (i, a) in quads.iter().enumerate() {
            covered += a.len();
            for b in quads.iter().skip(i + 1) {
                assert!(a.is_disjoint(b));
            }
        }
        assert_eq!(covered, 4 * n);
    }
}

#[test]
fn l1_families_at_n7_keep_the_local_graph() {
    let l1 = standard::local_graph_l(1).unwrap();
    for which in [
        families::L1Family::A,
        families::L1Family::B,
        families::L1Family::C,
        families::L1Family::D,
    ] {
        let g = families::family_l1(which, 7).unwrap();
        assert_eq!(g.valency(), Some(5));
        assert!(perm::is_vertex_transitive(&g), "{which:?}");
        let local = g.local_graph(0).unwrap();
        assert!(perm::are_isomorphic(&local, &l1), "{which:?}");
    }
}

#[test]
fn vt_corpus_invariants() {
    let verifier = Verifier::new();
    let analyses = verifier.analyses(&[2, 3, 4], 16).expect("corpus builds");
    assert!(!analyses.is_empty());
    for a in &analyses {
        let n = a.graph.n();
        // the standard bound alpha * omega <= n for vertex-transitive graphs
        assert!(
            a.alpha() * a.omega() <= n,
            "{}: alpha*omega exceeds n",
            a.id
        );
        // order of the automorphism group is divisible by n
        let order = perm::automorphisms(&a.graph).unwrap().order().unwrap();
        assert_eq!(order % n as u128, 0, "{}", a.id);
        // reducible members are blowups of irreducible quotients
        if !a.graph.twins(false).is_empty() {
            let (q, sizes) = a.graph.twin_quotient();
            let t = sizes[0];
            assert!(t >= 2, "{}: twin classes in a reducible graph", a.id);
            assert!(sizes.iter().all(|&s| s == t), "{}: uniform classes", a.id);
            let blowup = q.lexicographic_product(&standard::empty(t)).unwrap();
            assert!(
                perm::are_isomorphic(&a.graph, &blowup),
                "{}: reducible graph is a blowup of its quotient",
                a.id
            );
        }
    }
}
