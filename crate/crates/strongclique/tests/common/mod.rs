//! Shared test oracles, independent of the library's search kernels.
#![allow(dead_code)] // each test target uses a different subset

use itertools::Itertools;
use strongclique::graph::{Graph, VertexSet};

/// Maximal cliques by exhaustive subset enumeration. Usable to n ~ 16.
pub fn brute_force_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 16, "oracle is exponential in n");
    if n == 0 {
        return Vec::new();
    }
    let is_clique = |mask: u32| -> bool {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    };
    let cliques: Vec<u32> = (1u32..1 << n).filter(|&m| is_clique(m)).collect();
    let mut maximal: Vec<VertexSet> = cliques
        .iter()
        .filter(|&&m| {
            !cliques
                .iter()
                .any(|&other| other != m && other & m == m)
        })
        .map(|&m| VertexSet::new((0..n).filter(|&v| m >> v & 1 == 1).collect()))
        .collect();
    maximal.sort();
    maximal
}

/// Isomorphism by trying all vertex bijections. Usable to n = 8.
pub fn brute_force_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    assert!(n <= 8, "oracle is factorial in n");
    (0..n).permutations(n).any(|p| {
        (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(p[u], p[v])))
    })
}

/// Deterministic xorshift generator for reproducible random graphs.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    /// Uniform in 0..bound.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Random graph on n vertices where each edge appears with probability
/// numer/denom.
pub fn random_graph(rng: &mut Rng, n: usize, numer: u64, denom: u64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.below(denom) < numer {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid random edges")
}
