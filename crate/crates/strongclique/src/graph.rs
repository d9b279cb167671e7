//! Immutable simple undirected graphs and vertex subsets.
//!
//! A [`Graph`] stores its adjacency both as sorted neighbor lists and as
//! fixed-width bitset rows; the bitsets drive every search kernel in the
//! crate. Graphs are immutable after construction, so values can be shared
//! freely across threads and all operations return new graphs.

use crate::bitset::{Bitset, MAX_VERTICES};
use crate::error::{Error, Result};

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Invariants enforced at construction: no loops, symmetric adjacency,
/// all neighbor entries in `0..n`, and `n <= 512`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    rows: Vec<Bitset>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n, MAX_VERTICES));
        }
        let mut rows = vec![Bitset::EMPTY; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        let adj = rows.iter().map(|r| r.to_vec()).collect();
        Ok(Graph { n, adj, rows })
    }

    /// Builds a graph from an adjacency predicate.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n, MAX_VERTICES));
        }
        let mut rows = vec![Bitset::EMPTY; n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
        }
        let adj = rows.iter().map(|r| r.to_vec()).collect();
        Ok(Graph { n, adj, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u].contains(v)
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Neighborhood of `v` as a bitset row.
    #[inline]
    pub fn row(&self, v: usize) -> &Bitset {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All vertices as a bitset.
    pub fn vertex_bits(&self) -> Bitset {
        Bitset::full(self.n)
    }

    /// The graph with the same vertex set and the complementary edge set.
    pub fn complement(&self) -> Graph {
        let full = Bitset::full(self.n);
        let mut rows = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut r = full.diff(&self.rows[v]);
            r.remove(v);
            rows.push(r);
        }
        let adj = rows.iter().map(|r| r.to_vec()).collect();
        Graph {
            n: self.n,
            adj,
            rows,
        }
    }

    /// Subgraph induced by `s`, with vertices reindexed by position in `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        s.check_range(self.n)?;
        let verts = s.members();
        let k = verts.len();
        let mut edges = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(verts[i], verts[j]) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(k, &edges)
    }

    /// The subgraph induced by the neighborhood of `v`.
    pub fn local_graph(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        if self.adj[v].is_empty() {
            return Err(Error::IsolatedVertex(v));
        }
        self.induced_subgraph(&VertexSet::from_sorted(self.adj[v].clone())?)
    }

    /// Cartesian product. Vertex `(u, x)` is encoded as `u * other.n() + x`;
    /// `(u, x) ~ (v, y)` iff `u = v` and `x ~ y`, or `x = y` and `u ~ v`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let n2 = other.n;
        Graph::from_fn(self.n * n2, |a, b| {
            let (u, x) = (a / n2, a % n2);
            let (v, y) = (b / n2, b % n2);
            (u == v && other.has_edge(x, y)) || (x == y && self.has_edge(u, v))
        })
    }

    /// Lexicographic product. Vertex `(u, x)` is encoded as `u * other.n() + x`;
    /// `(u, x) ~ (v, y)` iff `u ~ v`, or `u = v` and `x ~ y`.
    pub fn lexicographic_product(&self, other: &Graph) -> Result<Graph> {
        let n2 = other.n;
        Graph::from_fn(self.n * n2, |a, b| {
            let (u, x) = (a / n2, a % n2);
            let (v, y) = (b / n2, b % n2);
            self.has_edge(u, v) || (u == v && other.has_edge(x, y))
        })
    }

    /// Line graph: one vertex per edge of `self`, in lexicographic edge
    /// order; two vertices adjacent iff the edges share an endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        let edges = self.edges();
        let m = edges.len();
        Graph::from_fn(m, |a, b| {
            let (u1, v1) = edges[a];
            let (u2, v2) = edges[b];
            u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2
        })
    }

    /// All pairs `u < v` with identical neighborhoods: open twins share
    /// `N(u) = N(v)`, closed twins share `N[u] = N[v]`.
    pub fn twins(&self, closed: bool) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.twin_pair(u, v, closed) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn twin_pair(&self, u: usize, v: usize, closed: bool) -> bool {
        let mut ru = self.rows[u];
        let mut rv = self.rows[v];
        if closed {
            ru.insert(u);
            rv.insert(v);
        }
        ru == rv
    }

    /// Partition of the vertex set into twin equivalence classes.
    pub fn twin_classes(&self, closed: bool) -> Vec<VertexSet> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            let found = (0..classes.len()).find(|&c| self.twin_pair(classes[c][0], v, closed));
            match found {
                Some(c) => classes[c].push(v),
                None => classes.push(vec![v]),
            }
        }
        classes
            .into_iter()
            .map(|c| VertexSet::from_sorted(c).unwrap())
            .collect()
    }

    /// Quotient by open-twin classes: one vertex per class, adjacent iff the
    /// class representatives are adjacent. Returns the quotient and the
    /// class sizes in quotient-vertex order.
    pub fn twin_quotient(&self) -> (Graph, Vec<usize>) {
        let classes = self.twin_classes(false);
        let reps: Vec<usize> = classes.iter().map(|c| c.members()[0]).collect();
        let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        let q = Graph::from_fn(reps.len(), |a, b| self.has_edge(reps[a], reps[b])).unwrap();
        (q, sizes)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = Bitset::singleton(0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == self.n
    }

    /// Common degree of all vertices, or `None` when the graph is irregular.
    pub fn valency(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.adj[0].len();
        if self.adj.iter().all(|a| a.len() == d) {
            Some(d)
        } else {
            None
        }
    }

    /// True iff `s` is a clique.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let m = s.members();
        m.iter()
            .enumerate()
            .all(|(i, &u)| m[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True iff `s` is an independent set.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        let m = s.members();
        m.iter()
            .enumerate()
            .all(|(i, &u)| m[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// An ordered subset of vertices: the carrier for cliques, independent
/// sets and dominating sets. Members are strictly increasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    /// Sorts and deduplicates.
    pub fn new(mut members: Vec<usize>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    /// Accepts an already strictly increasing sequence.
    pub fn from_sorted(members: Vec<usize>) -> Result<VertexSet> {
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(
                "vertex set must be strictly increasing".into(),
            ));
        }
        Ok(VertexSet { members })
    }

    pub fn from_bits(bits: &Bitset) -> VertexSet {
        VertexSet {
            members: bits.to_vec(),
        }
    }

    pub fn empty() -> VertexSet {
        VertexSet {
            members: Vec::new(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn bits(&self) -> Bitset {
        Bitset::from_slice(&self.members)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.bits().intersects(&other.bits())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        !self.intersects(other)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.bits().intersection_len(&other.bits())
    }

    pub(crate) fn check_range(&self, n: usize) -> Result<()> {
        match self.members.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange(v, n)),
            _ => Ok(()),
        }
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}
