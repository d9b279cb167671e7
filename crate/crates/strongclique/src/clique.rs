//! Enumeration and counting kernels: maximal cliques and independent sets,
//! clique and independence numbers, exact chromatic and clique-cover
//! numbers, and the graph of maximal cliques.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Vertex cap for the exact coloring solver.
pub const COLOR_SOLVER_CAP: usize = 64;

/// The complete list of maximal cliques of one graph, in canonical order
/// (lexicographic by member sequence).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueList {
    n: usize,
    cliques: Vec<VertexSet>,
}

impl CliqueList {
    /// Order of the source graph.
    pub fn source_order(&self) -> usize {
        self.n
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.cliques.iter()
    }

    pub fn max_size(&self) -> usize {
        self.cliques.iter().map(|c| c.len()).max().unwrap_or(0)
    }

    pub fn min_size(&self) -> usize {
        self.cliques.iter().map(|c| c.len()).min().unwrap_or(0)
    }

    /// All members have the same size.
    pub fn uniform_size(&self) -> bool {
        self.max_size() == self.min_size()
    }
}

/// All maximal cliques via Bron–Kerbosch with a greedy pivot
/// (maximum |P ∩ N(u)|, ties broken by lowest vertex index).
pub fn maximal_cliques(g: &Graph) -> CliqueList {
    let n = g.n();
    let mut out: Vec<VertexSet> = Vec::new();
    if n > 0 {
        let mut r = Vec::new();
        bron_kerbosch(g, &mut r, g.vertex_bits(), Bitset::EMPTY, &mut out);
        out.sort();
    }
    CliqueList { n, cliques: out }
}

fn bron_kerbosch(g: &Graph, r: &mut Vec<usize>, p: Bitset, x: Bitset, out: &mut Vec<VertexSet>) {
    if p.is_empty() && x.is_empty() {
        out.push(VertexSet::new(r.clone()));
        return;
    }
    let pivot = choose_pivot(g, &p, &x);
    let mut p = p;
    let mut x = x;
    for v in p.diff(g.row(pivot)).iter() {
        r.push(v);
        bron_kerbosch(g, r, p.and(g.row(v)), x.and(g.row(v)), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

fn choose_pivot(g: &Graph, p: &Bitset, x: &Bitset) -> usize {
    let mut best = usize::MAX;
    let mut best_score = usize::MAX;
    for u in p.or(x).iter() {
        let score = p.intersection_len(g.row(u));
        if best == usize::MAX || score > best_score {
            best = u;
            best_score = score;
        }
    }
    best
}

/// All maximal independent sets: the maximal cliques of the complement.
pub fn maximal_independent_sets(g: &Graph) -> CliqueList {
    maximal_cliques(&g.complement())
}

pub fn clique_number(g: &Graph) -> usize {
    maximal_cliques(g).max_size()
}

pub fn independence_number(g: &Graph) -> usize {
    maximal_independent_sets(g).max_size()
}

/// The graph of maximal cliques: one vertex per maximal clique in
/// [`CliqueList`] order, adjacent iff the cliques intersect.
pub fn clique_graph(g: &Graph) -> Result<Graph> {
    clique_graph_of(&maximal_cliques(g))
}

pub fn clique_graph_of(list: &CliqueList) -> Result<Graph> {
    let bits: Vec<Bitset> = list.iter().map(|c| c.bits()).collect();
    Graph::from_fn(bits.len(), |a, b| bits[a].intersects(&bits[b]))
}

/// Exact chromatic number, by iterative deepening on the color count with
/// a clique lower bound. Capped at [`COLOR_SOLVER_CAP`] vertices.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.n() > COLOR_SOLVER_CAP {
        return Err(Error::SolverCapExceeded(g.n(), COLOR_SOLVER_CAP));
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let cliques = maximal_cliques(g);
    let mis = maximal_independent_sets(g);
    let omega = cliques.max_size();
    let alpha = mis.max_size();
    let lower = omega.max(g.n().div_ceil(alpha));
    let greedy = greedy_coloring_bound(g);
    for k in lower..greedy {
        if k_colorable(g, k, &cliques, &mis, alpha) {
            return Ok(k);
        }
    }
    Ok(greedy)
}

/// Minimum number of cliques covering the vertex set: the chromatic number
/// of the complement.
pub fn clique_cover_number(g: &Graph) -> Result<usize> {
    chromatic_number(&g.complement())
}

/// Decides whether the graph admits a proper coloring with `k` colors.
pub fn is_k_colorable(g: &Graph, k: usize) -> Result<bool> {
    if g.n() > COLOR_SOLVER_CAP {
        return Err(Error::SolverCapExceeded(g.n(), COLOR_SOLVER_CAP));
    }
    if g.n() == 0 {
        return Ok(true);
    }
    let cliques = maximal_cliques(g);
    let mis = maximal_independent_sets(g);
    if cliques.max_size() > k {
        return Ok(false);
    }
    Ok(k_colorable(g, k, &cliques, &mis, mis.max_size()))
}

/// Decides χ(g) <= k given precomputed clique and independent set lists.
fn k_colorable(g: &Graph, k: usize, cliques: &CliqueList, mis: &CliqueList, alpha: usize) -> bool {
    let n = g.n();
    if k == 0 {
        return n == 0;
    }
    if k * alpha < n {
        return false;
    }
    if k * alpha == n {
        // every color class must be a maximum independent set, so this is
        // an exact cover by the maximum independent sets
        let rows: Vec<&VertexSet> = mis.iter().filter(|s| s.len() == alpha).collect();
        return exact_cover_exists(n, &rows);
    }
    // seed a maximum clique with distinct colors, then DSATUR backtracking
    let seed = cliques
        .iter()
        .find(|c| c.len() == cliques.max_size())
        .cloned()
        .unwrap_or_else(VertexSet::empty);
    if seed.len() > k {
        return false;
    }
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut used = 0;
    for (c, v) in seed.iter().enumerate() {
        colors[v] = Some(c);
        used = used.max(c + 1);
    }
    dsatur(g, k, &mut colors, used, alpha)
}

fn dsatur(g: &Graph, k: usize, colors: &mut Vec<Option<usize>>, used: usize, alpha: usize) -> bool {
    let n = g.n();
    // branch on the uncolored vertex with the most distinct neighbor
    // colors, ties by degree then lowest index
    let mut pick = None;
    let mut pick_key = (0usize, 0usize);
    for v in 0..n {
        if colors[v].is_some() {
            continue;
        }
        let mut seen = 0u64;
        for &w in g.neighbors(v) {
            if let Some(c) = colors[w] {
                seen |= 1 << c;
            }
        }
        let key = (seen.count_ones() as usize, g.degree(v));
        if pick.is_none() || key > pick_key {
            pick = Some((v, seen));
            pick_key = key;
        }
    }
    let (v, forbidden) = match pick {
        None => return true,
        Some(p) => p,
    };
    // capacity prune: a color class can absorb at most
    // min(candidates, alpha - size) further vertices
    let uncolored = colors.iter().filter(|c| c.is_none()).count();
    let mut capacity = 0;
    for c in 0..k.min(used + 1) {
        let mut size = 0;
        let mut cands = 0;
        for u in 0..n {
            match colors[u] {
                Some(cu) if cu == c => size += 1,
                None if !g.neighbors(u).iter().any(|&w| colors[w] == Some(c)) => cands += 1,
                _ => {}
            }
        }
        capacity += cands.min(alpha.saturating_sub(size));
        if capacity >= uncolored {
            break;
        }
    }
    if capacity < uncolored {
        return false;
    }
    for c in 0..k.min(used + 1) {
        if forbidden >> c & 1 == 1 {
            continue;
        }
        colors[v] = Some(c);
        if dsatur(g, k, colors, used.max(c + 1), alpha) {
            return true;
        }
        colors[v] = None;
    }
    false
}

fn greedy_coloring_bound(g: &Graph) -> usize {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = vec![usize::MAX; n];
    let mut best = 0;
    for &v in &order {
        let mut taken = 0u128;
        for &w in g.neighbors(v) {
            if colors[w] != usize::MAX {
                taken |= 1 << colors[w];
            }
        }
        let c = (0..).find(|&c| taken >> c & 1 == 0).unwrap();
        colors[v] = c;
        best = best.max(c + 1);
    }
    best
}

/// Whether the ground set 0..n can be partitioned by the given rows.
pub fn exact_cover_exists(n: usize, rows: &[&VertexSet]) -> bool {
    exact_cover(n, rows).is_some()
}

/// First exact cover found by depth-first search, branching on the lowest
/// uncovered vertex and trying rows in list order. Returned rows are
/// sorted, so the result is deterministic.
pub fn exact_cover(n: usize, rows: &[&VertexSet]) -> Option<Vec<VertexSet>> {
    let bits: Vec<Bitset> = rows.iter().map(|r| r.bits()).collect();
    let mut chosen = Vec::new();
    let universe = Bitset::full(n);
    cover_rec(&universe, &bits, &mut chosen).then(|| {
        let mut sel: Vec<VertexSet> = chosen.iter().map(|&i| rows[i].clone()).collect();
        sel.sort();
        sel
    })
}

fn cover_rec(uncovered: &Bitset, bits: &[Bitset], chosen: &mut Vec<usize>) -> bool {
    let v = match uncovered.min() {
        None => return true,
        Some(v) => v,
    };
    for (i, rb) in bits.iter().enumerate() {
        if rb.contains(v) && rb.is_subset(uncovered) {
            chosen.push(i);
            if cover_rec(&uncovered.diff(rb), bits, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
