//! Vertex permutations, automorphism-group search, orbits and isomorphism
//! testing.
//!
//! The search engine is equitable-partition refinement plus backtracking
//! over paired ordered partitions. Automorphism generators are collected
//! along a stabilizer tower with base 0, 1, ..., n-1: at level i the search
//! looks for automorphisms fixing 0..i-1 pointwise and moving i, and the
//! group order is the product of the base orbit sizes. No canonical form is
//! computed.

use std::collections::VecDeque;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Cap on materialized group closures.
const CLOSURE_CAP: usize = 1_000_000;

/// A bijection on `0..n`, stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(n));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    /// `self . other`: applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn apply_set(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.images[v]).collect()
    }

    /// Exact check that the permutation preserves adjacency.
    pub fn is_automorphism(&self, g: &Graph) -> bool {
        if self.degree() != g.n() {
            return false;
        }
        for v in 0..g.n() {
            let mut mapped = Bitset::EMPTY;
            for &w in g.neighbors(v) {
                mapped.insert(self.images[w]);
            }
            if &mapped != g.row(self.images[v]) {
                return false;
            }
        }
        true
    }
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// Permutations serialize as their image sequences.
impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(s)
    }
}

/// Generators for a permutation group on `0..degree`, together with the
/// base orbit sizes recorded by the stabilizer-tower search when the set
/// was produced by [`automorphisms`].
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    degree: usize,
    gens: Vec<Permutation>,
    base_orbit_sizes: Option<Vec<usize>>,
}

impl GeneratorSet {
    pub fn from_gens(degree: usize, gens: Vec<Permutation>) -> Result<GeneratorSet> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::NotAPermutation(degree));
            }
        }
        Ok(GeneratorSet {
            degree,
            gens,
            base_orbit_sizes: None,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    /// Group order: the product along the stabilizer chain when available,
    /// otherwise the size of the materialized closure.
    pub fn order(&self) -> Result<u128> {
        match &self.base_orbit_sizes {
            Some(sizes) => sizes
                .iter()
                .try_fold(1u128, |acc, &s| acc.checked_mul(s as u128))
                .ok_or(Error::OrderOverflow),
            None => Ok(self.elements()?.len() as u128),
        }
    }

    /// Smallest generator-closed set of vertices containing `v`.
    pub fn orbit(&self, v: usize) -> Result<VertexSet> {
        if v >= self.degree {
            return Err(Error::VertexOutOfRange(v, self.degree));
        }
        let mut seen = Bitset::singleton(v);
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for g in &self.gens {
                let y = g.image(x);
                if !seen.contains(y) {
                    seen.insert(y);
                    stack.push(y);
                }
            }
        }
        Ok(VertexSet::from_bits(&seen))
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).map(|o| o.len() == self.degree).unwrap_or(false)
    }

    /// Materializes the full group, failing above the closure cap.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        use std::collections::HashSet;
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let id = Permutation::identity(self.degree);
        seen.insert(id.images().to_vec());
        let mut out = vec![id];
        let mut frontier = 0;
        while frontier < out.len() {
            let cur = out[frontier].clone();
            frontier += 1;
            for g in &self.gens {
                let next = g.compose(&cur);
                if seen.insert(next.images().to_vec()) {
                    out.push(next);
                    if out.len() > CLOSURE_CAP {
                        return Err(Error::GroupTooLarge(out.len() as u128, CLOSURE_CAP as u128));
                    }
                }
            }
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Paired ordered partitions and equitable refinement
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct Partition {
    cells: Vec<Vec<usize>>,
    // cell index of each vertex
    loc: Vec<usize>,
}

impl Partition {
    fn unit(n: usize) -> Partition {
        Partition {
            cells: vec![(0..n).collect()],
            loc: vec![0; n],
        }
    }

    fn discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// Largest non-singleton cell, lowest index on ties.
    fn branch_cell(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, cell) in self.cells.iter().enumerate() {
            if cell.len() > 1 && best.is_none_or(|b| cell.len() > self.cells[b].len()) {
                best = Some(i);
            }
        }
        best
    }

    /// Moves `v` out of its cell into a fresh singleton appended at the end.
    /// Returns the affected cell indices for the refinement queue.
    fn individualize(&mut self, v: usize) -> (usize, usize) {
        let c = self.loc[v];
        debug_assert!(self.cells[c].len() > 1);
        self.cells[c].retain(|&x| x != v);
        let fresh = self.cells.len();
        self.cells.push(vec![v]);
        self.loc[v] = fresh;
        (c, fresh)
    }
}

/// Refines the paired partitions to a joint equitable state. Returns false
/// when the two sides disagree, i.e. no isomorphism can respect the pairing.
fn refine_pair(
    pg: &mut Partition,
    ph: &mut Partition,
    g: &Graph,
    h: &Graph,
    queue: &mut VecDeque<usize>,
) -> bool {
    while let Some(s) = queue.pop_front() {
        let sg = Bitset::from_slice(&pg.cells[s]);
        let sh = Bitset::from_slice(&ph.cells[s]);
        let ncells = pg.cells.len();
        for c in 0..ncells {
            if pg.cells[c].len() <= 1 {
                continue;
            }
            let groups_g = split_by_count(&pg.cells[c], &sg, g);
            let groups_h = split_by_count(&ph.cells[c], &sh, h);
            if groups_g.len() != groups_h.len()
                || groups_g
                    .iter()
                    .zip(groups_h.iter())
                    .any(|(a, b)| a.0 != b.0 || a.1.len() != b.1.len())
            {
                return false;
            }
            if groups_g.len() > 1 {
                apply_split(pg, c, groups_g, queue);
                apply_split_quiet(ph, c, groups_h);
            }
        }
    }
    true
}

fn split_by_count(cell: &[usize], splitter: &Bitset, g: &Graph) -> Vec<(usize, Vec<usize>)> {
    use std::collections::BTreeMap;
    let mut by: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &v in cell {
        by.entry(g.row(v).intersection_len(splitter))
            .or_default()
            .push(v);
    }
    by.into_iter().collect()
}

fn apply_split(
    p: &mut Partition,
    c: usize,
    groups: Vec<(usize, Vec<usize>)>,
    queue: &mut VecDeque<usize>,
) {
    let mut it = groups.into_iter();
    let (_, first) = it.next().unwrap();
    p.cells[c] = first;
    queue.push_back(c);
    for (_, grp) in it {
        let idx = p.cells.len();
        for &v in &grp {
            p.loc[v] = idx;
        }
        p.cells.push(grp);
        queue.push_back(idx);
    }
}

fn apply_split_quiet(p: &mut Partition, c: usize, groups: Vec<(usize, Vec<usize>)>) {
    let mut it = groups.into_iter();
    let (_, first) = it.next().unwrap();
    p.cells[c] = first;
    for (_, grp) in it {
        let idx = p.cells.len();
        for &v in &grp {
            p.loc[v] = idx;
        }
        p.cells.push(grp);
    }
}

/// A paired search state mapping cells of `g`'s partition onto equally
/// indexed cells of `h`'s partition.
#[derive(Clone)]
struct PairState {
    pg: Partition,
    ph: Partition,
}

impl PairState {
    fn initial(g: &Graph, h: &Graph) -> Option<PairState> {
        let mut st = PairState {
            pg: Partition::unit(g.n()),
            ph: Partition::unit(h.n()),
        };
        let mut q = VecDeque::from([0]);
        refine_pair(&mut st.pg, &mut st.ph, g, h, &mut q).then_some(st)
    }

    /// Forces `a -> b` and re-refines. `a` indexes into `g`, `b` into `h`;
    /// both must lie in cells with the same index.
    fn force(&mut self, g: &Graph, h: &Graph, a: usize, b: usize) -> bool {
        let c = self.pg.loc[a];
        if self.ph.loc[b] != c {
            return false;
        }
        if self.pg.cells[c].len() == 1 {
            return self.ph.cells[c] == vec![b];
        }
        let (c1, c2) = self.pg.individualize(a);
        let (d1, d2) = self.ph.individualize(b);
        debug_assert_eq!((c1, c2), (d1, d2));
        let mut q = VecDeque::from([c1, c2]);
        refine_pair(&mut self.pg, &mut self.ph, g, h, &mut q)
    }

    /// Full backtracking search for an isomorphism extending this state.
    fn extend(&self, g: &Graph, h: &Graph) -> Option<Permutation> {
        if self.pg.discrete() {
            let mut images = vec![0; g.n()];
            for (i, cell) in self.pg.cells.iter().enumerate() {
                images[cell[0]] = self.ph.cells[i][0];
            }
            let phi = Permutation::new(images).ok()?;
            return mapping_preserves_edges(&phi, g, h).then_some(phi);
        }
        let c = self.pg.branch_cell().expect("non-discrete partition");
        let v = self.pg.cells[c][0];
        let candidates = self.ph.cells[c].clone();
        for u in candidates {
            let mut next = self.clone();
            if next.force(g, h, v, u) {
                if let Some(phi) = next.extend(g, h) {
                    return Some(phi);
                }
            }
        }
        None
    }
}

fn mapping_preserves_edges(phi: &Permutation, g: &Graph, h: &Graph) -> bool {
    for v in 0..g.n() {
        let mut mapped = Bitset::EMPTY;
        for &w in g.neighbors(v) {
            mapped.insert(phi.image(w));
        }
        if &mapped != h.row(phi.image(v)) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

/// Generating set for the full automorphism group of `g`, found along the
/// stabilizer tower with base 0, 1, ..., n-1.
pub fn automorphisms(g: &Graph) -> Result<GeneratorSet> {
    let n = g.n();
    if n == 0 {
        return Ok(GeneratorSet {
            degree: 0,
            gens: Vec::new(),
            base_orbit_sizes: Some(Vec::new()),
        });
    }
    let mut gens: Vec<Permutation> = Vec::new();
    let mut sizes = Vec::with_capacity(n);
    // state with 0..i-1 forced to themselves
    let mut state = PairState::initial(g, g).expect("self-pairing always refines");
    for i in 0..n {
        if state.pg.discrete() {
            break;
        }
        let mut orbit = Bitset::singleton(i);
        let cell = state.pg.cells[state.pg.loc[i]].clone();
        let before = gens.len();
        for &t in cell.iter().filter(|&&t| t > i) {
            if orbit.contains(t) {
                continue;
            }
            let mut attempt = state.clone();
            if attempt.force(g, g, i, t) {
                if let Some(phi) = attempt.extend(g, g) {
                    gens.push(phi);
                    let level_gens: Vec<&Permutation> = gens[before..].iter().collect();
                    grow_orbit(&mut orbit, &level_gens);
                }
            }
        }
        sizes.push(orbit.len());
        if !state.force(g, g, i, i) {
            unreachable!("identity always extends the identity prefix");
        }
    }
    Ok(GeneratorSet {
        degree: n,
        gens,
        base_orbit_sizes: Some(sizes),
    })
}

fn grow_orbit(orbit: &mut Bitset, gens: &[&Permutation]) {
    let mut stack: Vec<usize> = orbit.to_vec();
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.image(x);
            if !orbit.contains(y) {
                orbit.insert(y);
                stack.push(y);
            }
        }
    }
}

/// True iff the orbit of vertex 0 under the automorphism group is the whole
/// vertex set. Only the first level of the stabilizer tower is searched.
pub fn is_vertex_transitive(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let state = match PairState::initial(g, g) {
        Some(s) => s,
        None => unreachable!("self-pairing always refines"),
    };
    let cell = state.pg.cells[state.pg.loc[0]].clone();
    if cell.len() != n {
        // vertex 0 is separated from some vertex by an invariant
        return false;
    }
    let mut gens: Vec<Permutation> = Vec::new();
    let mut orbit = Bitset::singleton(0);
    for t in 1..n {
        if orbit.contains(t) {
            continue;
        }
        let mut attempt = state.clone();
        if attempt.force(g, g, 0, t) {
            if let Some(phi) = attempt.extend(g, g) {
                gens.push(phi);
                let refs: Vec<&Permutation> = gens.iter().collect();
                grow_orbit(&mut orbit, &refs);
                continue;
            }
        }
        if !orbit.contains(t) {
            return false;
        }
    }
    orbit.len() == n
}

/// Edge-preserving bijection test via degree-partition-refined backtracking.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// An explicit isomorphism when one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Permutation> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    if g.n() == 0 {
        return Some(Permutation::identity(0));
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    PairState::initial(g, h)?.extend(g, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{johnson, standard};

    #[test]
    fn permutation_basics() {
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(p.inverse().images(), &[2, 0, 1]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3]).is_err());
        let s = VertexSet::new(vec![0, 2]);
        assert_eq!(p.apply_set(&s), VertexSet::new(vec![0, 1]));
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,2,0]");
    }

    #[test]
    fn aut_orders_of_standard_graphs() {
        assert_eq!(automorphisms(&standard::complete(4)).unwrap().order().unwrap(), 24);
        assert_eq!(automorphisms(&standard::cycle(4)).unwrap().order().unwrap(), 8);
        assert_eq!(automorphisms(&standard::cycle(5)).unwrap().order().unwrap(), 10);
        assert_eq!(automorphisms(&standard::path(3)).unwrap().order().unwrap(), 2);
        assert_eq!(automorphisms(&standard::empty(0)).unwrap().order().unwrap(), 1);
        assert_eq!(automorphisms(&standard::empty(5)).unwrap().order().unwrap(), 120);
    }

    #[test]
    fn aut_order_of_petersen() {
        let a = automorphisms(&standard::petersen()).unwrap();
        assert_eq!(a.order().unwrap(), 120);
        for g in a.gens() {
            assert!(g.is_automorphism(&standard::petersen()));
        }
    }

    #[test]
    fn aut_order_matches_closure_enumeration() {
        for g in [
            standard::complete(4),
            standard::cycle(6),
            standard::path(4),
            standard::complete_bipartite(2, 3),
            standard::cycle(8),
        ] {
            let a = automorphisms(&g).unwrap();
            assert_eq!(a.order().unwrap(), a.elements().unwrap().len() as u128);
        }
    }

    #[test]
    fn every_generator_is_an_automorphism() {
        for g in [
            standard::complete_bipartite(3, 3),
            standard::petersen(),
            standard::cycle(7).complement(),
        ] {
            let a = automorphisms(&g).unwrap();
            for phi in a.gens() {
                assert!(phi.is_automorphism(&g));
            }
        }
    }

    #[test]
    fn vertex_transitivity() {
        assert!(is_vertex_transitive(&standard::cycle(9)));
        assert!(!is_vertex_transitive(&standard::path(3)));
        assert!(is_vertex_transitive(&standard::petersen()));
        assert!(is_vertex_transitive(&standard::empty(4)));
        assert!(is_vertex_transitive(&standard::empty(0)));
        assert!(!is_vertex_transitive(
            &Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
        ));
    }

    #[test]
    fn orbits() {
        let a = automorphisms(&standard::path(3)).unwrap();
        // path 0-1-2: endpoints 0 and 2 swap, center fixed
        assert_eq!(a.orbit(0).unwrap(), VertexSet::new(vec![0, 2]));
        assert_eq!(a.orbit(1).unwrap(), VertexSet::new(vec![1]));
        let b = automorphisms(&standard::complete_bipartite(3, 3)).unwrap();
        assert_eq!(b.orbit(0).unwrap().len(), 6);
        assert!(a.orbit(9).is_err());
    }

    #[test]
    fn transitive_group_order_divisible_by_degree() {
        for g in [
            standard::petersen(),
            standard::cycle(12),
            standard::complete_bipartite(4, 4),
        ] {
            let a = automorphisms(&g).unwrap();
            assert_eq!(a.order().unwrap() % g.n() as u128, 0);
        }
    }

    #[test]
    fn isomorphism_examples() {
        let c5 = standard::cycle(5);
        assert!(are_isomorphic(&c5, &c5.complement()));
        assert!(!are_isomorphic(
            &standard::complete_bipartite(3, 3),
            &standard::cycle(6)
        ));
        let j = johnson(5, 2, 0).unwrap();
        assert!(are_isomorphic(&j, &standard::petersen()));
        let l = standard::complete(4).line_graph().unwrap();
        assert!(are_isomorphic(&johnson(4, 2, 1).unwrap(), &l));
    }

    #[test]
    fn isomorphism_finds_valid_map() {
        let g = standard::petersen();
        let h = johnson(5, 2, 0).unwrap();
        let phi = find_isomorphism(&h, &g).unwrap();
        assert!(mapping_preserves_edges(&phi, &h, &g));
    }

    #[test]
    fn non_isomorphic_same_degree_sequence() {
        // C6 vs 2 triangles: both 2-regular on 6 vertices
        let c6 = standard::cycle(6);
        let two_k3 = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_k3));
    }

    #[test]
    fn generator_set_from_gens_order_via_closure() {
        let rot = Permutation::new(vec![1, 2, 3, 4, 0]).unwrap();
        let set = GeneratorSet::from_gens(5, vec![rot]).unwrap();
        assert_eq!(set.order().unwrap(), 5);
        assert!(set.is_transitive());
    }
}
