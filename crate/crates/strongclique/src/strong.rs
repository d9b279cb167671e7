//! The core predicates: strong cliques and strong independent sets,
//! well-covered, CIS and localizable, the cardinality criterion for
//! vertex-transitive graphs, the irreducible intersection bound and the
//! half-order partition check.
//!
//! Every predicate that admits two independent routes computes both and
//! insists they agree: a strong clique is decided both by scanning the
//! maximal independent sets and by searching for an independent dominating
//! set, and localizability is decided by exact cover over the strong
//! cliques and cross-checked against the clique-graph criterion on
//! vertex-transitive CIS inputs.

use crate::bitset::Bitset;
use crate::clique::{self, CliqueList};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::perm;

/// Outcome of a strong-clique (or strong-independent-set) test. When the
/// set is not strong, `witness` is the lexicographically least maximal
/// independent set (resp. maximal clique) disjoint from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongVerdict {
    pub is_strong: bool,
    pub witness: Option<VertexSet>,
}

/// True iff every vertex of `b` has a neighbor in `a`.
pub fn dominates(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    a.check_range(g.n())?;
    b.check_range(g.n())?;
    let abits = a.bits();
    Ok(b.iter().all(|v| g.row(v).intersects(&abits)))
}

/// Strong-clique test. Runs both methods and panics on disagreement, since
/// that would mean one of the two kernels is wrong.
pub fn is_strong_clique(g: &Graph, c: &VertexSet) -> Result<StrongVerdict> {
    let mis = clique::maximal_independent_sets(g);
    is_strong_clique_with(g, c, &mis)
}

/// Same as [`is_strong_clique`] with a precomputed maximal independent set
/// list, so the list can be shared across the cliques of one graph.
pub fn is_strong_clique_with(g: &Graph, c: &VertexSet, mis: &CliqueList) -> Result<StrongVerdict> {
    if !g.is_clique(c) {
        return Err(Error::NotAClique);
    }
    let scan = strong_by_scan(c, mis);
    let dom = strong_by_domination(g, c);
    assert_eq!(
        scan.is_strong, dom,
        "strong-clique methods disagree on {c:?}"
    );
    Ok(scan)
}

/// Method A: a clique is strong iff no maximal independent set misses it.
/// The witness is the first (lexicographically least) one that does.
pub fn strong_by_scan(c: &VertexSet, mis: &CliqueList) -> StrongVerdict {
    let cbits = c.bits();
    for i in mis.iter() {
        if !i.bits().intersects(&cbits) {
            return StrongVerdict {
                is_strong: false,
                witness: Some(i.clone()),
            };
        }
    }
    StrongVerdict {
        is_strong: true,
        witness: None,
    }
}

/// Method B: a clique fails to be strong iff some independent set disjoint
/// from it dominates it. A minimal such set lives inside the union of the
/// outside-neighborhoods of the clique vertices, so the search picks one
/// dominator per clique vertex by backtracking.
///
/// Returns true when the clique IS strong (no dominating set found).
pub fn strong_by_domination(g: &Graph, c: &VertexSet) -> bool {
    let cbits = c.bits();
    let verts: Vec<usize> = c.iter().collect();
    if verts.is_empty() {
        // the empty clique intersects nothing: strong only in the empty graph
        return g.n() == 0;
    }
    let mut chosen = Bitset::EMPTY;
    !dominate_rec(g, &verts, &cbits, 0, &mut chosen)
}

fn dominate_rec(
    g: &Graph,
    clique: &[usize],
    cbits: &Bitset,
    idx: usize,
    chosen: &mut Bitset,
) -> bool {
    // first clique vertex not yet dominated
    let mut i = idx;
    while i < clique.len() && g.row(clique[i]).intersects(chosen) {
        i += 1;
    }
    if i == clique.len() {
        return true;
    }
    let candidates = g.row(clique[i]).diff(cbits);
    for u in candidates.iter() {
        if g.row(u).intersects(chosen) {
            continue; // u is adjacent to a chosen vertex: not independent
        }
        chosen.insert(u);
        if dominate_rec(g, clique, cbits, i + 1, chosen) {
            return true;
        }
        chosen.remove(u);
    }
    false
}

/// Strong-independent-set test: a strong independent set of `g` is a
/// strong clique of the complement.
pub fn is_strong_independent_set(g: &Graph, i: &VertexSet) -> Result<StrongVerdict> {
    if !g.is_independent(i) {
        return Err(Error::NotIndependent);
    }
    is_strong_clique(&g.complement(), i)
}

/// Cardinality criterion for cliques of vertex-transitive graphs:
/// `|C| * |I| = |V|` for every maximal independent set `I`. The caller is
/// responsible for checking vertex-transitivity; on other inputs the
/// result is meaningless.
pub fn vt_strong_criterion(g: &Graph, c: &VertexSet) -> Result<bool> {
    let mis = clique::maximal_independent_sets(g);
    vt_strong_criterion_with(g, c, &mis)
}

pub fn vt_strong_criterion_with(g: &Graph, c: &VertexSet, mis: &CliqueList) -> Result<bool> {
    if !g.is_clique(c) {
        return Err(Error::NotAClique);
    }
    let n = g.n();
    Ok(mis.iter().all(|i| c.len() * i.len() == n))
}

/// Some strong clique of `g`, or None. On vertex-transitive graphs the
/// search is restricted to maximum cliques (every strong clique is
/// maximum there); otherwise all maximal cliques are scanned.
pub fn has_strong_clique(g: &Graph) -> Option<VertexSet> {
    let cliques = clique::maximal_cliques(g);
    let mis = clique::maximal_independent_sets(g);
    has_strong_clique_with(g, &cliques, &mis)
}

pub fn has_strong_clique_with(
    g: &Graph,
    cliques: &CliqueList,
    mis: &CliqueList,
) -> Option<VertexSet> {
    let restrict_to_maximum = perm::is_vertex_transitive(g);
    let omega = cliques.max_size();
    cliques
        .iter()
        .filter(|c| !restrict_to_maximum || c.len() == omega)
        .find(|c| {
            is_strong_clique_with(g, c, mis)
                .map(|v| v.is_strong)
                .unwrap_or(false)
        })
        .cloned()
}

/// All maximal independent sets have the same size.
pub fn is_well_covered(g: &Graph) -> bool {
    clique::maximal_independent_sets(g).uniform_size()
}

/// All maximal cliques have the same size.
pub fn is_co_well_covered(g: &Graph) -> bool {
    clique::maximal_cliques(g).uniform_size()
}

/// CIS test: every maximal clique intersects every maximal independent
/// set. On vertex-transitive inputs the result is cross-checked against
/// the second route (a strong clique and a strong independent set exist).
pub fn is_cis(g: &Graph) -> bool {
    let cliques = clique::maximal_cliques(g);
    let mis = clique::maximal_independent_sets(g);
    let all_pairs = cis_by_pair_scan(&cliques, &mis);
    if perm::is_vertex_transitive(g) {
        let both = cis_by_strong_pair(g, &cliques, &mis);
        assert_eq!(
            all_pairs, both,
            "CIS methods disagree on a vertex-transitive graph"
        );
    }
    all_pairs
}

/// Method A: the all-pairs intersection scan.
pub fn cis_by_pair_scan(cliques: &CliqueList, mis: &CliqueList) -> bool {
    let mbits: Vec<Bitset> = mis.iter().map(|s| s.bits()).collect();
    cliques.iter().all(|c| {
        let cb = c.bits();
        mbits.iter().all(|m| m.intersects(&cb))
    })
}

/// Method B, sound for vertex-transitive graphs only: CIS iff the graph
/// admits a strong clique and a strong independent set.
pub fn cis_by_strong_pair(g: &Graph, cliques: &CliqueList, mis: &CliqueList) -> bool {
    if has_strong_clique_with(g, cliques, mis).is_none() {
        return false;
    }
    let comp = g.complement();
    // in the complement the roles of the two lists swap
    has_strong_clique_with(&comp, mis, cliques).is_some()
}

/// Localizability: a partition of the vertex set into strong cliques, or
/// None. Found by exact cover over the strong maximal cliques, branching
/// on the lowest uncovered vertex. On vertex-transitive CIS inputs the
/// verdict is cross-checked against the clique-graph criterion
/// α(Γ_Q) = α(Γ).
pub fn is_localizable(g: &Graph) -> Option<Vec<VertexSet>> {
    let cliques = clique::maximal_cliques(g);
    let mis = clique::maximal_independent_sets(g);
    let strong: Vec<&VertexSet> = cliques
        .iter()
        .filter(|c| strong_by_scan(c, &mis).is_strong)
        .collect();
    let partition = clique::exact_cover(g.n(), &strong);
    if perm::is_vertex_transitive(g) && cis_by_pair_scan(&cliques, &mis) {
        let by_clique_graph = localizable_by_clique_graph(&cliques, &mis);
        assert_eq!(
            partition.is_some(),
            by_clique_graph,
            "localizability methods disagree on a vertex-transitive CIS graph"
        );
    }
    partition
}

/// The clique-graph criterion of vertex-transitive CIS graphs:
/// localizable iff α(Γ_Q) = α(Γ).
pub fn localizable_by_clique_graph(cliques: &CliqueList, mis: &CliqueList) -> bool {
    let q = clique::clique_graph_of(cliques).expect("clique count bounded by vertex cap");
    clique::independence_number(&q) == mis.max_size()
}

/// Intersection bound for strong cliques of irreducible vertex-transitive
/// graphs: for every strong clique C and every other maximal clique C',
/// `|C ∩ C'| < |C| - 1`. Errors when the graph is reducible or not
/// vertex-transitive.
pub fn irreducible_intersection_check(g: &Graph) -> Result<bool> {
    if !g.twins(false).is_empty() {
        return Err(Error::PreconditionViolated(
            "graph is reducible (has open twins)".into(),
        ));
    }
    if !perm::is_vertex_transitive(g) {
        return Err(Error::PreconditionViolated(
            "graph is not vertex-transitive".into(),
        ));
    }
    let cliques = clique::maximal_cliques(g);
    let mis = clique::maximal_independent_sets(g);
    for c in cliques.iter() {
        if !strong_by_scan(c, &mis).is_strong {
            continue;
        }
        for other in cliques.iter() {
            if other == c {
                continue;
            }
            if c.intersection_len(other) + 1 >= c.len() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Half-order clique check: a vertex-transitive graph with a maximal
/// clique of size `|V|/2` must split into two strong cliques. Errors when
/// the preconditions fail; returns the two-part partition on success.
pub fn half_order_clique_check(g: &Graph) -> Result<Vec<VertexSet>> {
    if !perm::is_vertex_transitive(g) {
        return Err(Error::PreconditionViolated(
            "graph is not vertex-transitive".into(),
        ));
    }
    let cliques = clique::maximal_cliques(g);
    if g.n() == 0 || !g.n().is_multiple_of(2) || !cliques.iter().any(|c| c.len() == g.n() / 2) {
        return Err(Error::PreconditionViolated(
            "no maximal clique of size |V|/2".into(),
        ));
    }
    match is_localizable(g) {
        Some(parts) if parts.len() == 2 => Ok(parts),
        Some(parts) => Err(Error::PreconditionViolated(format!(
            "localizable but into {} parts",
            parts.len()
        ))),
        None => Err(Error::PreconditionViolated(
            "graph is not localizable".into(),
        )),
    }
}
