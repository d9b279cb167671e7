//! Constructors for the named graph families: complete graphs, cycles,
//! complete bipartite graphs, Cayley graphs, the quadruple-chain family
//! `H_n`, generalized Johnson graphs, the five-vertex local graphs
//! `L1..L6`, and the four 5-valent families with local graph `L1`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{ConnectionSet, GroupSpec};
use crate::perm::Permutation;

/// Plain standard graphs on their conventional vertex orderings.
pub mod standard {
    use super::*;

    /// K_n
    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true).unwrap()
    }

    /// The cycle C_n (for n <= 2 this degenerates to K_n).
    pub fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| (u + 1) % n == v || (v + 1) % n == u).unwrap()
    }

    /// nK1
    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(n, &[]).unwrap()
    }

    /// The path on n vertices.
    pub fn path(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| u + 1 == v || v + 1 == u).unwrap()
    }

    /// K_{a,b} with parts 0..a and a..a+b.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_fn(a + b, |u, v| (u < a) != (v < a)).unwrap()
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9,
    /// spokes i ~ i+5.
    pub fn petersen() -> Graph {
        Graph::from_fn(10, |u, v| {
            let (u, v) = (u.min(v), u.max(v));
            if v < 5 {
                (u + 1) % 5 == v || (v + 1) % 5 == u
            } else if u >= 5 {
                (u - 5 + 2) % 5 == v - 5 || (v - 5 + 2) % 5 == u - 5
            } else {
                v == u + 5
            }
        })
        .unwrap()
    }

    /// The six five-vertex graphs with exactly one triangle and no
    /// universal vertex. `L1` is the disjoint union of K3 and two isolated
    /// vertices; the numbering of the rest is this crate's convention,
    /// chosen so that L4 is the local graph of K3□K4, L5 the triangle with
    /// a two-edge tail, and L6 the local graph of the complement of C8.
    pub fn local_graph_l(i: usize) -> Result<Graph> {
        let edges: &[(usize, usize)] = match i {
            // K3 + 2K1
            1 => &[(0, 1), (0, 2), (1, 2)],
            // paw + K1: triangle with a pendant
            2 => &[(0, 1), (0, 2), (1, 2), (0, 3)],
            // bull: triangle with two horns
            3 => &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)],
            // K3 + K2
            4 => &[(0, 1), (0, 2), (1, 2), (3, 4)],
            // triangle with a path of length two attached
            5 => &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)],
            // house: complement of P5
            6 => &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)],
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "local graph index {i} not in 1..=6"
                )))
            }
        };
        Graph::from_edges(5, edges)
    }
}

/// Cayley graph of `grp` with respect to the connection set `s`:
/// vertices are group elements in their integer encoding, with
/// `x ~ y` iff `x^{-1} y` lies in `s`.
pub fn cayley(grp: &GroupSpec, s: &ConnectionSet) -> Result<Graph> {
    let n = grp.order();
    let elems = s.elements();
    Graph::from_fn(n, |x, y| {
        let d = grp.multiply(grp.inverse(x), y);
        elems.binary_search(&d).is_ok()
    })
}

/// Circulant Cay(Z_n, ±d for d in steps). Steps are reduced mod n and
/// closed under negation before validation, so `steps` may list one
/// representative per inverse pair.
pub fn circulant(n: usize, steps: &[usize]) -> Result<Graph> {
    let grp = GroupSpec::Cyclic(n);
    let mut els = Vec::new();
    for &d in steps {
        els.push(d % n);
        els.push((n - d % n) % n);
    }
    let s = ConnectionSet::new(&grp, els)?;
    cayley(&grp, &s)
}

/// The 4-regular graph H_n of order 4n: quadruple cliques
/// {x_i, y_i, z_i, w_i} chained by z_i ~ x_{i+1}, w_i ~ y_{i+1} and closed
/// up by x_1 ~ z_n, y_1 ~ w_n.
///
/// Vertex layout: quadruple i (0-based) occupies 4i..4i+4 as x, y, z, w.
pub fn h_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter("h_graph requires n >= 2".into()));
    }
    let x = |i: usize| 4 * i;
    let y = |i: usize| 4 * i + 1;
    let z = |i: usize| 4 * i + 2;
    let w = |i: usize| 4 * i + 3;
    let mut edges = Vec::new();
    for i in 0..n {
        let q = [x(i), y(i), z(i), w(i)];
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((q[a], q[b]));
            }
        }
    }
    for i in 0..n - 1 {
        edges.push((z(i), x(i + 1)));
        edges.push((w(i), y(i + 1)));
    }
    edges.push((x(0), z(n - 1)));
    edges.push((y(0), w(n - 1)));
    Graph::from_edges(4 * n, &edges)
}

/// Generalized Johnson graph J(n, k, i): vertices are the k-subsets of
/// {1..n} in colexicographic order, adjacent iff the subsets intersect in
/// exactly `i` elements.
pub fn johnson(n: usize, k: usize, i: usize) -> Result<Graph> {
    if !(n > k && k > i) {
        return Err(Error::InvalidParameter(
            "johnson requires n > k > i >= 0".into(),
        ));
    }
    let subsets = k_subsets(n, k);
    Graph::from_fn(subsets.len(), |a, b| {
        intersection_size(&subsets[a], &subsets[b]) == i
    })
}

/// The k-subsets of {1..n} in colexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    let mut pick = vec![0usize; k];
    fn gen(all: &mut Vec<Vec<usize>>, pick: &mut Vec<usize>, depth: usize, lo: usize, n: usize) {
        if depth == pick.len() {
            all.push(pick.clone());
            return;
        }
        for v in lo..=n {
            pick[depth] = v;
            gen(all, pick, depth + 1, v + 1, n);
        }
    }
    gen(&mut all, &mut pick, 0, 1, n);
    all.sort_by_key(|s| colex_rank(s));
    all
}

/// Colexicographic rank of a strictly increasing subset of {1..n}:
/// sum of C(a_j - 1, j) over positions j = 1..k.
pub fn colex_rank(subset: &[usize]) -> usize {
    subset
        .iter()
        .enumerate()
        .map(|(j, &a)| binomial(a - 1, j + 1))
        .sum()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|x| b.contains(x)).count()
}

/// The permutation of J(n, k, i) vertices induced by a permutation of the
/// ground set {1..n} (given 0-based on 0..n).
pub fn johnson_induced_perm(n: usize, k: usize, ground: &Permutation) -> Result<Permutation> {
    let subsets = k_subsets(n, k);
    let mut images = Vec::with_capacity(subsets.len());
    for s in &subsets {
        let mut t: Vec<usize> = s.iter().map(|&x| ground.image(x - 1) + 1).collect();
        t.sort_unstable();
        images.push(colex_rank(&t));
    }
    Permutation::new(images)
}

/// Vertex index of a ground-set subset in J(n, k, i).
pub fn johnson_vertex(subset: &[usize]) -> usize {
    let mut s = subset.to_vec();
    s.sort_unstable();
    colex_rank(&s)
}

/// The four 5-valent families with every local graph isomorphic to L1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum L1Family {
    /// Cay(Z_{4n}, {±1, ±n, ±2n})
    A,
    /// Cay(Z_{2n} x Z_2, {(±1,0), (n,0), (0,1), (n,1)})
    B,
    /// Cay(Z_n x Z_4, {(±1,0), (0,1), (0,2), (0,3)})
    C,
    /// H_n □ K_2
    D,
}

pub fn family_l1(which: L1Family, n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidParameter("family_l1 requires n >= 4".into()));
    }
    match which {
        L1Family::A => circulant(4 * n, &[1, n, 2 * n]),
        L1Family::B => {
            let grp = GroupSpec::DirectProduct(vec![2 * n, 2]);
            let els = vec![
                grp.element_from_tuple(&[1, 0])?,
                grp.element_from_tuple(&[2 * n - 1, 0])?,
                grp.element_from_tuple(&[n, 0])?,
                grp.element_from_tuple(&[0, 1])?,
                grp.element_from_tuple(&[n, 1])?,
            ];
            cayley(&grp, &ConnectionSet::new(&grp, els)?)
        }
        L1Family::C => {
            let grp = GroupSpec::DirectProduct(vec![n, 4]);
            let els = vec![
                grp.element_from_tuple(&[1, 0])?,
                grp.element_from_tuple(&[n - 1, 0])?,
                grp.element_from_tuple(&[0, 1])?,
                grp.element_from_tuple(&[0, 2])?,
                grp.element_from_tuple(&[0, 3])?,
            ];
            cayley(&grp, &ConnectionSet::new(&grp, els)?)
        }
        L1Family::D => h_graph(n)?.cartesian_product(&standard::complete(2)),
    }
}

/// Builds a named graph for the CLI and corpus registry. Returns the graph
/// and its display id.
pub fn by_name(name: &str, params: &[String]) -> Result<(Graph, String)> {
    let int = |i: usize| -> Result<usize> {
        params
            .get(i)
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| Error::InvalidParameter(format!("missing integer parameter {i}")))
    };
    match name {
        "k" => {
            let n = int(0)?;
            Ok((standard::complete(n), format!("K{n}")))
        }
        "c" => {
            let n = int(0)?;
            Ok((standard::cycle(n), format!("C{n}")))
        }
        "cbar" => {
            let n = int(0)?;
            Ok((standard::cycle(n).complement(), format!("C{n}-bar")))
        }
        "kb" => {
            let (a, b) = (int(0)?, int(1)?);
            Ok((standard::complete_bipartite(a, b), format!("K{a},{b}")))
        }
        "empty" => {
            let n = int(0)?;
            Ok((standard::empty(n), format!("{n}K1")))
        }
        "path" => {
            let n = int(0)?;
            Ok((standard::path(n), format!("P{n}")))
        }
        "petersen" => Ok((standard::petersen(), "Petersen".into())),
        "l" => {
            let i = int(0)?;
            Ok((standard::local_graph_l(i)?, format!("L{i}")))
        }
        "h" => {
            let n = int(0)?;
            Ok((h_graph(n)?, format!("H{n}")))
        }
        "johnson" => {
            let (n, k, i) = (int(0)?, int(1)?, int(2)?);
            Ok((johnson(n, k, i)?, format!("J({n},{k},{i})")))
        }
        "circulant" => {
            let n = int(0)?;
            let steps: Vec<usize> = params
                .get(1)
                .map(|p| p.split(',').filter_map(|t| t.parse().ok()).collect())
                .unwrap_or_default();
            if steps.is_empty() {
                return Err(Error::InvalidParameter(
                    "circulant needs a comma-separated step list".into(),
                ));
            }
            let mut label: Vec<String> = steps.iter().map(|s| s.to_string()).collect();
            label.sort();
            Ok((circulant(n, &steps)?, format!("Cay(Z{n},±{{{}}})", label.join(","))))
        }
        "family-l1" => {
            let which = match params.first().map(|s| s.as_str()) {
                Some("a") | Some("A") => L1Family::A,
                Some("b") | Some("B") => L1Family::B,
                Some("c") | Some("C") => L1Family::C,
                Some("d") | Some("D") => L1Family::D,
                _ => {
                    return Err(Error::InvalidParameter(
                        "family-l1 variant must be one of a, b, c, d".into(),
                    ))
                }
            };
            let n = int(1)?;
            Ok((family_l1(which, n)?, format!("L1-family-{which:?}-{n}")))
        }
        "line-k" => {
            let n = int(0)?;
            Ok((standard::complete(n).line_graph()?, format!("L(K{n})")))
        }
        "line-kb" => {
            let (a, b) = (int(0)?, int(1)?);
            Ok((
                standard::complete_bipartite(a, b).line_graph()?,
                format!("L(K{a},{b})"),
            ))
        }
        "k3-2k1" => Ok((
            standard::complete(3).lexicographic_product(&standard::empty(2))?,
            "K3[2K1]".into(),
        )),
        "c4-k2" => Ok((
            standard::cycle(4).lexicographic_product(&standard::complete(2))?,
            "C4[K2]".into(),
        )),
        "c3xc" => {
            let n = int(0)?;
            Ok((
                standard::complete(3).cartesian_product(&standard::cycle(n))?,
                format!("C3xC{n}"),
            ))
        }
        "k3xk4" => Ok((
            standard::complete(3).cartesian_product(&standard::complete(4))?,
            "K3xK4".into(),
        )),
        "k5xk2" => Ok((
            standard::complete(5).cartesian_product(&standard::complete(2))?,
            "K5xK2".into(),
        )),
        _ => Err(Error::UnknownName(name.into())),
    }
}
