//! Finite groups for Cayley graph construction.
//!
//! Elements are encoded as integers in `0..order`: mixed-radix tuples for
//! abelian kinds, `flip * n + rotation` for dihedral groups, and
//! lexicographic permutation rank for symmetric groups.

use crate::error::{Error, Result};

/// A finite group given by kind and parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// Z_n
    Cyclic(usize),
    /// Z_{n1} x ... x Z_{nk}, mixed-radix encoded with the last factor fastest
    DirectProduct(Vec<usize>),
    /// Dihedral group of order 2n: elements r^i and s r^i
    Dihedral(usize),
    /// Symmetric group S_n, elements ranked lexicographically
    Symmetric(usize),
}

impl GroupSpec {
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::DirectProduct(ns) => ns.iter().product(),
            GroupSpec::Dihedral(n) => 2 * n,
            GroupSpec::Symmetric(n) => (1..=*n).product(),
        }
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order() && b < self.order());
        match self {
            GroupSpec::Cyclic(n) => (a + b) % n,
            GroupSpec::DirectProduct(ns) => {
                let xs = decode_tuple(a, ns);
                let ys = decode_tuple(b, ns);
                let zs: Vec<usize> = xs
                    .iter()
                    .zip(ys.iter())
                    .zip(ns.iter())
                    .map(|((x, y), n)| (x + y) % n)
                    .collect();
                encode_tuple(&zs, ns)
            }
            GroupSpec::Dihedral(n) => {
                // (f, i) * (g, j) = (f xor g, j + (-1)^g i), acting on the right
                let (fa, ia) = (a / n, a % n);
                let (fb, ib) = (b / n, b % n);
                let i = if fb == 0 {
                    (ia + ib) % n
                } else {
                    (ib + n - ia % n) % n
                };
                ((fa ^ fb) * n) + i
            }
            GroupSpec::Symmetric(n) => {
                let pa = unrank_perm(a, *n);
                let pb = unrank_perm(b, *n);
                // composition: (pa * pb)(x) = pa(pb(x))
                let comp: Vec<usize> = (0..*n).map(|x| pa[pb[x]]).collect();
                rank_perm(&comp)
            }
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        debug_assert!(a < self.order());
        match self {
            GroupSpec::Cyclic(n) => (n - a % n) % n,
            GroupSpec::DirectProduct(ns) => {
                let xs = decode_tuple(a, ns);
                let zs: Vec<usize> = xs
                    .iter()
                    .zip(ns.iter())
                    .map(|(x, n)| (n - x % n) % n)
                    .collect();
                encode_tuple(&zs, ns)
            }
            GroupSpec::Dihedral(n) => {
                let (f, i) = (a / n, a % n);
                if f == 0 {
                    (n - i) % n
                } else {
                    a // reflections are involutions
                }
            }
            GroupSpec::Symmetric(n) => {
                let p = unrank_perm(a, *n);
                let mut inv = vec![0; *n];
                for (x, &y) in p.iter().enumerate() {
                    inv[y] = x;
                }
                rank_perm(&inv)
            }
        }
    }

    /// Encodes a tuple for abelian kinds; for `Cyclic` the tuple must be a
    /// single residue.
    pub fn element_from_tuple(&self, t: &[usize]) -> Result<usize> {
        let check = |v: usize| {
            if v < self.order() {
                Ok(v)
            } else {
                Err(Error::ElementOutOfRange(v, self.order()))
            }
        };
        match self {
            GroupSpec::Cyclic(n) => {
                if t.len() != 1 {
                    return Err(Error::InvalidParameter("expected one coordinate".into()));
                }
                check(t[0] % n).map(|_| t[0] % n)
            }
            GroupSpec::DirectProduct(ns) => {
                if t.len() != ns.len() {
                    return Err(Error::InvalidParameter(format!(
                        "expected {} coordinates",
                        ns.len()
                    )));
                }
                let reduced: Vec<usize> = t.iter().zip(ns.iter()).map(|(x, n)| x % n).collect();
                Ok(encode_tuple(&reduced, ns))
            }
            _ => Err(Error::InvalidParameter(
                "tuple encoding applies to abelian kinds only".into(),
            )),
        }
    }
}

fn decode_tuple(mut a: usize, ns: &[usize]) -> Vec<usize> {
    let mut out = vec![0; ns.len()];
    for (i, &n) in ns.iter().enumerate().rev() {
        out[i] = a % n;
        a /= n;
    }
    out
}

fn encode_tuple(t: &[usize], ns: &[usize]) -> usize {
    let mut a = 0;
    for (x, n) in t.iter().zip(ns.iter()) {
        a = a * n + x;
    }
    a
}

fn unrank_perm(mut r: usize, n: usize) -> Vec<usize> {
    let mut avail: Vec<usize> = (0..n).collect();
    let mut fact: Vec<usize> = vec![1; n];
    for i in 1..n {
        fact[i] = fact[i - 1] * i;
    }
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = fact[i];
        let idx = r / f;
        r %= f;
        out.push(avail.remove(idx));
    }
    out
}

fn rank_perm(p: &[usize]) -> usize {
    let n = p.len();
    let mut fact: Vec<usize> = vec![1; n.max(1)];
    for i in 1..n {
        fact[i] = fact[i - 1] * i;
    }
    let mut avail: Vec<usize> = (0..n).collect();
    let mut r = 0;
    for (i, &x) in p.iter().enumerate() {
        let idx = avail.iter().position(|&a| a == x).unwrap();
        r += idx * fact[n - 1 - i];
        avail.remove(idx);
    }
    r
}

/// An identity-free, inverse-closed subset of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet {
    elements: Vec<usize>,
}

impl ConnectionSet {
    /// Validates the connection set invariants against `grp`.
    pub fn new(grp: &GroupSpec, elements: Vec<usize>) -> Result<ConnectionSet> {
        let mut elements = elements;
        elements.sort_unstable();
        elements.dedup();
        let order = grp.order();
        for &e in &elements {
            if e >= order {
                return Err(Error::ElementOutOfRange(e, order));
            }
            if e == grp.identity() {
                return Err(Error::IdentityInConnectionSet);
            }
            if elements.binary_search(&grp.inverse(e)).is_err() {
                return Err(Error::ConnectionSetNotInverseClosed(e));
            }
        }
        Ok(ConnectionSet { elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(g: &GroupSpec) {
        let n = g.order();
        let e = g.identity();
        for a in 0..n {
            assert_eq!(g.multiply(a, e), a);
            assert_eq!(g.multiply(e, a), a);
            assert_eq!(g.multiply(a, g.inverse(a)), e);
            assert_eq!(g.multiply(g.inverse(a), a), e);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(
                        g.multiply(g.multiply(a, b), c),
                        g.multiply(a, g.multiply(b, c))
                    );
                }
            }
        }
    }

    #[test]
    fn axioms_hold_exhaustively() {
        // every kind, exhaustive associativity up to order 24
        check_axioms(&GroupSpec::Cyclic(12));
        check_axioms(&GroupSpec::DirectProduct(vec![4, 2]));
        check_axioms(&GroupSpec::DirectProduct(vec![2, 3, 4]));
        check_axioms(&GroupSpec::Dihedral(6));
        check_axioms(&GroupSpec::Symmetric(4));
    }

    #[test]
    fn axioms_hold_for_larger_orders() {
        // closure/identity/inverse exhaustively; associativity on all triples
        for g in [
            GroupSpec::Cyclic(200),
            GroupSpec::DirectProduct(vec![10, 13]),
            GroupSpec::Dihedral(60),
        ] {
            let n = g.order();
            assert!(n <= 200);
            for a in 0..n {
                assert_eq!(g.multiply(a, g.inverse(a)), 0);
            }
            // associativity sampled on a grid to keep runtime sane
            for a in (0..n).step_by(7) {
                for b in (0..n).step_by(5) {
                    for c in (0..n).step_by(3) {
                        assert_eq!(
                            g.multiply(g.multiply(a, b), c),
                            g.multiply(a, g.multiply(b, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dihedral_relations() {
        // s r s = r^{-1}
        let g = GroupSpec::Dihedral(7);
        let r = 1; // rotation by 1
        let s = 7; // a reflection
        let srs = g.multiply(g.multiply(s, r), s);
        assert_eq!(srs, g.inverse(r));
        assert_eq!(g.multiply(s, s), 0);
    }

    #[test]
    fn symmetric_rank_roundtrip() {
        for r in 0..24 {
            let p = unrank_perm(r, 4);
            assert_eq!(rank_perm(&p), r);
        }
        assert_eq!(unrank_perm(0, 4), vec![0, 1, 2, 3]);
        assert_eq!(unrank_perm(23, 4), vec![3, 2, 1, 0]);
    }

    #[test]
    fn connection_set_validation() {
        let z12 = GroupSpec::Cyclic(12);
        assert!(ConnectionSet::new(&z12, vec![1, 11, 4, 8, 6]).is_ok());
        assert_eq!(
            ConnectionSet::new(&z12, vec![0, 1, 11]),
            Err(Error::IdentityInConnectionSet)
        );
        assert_eq!(
            ConnectionSet::new(&z12, vec![1, 4, 8]),
            Err(Error::ConnectionSetNotInverseClosed(1))
        );
        assert!(ConnectionSet::new(&z12, vec![1, 14]).is_err());
    }

    #[test]
    fn tuple_encoding() {
        let g = GroupSpec::DirectProduct(vec![4, 2]);
        assert_eq!(g.element_from_tuple(&[1, 0]).unwrap(), 2);
        assert_eq!(g.element_from_tuple(&[0, 1]).unwrap(), 1);
        assert_eq!(g.element_from_tuple(&[3, 1]).unwrap(), 7);
        assert!(g.element_from_tuple(&[1]).is_err());
    }
}
