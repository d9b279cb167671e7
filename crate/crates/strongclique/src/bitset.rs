//! Fixed-width 512-bit vertex sets.
//!
//! All search kernels (clique enumeration, refinement, domination search)
//! work on rows of this type, so graphs are capped at 512 vertices at
//! construction time.

/// Maximum number of vertices supported by the bitset kernels.
pub const MAX_VERTICES: usize = 512;

const WORDS: usize = MAX_VERTICES / 64;

/// A subset of `0..512`, stored as eight 64-bit words.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bitset {
    words: [u64; WORDS],
}

impl Bitset {
    pub const EMPTY: Bitset = Bitset { words: [0; WORDS] };

    /// Set of all vertices in `0..n`.
    pub fn full(n: usize) -> Bitset {
        assert!(n <= MAX_VERTICES);
        let mut b = Bitset::EMPTY;
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    pub fn singleton(v: usize) -> Bitset {
        let mut b = Bitset::EMPTY;
        b.insert(v);
        b
    }

    pub fn from_slice(vs: &[usize]) -> Bitset {
        let mut b = Bitset::EMPTY;
        for &v in vs {
            b.insert(v);
        }
        b
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn and(&self, other: &Bitset) -> Bitset {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w &= o;
        }
        Bitset { words }
    }

    #[inline]
    pub fn or(&self, other: &Bitset) -> Bitset {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w |= o;
        }
        Bitset { words }
    }

    /// Elements of `self` not in `other`.
    #[inline]
    pub fn diff(&self, other: &Bitset) -> Bitset {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        Bitset { words }
    }

    #[inline]
    pub fn intersects(&self, other: &Bitset) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn intersection_len(&self, other: &Bitset) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Bitset) -> bool {
        !self.intersects(other)
    }

    pub fn is_subset(&self, other: &Bitset) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// Lowest element, if any.
    #[inline]
    pub fn min(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Iterate elements in ascending order.
    pub fn iter(&self) -> BitsetIter {
        BitsetIter {
            words: self.words,
            word_idx: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for Bitset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct BitsetIter {
    words: [u64; WORDS],
    word_idx: usize,
}

impl Iterator for BitsetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word_idx < WORDS {
            let w = self.words[self.word_idx];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word_idx] &= w - 1;
                return Some(self.word_idx * 64 + bit);
            }
            self.word_idx += 1;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_contains() {
        let mut b = Bitset::EMPTY;
        assert!(b.is_empty());
        b.insert(0);
        b.insert(63);
        b.insert(64);
        b.insert(511);
        assert_eq!(b.len(), 4);
        assert!(b.contains(63) && b.contains(64));
        b.remove(63);
        assert!(!b.contains(63));
        assert_eq!(b.to_vec(), vec![0, 64, 511]);
    }

    #[test]
    fn set_algebra() {
        let a = Bitset::from_slice(&[1, 2, 3, 100]);
        let b = Bitset::from_slice(&[2, 3, 4, 200]);
        assert_eq!(a.and(&b).to_vec(), vec![2, 3]);
        assert_eq!(a.or(&b).len(), 6);
        assert_eq!(a.diff(&b).to_vec(), vec![1, 100]);
        assert!(a.intersects(&b));
        assert_eq!(a.intersection_len(&b), 2);
        assert!(Bitset::from_slice(&[2, 3]).is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.min(), Some(1));
        assert_eq!(Bitset::EMPTY.min(), None);
    }

    #[test]
    fn full_set() {
        let f = Bitset::full(70);
        assert_eq!(f.len(), 70);
        assert!(f.contains(69) && !f.contains(70));
    }
}
