//! Fixed-width vertex subsets.

use std::fmt;

/// Maximum number of vertices any [`crate::Graph`] may have.
pub const MAX_ORDER: usize = 64;

/// A set of vertex indices packed into one machine word.
///
/// Bit `v` is set iff vertex `v` is a member. The owning graph keeps every
/// bit at or above its order clear.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All vertices `0..n`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member, if any.
    #[inline]
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` with exactly `k` members, in lexicographic order
    /// of their sorted member lists.
    pub fn subsets_of_size(self, k: usize) -> Subsets {
        Subsets::new(self, k)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Lexicographic enumeration of the `k`-subsets of a ground set.
pub struct Subsets {
    ground: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl Subsets {
    fn new(ground: VertexSet, k: usize) -> Self {
        let ground = ground.to_vec();
        let done = k > ground.len();
        Subsets {
            idx: (0..k).collect(),
            ground,
            done,
        }
    }
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out: VertexSet = self.idx.iter().map(|&i| self.ground[i]).collect();
        // advance to the next index combination
        let n = self.ground.len();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_len() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(5).len(), 5);
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn iter_ascending() {
        let s: VertexSet = [5, 1, 63, 0].into_iter().collect();
        assert_eq!(s.to_vec(), vec![0, 1, 5, 63]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.last(), Some(63));
        assert_eq!(VertexSet::EMPTY.first(), None);
    }

    #[test]
    fn subsets_lexicographic() {
        let ground: VertexSet = [1, 3, 4, 7].into_iter().collect();
        let got: Vec<Vec<usize>> = ground.subsets_of_size(2).map(|s| s.to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![1, 3],
                vec![1, 4],
                vec![1, 7],
                vec![3, 4],
                vec![3, 7],
                vec![4, 7]
            ]
        );
        assert_eq!(ground.subsets_of_size(0).count(), 1);
        assert_eq!(ground.subsets_of_size(5).count(), 0);
        assert_eq!(VertexSet::full(10).subsets_of_size(4).count(), 210);
    }

    #[test]
    fn display() {
        let s: VertexSet = [2, 0].into_iter().collect();
        assert_eq!(s.to_string(), "{0,2}");
    }
}
