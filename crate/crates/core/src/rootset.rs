use std::fmt;

/// Upper bound on the number of positive roots a system may have. E_8 has
/// 120, so every exceptional system and the classical ones up to the
/// corresponding rank fit.
pub const MAX_POSITIVE_ROOTS: usize = 128;

/// A set of positive-root indices stored as a 128-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    /// The set `{0, 1, …, len-1}`.
    pub fn full(len: usize) -> RootSet {
        debug_assert!(len <= MAX_POSITIVE_ROOTS);
        if len == 128 {
            RootSet(u128::MAX)
        } else {
            RootSet((1u128 << len) - 1)
        }
    }

    pub fn singleton(i: usize) -> RootSet {
        RootSet(1u128 << i)
    }

    pub fn from_bits(bits: u128) -> RootSet {
        RootSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: RootSet) -> RootSet {
        RootSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: RootSet) -> RootSet {
        RootSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: RootSet) -> RootSet {
        RootSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RootSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`RootSet`].
pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl IntoIterator for RootSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s: RootSet = [0, 5, 127].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(127));
        s.remove(5);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 127]);
        assert_eq!(RootSet::full(128).len(), 128);
        assert_eq!(RootSet::full(3), [0, 1, 2].into_iter().collect());
        assert!(RootSet::singleton(2).is_subset(RootSet::full(3)));
        assert!(!RootSet::full(3).is_subset(RootSet::singleton(2)));
    }
}
