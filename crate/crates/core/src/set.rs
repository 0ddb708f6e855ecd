use core::fmt;

const WORDS: usize = 8;

/// A set of element indices of a group of order at most 512.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementSet([u64; WORDS]);

impl ElementSet {
    pub const CAPACITY: usize = WORDS * 64;

    pub const fn empty() -> Self {
        ElementSet([0; WORDS])
    }

    /// `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::CAPACITY);
        let mut s = Self::empty();
        for (w, word) in s.0.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(x: usize) -> Self {
        let mut s = Self::empty();
        s.insert(x);
        s
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        let (w, b) = (x / 64, x % 64);
        let fresh = self.0[w] & (1 << b) == 0;
        self.0[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0[x / 64] &= !(1 << (x % 64));
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < Self::CAPACITY && self.0[x / 64] & (1 << (x % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a |= b;
        }
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a &= b;
        }
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a &= !b;
        }
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| a & !b == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter {
        Iter {
            words: self.0,
            word: 0,
        }
    }

    /// Low 128 bits, for groups small enough to use single-word masks.
    pub fn to_u128(&self) -> u128 {
        debug_assert!(self.0[2..].iter().all(|&w| w == 0));
        self.0[0] as u128 | (self.0[1] as u128) << 64
    }

    pub fn from_u128(mask: u128) -> Self {
        let mut s = Self::empty();
        s.0[0] = mask as u64;
        s.0[1] = (mask >> 64) as u64;
        s
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::empty();
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl Extend<usize> for ElementSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for x in iter {
            self.insert(x);
        }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + w.trailing_zeros() as usize);
            }
            self.word += 1;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn full_and_len() {
        for n in [0, 1, 63, 64, 65, 128, 200, 512] {
            let s = ElementSet::full(n);
            assert_eq!(s.len(), n);
            assert_eq!(s.iter().collect::<Vec<_>>(), (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn set_algebra() {
        let a: ElementSet = [1, 5, 70, 300].into_iter().collect();
        let b: ElementSet = [5, 300, 400].into_iter().collect();
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), [5, 300]);
        assert_eq!(a.union(&b).len(), 5);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), [1, 70]);
        assert!(a.intersection(&b).is_subset(&a));
        assert_eq!(b.first(), Some(5));
        assert!(!a.contains(600));
    }

    #[test]
    fn u128_round_trip() {
        let a: ElementSet = [0, 63, 64, 127].into_iter().collect();
        assert_eq!(ElementSet::from_u128(a.to_u128()), a);
    }
}
