use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest universe a [`Subset`] can describe.
pub const MAX_ELEMENTS: usize = 256;

const WORDS: usize = MAX_ELEMENTS / 64;

/// A subset of the universe `0..n`, stored as a fixed-width bit vector.
///
/// Ordering compares universe size first and then the numeric value of the
/// bit vector, so `{0} < {1} < {0,1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    n: u16,
    words: [u64; WORDS],
}

impl Subset {
    /// The empty subset of `0..n`.
    ///
    /// # Panics
    /// If `n` exceeds [`MAX_ELEMENTS`].
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "universe of {n} elements exceeds {MAX_ELEMENTS}");
        Self { n: n as u16, words: [0; WORDS] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in 0..WORDS {
            let lo = w * 64;
            if lo >= n {
                break;
            }
            let hi = (lo + 64).min(n);
            s.words[w] = if hi - lo == 64 { u64::MAX } else { (1u64 << (hi - lo)) - 1 };
        }
        s
    }

    pub fn singleton(n: usize, x: usize) -> Result<Self> {
        Self::from_elements(n, [x])
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(n: usize, elements: I) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::BadOrder { n, max: MAX_ELEMENTS });
        }
        let mut s = Self::empty(n);
        for x in elements {
            if x >= n {
                return Err(Error::ElementOutOfRange { element: x, n });
            }
            s.insert(x);
        }
        Ok(s)
    }

    /// Builds the subset whose bit vector is `index`. Bits at or above `n` are dropped.
    pub fn from_index(n: usize, index: usize) -> Self {
        let mut s = Self::empty(n);
        let mask = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
        s.words[0] = index as u64 & mask;
        s
    }

    /// Numeric value of the bit vector. Only meaningful for `n <= 64`.
    #[inline]
    pub fn index(&self) -> usize {
        debug_assert!(self.n <= 64);
        self.words[0] as usize
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.n() && self.words[x / 64] >> (x % 64) & 1 == 1
    }

    /// # Panics
    /// If `x` is outside the universe.
    #[inline]
    pub fn insert(&mut self, x: usize) {
        assert!(x < self.n(), "element {x} outside universe of {}", self.n);
        self.words[x / 64] |= 1 << (x % 64);
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        if x < self.n() {
            self.words[x / 64] &= !(1 << (x % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.n, other.n, "subsets of different universes");
        let mut out = *self;
        for (o, w) in out.words.iter_mut().zip(other.words) {
            *o = f(*o, w);
        }
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.n()).difference(self)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words).any(|(a, b)| a & b != 0)
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Elements in ascending order.
    pub fn iter(&self) -> Elements {
        Elements { set: *self, word: 0, rest: self.words[0] }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Serialized as the ascending array of its elements.
impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for x in self.iter() {
            seq.serialize_element(&x)?;
        }
        seq.end()
    }
}

pub struct Elements {
    set: Subset,
    word: usize,
    rest: u64,
}

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.rest != 0 {
                let bit = self.rest.trailing_zeros() as usize;
                self.rest &= self.rest - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
            if self.word >= WORDS {
                return None;
            }
            self.rest = self.set.words[self.word];
        }
    }
}

impl IntoIterator for &Subset {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_empty() {
        assert_eq!(Subset::full(3).to_vec(), vec![0, 1, 2]);
        assert!(Subset::empty(3).is_empty());
        assert_eq!(Subset::full(64).len(), 64);
        assert_eq!(Subset::full(200).len(), 200);
        assert!(!Subset::full(200).contains(200));
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            Subset::from_elements(3, [0, 3]),
            Err(Error::ElementOutOfRange { element: 3, n: 3 })
        );
    }

    #[test]
    fn order_is_numeric_on_bit_value() {
        let a = Subset::from_elements(3, [0]).unwrap();
        let b = Subset::from_elements(3, [1]).unwrap();
        let c = Subset::from_elements(3, [0, 1]).unwrap();
        let d = Subset::from_elements(100, [70]).unwrap();
        let e = Subset::from_elements(100, [0, 1, 2]).unwrap();
        assert!(a < b && b < c);
        assert!(e < d);
    }

    #[test]
    fn serializes_as_element_array() {
        let s = Subset::from_elements(5, [4, 0, 2]).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,2,4]");
    }

    proptest! {
        #[test]
        fn complement_partitions(n in 1usize..=256, seed in any::<u64>()) {
            let elems = (0..n).filter(|x| (seed.rotate_left(*x as u32 % 64) ^ *x as u64) & 1 == 1);
            let a = Subset::from_elements(n, elems).unwrap();
            let c = a.complement();
            prop_assert!(!a.intersects(&c));
            prop_assert_eq!(a.union(&c), Subset::full(n));
            prop_assert_eq!(a.len() + c.len(), n);
        }

        #[test]
        fn index_round_trips(n in 0usize..=20, idx in any::<usize>()) {
            let idx = idx & ((1 << n) - 1);
            prop_assert_eq!(Subset::from_index(n, idx).index(), idx);
        }
    }
}
