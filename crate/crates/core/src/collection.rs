use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

use crate::bitmap;
use crate::error::{Error, Result};
use crate::limits::{check_enumerable, HARD_MAX_N};
use crate::subset::Subset;

/// Pairwise scans are used below this many candidate pairs; transforms above.
const PAIRWISE_LIMIT: usize = 1 << 14;

/// Classification of a collection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ClassFlags {
    pub proper: bool,
    pub stack: bool,
    pub filter: bool,
    pub grill: bool,
    pub ultrafilter: bool,
    /// Needs the semigroup; filled in by [`crate::relative::classify_in`].
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product_filter: Option<bool>,
}

/// A family of subsets of `0..n`, stored as a membership bitmap over all `2ⁿ` subsets.
///
/// Members iterate in ascending bit-vector order without duplicates.
pub struct Collection {
    n: u8,
    bits: SmallVec<[u64; 2]>,
    flags: OnceLock<ClassFlags>,
}

impl Clone for Collection {
    fn clone(&self) -> Self {
        let flags = OnceLock::new();
        if let Some(f) = self.flags.get() {
            let _ = flags.set(*f);
        }
        Self { n: self.n, bits: self.bits.clone(), flags }
    }
}

impl PartialEq for Collection {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

impl Eq for Collection {}

impl Hash for Collection {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bits.hash(state);
    }
}

impl Collection {
    fn blank(n: usize) -> Self {
        Self { n: n as u8, bits: smallvec![0; bitmap::word_count(n)], flags: OnceLock::new() }
    }

    fn from_bits(n: usize, bits: SmallVec<[u64; 2]>) -> Self {
        Self { n: n as u8, bits, flags: OnceLock::new() }
    }

    /// The empty collection on `0..n`.
    pub fn empty(n: usize) -> Result<Self> {
        check_enumerable(n)?;
        Ok(Self::blank(n))
    }

    /// `P(S)`: every subset.
    pub fn power_set(n: usize) -> Result<Self> {
        let mut c = Self::empty(n)?;
        bitmap::negate(&mut c.bits, n);
        Ok(c)
    }

    /// `{S}`.
    pub fn universe(n: usize) -> Result<Self> {
        let mut c = Self::empty(n)?;
        c.insert_index((1 << n) - 1);
        Ok(c)
    }

    /// `up(B) = {A : B ⊆ A}`, the principal filter generated by `B`.
    pub fn principal(b: &Subset) -> Result<Self> {
        let n = b.n();
        let mut c = Self::empty(n)?;
        c.insert_index(b.index());
        bitmap::up_closure(&mut c.bits, n);
        Ok(c)
    }

    pub fn from_subsets<'a, I: IntoIterator<Item = &'a Subset>>(n: usize, sets: I) -> Result<Self> {
        let mut c = Self::empty(n)?;
        for s in sets {
            c.insert(s)?;
        }
        Ok(c)
    }

    /// Builds a collection from element lists, e.g. `[[0], [0, 1]]`.
    pub fn from_sets<V: AsRef<[usize]>>(n: usize, sets: &[V]) -> Result<Self> {
        let mut c = Self::empty(n)?;
        for s in sets {
            c.insert(&Subset::from_elements(n, s.as_ref().iter().copied())?)?;
        }
        Ok(c)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Result<Self> {
        let mut c = Self::empty(n)?;
        for i in indices {
            if i >> n != 0 {
                return Err(Error::Parse(format!("subset index {i} out of range for n = {n}")));
            }
            c.insert_index(i);
        }
        Ok(c)
    }

    /// Collection on `n <= 6` elements whose bitmap is the single word `word`.
    ///
    /// # Panics
    /// If `n > 6`.
    pub fn from_word(n: usize, word: u64) -> Self {
        assert!(n <= 6, "single-word collections need n <= 6");
        Self::from_bits(n, smallvec![word & bitmap::tail_mask(n)])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Raw bitmap words.
    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    /// The single bitmap word of a collection on at most 6 elements.
    pub fn word(&self) -> u64 {
        debug_assert!(self.n <= 6);
        self.bits[0]
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains_index(&self, i: usize) -> bool {
        self.bits[i >> 6] >> (i & 63) & 1 == 1
    }

    pub fn contains(&self, a: &Subset) -> bool {
        a.n() == self.n() && self.contains_index(a.index())
    }

    pub fn contains_empty(&self) -> bool {
        self.contains_index(0)
    }

    /// Whether `S` itself is a member.
    pub fn contains_full(&self) -> bool {
        self.contains_index((1 << self.n) - 1)
    }

    pub fn insert(&mut self, a: &Subset) -> Result<()> {
        self.check_universe(a.n())?;
        self.insert_index(a.index());
        Ok(())
    }

    #[inline]
    pub(crate) fn insert_index(&mut self, i: usize) {
        self.bits[i >> 6] |= 1 << (i & 63);
        self.flags = OnceLock::new();
    }

    pub(crate) fn check_universe(&self, n: usize) -> Result<()> {
        if n == self.n() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch { left: self.n(), right: n })
        }
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        self.check_universe(other.n())
    }

    /// Member indices in ascending order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k * 64 + b)
            })
        })
    }

    /// Members in ascending bit-vector order.
    pub fn members(&self) -> impl Iterator<Item = Subset> + '_ {
        let n = self.n();
        self.indices().map(move |i| Subset::from_index(n, i))
    }

    pub fn to_sets(&self) -> Vec<Vec<usize>> {
        self.members().map(|s| s.to_vec()).collect()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Result<Self> {
        self.check_same(other)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(&a, &b)| f(a, b)).collect();
        Ok(Self::from_bits(self.n(), bits))
    }

    /// Union of the two families (not of their members).
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a | b)
    }

    /// Intersection of the two families.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a & b)
    }

    /// `∩C`, or `S` for the empty collection.
    pub fn kernel_set(&self) -> Subset {
        let full = (1usize << self.n) - 1;
        Subset::from_index(self.n(), self.indices().fold(full, |acc, i| acc & i))
    }

    /// Cached classification flags (without `product_filter`).
    pub fn flags(&self) -> ClassFlags {
        *self.flags.get_or_init(|| compute_flags(self))
    }

    pub fn is_proper(&self) -> bool {
        !self.is_empty() && !self.contains_empty()
    }

    pub fn is_stack(&self) -> bool {
        self.flags().stack
    }

    pub fn is_filter(&self) -> bool {
        self.flags().filter
    }

    pub fn is_grill(&self) -> bool {
        self.flags().grill
    }

    pub fn is_ultrafilter(&self) -> bool {
        self.flags().ultrafilter
    }

    pub fn is_proper_filter(&self) -> bool {
        self.is_filter() && self.is_proper()
    }
}

impl fmt::Debug for Collection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}

impl fmt::Display for Collection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// Serialized as `{"sets": [[...], ...]}`.
impl Serialize for Collection {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Collection", 1)?;
        st.serialize_field("sets", &self.to_sets())?;
        st.end()
    }
}

fn compute_flags(c: &Collection) -> ClassFlags {
    let n = c.n();
    let proper = c.is_proper();
    let mut up = c.bits.clone();
    bitmap::up_closure(&mut up, n);
    let stack = up == c.bits;
    // A stack is closed under finite intersections iff it holds the
    // intersection of all its members.
    let filter = stack && !c.is_empty() && c.contains(&c.kernel_set());
    let grill = stack && !c.contains_empty() && ramsey(c);
    ClassFlags { proper, stack, filter, grill, ultrafilter: filter && grill, product_filter: None }
}

/// `A₁ ∪ A₂ ∈ C ⇒ A₁ ∈ C or A₂ ∈ C`, over all pairs of subsets.
fn ramsey(c: &Collection) -> bool {
    let n = c.n();
    let mut outside = c.bits.clone();
    bitmap::negate(&mut outside, n);
    let outside = Collection::from_bits(n, outside);
    let count = outside.len();
    if count.saturating_mul(count) <= PAIRWISE_LIMIT {
        let out: Vec<usize> = outside.indices().collect();
        return !out.iter().any(|&a| out.iter().any(|&b| c.contains_index(a | b)));
    }
    // Number of pairs of non-members whose union is exactly X, via a subset-sum
    // convolution.
    let size = 1usize << n;
    let mut z: Vec<u64> = (0..size).map(|i| outside.contains_index(i) as u64).collect();
    for j in 0..n {
        for i in 0..size {
            if i >> j & 1 == 1 {
                z[i] = z[i].wrapping_add(z[i ^ (1 << j)]);
            }
        }
    }
    for v in z.iter_mut() {
        *v = v.wrapping_mul(*v);
    }
    for j in 0..n {
        for i in 0..size {
            if i >> j & 1 == 1 {
                z[i] = z[i].wrapping_sub(z[i ^ (1 << j)]);
            }
        }
    }
    !(0..size).any(|x| z[x] != 0 && c.contains_index(x))
}

/// `C* = {A ⊆ S : A ∩ B ≠ ∅ for every B ∈ C}`.
pub fn mesh(c: &Collection) -> Collection {
    // A misses some member B iff A ⊆ S∖B, so C* is the complement of the
    // down-closure of the member complements.
    let n = c.n();
    let mut bits = c.bits.clone();
    bitmap::complement_members(&mut bits, n);
    bitmap::down_closure(&mut bits, n);
    bitmap::negate(&mut bits, n);
    Collection::from_bits(n, bits)
}

/// `C** = {A : B ⊆ A for some B ∈ C}`.
pub fn stack_closure(c: &Collection) -> Collection {
    let n = c.n();
    let mut bits = c.bits.clone();
    bitmap::up_closure(&mut bits, n);
    Collection::from_bits(n, bits)
}

/// Definitional classification of `C`.
pub fn classify(c: &Collection) -> ClassFlags {
    c.flags()
}

/// `C₁ ⊓ C₂ = {A₁ ∩ A₂ : A₁ ∈ C₁, A₂ ∈ C₂}`.
pub fn meet_wedge(c1: &Collection, c2: &Collection) -> Result<Collection> {
    c1.check_same(c2)?;
    let n = c1.n();
    let mut out = Collection::blank(n);
    if c1.len().saturating_mul(c2.len()) <= PAIRWISE_LIMIT {
        let right: Vec<usize> = c2.indices().collect();
        for a in c1.indices() {
            for &b in &right {
                out.bits[(a & b) >> 6] |= 1 << ((a & b) & 63);
            }
        }
        return Ok(out);
    }
    // Superset-sum convolution: pairs with A₁ ∩ A₂ = X.
    let size = 1usize << n;
    let zeta = |c: &Collection| {
        let mut z: Vec<u64> = (0..size).map(|i| c.contains_index(i) as u64).collect();
        for j in 0..n {
            for i in 0..size {
                if i >> j & 1 == 0 {
                    z[i] = z[i].wrapping_add(z[i | (1 << j)]);
                }
            }
        }
        z
    };
    let z1 = zeta(c1);
    let mut z: Vec<u64> = zeta(c2).iter().zip(&z1).map(|(a, b)| a.wrapping_mul(*b)).collect();
    for j in 0..n {
        for i in 0..size {
            if i >> j & 1 == 0 {
                z[i] = z[i].wrapping_sub(z[i | (1 << j)]);
            }
        }
    }
    for (x, v) in z.iter().enumerate() {
        if *v != 0 {
            out.bits[x >> 6] |= 1 << (x & 63);
        }
    }
    Ok(out)
}

/// `F ⊓ F*` for a stack `F`; always a grill.
pub fn grill_of_stack(f: &Collection) -> Result<Collection> {
    if !f.is_stack() {
        return Err(Error::NotAStack);
    }
    meet_wedge(f, &mesh(f))
}

/// The ⊆-minimal members of `C`, ascending.
pub fn minimal_members(c: &Collection) -> Vec<Subset> {
    let up = stack_closure(c);
    c.indices()
        .filter(|&x| {
            let mut rest = x;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if up.contains_index(x ^ bit) {
                    return false;
                }
                rest ^= bit;
            }
            true
        })
        .map(|x| Subset::from_index(c.n(), x))
        .collect()
}

/// All maximal proper filters inside the stack `C`: `up(B)` for each minimal member `B`.
///
/// Empty when `C` is empty or contains `∅`.
pub fn maximal_filters_in(c: &Collection) -> Result<Vec<Collection>> {
    if !c.is_stack() {
        return Err(Error::NotAStack);
    }
    if c.contains_empty() {
        return Ok(Vec::new());
    }
    minimal_members(c).iter().map(Collection::principal).collect()
}

/// Bitmaps never exceed this many elements.
pub const COLLECTION_MAX_N: usize = HARD_MAX_N;
