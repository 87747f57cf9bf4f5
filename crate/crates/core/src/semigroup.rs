use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_ELEMENTS};

/// Universes up to this size get a cached table of all preimages `h⁻¹A`.
const PREIMAGE_TABLE_MAX_N: usize = 10;

/// A finite semigroup on the elements `0..n`, with a verified associative table.
#[derive(Clone, Debug)]
pub struct FiniteSemigroup {
    n: usize,
    table: Vec<u16>,
    name: Option<String>,
    elements: Option<Vec<String>>,
    preimages: OnceLock<Vec<u32>>,
}

impl PartialEq for FiniteSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table && self.name == other.name && self.elements == other.elements
    }
}

impl Eq for FiniteSemigroup {}

impl FiniteSemigroup {
    /// Validates a Cayley table, `table[i][j]` being the index of `i·j`.
    ///
    /// Reports the first out-of-range entry in row-major order, then the first
    /// non-associative triple in lexicographic order.
    pub fn validate_cayley(n: usize, table: &[Vec<usize>]) -> Result<Self> {
        if n == 0 || n > MAX_ELEMENTS {
            return Err(Error::BadOrder { n, max: MAX_ELEMENTS });
        }
        if table.len() != n {
            return Err(Error::NotSquare { n, detail: format!("found {} rows", table.len()) });
        }
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NotSquare { n, detail: format!("row {row} has {} entries", entries.len()) });
            }
        }
        for (i, entries) in table.iter().enumerate() {
            for (j, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::OutOfRangeEntry { i, j, value, n });
                }
            }
        }
        let flat: Vec<u16> = table.iter().flatten().map(|&v| v as u16).collect();
        let at = |i: usize, j: usize| flat[i * n + j] as usize;
        for i in 0..n {
            for j in 0..n {
                let ij = at(i, j);
                for k in 0..n {
                    if at(ij, k) != at(i, at(j, k)) {
                        return Err(Error::NonAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(Self { n, table: flat, name: None, elements: None, preimages: OnceLock::new() })
    }

    /// Like [`validate_cayley`](Self::validate_cayley) with `n` taken from the row count.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self> {
        Self::validate_cayley(table.len(), table)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Attaches display labels. The label count must match the order.
    pub fn with_elements(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Parse(format!(
                "{} element labels given for a semigroup of order {}",
                labels.len(),
                self.n
            )));
        }
        self.elements = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn elements(&self) -> Option<&[String]> {
        self.elements.as_deref()
    }

    /// Short label used in reports: the name, or `order-n` when unnamed.
    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("order-{}", self.n))
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.n + j] as usize
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    fn check_element(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { element: x, n: self.n })
        }
    }

    pub(crate) fn check_universe(&self, n: usize) -> Result<()> {
        if n == self.n {
            Ok(())
        } else {
            Err(Error::UniverseMismatch { left: self.n, right: n })
        }
    }

    /// `h⁻¹A = {x : h·x ∈ A}`.
    pub fn preimage(&self, h: usize, a: &Subset) -> Result<Subset> {
        self.check_element(h)?;
        self.check_universe(a.n())?;
        Ok(self.preimage_unchecked(h, a))
    }

    pub(crate) fn preimage_unchecked(&self, h: usize, a: &Subset) -> Subset {
        let mut out = Subset::empty(self.n);
        let row = &self.table[h * self.n..(h + 1) * self.n];
        for (x, &hx) in row.iter().enumerate() {
            if a.contains(hx as usize) {
                out.insert(x);
            }
        }
        out
    }

    /// Preimage on bit-vector indices; requires `n <= 24`.
    #[inline]
    pub(crate) fn preimage_index(&self, h: usize, a: usize) -> usize {
        if self.n <= PREIMAGE_TABLE_MAX_N {
            self.preimage_table()[(h << self.n) | a] as usize
        } else {
            let row = &self.table[h * self.n..(h + 1) * self.n];
            let mut out = 0usize;
            for (x, &hx) in row.iter().enumerate() {
                out |= ((a >> hx) & 1) << x;
            }
            out
        }
    }

    fn preimage_table(&self) -> &[u32] {
        self.preimages.get_or_init(|| {
            let n = self.n;
            let size = 1usize << n;
            let mut t = vec![0u32; n * size];
            for h in 0..n {
                // fiber[y] = {x : h·x = y}; preimage(A) = ⋃_{y∈A} fiber[y].
                let mut fiber = vec![0u32; n];
                for x in 0..n {
                    fiber[self.mul(h, x)] |= 1 << x;
                }
                let row = &mut t[h * size..(h + 1) * size];
                for a in 1..size {
                    let low = a.trailing_zeros() as usize;
                    row[a] = row[a & (a - 1)] | fiber[low];
                }
            }
            t
        })
    }

    /// `A·B = {a·b : a ∈ A, b ∈ B}`.
    pub fn set_product(&self, a: &Subset, b: &Subset) -> Subset {
        let mut out = Subset::empty(self.n);
        for x in a {
            for y in b {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// `{a·x : a ∈ A}`.
    pub fn right_multiply(&self, a: &Subset, x: usize) -> Subset {
        let mut out = Subset::empty(self.n);
        for y in a {
            out.insert(self.mul(y, x));
        }
        out
    }

    /// Checks `T·T ⊆ T`, reporting the first escaping pair in lexicographic order.
    pub fn check_subsemigroup(&self, t: &Subset) -> Result<()> {
        self.check_universe(t.n())?;
        for x in t {
            for y in t {
                let product = self.mul(x, y);
                if !t.contains(product) {
                    return Err(Error::NotASubsemigroup { x, y, product });
                }
            }
        }
        Ok(())
    }

    pub fn is_subsemigroup(&self, t: &Subset) -> bool {
        self.check_subsemigroup(t).is_ok()
    }

    /// All minimal left ideals of the subsemigroup `T`, sorted by bit-vector value.
    pub fn minimal_left_ideals(&self, t: &Subset) -> Result<Vec<Subset>> {
        self.check_subsemigroup(t)?;
        // In a finite semigroup the minimal left ideals are the ⊆-minimal
        // principal ones T·x.
        let principal: Vec<Subset> = t.iter().map(|x| self.set_product(t, &Subset::singleton(self.n, x).unwrap())).collect();
        let mut minimal: Vec<Subset> = principal
            .iter()
            .filter(|l| !principal.iter().any(|m| m != *l && m.is_subset_of(l)))
            .copied()
            .collect();
        minimal.sort();
        minimal.dedup();
        Ok(minimal)
    }

    /// The smallest two-sided ideal `K(T)` of the subsemigroup `T`.
    pub fn smallest_ideal(&self, t: &Subset) -> Result<Subset> {
        let k = self
            .minimal_left_ideals(t)?
            .iter()
            .fold(Subset::empty(self.n), |acc, l| acc.union(l));
        if !self.set_product(t, &k).is_subset_of(&k) || !self.set_product(&k, t).is_subset_of(&k) {
            return Err(Error::Internal(format!("union of minimal left ideals {k} is not a two-sided ideal")));
        }
        Ok(k)
    }

    /// `E(T) = {x ∈ T : x·x = x}`.
    pub fn idempotents(&self, t: &Subset) -> Subset {
        let mut out = Subset::empty(self.n);
        for x in t {
            if self.mul(x, x) == x {
                out.insert(x);
            }
        }
        out
    }
}

/// Plain serialized form of a semigroup, embedding the full table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CayleyRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    pub table: Vec<Vec<usize>>,
}

impl TryFrom<CayleyRecord> for FiniteSemigroup {
    type Error = Error;

    fn try_from(r: CayleyRecord) -> Result<Self> {
        let mut s = FiniteSemigroup::from_table(&r.table)?;
        if let Some(name) = r.name {
            s = s.with_name(name);
        }
        match r.elements {
            Some(labels) => s.with_elements(labels),
            None => Ok(s),
        }
    }
}

impl From<&FiniteSemigroup> for CayleyRecord {
    fn from(s: &FiniteSemigroup) -> Self {
        Self { name: s.name.clone(), elements: s.elements.clone(), table: s.table() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{standard_semigroup, SemigroupKind};
    use proptest::prelude::*;

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_elements(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn validates_z2_and_left_zero() {
        assert!(FiniteSemigroup::from_table(&[vec![0, 1], vec![1, 0]]).is_ok());
        assert!(FiniteSemigroup::from_table(&[vec![0, 0], vec![1, 1]]).is_ok());
    }

    #[test]
    fn reports_first_nonassociative_triple() {
        let err = FiniteSemigroup::from_table(&[vec![1, 0], vec![0, 0]]).unwrap_err();
        assert_eq!(err, Error::NonAssociative { i: 0, j: 0, k: 1 });
    }

    #[test]
    fn reports_out_of_range_and_shape() {
        assert_eq!(
            FiniteSemigroup::from_table(&[vec![0, 2], vec![1, 0]]).unwrap_err(),
            Error::OutOfRangeEntry { i: 0, j: 1, value: 2, n: 2 }
        );
        assert!(matches!(
            FiniteSemigroup::from_table(&[vec![0, 1], vec![1]]),
            Err(Error::NotSquare { .. })
        ));
        assert!(matches!(FiniteSemigroup::from_table(&[]), Err(Error::BadOrder { .. })));
    }

    #[test]
    fn preimage_examples() {
        let z3 = standard_semigroup(SemigroupKind::CyclicGroup, 3).unwrap();
        assert_eq!(z3.preimage(1, &set(3, &[0])).unwrap(), set(3, &[2]));
        let lz = standard_semigroup(SemigroupKind::LeftZero, 2).unwrap();
        assert_eq!(lz.preimage(0, &set(2, &[0])).unwrap(), set(2, &[0, 1]));
        for h in 0..3 {
            assert_eq!(z3.preimage(h, &z3.full()).unwrap(), z3.full());
        }
        assert!(z3.preimage(3, &z3.full()).is_err());
    }

    #[test]
    fn minimal_left_ideal_examples() {
        let lz = standard_semigroup(SemigroupKind::LeftZero, 2).unwrap();
        assert_eq!(lz.minimal_left_ideals(&lz.full()).unwrap(), vec![set(2, &[0, 1])]);
        let rz = standard_semigroup(SemigroupKind::RightZero, 2).unwrap();
        assert_eq!(rz.minimal_left_ideals(&rz.full()).unwrap(), vec![set(2, &[0]), set(2, &[1])]);
        let z3 = standard_semigroup(SemigroupKind::CyclicGroup, 3).unwrap();
        assert_eq!(z3.minimal_left_ideals(&z3.full()).unwrap(), vec![z3.full()]);
    }

    #[test]
    fn smallest_ideal_examples() {
        let sl = standard_semigroup(SemigroupKind::MeetSemilatticeChain, 2).unwrap();
        assert_eq!(sl.smallest_ideal(&sl.full()).unwrap(), set(2, &[0]));
        let rz = standard_semigroup(SemigroupKind::RightZero, 2).unwrap();
        assert_eq!(rz.smallest_ideal(&rz.full()).unwrap(), rz.full());
        for n in 1..6 {
            let z = standard_semigroup(SemigroupKind::CyclicGroup, n).unwrap();
            assert_eq!(z.smallest_ideal(&z.full()).unwrap(), z.full());
        }
    }

    #[test]
    fn rejects_non_subsemigroup() {
        let z2 = standard_semigroup(SemigroupKind::CyclicGroup, 2).unwrap();
        assert_eq!(
            z2.minimal_left_ideals(&set(2, &[1])).unwrap_err(),
            Error::NotASubsemigroup { x: 1, y: 1, product: 0 }
        );
    }

    #[test]
    fn idempotent_examples() {
        let z2 = standard_semigroup(SemigroupKind::CyclicGroup, 2).unwrap();
        assert_eq!(z2.idempotents(&z2.full()), set(2, &[0]));
        let sl = standard_semigroup(SemigroupKind::MeetSemilatticeChain, 2).unwrap();
        assert_eq!(sl.idempotents(&sl.full()), sl.full());
        let lz = standard_semigroup(SemigroupKind::LeftZero, 2).unwrap();
        assert_eq!(lz.idempotents(&lz.full()), lz.full());
    }

    fn small_roster() -> Vec<FiniteSemigroup> {
        let mut v = Vec::new();
        for kind in SemigroupKind::ALL {
            for n in 1..=3 {
                if let Ok(s) = standard_semigroup(kind, n) {
                    if s.n() <= 9 {
                        v.push(s);
                    }
                }
            }
        }
        v
    }

    /// Every two-sided ideal of `T` by brute force over subsets of `T`.
    fn two_sided_ideals(s: &FiniteSemigroup, t: &Subset) -> Vec<Subset> {
        let elems = t.to_vec();
        (1usize..1 << elems.len())
            .map(|mask| Subset::from_elements(s.n(), elems.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x)).unwrap())
            .filter(|i| s.set_product(t, i).is_subset_of(i) && s.set_product(i, t).is_subset_of(i))
            .collect()
    }

    #[test]
    fn smallest_ideal_is_below_every_ideal() {
        for s in small_roster() {
            let n = s.n();
            for idx in 1usize..(1 << n).min(1 << 9) {
                let t = Subset::from_index(n, idx);
                if t.len() > 6 || !s.is_subsemigroup(&t) {
                    continue;
                }
                let k = s.smallest_ideal(&t).unwrap();
                for i in two_sided_ideals(&s, &t) {
                    assert!(k.is_subset_of(&i), "{}: K({t}) = {k} not inside ideal {i}", s.label());
                }
                for l in s.minimal_left_ideals(&t).unwrap() {
                    assert!(!s.idempotents(&l).is_empty());
                }
            }
        }
    }

    #[test]
    fn cached_preimages_match_direct_scan() {
        for s in small_roster() {
            let n = s.n();
            for h in 0..n {
                for a in 0..1usize << n {
                    let direct = s.preimage(h, &Subset::from_index(n, a)).unwrap();
                    assert_eq!(s.preimage_index(h, a), direct.index());
                }
            }
        }
    }

    proptest! {
        #[test]
        fn preimage_distributes(kind_ix in 0usize..6, size in 1usize..=4, h in 0usize..64, a in any::<u64>(), b in any::<u64>()) {
            let kind = SemigroupKind::ALL[kind_ix];
            let Ok(s) = standard_semigroup(kind, size) else { return Ok(()) };
            let n = s.n().min(64);
            let h = h % s.n();
            let a = Subset::from_elements(s.n(), (0..n).filter(|x| a >> x & 1 == 1)).unwrap();
            let b = Subset::from_elements(s.n(), (0..n).filter(|x| b >> x & 1 == 1)).unwrap();
            let pa = s.preimage(h, &a).unwrap();
            let pb = s.preimage(h, &b).unwrap();
            prop_assert_eq!(s.preimage(h, &a.intersection(&b)).unwrap(), pa.intersection(&pb));
            prop_assert_eq!(s.preimage(h, &a.union(&b)).unwrap(), pa.union(&pb));
        }
    }
}
