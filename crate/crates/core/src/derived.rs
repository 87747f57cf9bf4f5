//! Derived sets `A'(C)` and the collection product `F·G`.

use crate::collection::Collection;
use crate::error::Result;
use crate::semigroup::FiniteSemigroup;
use crate::subset::Subset;

/// `A'(C)` on bit-vector indices.
#[inline]
pub(crate) fn derived_index(s: &FiniteSemigroup, a: usize, c: &Collection) -> usize {
    let mut out = 0;
    for h in 0..s.n() {
        if c.contains_index(s.preimage_index(h, a)) {
            out |= 1 << h;
        }
    }
    out
}

/// `A'(C) = {h ∈ S : h⁻¹A ∈ C}`.
pub fn derived_set(s: &FiniteSemigroup, a: &Subset, c: &Collection) -> Result<Subset> {
    s.check_universe(a.n())?;
    s.check_universe(c.n())?;
    Ok(Subset::from_index(s.n(), derived_index(s, a.index(), c)))
}

/// `F·G = {A ⊆ S : A'(G) ∈ F}`.
pub fn product(s: &FiniteSemigroup, f: &Collection, g: &Collection) -> Result<Collection> {
    s.check_universe(f.n())?;
    s.check_universe(g.n())?;
    let n = s.n();
    let mut out = Collection::empty(n)?;
    for a in 0..1usize << n {
        if f.contains_index(derived_index(s, a, g)) {
            out.insert_index(a);
        }
    }
    Ok(out)
}

/// The principal ultrafilter `up({x})`, identified with the point `x`.
pub fn point_ultrafilter(s: &FiniteSemigroup, x: usize) -> Result<Collection> {
    Collection::principal(&Subset::singleton(s.n(), x)?)
}

/// `C ⊆ {S}·C`: every member `A` has `A'(C) = S`.
pub fn is_translation_invariant(s: &FiniteSemigroup, c: &Collection) -> Result<bool> {
    s.check_universe(c.n())?;
    let full = (1usize << s.n()) - 1;
    Ok(c.indices().all(|a| derived_index(s, a, c) == full))
}

/// `C ⊆ C·C`.
pub fn is_idempotent_collection(s: &FiniteSemigroup, c: &Collection) -> Result<bool> {
    s.check_universe(c.n())?;
    Ok(c.indices().all(|a| c.contains_index(derived_index(s, a, c))))
}
