//! Relative syndetic, thick and piecewise syndetic sets, product filters and
//! the `≲_F` preorder on points.

use serde::Serialize;

use crate::collection::{maximal_filters_in, meet_wedge, mesh, stack_closure, ClassFlags, Collection};
use crate::derived::{derived_index, product};
use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;
use crate::subset::Subset;

/// Precomputed data for testing many sets `A` against one pair `(F, G)`.
pub(crate) struct Tester<'a> {
    s: &'a FiniteSemigroup,
    f_members: Vec<usize>,
    g_up: Collection,
    g_mesh: Collection,
    g_is_stack: bool,
}

impl<'a> Tester<'a> {
    pub(crate) fn new(s: &'a FiniteSemigroup, f: &Collection, g: &Collection) -> Result<Self> {
        s.check_universe(f.n())?;
        s.check_universe(g.n())?;
        Ok(Self {
            s,
            f_members: f.indices().collect(),
            g_up: stack_closure(g),
            g_mesh: mesh(g),
            g_is_stack: g.is_stack(),
        })
    }

    fn preimages(&self, a: usize) -> [usize; 24] {
        let mut pre = [0usize; 24];
        for (h, p) in pre.iter_mut().enumerate().take(self.s.n()) {
            *p = self.s.preimage_index(h, a);
        }
        pre
    }

    /// Every `B ∈ F` has a nonempty `H ⊆ B` with `⋃_{h∈H} h⁻¹A ∈ G**`.
    ///
    /// Taking `H = B` suffices: the union only grows with `H` and `G**` is
    /// upward closed.
    pub(crate) fn syn(&self, a: usize) -> bool {
        let pre = self.preimages(a);
        self.f_members.iter().all(|&b| {
            if b == 0 {
                return false;
            }
            let mut u = 0;
            let mut rest = b;
            while rest != 0 {
                u |= pre[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            self.g_up.contains_index(u)
        })
    }

    /// Some `B ∈ F` has `⋂_{h∈H} h⁻¹A ∈ G*` for every nonempty `H ⊆ B`.
    pub(crate) fn thick(&self, a: usize) -> bool {
        let pre = self.preimages(a);
        let full = (1usize << self.s.n()) - 1;
        self.f_members.iter().any(|&b| {
            if self.g_is_stack {
                let mut meet = full;
                let mut rest = b;
                while rest != 0 {
                    meet &= pre[rest.trailing_zeros() as usize];
                    rest &= rest - 1;
                }
                b == 0 || self.g_mesh.contains_index(meet)
            } else {
                nonempty_submasks(b).all(|h| {
                    let mut meet = full;
                    let mut rest = h;
                    while rest != 0 {
                        meet &= pre[rest.trailing_zeros() as usize];
                        rest &= rest - 1;
                    }
                    self.g_mesh.contains_index(meet)
                })
            }
        })
    }
}

/// Nonempty submasks of `b`, in decreasing numeric order.
fn nonempty_submasks(b: usize) -> impl Iterator<Item = usize> {
    let mut next = Some(b).filter(|&b| b != 0);
    std::iter::from_fn(move || {
        let cur = next?;
        let lower = (cur - 1) & b;
        next = (lower != 0).then_some(lower);
        Some(cur)
    })
}

/// Is `A` `(F, G)`-syndetic?
pub fn is_rel_syndetic(s: &FiniteSemigroup, a: &Subset, f: &Collection, g: &Collection) -> Result<bool> {
    s.check_universe(a.n())?;
    Ok(Tester::new(s, f, g)?.syn(a.index()))
}

/// Is `A` `(F, G)`-thick?
pub fn is_rel_thick(s: &FiniteSemigroup, a: &Subset, f: &Collection, g: &Collection) -> Result<bool> {
    s.check_universe(a.n())?;
    Ok(Tester::new(s, f, g)?.thick(a.index()))
}

fn materialize(s: &FiniteSemigroup, keep: impl Fn(usize) -> bool) -> Result<Collection> {
    Collection::from_indices(s.n(), (0..1usize << s.n()).filter(|&a| keep(a)))
}

/// `Syn(F, G)`.
pub fn syn_collection(s: &FiniteSemigroup, f: &Collection, g: &Collection) -> Result<Collection> {
    let t = Tester::new(s, f, g)?;
    materialize(s, |a| t.syn(a))
}

/// `Thick(F, G)`.
pub fn thick_collection(s: &FiniteSemigroup, f: &Collection, g: &Collection) -> Result<Collection> {
    let t = Tester::new(s, f, g)?;
    materialize(s, |a| t.thick(a))
}

/// `PS(F, G) = Syn(F, G) ⊓ Thick(F, G)`.
pub fn ps_collection(s: &FiniteSemigroup, f: &Collection, g: &Collection) -> Result<Collection> {
    meet_wedge(&syn_collection(s, f, g)?, &thick_collection(s, f, g)?)
}

/// Maximal filters inside `G*`, counting the improper filter `P(S)` when `G*` is `P(S)`.
fn maximal_filters_in_mesh(g: &Collection) -> Result<Vec<Collection>> {
    let gm = mesh(g);
    if gm.contains_empty() {
        return Ok(vec![gm]);
    }
    maximal_filters_in(&gm)
}

fn require_stack(c: &Collection) -> Result<()> {
    if c.is_stack() {
        Ok(())
    } else {
        Err(Error::NotAStack)
    }
}

/// Syndeticity through maximal filters: `A'(H*) ∈ F*` for every maximal filter `H ⊆ G*`.
pub fn syn_via_maximal_filters(s: &FiniteSemigroup, a: &Subset, f: &Collection, g: &Collection) -> Result<bool> {
    require_stack(f)?;
    require_stack(g)?;
    s.check_universe(a.n())?;
    let fm = mesh(f);
    Ok(maximal_filters_in_mesh(g)?.iter().all(|h| fm.contains_index(derived_index(s, a.index(), &mesh(h)))))
}

/// Thickness through maximal filters: `A'(H) ∈ F` for some maximal filter `H ⊆ G*`.
pub fn thick_via_maximal_filters(s: &FiniteSemigroup, a: &Subset, f: &Collection, g: &Collection) -> Result<bool> {
    require_stack(f)?;
    require_stack(g)?;
    s.check_universe(a.n())?;
    Ok(maximal_filters_in_mesh(g)?.iter().any(|h| f.contains_index(derived_index(s, a.index(), h))))
}

fn require_filter(c: &Collection) -> Result<()> {
    if c.is_filter() {
        Ok(())
    } else {
        Err(Error::NotAFilter)
    }
}

/// `F ⊆ Syn(F*, F)` for a filter `F`.
pub fn is_product_filter(s: &FiniteSemigroup, f: &Collection) -> Result<bool> {
    require_filter(f)?;
    let t = Tester::new(s, &mesh(f), f)?;
    Ok(f.indices().all(|a| t.syn(a)))
}

/// Whether `∩F` is closed under the operation.
pub fn kernel_is_subsemigroup(s: &FiniteSemigroup, f: &Collection) -> bool {
    s.is_subsemigroup(&f.kernel_set())
}

/// `F ⊆ Syn(F*, G)`.
pub fn satisfies_f_condition(s: &FiniteSemigroup, f: &Collection, g: &Collection) -> Result<bool> {
    let t = Tester::new(s, &mesh(f), g)?;
    Ok(f.indices().all(|a| t.syn(a)))
}

/// [`Collection::flags`] plus the product-filter flag.
pub fn classify_in(s: &FiniteSemigroup, c: &Collection) -> Result<ClassFlags> {
    s.check_universe(c.n())?;
    let mut flags = c.flags();
    flags.product_filter = Some(flags.filter && is_product_filter(s, c)?);
    Ok(flags)
}

/// `F₁ ⊓ F₂` for proper product filters with `F₁ ⊆ F₂*`; the result is again one.
pub fn wedge_of_product_filters(s: &FiniteSemigroup, f1: &Collection, f2: &Collection) -> Result<Collection> {
    for (name, f) in [("F1", f1), ("F2", f2)] {
        if !f.is_proper_filter() {
            return Err(Error::HypothesisViolated(format!("{name} is a proper filter")));
        }
        if !is_product_filter(s, f)? {
            return Err(Error::HypothesisViolated(format!("{name} is a product filter")));
        }
    }
    if !f1.is_subset_of(&mesh(f2)) {
        return Err(Error::HypothesisViolated("F1 ⊆ F2*".into()));
    }
    let w = meet_wedge(f1, f2)?;
    if !w.is_filter() || !is_product_filter(s, &w)? {
        return Err(Error::Internal(format!("{w} is not a product filter")));
    }
    Ok(w)
}

fn require_proper_stack(f: &Collection) -> Result<()> {
    require_stack(f)?;
    if f.is_proper() {
        Ok(())
    } else {
        Err(Error::HypothesisViolated("F is a proper stack".into()))
    }
}

/// `F·up(x)` for every point `x`, indexed by `x`.
pub(crate) fn point_products(s: &FiniteSemigroup, f: &Collection) -> Result<Vec<Collection>> {
    (0..s.n()).map(|x| product(s, f, &crate::derived::point_ultrafilter(s, x)?)).collect()
}

/// `p ≲_F q`, i.e. `F·p ⊆ F·q`.
pub fn preorder_le(s: &FiniteSemigroup, p: usize, q: usize, f: &Collection) -> Result<bool> {
    require_proper_stack(f)?;
    let fp = product(s, f, &crate::derived::point_ultrafilter(s, p)?)?;
    let fq = product(s, f, &crate::derived::point_ultrafilter(s, q)?)?;
    Ok(fp.is_subset_of(&fq))
}

/// Extremal points of `∩G` under `≲_F`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extremal {
    pub minimal: Subset,
    pub maximal: Subset,
}

/// The `≲_F`-minimal and `≲_F`-maximal points of the kernel set of `G`.
pub fn extremal_ultrafilters(s: &FiniteSemigroup, f: &Collection, g: &Collection) -> Result<Extremal> {
    require_proper_stack(f)?;
    require_filter(g)?;
    if !g.is_proper() {
        return Err(Error::HypothesisViolated("G is a proper filter".into()));
    }
    let k = g.kernel_set();
    let prods = point_products(s, f)?;
    let le = |p: usize, q: usize| prods[p].is_subset_of(&prods[q]);
    let mut minimal = Subset::empty(s.n());
    let mut maximal = Subset::empty(s.n());
    for x in &k {
        if k.iter().all(|y| !le(y, x) || le(x, y)) {
            minimal.insert(x);
        }
        if k.iter().all(|y| !le(x, y) || le(y, x)) {
            maximal.insert(x);
        }
    }
    Ok(Extremal { minimal, maximal })
}


/// Literal readings of the syndetic and thick definitions, scanning every
/// nonempty `H ⊆ B` and testing `G**` and `G*` membership member by member.
///
/// Slow; used to audit the shortcuts in the main testers.
pub mod definitional {
    use super::*;

    /// Largest `|B|` the scans accept.
    pub const MAX_SCAN: usize = 12;

    fn check_scan(b: usize) -> Result<()> {
        let size = b.count_ones() as usize;
        if size > MAX_SCAN {
            Err(Error::SearchSpaceTooLarge { size: 1u128 << size, bound: 1u128 << MAX_SCAN })
        } else {
            Ok(())
        }
    }

    pub fn is_rel_syndetic(s: &FiniteSemigroup, a: &Subset, f: &Collection, g: &Collection) -> Result<bool> {
        s.check_universe(a.n())?;
        s.check_universe(f.n())?;
        s.check_universe(g.n())?;
        let g_members: Vec<usize> = g.indices().collect();
        for b in f.indices() {
            check_scan(b)?;
            let found = nonempty_submasks(b).any(|h| {
                let u = Subset::from_index(s.n(), h)
                    .iter()
                    .fold(Subset::empty(s.n()), |acc, x| acc.union(&s.preimage_unchecked(x, a)));
                g_members.iter().any(|&c| c & !u.index() == 0)
            });
            if !found {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_rel_thick(s: &FiniteSemigroup, a: &Subset, f: &Collection, g: &Collection) -> Result<bool> {
        s.check_universe(a.n())?;
        s.check_universe(f.n())?;
        s.check_universe(g.n())?;
        let g_members: Vec<usize> = g.indices().collect();
        for b in f.indices() {
            check_scan(b)?;
            let all = nonempty_submasks(b).all(|h| {
                let meet = Subset::from_index(s.n(), h)
                    .iter()
                    .fold(Subset::full(s.n()), |acc, x| acc.intersection(&s.preimage_unchecked(x, a)));
                g_members.iter().all(|&c| c & meet.index() != 0)
            });
            if all {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
