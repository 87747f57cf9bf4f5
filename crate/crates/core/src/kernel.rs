//! The relative kernel `K(F, G)`, collectionwise piecewise syndeticity and
//! relative central sets.
//!
//! On a finite semigroup every proper filter is `up(B)` with `B = ∩F`, every
//! ultrafilter is a point, and the closure of a set of ultrafilters is the
//! set itself. The kernel sets `F̄ = ∩F` and `Ḡ = ∩G` therefore stand in for
//! the closed sets of ultrafilters, and `Ā = A` for any `A ⊆ S`.

use std::sync::OnceLock;

use serde::Serialize;

use crate::collection::Collection;
use crate::derived::{derived_index, is_idempotent_collection, point_ultrafilter};
use crate::error::{Error, Result};
use crate::relative::{is_product_filter, satisfies_f_condition, syn_collection, thick_collection, Tester};
use crate::semigroup::FiniteSemigroup;
use crate::subset::Subset;

/// Bound on the factorized search behind the finite-intersection-property forms.
pub const FIP_SEARCH_BOUND: u128 = 1_000_000;

/// Hypothesis flags, always computed from the filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    /// `F ⊆ Syn(F*, G)`.
    pub f_condition: bool,
    pub g_product: bool,
    pub f_product: bool,
}

impl Hypotheses {
    pub fn get(&self, name: &str) -> Option<bool> {
        match name {
            "f_condition" => Some(self.f_condition),
            "g_product" => Some(self.g_product),
            "f_product" => Some(self.f_product),
            _ => None,
        }
    }
}

/// A pair of proper filters with their kernel sets and hypothesis flags.
pub struct KernelContext<'a> {
    s: &'a FiniteSemigroup,
    f: Collection,
    g: Collection,
    f_bar: Subset,
    g_bar: Subset,
    hypotheses: Hypotheses,
    waived: Vec<String>,
    fip_bound: u128,
    syn: OnceLock<Collection>,
    thick: OnceLock<Collection>,
    ps: OnceLock<Collection>,
    points: OnceLock<Vec<Collection>>,
    g_smallest_ideal: OnceLock<Result<Subset>>,
    central_bases: OnceLock<Vec<Subset>>,
}

/// Builds the context for proper filters `F`, `G`.
pub fn make_kernel_context<'a>(s: &'a FiniteSemigroup, f: &Collection, g: &Collection) -> Result<KernelContext<'a>> {
    s.check_universe(f.n())?;
    s.check_universe(g.n())?;
    for (name, c) in [("F", f), ("G", g)] {
        if !c.is_filter() {
            return Err(Error::NotAFilter);
        }
        if !c.is_proper() {
            return Err(Error::HypothesisViolated(format!("{name} is a proper filter")));
        }
    }
    let (f_bar, g_bar) = (f.kernel_set(), g.kernel_set());
    if f_bar.is_empty() || g_bar.is_empty() {
        return Err(Error::EmptyKernel);
    }
    let hypotheses = Hypotheses {
        f_condition: satisfies_f_condition(s, f, g)?,
        g_product: is_product_filter(s, g)?,
        f_product: is_product_filter(s, f)?,
    };
    Ok(KernelContext {
        s,
        f: f.clone(),
        g: g.clone(),
        f_bar,
        g_bar,
        hypotheses,
        waived: Vec::new(),
        fip_bound: FIP_SEARCH_BOUND,
        syn: OnceLock::new(),
        thick: OnceLock::new(),
        ps: OnceLock::new(),
        points: OnceLock::new(),
        g_smallest_ideal: OnceLock::new(),
        central_bases: OnceLock::new(),
    })
}

impl<'a> KernelContext<'a> {
    pub fn semigroup(&self) -> &'a FiniteSemigroup {
        self.s
    }

    pub fn f(&self) -> &Collection {
        &self.f
    }

    pub fn g(&self) -> &Collection {
        &self.g
    }

    pub fn f_bar(&self) -> Subset {
        self.f_bar
    }

    pub fn g_bar(&self) -> Subset {
        self.g_bar
    }

    pub fn hypotheses(&self) -> Hypotheses {
        self.hypotheses
    }

    /// Stops [`KernelContext::require`] from checking the named hypotheses, so
    /// that computations run on instances where they fail.
    pub fn waive<S: AsRef<str>>(mut self, names: &[S]) -> Self {
        self.waived.extend(names.iter().map(|s| s.as_ref().to_string()));
        self
    }

    /// Replaces [`FIP_SEARCH_BOUND`] for this context.
    pub fn with_fip_bound(mut self, bound: u128) -> Self {
        self.fip_bound = bound;
        self
    }

    /// Fails with the name of the first listed hypothesis that does not hold.
    pub fn require(&self, names: &[&str]) -> Result<()> {
        for &name in names {
            if self.waived.iter().any(|w| w == name) {
                continue;
            }
            match self.hypotheses.get(name) {
                Some(true) => {}
                Some(false) => return Err(Error::HypothesisViolated(name.to_string())),
                None => return Err(Error::Internal(format!("no hypothesis named {name}"))),
            }
        }
        Ok(())
    }

    pub fn syn(&self) -> &Collection {
        self.syn.get_or_init(|| syn_collection(self.s, &self.f, &self.g).expect("universe checked"))
    }

    pub fn thick(&self) -> &Collection {
        self.thick.get_or_init(|| thick_collection(self.s, &self.f, &self.g).expect("universe checked"))
    }

    pub fn ps(&self) -> &Collection {
        self.ps.get_or_init(|| crate::collection::meet_wedge(self.syn(), self.thick()).expect("universe checked"))
    }

    /// `up({x})` for each point `x`.
    pub fn point(&self, x: usize) -> &Collection {
        &self.points.get_or_init(|| (0..self.s.n()).map(|x| point_ultrafilter(self.s, x).expect("universe checked")).collect())[x]
    }

    /// `A'(x)` along the point ultrafilter at `x`.
    pub fn derived_at(&self, a: usize, x: usize) -> usize {
        derived_index(self.s, a, self.point(x))
    }

    /// `K(Ḡ)`, the smallest ideal of `Ḡ`; needs `Ḡ` to be a subsemigroup.
    pub fn g_smallest_ideal(&self) -> Result<Subset> {
        self.g_smallest_ideal.get_or_init(|| self.s.smallest_ideal(&self.g_bar)).clone()
    }

    /// `{r·q·e : r ∈ F̄}`.
    fn f_bar_times(&self, q: usize, e: usize) -> Subset {
        let mut out = Subset::empty(self.s.n());
        for r in &self.f_bar {
            out.insert(self.s.mul(self.s.mul(r, q), e));
        }
        out
    }
}

/// `K(F, G) = F̄ · K(Ḡ)`.
pub fn relative_kernel(ctx: &KernelContext) -> Result<Subset> {
    ctx.require(&["g_product"])?;
    Ok(ctx.s.set_product(&ctx.f_bar, &ctx.g_smallest_ideal()?))
}

/// The four membership statements for a point `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KernelMembership {
    /// `p ∈ K(F, G)`.
    pub a: bool,
    /// Some `e ∈ E(K(Ḡ))` has `p ∈ F̄·e`.
    pub b: bool,
    /// Some `e ∈ E(K(Ḡ))` has `p ∈ F̄·q·e` for every `q ∈ Ḡ`.
    pub c: bool,
    /// Some `e ∈ E(K(Ḡ))` has `A'(e) ∈ Syn(F, G)` for every `A ∋ p`.
    pub d: bool,
}

impl KernelMembership {
    pub fn agree(&self) -> bool {
        self.a == self.b && self.b == self.c && self.c == self.d
    }
}

pub fn check_relative_kernel_membership(ctx: &KernelContext, p: usize) -> Result<KernelMembership> {
    ctx.require(&["f_condition", "g_product"])?;
    let s = ctx.s;
    if p >= s.n() {
        return Err(Error::ElementOutOfRange { element: p, n: s.n() });
    }
    let k = relative_kernel(ctx)?;
    let e_k = s.idempotents(&ctx.g_smallest_ideal()?);
    let b = e_k.iter().any(|e| s.right_multiply(&ctx.f_bar, e).contains(p));
    let c = e_k.iter().any(|e| ctx.g_bar.iter().all(|q| ctx.f_bar_times(q, e).contains(p)));
    let syn = ctx.syn();
    let d = e_k.iter().any(|e| {
        (0..1usize << s.n())
            .filter(|a| a >> p & 1 == 1)
            .all(|a| syn.contains_index(ctx.derived_at(a, e)))
    });
    Ok(KernelMembership { a: k.contains(p), b, c, d })
}

/// The five piecewise-syndeticity statements for a set `A`, plus `A ∩ K(F, G) ≠ ∅`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PsEquivalence {
    /// `A ∈ PS(F, G)`.
    pub a: bool,
    /// Some `q ∈ Ḡ` has `A'(q) ∈ Syn(F, G)`.
    pub b: bool,
    /// Same with `q ∈ K(Ḡ)`.
    pub c: bool,
    /// Same with `q ∈ E(K(Ḡ))`.
    pub d: bool,
    /// Same with `q ∈ E(Ḡ)`.
    pub e: bool,
    /// `A ∩ K(F, G) ≠ ∅`.
    pub meets_kernel: bool,
}

impl PsEquivalence {
    pub fn agree(&self) -> bool {
        [self.b, self.c, self.d, self.e, self.meets_kernel].iter().all(|&v| v == self.a)
    }
}

pub fn is_rel_ps_equiv(a: &Subset, ctx: &KernelContext) -> Result<PsEquivalence> {
    ctx.require(&["f_condition", "g_product"])?;
    let s = ctx.s;
    s.check_universe(a.n())?;
    let syn = ctx.syn();
    let ai = a.index();
    let witness = |qs: Subset| qs.iter().any(|q| syn.contains_index(ctx.derived_at(ai, q)));
    let k_g = ctx.g_smallest_ideal()?;
    Ok(PsEquivalence {
        a: ctx.ps().contains_index(ai),
        b: witness(ctx.g_bar),
        c: witness(k_g),
        d: witness(s.idempotents(&k_g)),
        e: witness(s.idempotents(&ctx.g_bar)),
        meets_kernel: a.intersects(&relative_kernel(ctx)?),
    })
}

/// Does some `x ∈ Ḡ` admit, for each target set `X` and each `C ∈ F`, a
/// nonempty `H ⊆ C` and `W ∈ G` with `h·w·x ∈ X` for every `w ∈ W` and some `h ∈ H`?
///
/// On a finite semigroup a family has the finite intersection property iff
/// its members share a point, and a family containing `G` can only share
/// points of `Ḡ`. The choices of `H` and `W` then decouple across the index
/// set, so the search is a sum over `(C, X)` rather than a product.
fn factorized_fip(ctx: &KernelContext, targets: &[usize]) -> Result<bool> {
    let s = ctx.s;
    let g_members: Vec<usize> = ctx.g.indices().collect();
    let choices: u128 = ctx.f.indices().map(|c| (1u128 << (c.count_ones())) - 1).sum();
    let size = choices * g_members.len() as u128 * targets.len() as u128 * ctx.g_bar.len() as u128;
    if size > ctx.fip_bound {
        return Err(Error::SearchSpaceTooLarge { size, bound: ctx.fip_bound });
    }
    let f_members: Vec<usize> = ctx.f.indices().collect();
    Ok(ctx.g_bar.iter().any(|x| {
        targets.iter().all(|&target| {
            f_members.iter().all(|&c| {
                let mut h = c;
                while h != 0 {
                    let found = g_members.iter().any(|&w_set| {
                        Subset::from_index(s.n(), w_set).iter().all(|w| {
                            let wx = s.mul(w, x);
                            Subset::from_index(s.n(), h).iter().any(|hh| target >> s.mul(hh, wx) & 1 == 1)
                        })
                    });
                    if found {
                        return true;
                    }
                    h = (h - 1) & c;
                }
                false
            })
        })
    }))
}

/// The finite-intersection-property form of piecewise `(F, G)`-syndeticity.
pub fn fip_rel_ps(a: &Subset, ctx: &KernelContext) -> Result<bool> {
    ctx.require(&["f_condition", "g_product"])?;
    ctx.s.check_universe(a.n())?;
    factorized_fip(ctx, &[a.index()])
}

/// All intersections of nonempty finite subfamilies of `family`.
fn intersection_closure(n: usize, family: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut seen = vec![false; 1 << n];
    let mut out: Vec<usize> = Vec::new();
    for d in family {
        let mut fresh = vec![d];
        fresh.extend(out.iter().map(|&c| c & d));
        for x in fresh {
            if !seen[x] {
                seen[x] = true;
                out.push(x);
            }
        }
    }
    out.sort_unstable();
    out
}

/// The four equivalent forms of collectionwise piecewise `(F, G)`-syndeticity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CollectionwiseForms {
    /// The definition: some `q ∈ Ḡ` with `⋂_{B∈𝔅} B'(q) ∈ Syn(F, G)` for every finite `𝔅 ⊆ A`.
    pub a: bool,
    /// The finite-intersection-property form; `None` when its search exceeds the bound.
    pub b: Option<bool>,
    /// Some `q ∈ Ḡ` with `⋂𝔅 ∈ Syn(F, Thick(G, q))` for every finite `𝔅 ⊆ A`.
    pub c: bool,
    /// Some `q ∈ Ḡ` such that every `p ∈ Ḡ` has an `r ∈ F̄` with `r·p·q` in every member of `A`.
    pub d: bool,
}

/// Collectionwise piecewise `(F, G)`-syndeticity, by definition.
pub fn is_collectionwise_ps(family: &Collection, ctx: &KernelContext) -> Result<bool> {
    ctx.s.check_universe(family.n())?;
    let n = ctx.s.n();
    let syn = ctx.syn();
    Ok(ctx.g_bar.iter().any(|q| {
        intersection_closure(n, family.indices().map(|b| ctx.derived_at(b, q)))
            .iter()
            .all(|&x| syn.contains_index(x))
    }))
}

pub fn collectionwise_forms(family: &Collection, ctx: &KernelContext) -> Result<CollectionwiseForms> {
    let a = is_collectionwise_ps(family, ctx)?;
    let s = ctx.s;
    let n = s.n();
    let meets = intersection_closure(n, family.indices());
    let b = match factorized_fip(ctx, &meets) {
        Ok(v) => Some(v),
        Err(Error::SearchSpaceTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    let c = ctx.g_bar.iter().any(|q| {
        let thick_gq = thick_collection(s, &ctx.g, ctx.point(q)).expect("universe checked");
        let t = Tester::new(s, &ctx.f, &thick_gq).expect("universe checked");
        meets.iter().all(|&x| t.syn(x))
    });
    let core = family.kernel_set();
    let d = ctx.g_bar.iter().any(|q| {
        ctx.g_bar.iter().all(|p| ctx.f_bar.iter().any(|r| core.contains(s.mul(s.mul(r, p), q))))
    });
    Ok(CollectionwiseForms { a, b, c, d })
}

/// Nonempty `B` such that `up(B)` is an idempotent, collectionwise piecewise
/// `(F, G)`-syndetic filter; these are all the proper filters the definition
/// of central sets can use.
pub fn central_bases(ctx: &KernelContext) -> Vec<Subset> {
    ctx.central_bases
        .get_or_init(|| {
            let n = ctx.s.n();
            (1..1usize << n)
                .map(|b| Subset::from_index(n, b))
                .filter(|b| {
                    let h = Collection::principal(b).expect("universe checked");
                    is_idempotent_collection(ctx.s, &h).expect("universe checked") && is_collectionwise_ps(&h, ctx).expect("universe checked")
                })
                .collect()
        })
        .clone()
}

/// `A` belongs to some proper idempotent filter that is collectionwise piecewise `(F, G)`-syndetic.
pub fn is_rel_central(a: &Subset, ctx: &KernelContext) -> Result<bool> {
    ctx.s.check_universe(a.n())?;
    Ok(central_bases(ctx).iter().any(|b| b.is_subset_of(a)))
}

/// `Cen(F, G)`.
pub fn central_collection(ctx: &KernelContext) -> Result<Collection> {
    let bases = central_bases(ctx);
    let n = ctx.s.n();
    Collection::from_indices(n, (0..1usize << n).filter(|&a| bases.iter().any(|b| b.index() & !a == 0)))
}

/// `E(K(F, G))`, under all three hypotheses.
pub fn kernel_idempotents(ctx: &KernelContext) -> Result<Subset> {
    ctx.require(&["f_product", "g_product", "f_condition"])?;
    let k = relative_kernel(ctx)?;
    if !ctx.s.is_subsemigroup(&k) {
        return Err(Error::Internal(format!("K(F,G) = {k} is not a subsemigroup")));
    }
    let e = ctx.s.idempotents(&k);
    if e.is_empty() {
        return Err(Error::Internal(format!("K(F,G) = {k} has no idempotent")));
    }
    Ok(e)
}

/// `F ⊆ Syn(F*, G)` read on kernel sets: `F̄·Ḡ ⊆ F̄`.
pub fn f_condition_by_kernels(s: &FiniteSemigroup, f: &Collection, g: &Collection) -> bool {
    let fb = f.kernel_set();
    s.set_product(&fb, &g.kernel_set()).is_subset_of(&fb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{standard_semigroup, SemigroupKind};

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_elements(n, xs.iter().copied()).unwrap()
    }

    fn sg(kind: SemigroupKind, n: usize) -> FiniteSemigroup {
        standard_semigroup(kind, n).unwrap()
    }

    fn semilattice_ctx(s: &FiniteSemigroup) -> KernelContext<'_> {
        make_kernel_context(s, &Collection::principal(&set(2, &[0])).unwrap(), &Collection::universe(2).unwrap()).unwrap()
    }

    #[test]
    fn context_examples() {
        let sl = sg(SemigroupKind::MeetSemilatticeChain, 2);
        let ctx = semilattice_ctx(&sl);
        assert_eq!(ctx.f_bar(), set(2, &[0]));
        assert_eq!(ctx.g_bar(), sl.full());
        assert!(ctx.hypotheses().f_condition && ctx.hypotheses().g_product);

        let z2 = sg(SemigroupKind::CyclicGroup, 2);
        let ctx = make_kernel_context(&z2, &Collection::principal(&set(2, &[1])).unwrap(), &Collection::universe(2).unwrap()).unwrap();
        assert!(!ctx.hypotheses().f_condition);
        assert_eq!(relative_kernel(&ctx).unwrap(), z2.full());
        assert!(matches!(check_relative_kernel_membership(&ctx, 0), Err(Error::HypothesisViolated(h)) if h == "f_condition"));

        let abs = make_kernel_context(&z2, &Collection::universe(2).unwrap(), &Collection::universe(2).unwrap()).unwrap();
        assert_eq!(abs.hypotheses(), Hypotheses { f_condition: true, g_product: true, f_product: true });
        assert!(matches!(
            make_kernel_context(&z2, &Collection::power_set(2).unwrap(), &Collection::universe(2).unwrap()),
            Err(Error::HypothesisViolated(_))
        ));
        assert_eq!(
            make_kernel_context(&z2, &Collection::from_sets(2, &[&[0][..]]).unwrap(), &Collection::universe(2).unwrap()).err(),
            Some(Error::NotAFilter)
        );
    }

    #[test]
    fn semilattice_kernel() {
        let sl = sg(SemigroupKind::MeetSemilatticeChain, 2);
        let ctx = semilattice_ctx(&sl);
        assert_eq!(relative_kernel(&ctx).unwrap(), set(2, &[0]));
        let m0 = check_relative_kernel_membership(&ctx, 0).unwrap();
        assert_eq!(m0, KernelMembership { a: true, b: true, c: true, d: true });
        let m1 = check_relative_kernel_membership(&ctx, 1).unwrap();
        assert_eq!(m1, KernelMembership { a: false, b: false, c: false, d: false });
        assert_eq!(kernel_idempotents(&ctx).unwrap(), set(2, &[0]));
    }

    #[test]
    fn semilattice_piecewise_syndetic() {
        let sl = sg(SemigroupKind::MeetSemilatticeChain, 2);
        let ctx = semilattice_ctx(&sl);
        let all_true = PsEquivalence { a: true, b: true, c: true, d: true, e: true, meets_kernel: true };
        let all_false = PsEquivalence { a: false, b: false, c: false, d: false, e: false, meets_kernel: false };
        assert_eq!(is_rel_ps_equiv(&set(2, &[0]), &ctx).unwrap(), all_true);
        assert_eq!(is_rel_ps_equiv(&set(2, &[1]), &ctx).unwrap(), all_false);
        assert_eq!(is_rel_ps_equiv(&sl.full(), &ctx).unwrap(), all_true);
        assert!(fip_rel_ps(&set(2, &[0]), &ctx).unwrap());
        assert!(!fip_rel_ps(&set(2, &[1]), &ctx).unwrap());
    }

    #[test]
    fn absolute_kernels() {
        let rz = sg(SemigroupKind::RightZero, 2);
        let s = Collection::universe(2).unwrap();
        let ctx = make_kernel_context(&rz, &s, &s).unwrap();
        assert_eq!(relative_kernel(&ctx).unwrap(), rz.full());
        assert_eq!(kernel_idempotents(&ctx).unwrap(), rz.full());
        assert!(fip_rel_ps(&rz.full(), &ctx).unwrap());
        for n in 1..=5 {
            let z = sg(SemigroupKind::CyclicGroup, n);
            let s = Collection::universe(n).unwrap();
            let ctx = make_kernel_context(&z, &s, &s).unwrap();
            assert_eq!(relative_kernel(&ctx).unwrap(), z.smallest_ideal(&z.full()).unwrap());
            assert_eq!(kernel_idempotents(&ctx).unwrap(), set(n, &[0]));
            for p in 0..n {
                assert!(check_relative_kernel_membership(&ctx, p).unwrap().agree());
            }
        }
    }

    #[test]
    fn collectionwise_examples() {
        let sl = sg(SemigroupKind::MeetSemilatticeChain, 2);
        let ctx = semilattice_ctx(&sl);
        let good = Collection::from_sets(2, &[&[0][..], &[0, 1]]).unwrap();
        let bad = Collection::from_sets(2, &[&[0][..], &[1]]).unwrap();
        assert!(is_collectionwise_ps(&good, &ctx).unwrap());
        assert!(!is_collectionwise_ps(&bad, &ctx).unwrap());
        for a in 0..4 {
            let a = Subset::from_index(2, a);
            let single = Collection::from_subsets(2, &[a]).unwrap();
            assert_eq!(is_collectionwise_ps(&single, &ctx).unwrap(), is_rel_ps_equiv(&a, &ctx).unwrap().a);
        }
        let forms = collectionwise_forms(&good, &ctx).unwrap();
        assert_eq!(forms, CollectionwiseForms { a: true, b: Some(true), c: true, d: true });
    }

    #[test]
    fn central_examples() {
        let z2 = sg(SemigroupKind::CyclicGroup, 2);
        let s = Collection::universe(2).unwrap();
        let ctx = make_kernel_context(&z2, &s, &s).unwrap();
        assert!(is_rel_central(&z2.full(), &ctx).unwrap());
        assert!(is_rel_central(&set(2, &[0]), &ctx).unwrap());
        assert!(!is_rel_central(&set(2, &[1]), &ctx).unwrap());

        let sl = sg(SemigroupKind::MeetSemilatticeChain, 2);
        let ctx = semilattice_ctx(&sl);
        for a in 0..4 {
            let a = Subset::from_index(2, a);
            assert_eq!(is_rel_central(&a, &ctx).unwrap(), a.contains(0));
        }
        assert_eq!(central_collection(&ctx).unwrap(), Collection::principal(&set(2, &[0])).unwrap());
    }

    #[test]
    fn intersection_closure_covers_subfamilies() {
        let fam = [0b0111usize, 0b1110, 0b1011];
        let clo = intersection_closure(4, fam);
        assert_eq!(clo, vec![0b0010, 0b0011, 0b0110, 0b0111, 0b1010, 0b1011, 0b1110]);
    }
}
