use serde::Serialize;

use super::space::{Class, Env, Instance, Space};
use crate::collection::{meet_wedge, mesh, stack_closure, Collection};
use crate::derived::{derived_index, is_idempotent_collection, is_translation_invariant, point_ultrafilter, product};
use crate::error::Error;
use crate::kernel::{
    central_collection, check_relative_kernel_membership, collectionwise_forms, f_condition_by_kernels, fip_rel_ps,
    is_rel_central, is_rel_ps_equiv, kernel_idempotents, make_kernel_context, relative_kernel, KernelContext,
};
use crate::relative::{
    definitional, is_product_filter, is_rel_syndetic, is_rel_thick, kernel_is_subsemigroup, point_products,
    satisfies_f_condition, syn_collection, syn_via_maximal_filters, thick_collection, thick_via_maximal_filters,
    wedge_of_product_filters,
};
use crate::semigroup::FiniteSemigroup;
use crate::subset::Subset;

pub(crate) enum Outcome {
    Holds,
    /// Holds, but an optional sub-check was skipped for the stated reason.
    Partial(String),
    Skip(String),
    Fails(String),
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Hyp {
    pub id: &'static str,
    pub text: &'static str,
}

pub(crate) struct Law {
    pub id: &'static str,
    /// Name of the result the law encodes.
    pub anchor: &'static str,
    pub statement: &'static str,
    pub hypotheses: &'static [Hyp],
    pub space: Space,
    /// Binding names for the instance: collections first, then subsets.
    pub names: &'static [&'static str],
    pub max_n: Option<usize>,
    pub expect_violation: bool,
    pub check: fn(&Env, &Instance) -> Outcome,
}

/// Public description of a registered law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawInfo {
    pub id: &'static str,
    pub anchor: &'static str,
    pub statement: &'static str,
    pub hypotheses: Vec<HypInfo>,
    pub space: String,
    pub expect_violation: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypInfo {
    pub id: &'static str,
    pub text: &'static str,
}

impl Law {
    pub fn info(&self) -> LawInfo {
        let space = match self.space {
            Space::Semigroup => "semigroup".to_string(),
            Space::Tuple { classes, sets } => {
                let mut parts: Vec<String> = classes.iter().map(|c| format!("{c:?}").to_lowercase()).collect();
                parts.extend(std::iter::repeat("subset".to_string()).take(sets));
                parts.join(" x ")
            }
        };
        LawInfo {
            id: self.id,
            anchor: self.anchor,
            statement: self.statement,
            hypotheses: self.hypotheses.iter().map(|h| HypInfo { id: h.id, text: h.text }).collect(),
            space,
            expect_violation: self.expect_violation,
        }
    }
}

macro_rules! claim {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Outcome::Fails(format!($($fmt)+));
        }
    };
}

macro_rules! hyp {
    ($env:expr, $h:expr, $cond:expr) => {
        if $env.on($h.id) && !$cond {
            return Outcome::Skip(format!("hypothesis {} does not hold", $h.id));
        }
    };
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::HypothesisViolated(_) => "hypothesis violated",
        Error::EmptyKernel => "empty kernel",
        Error::NotAFilter => "not a filter",
        Error::NotAStack => "not a stack",
        Error::NotASubsemigroup { .. } => "not a subsemigroup",
        Error::Internal(_) => "internal check",
        _ => "other error",
    }
}

macro_rules! attempt {
    ($env:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(Error::SearchSpaceTooLarge { .. }) => return Outcome::Skip("search bound exceeded".into()),
            Err(e) if $env.relaxed() => {
                return Outcome::Skip(format!("undefined without the dropped hypotheses: {}", error_kind(&e)))
            }
            Err(e) => return Outcome::Fails(format!("unexpected error: {e}")),
        }
    };
}

const FILTER_F: Hyp = Hyp { id: "filter-F", text: "F is a filter" };
const GRILL_G: Hyp = Hyp { id: "grill-G", text: "G is a grill" };
const PROPER_FILTER_F: Hyp = Hyp { id: "proper-filter-F", text: "F is a proper filter" };
const PROPER_GRILL_G: Hyp = Hyp { id: "proper-grill-G", text: "G is a proper grill" };
const PROPER_F: Hyp = Hyp { id: "proper-F", text: "F is proper" };
const INVARIANT: Hyp = Hyp { id: "invariant", text: "F1 and F2 are translation invariant" };
const IDEMPOTENT: Hyp = Hyp { id: "idempotent", text: "F1 and F2 are idempotent" };
const NONDEGENERATE: Hyp = Hyp { id: "nondegenerate", text: "F and G do not both contain the empty set" };
const NONEMPTY_OPERANDS: Hyp = Hyp { id: "nonempty-operands", text: "F1 and F2 are nonempty" };
const F_CONDITION: Hyp = Hyp { id: "f_condition", text: "F ⊆ Syn(F*, G)" };
const G_PRODUCT: Hyp = Hyp { id: "g_product", text: "G is a product filter" };
const F_PRODUCT: Hyp = Hyp { id: "f_product", text: "F is a product filter" };
const F1_PRODUCT: Hyp = Hyp { id: "f1_product", text: "F1 is a product filter" };
const F2_PRODUCT: Hyp = Hyp { id: "f2_product", text: "F2 is a product filter" };
const F1_IN_MESH_F2: Hyp = Hyp { id: "f1_in_mesh_f2", text: "F1 ⊆ F2*" };

use Class::{All, Filter, ProperFilter as PF, Stack};

const fn tuple(classes: &'static [Class], sets: usize) -> Space {
    Space::Tuple { classes, sets }
}

// ---- small helpers ----

fn m(c: &Collection) -> Collection {
    mesh(c)
}

fn mm(c: &Collection) -> Collection {
    mesh(&mesh(c))
}

fn w(a: &Collection, b: &Collection) -> Collection {
    meet_wedge(a, b).expect("same universe")
}

fn cup(a: &Collection, b: &Collection) -> Collection {
    a.union(b).expect("same universe")
}

fn cap(a: &Collection, b: &Collection) -> Collection {
    a.intersection(b).expect("same universe")
}

fn prod(s: &FiniteSemigroup, a: &Collection, b: &Collection) -> Collection {
    product(s, a, b).expect("same universe")
}

fn der(s: &FiniteSemigroup, a: &Subset, c: &Collection) -> Subset {
    Subset::from_index(s.n(), derived_index(s, a.index(), c))
}

fn pt(s: &FiniteSemigroup, x: usize) -> Collection {
    point_ultrafilter(s, x).expect("point in range")
}

fn subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0..1usize << n).map(move |i| Subset::from_index(n, i))
}

fn syn(s: &FiniteSemigroup, f: &Collection, g: &Collection) -> Collection {
    syn_collection(s, f, g).expect("same universe")
}

fn thick(s: &FiniteSemigroup, f: &Collection, g: &Collection) -> Collection {
    thick_collection(s, f, g).expect("same universe")
}

fn is_two_sided_ideal(s: &FiniteSemigroup, t: &Subset, i: &Subset) -> bool {
    s.set_product(t, i).is_subset_of(i) && s.set_product(i, t).is_subset_of(i)
}

fn kernel_ctx<'a>(env: &Env<'a>, f: &Collection, g: &Collection) -> Result<KernelContext<'a>, Error> {
    Ok(make_kernel_context(env.s, f, g)?.waive(&env.weakened).with_fip_bound(env.fip_bound))
}

// ---- semigroup-core ----

fn sg_associativity(env: &Env, _: &Instance) -> Outcome {
    let s = env.s;
    claim!(FiniteSemigroup::validate_cayley(s.n(), &s.table()).is_ok(), "table fails validation");
    Outcome::Holds
}

fn sg_smallest_ideal_two_sided(env: &Env, _: &Instance) -> Outcome {
    let s = env.s;
    let k = attempt!(env, s.smallest_ideal(&s.full()));
    claim!(is_two_sided_ideal(s, &s.full(), &k), "K(S) = {k} is not a two-sided ideal");
    Outcome::Holds
}

fn sg_smallest_ideal_minimal(env: &Env, _: &Instance) -> Outcome {
    let s = env.s;
    for t in subsets(s.n()).filter(|t| !t.is_empty() && s.is_subsemigroup(t)) {
        let k = attempt!(env, s.smallest_ideal(&t));
        claim!(k.is_subset_of(&t) && is_two_sided_ideal(s, &t, &k), "K({t}) = {k} is not an ideal of {t}");
        for i in subsets(s.n()).filter(|i| !i.is_empty() && i.is_subset_of(&t)) {
            if is_two_sided_ideal(s, &t, &i) {
                claim!(k.is_subset_of(&i), "K({t}) = {k} is not inside the ideal {i}");
            }
        }
    }
    Outcome::Holds
}

fn sg_minimal_left_ideal_idempotent(env: &Env, _: &Instance) -> Outcome {
    let s = env.s;
    for t in subsets(s.n()).filter(|t| !t.is_empty() && s.is_subsemigroup(t)) {
        for l in attempt!(env, s.minimal_left_ideals(&t)) {
            claim!(!s.idempotents(&l).is_empty(), "minimal left ideal {l} of {t} has no idempotent");
        }
    }
    Outcome::Holds
}

fn sg_preimage(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (a, b) = (&i.sets[0], &i.sets[1]);
    for h in 0..s.n() {
        let pa = s.preimage(h, a).expect("in range");
        let pb = s.preimage(h, b).expect("in range");
        claim!(s.preimage(h, &a.intersection(b)).expect("in range") == pa.intersection(&pb), "intersection, h = {h}");
        claim!(s.preimage(h, &a.union(b)).expect("in range") == pa.union(&pb), "union, h = {h}");
    }
    Outcome::Holds
}

// ---- set-collections ----

fn mesh_galois(_: &Env, i: &Instance) -> Outcome {
    let (f1, f2) = (&i.colls[0], &i.colls[1]);
    claim!(f1.is_subset_of(&m(f2)) == f2.is_subset_of(&m(f1)), "the two inclusions disagree");
    Outcome::Holds
}

fn mesh_a(_: &Env, i: &Instance) -> Outcome {
    let f = &i.colls[0];
    claim!(f.is_subset_of(&mm(f)), "F is not inside F**");
    Outcome::Holds
}

fn mesh_b(_: &Env, i: &Instance) -> Outcome {
    let (f1, f2) = (&i.colls[0], &i.colls[1]);
    let lo = cap(f1, f2);
    for (x, y) in [(&lo, f2), (f1, f2)] {
        if x.is_subset_of(y) {
            claim!(m(y).is_subset_of(&m(x)), "mesh is not antitone on {x} ⊆ {y}");
            claim!(mm(x).is_subset_of(&mm(y)), "double mesh is not monotone on {x} ⊆ {y}");
        }
    }
    claim!(f1.contains_empty() == m(f1).is_empty(), "∅ ∈ F does not match F* = ∅");
    claim!(f1.is_proper() == m(f1).is_proper(), "properness of F and F* differ");
    Outcome::Holds
}

fn mesh_c(_: &Env, i: &Instance) -> Outcome {
    let (f1, f2) = (&i.colls[0], &i.colls[1]);
    claim!(m(f1) == m(&mm(f1)), "F* differs from F***");
    claim!(f1.is_subset_of(&mm(f2)) == mm(f1).is_subset_of(&mm(f2)), "F1 ⊆ F2** disagrees with F1** ⊆ F2**");
    Outcome::Holds
}

fn mesh_d(_: &Env, i: &Instance) -> Outcome {
    let f = &i.colls[0];
    let n = f.n();
    let fixed = *f == mm(f);
    if n <= 3 {
        let image = (0..(1u64 << (1 << n))).any(|word| m(&Collection::from_word(n, word)) == *f);
        claim!(fixed == image, "fixed point: {fixed}, in the image of the mesh: {image}");
    } else {
        claim!(!fixed || m(&m(f)) == *f, "fixed point is not the mesh of its mesh");
        claim!(mm(&mm(f)) == mm(f), "F** is not a fixed point");
    }
    Outcome::Holds
}

fn mesh_e(_: &Env, i: &Instance) -> Outcome {
    let (f, f1) = (&i.colls[0], &i.colls[1]);
    claim!(f.is_subset_of(&mm(f)), "F* is not among the F1 with F ⊆ F1*");
    if f.is_subset_of(&m(f1)) {
        claim!(f1.is_subset_of(&m(f)), "F ⊆ F1* but F1 is not inside F*");
    }
    let n = f.n();
    claim!(m(&Collection::empty(n).unwrap()) == Collection::power_set(n).unwrap(), "mesh of ∅ is not P(S)");
    claim!(m(&Collection::power_set(n).unwrap()).is_empty(), "mesh of P(S) is not ∅");
    Outcome::Holds
}

fn mesh_f(_: &Env, i: &Instance) -> Outcome {
    let (a, b, c) = (&i.colls[0], &i.colls[1], &i.colls[2]);
    claim!(m(&cup(&cup(a, b), c)) == cap(&cap(&m(a), &m(b)), &m(c)), "mesh of the union differs");
    Outcome::Holds
}

fn stack_a(_: &Env, i: &Instance) -> Outcome {
    let f = &i.colls[0];
    claim!(m(f).is_stack() && mm(f).is_stack(), "F* or F** is not a stack");
    claim!(m(f).is_proper() == f.is_proper() && mm(f).is_proper() == f.is_proper(), "properness differs");
    Outcome::Holds
}

fn stack_b(_: &Env, i: &Instance) -> Outcome {
    let (f, a) = (&i.colls[0], &i.sets[0]);
    claim!(m(f).contains(a) == !f.contains(&a.complement()), "A ∈ F* disagrees with S∖A ∉ F");
    Outcome::Holds
}

fn stack_c(_: &Env, i: &Instance) -> Outcome {
    let f = &i.colls[0];
    let n = f.n();
    let members: Vec<usize> = f.indices().collect();
    let naive = Collection::from_indices(n, (0..1usize << n).filter(|&a| members.iter().any(|&b| b & !a == 0))).unwrap();
    claim!(mm(f) == naive, "F** = {} but the upward closure is {naive}", mm(f));
    Outcome::Holds
}

fn stack_d(_: &Env, i: &Instance) -> Outcome {
    let f = &i.colls[0];
    claim!(f.is_stack() == (*f == mm(f)), "stack flag disagrees with F = F**");
    claim!(stack_closure(f) == mm(f), "stack closure differs from F**");
    Outcome::Holds
}

fn stack_e(_: &Env, i: &Instance) -> Outcome {
    let (a, b, c) = (&i.colls[0], &i.colls[1], &i.colls[2]);
    claim!(m(&cap(&cap(a, b), c)) == cup(&cup(&m(a), &m(b)), &m(c)), "mesh of the intersection differs");
    let n = a.n();
    claim!(m(&Collection::power_set(n).unwrap()).is_empty(), "empty family case");
    Outcome::Holds
}

fn filter_grill_a(_: &Env, i: &Instance) -> Outcome {
    let f = &i.colls[0];
    claim!(f.is_filter() == m(f).is_grill(), "filter: {}, mesh is a grill: {}", f.is_filter(), m(f).is_grill());
    Outcome::Holds
}

fn filter_grill_b(env: &Env, i: &Instance) -> Outcome {
    let f = &i.colls[0];
    hyp!(env, FILTER_F, f.is_filter());
    claim!(f.is_proper() == f.is_subset_of(&m(f)), "proper: {}", f.is_proper());
    Outcome::Holds
}

fn filter_grill_c(env: &Env, i: &Instance) -> Outcome {
    let f = &i.colls[0];
    hyp!(env, FILTER_F, f.is_filter());
    claim!(f.is_ultrafilter() == (*f == m(f)), "ultrafilter: {}", f.is_ultrafilter());
    Outcome::Holds
}

fn filter_grill_d(env: &Env, i: &Instance) -> Outcome {
    let f = &i.colls[0];
    hyp!(env, FILTER_F, f.is_filter());
    let decisive = subsets(f.n()).all(|a| f.contains(&a) == !f.contains(&a.complement()));
    claim!(f.is_ultrafilter() == decisive, "ultrafilter: {}, decides every set: {decisive}", f.is_ultrafilter());
    Outcome::Holds
}

fn filter_grill_e(_: &Env, i: &Instance) -> Outcome {
    let f = &i.colls[0];
    let n = f.n();
    let maximal = f.is_proper_filter()
        && (1..1usize << n)
            .map(|b| Collection::principal(&Subset::from_index(n, b)).unwrap())
            .all(|h| !(f.is_subset_of(&h) && h != *f));
    claim!(f.is_ultrafilter() == maximal, "ultrafilter: {}, maximal proper filter: {maximal}", f.is_ultrafilter());
    Outcome::Holds
}

fn binary_operation(_: &Env, i: &Instance) -> Outcome {
    let (f, f1, f2) = (&i.colls[0], &i.colls[1], &i.colls[2]);
    claim!(w(f, f1).is_subset_of(f2) == f1.is_subset_of(&m(&w(f, &m(f2)))), "the two sides disagree");
    Outcome::Holds
}

fn grill_a(_: &Env, i: &Instance) -> Outcome {
    let (f1, f2) = (&i.colls[0], &i.colls[1]);
    let x = w(f1, f2);
    claim!(x.is_stack(), "F1 ⊓ F2 is not a stack");
    claim!(!x.is_empty() == (!f1.is_empty() && !f2.is_empty()), "nonemptiness");
    if !f1.is_empty() && !f2.is_empty() {
        claim!(cup(f1, f2).is_subset_of(&x), "F1 ∪ F2 is not inside F1 ⊓ F2");
    }
    Outcome::Holds
}

fn grill_a_iii(env: &Env, i: &Instance) -> Outcome {
    let (f1, f2) = (&i.colls[0], &i.colls[1]);
    hyp!(env, NONEMPTY_OPERANDS, !f1.is_empty() && !f2.is_empty());
    let x = w(f1, f2);
    claim!(
        !x.contains_empty() == (f1.is_subset_of(&m(f2)) && !f1.contains_empty() && !f2.contains_empty()),
        "∅ ∈ F1 ⊓ F2 is {} but the condition says otherwise",
        x.contains_empty()
    );
    Outcome::Holds
}

fn grill_b(_: &Env, i: &Instance) -> Outcome {
    let (f, f1) = (&i.colls[0], &i.colls[1]);
    let g = w(f, &m(f));
    claim!(g.is_grill(), "F ⊓ F* = {g} is not a grill");
    claim!(g.is_proper() == f.is_proper(), "properness");
    claim!(w(f, f1).is_subset_of(f) == g.is_subset_of(&m(f1)), "the in-particular equivalence");
    Outcome::Holds
}

// ---- derived-algebra ----

fn derived_a_i_env(env: &Env, i: &Instance, equality: bool) -> Outcome {
    let s = env.s;
    let (f, a1, a2) = (&i.colls[0], &i.sets[0], &i.sets[1]);
    if equality {
        hyp!(env, FILTER_F, f.is_filter());
    }
    let lhs = der(s, &a1.intersection(a2), f);
    let rhs = der(s, a1, f).intersection(&der(s, a2, f));
    claim!(lhs.is_subset_of(&rhs), "(A1∩A2)'(F) = {lhs} is not inside {rhs}");
    if equality {
        claim!(lhs == rhs, "(A1∩A2)'(F) = {lhs} but A1'(F) ∩ A2'(F) = {rhs}");
    }
    Outcome::Holds
}

fn derived_a_i_inclusion(env: &Env, i: &Instance) -> Outcome {
    derived_a_i_env(env, i, false)
}

fn derived_a_i_equality(env: &Env, i: &Instance) -> Outcome {
    derived_a_i_env(env, i, true)
}

fn derived_a_ii_env(env: &Env, i: &Instance, equality: bool) -> Outcome {
    let s = env.s;
    let (g, a1, a2) = (&i.colls[0], &i.sets[0], &i.sets[1]);
    if equality {
        hyp!(env, GRILL_G, g.is_grill());
    }
    let lhs = der(s, a1, g).union(&der(s, a2, g));
    let rhs = der(s, &a1.union(a2), g);
    claim!(lhs.is_subset_of(&rhs), "A1'(G) ∪ A2'(G) = {lhs} is not inside {rhs}");
    if equality {
        claim!(lhs == rhs, "A1'(G) ∪ A2'(G) = {lhs} but (A1∪A2)'(G) = {rhs}");
    }
    Outcome::Holds
}

fn derived_a_ii_inclusion(env: &Env, i: &Instance) -> Outcome {
    derived_a_ii_env(env, i, false)
}

fn derived_a_ii_equality(env: &Env, i: &Instance) -> Outcome {
    derived_a_ii_env(env, i, true)
}

fn derived_a_iii(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (a1, a2) = (&i.sets[0], &i.sets[1]);
    for x in 0..s.n() {
        let q = pt(s, x);
        claim!(der(s, &a1.intersection(a2), &q) == der(s, a1, &q).intersection(&der(s, a2, &q)), "∩ at q = {x}");
        claim!(der(s, &a1.union(a2), &q) == der(s, a1, &q).union(&der(s, a2, &q)), "∪ at q = {x}");
    }
    Outcome::Holds
}

fn derived_a_iv(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g, a1, a2) = (&i.colls[0], &i.colls[1], &i.sets[0], &i.sets[1]);
    let lhs = der(s, a1, f).intersection(&der(s, a2, g));
    let rhs = der(s, &a1.intersection(a2), &w(f, g));
    claim!(lhs.is_subset_of(&rhs), "{lhs} is not inside {rhs}");
    Outcome::Holds
}

fn derived_b_i(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, a) = (&i.colls[0], &i.sets[0]);
    let lhs = der(s, &a.complement(), f);
    let rhs = der(s, a, &m(f)).complement();
    claim!(lhs == rhs, "(S∖A)'(F) = {lhs} but S∖A'(F*) = {rhs}");
    Outcome::Holds
}

fn derived_b_ii(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, a) = (&i.colls[0], &i.sets[0]);
    hyp!(env, PROPER_FILTER_F, f.is_proper_filter());
    let lhs = der(s, &a.complement(), f);
    let rhs = der(s, a, f).complement();
    claim!(lhs.is_subset_of(&rhs), "(S∖A)'(F) = {lhs} is not inside S∖A'(F) = {rhs}");
    Outcome::Holds
}

fn derived_b_iii(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (g, a) = (&i.colls[0], &i.sets[0]);
    hyp!(env, PROPER_GRILL_G, g.is_grill() && g.is_proper());
    let lhs = der(s, a, g).complement();
    let rhs = der(s, &a.complement(), g);
    claim!(lhs.is_subset_of(&rhs), "S∖A'(G) = {lhs} is not inside (S∖A)'(G) = {rhs}");
    Outcome::Holds
}

fn derived_b_iv(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (a, b) = (&i.sets[0], &i.sets[1]);
    for x in 0..s.n() {
        let q = pt(s, x);
        claim!(der(s, a, &q).complement() == der(s, &a.complement(), &q), "complement at q = {x}");
        claim!(der(s, &a.difference(b), &q) == der(s, a, &q).difference(&der(s, b, &q)), "difference at q = {x}");
    }
    Outcome::Holds
}

fn derived_c_i(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f1, f2, a) = (&i.colls[0], &i.colls[1], &i.sets[0]);
    let lo = cap(f1, f2);
    for x in [&lo, f1] {
        if x.is_subset_of(f2) {
            claim!(der(s, a, x).is_subset_of(&der(s, a, f2)), "A'(F1) is not inside A'(F2) for F1 = {x}");
        }
    }
    Outcome::Holds
}

fn derived_c_ii(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f1, f2, a) = (&i.colls[0], &i.colls[1], &i.sets[0]);
    claim!(der(s, a, &cup(f1, f2)) == der(s, a, f1).union(&der(s, a, f2)), "union of collections");
    claim!(der(s, a, &cap(f1, f2)) == der(s, a, f1).intersection(&der(s, a, f2)), "intersection of collections");
    Outcome::Holds
}

fn derived_c_iii(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, a1, a2) = (&i.colls[0], &i.sets[0], &i.sets[1]);
    let lo = a1.intersection(a2);
    for x in [&lo, a1] {
        if x.is_subset_of(a2) {
            claim!(der(s, x, f).is_subset_of(&der(s, a2, f)), "A1'(F) is not inside A2'(F) for A1 = {x}");
        }
    }
    Outcome::Holds
}

fn derived_d(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, a) = (&i.colls[0], &i.sets[0]);
    for g in 0..s.n() {
        let lhs = der(s, &s.preimage(g, a).expect("in range"), f);
        let rhs = s.preimage(g, &der(s, a, f)).expect("in range");
        claim!(lhs == rhs, "g = {g}: {lhs} vs {rhs}");
    }
    Outcome::Holds
}

fn product_a_i(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (g, a) = (&i.colls[0], &i.sets[0]);
    let d = der(s, a, g);
    for x in 0..s.n() {
        claim!(d.contains(x) == prod(s, &pt(s, x), g).contains(a), "x = {x}");
    }
    Outcome::Holds
}

fn product_a_ii(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g, a) = (&i.colls[0], &i.colls[1], &i.sets[0]);
    let lhs = der(s, a, &prod(s, f, g));
    let rhs = der(s, &der(s, a, g), f);
    claim!(lhs == rhs, "A'(F·G) = {lhs} but (A'(G))'(F) = {rhs}");
    Outcome::Holds
}

fn product_a_iii(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g, h) = (&i.colls[0], &i.colls[1], &i.colls[2]);
    claim!(prod(s, f, &prod(s, g, h)) == prod(s, &prod(s, f, g), h), "F·(G·H) ≠ (F·G)·H");
    Outcome::Holds
}

fn product_b(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f1, f2, g) = (&i.colls[0], &i.colls[1], &i.colls[2]);
    let lo = cap(f1, f2);
    for x in [&lo, f1] {
        if x.is_subset_of(f2) {
            claim!(prod(s, x, g).is_subset_of(&prod(s, f2, g)), "F1·G is not inside F2·G for F1 = {x}");
        }
    }
    Outcome::Holds
}

fn product_c(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g1, g2) = (&i.colls[0], &i.colls[1], &i.colls[2]);
    let lo = cap(g1, g2);
    for x in [&lo, g1] {
        if x.is_subset_of(g2) {
            claim!(prod(s, f, x).is_subset_of(&prod(s, f, g2)), "F·G1 is not inside F·G2 for G1 = {x}");
        }
    }
    Outcome::Holds
}

fn product_d(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g) = (&i.colls[0], &i.colls[1]);
    let p = prod(s, f, g);
    claim!(p.is_stack(), "F·G is not a stack");
    if f.is_proper() && g.is_proper() {
        claim!(p.is_proper(), "F·G is not proper");
    }
    claim!(m(&p) == prod(s, &m(f), &m(g)), "(F·G)* ≠ F*·G*");
    if f.is_filter() && g.is_filter() {
        claim!(p.is_filter(), "filter times filter is not a filter");
    }
    if f.is_grill() && g.is_grill() {
        claim!(p.is_grill(), "grill times grill is not a grill");
    }
    if f.is_ultrafilter() && g.is_ultrafilter() {
        claim!(p.is_ultrafilter(), "ultrafilter product is not an ultrafilter");
    }
    Outcome::Holds
}

fn product_e_i(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f1, g1, f2, g2) = (&i.colls[0], &i.colls[1], &i.colls[2], &i.colls[3]);
    let lhs = w(&prod(s, f1, g1), &prod(s, f2, g2));
    let rhs = prod(s, &w(f1, f2), &w(g1, g2));
    claim!(lhs.is_subset_of(&rhs), "(F1·G1) ⊓ (F2·G2) is not inside (F1⊓F2)·(G1⊓G2)");
    Outcome::Holds
}

fn product_e_ii(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f1, f2) = (&i.colls[0], &i.colls[1]);
    let inv = |c: &Collection| is_translation_invariant(s, c).expect("same universe");
    hyp!(env, INVARIANT, inv(f1) && inv(f2));
    claim!(inv(&w(f1, f2)), "F1 ⊓ F2 is not translation invariant");
    Outcome::Holds
}

fn product_e_iii(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f1, f2) = (&i.colls[0], &i.colls[1]);
    let idem = |c: &Collection| is_idempotent_collection(s, c).expect("same universe");
    hyp!(env, IDEMPOTENT, idem(f1) && idem(f2));
    claim!(idem(&w(f1, f2)), "F1 ⊓ F2 is not idempotent");
    Outcome::Holds
}

// ---- relative-notions ----

fn assumption_of_stack(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g) = (&i.colls[0], &i.colls[1]);
    let base = syn(s, f, g);
    claim!(base == syn(s, &mm(f), g) && base == syn(s, f, &mm(g)), "Syn changes under stack closure");
    let base = thick(s, f, g);
    claim!(base == thick(s, &mm(f), g) && base == thick(s, f, &mm(g)), "Thick changes under stack closure");
    Outcome::Holds
}

fn syn_is_stack(env: &Env, i: &Instance) -> Outcome {
    let (f, g) = (&i.colls[0], &i.colls[1]);
    let x = syn(env.s, f, g);
    claim!(x.is_stack(), "Syn(F,G) = {x} is not a stack");
    if f.is_proper() && g.is_proper() {
        claim!(x.is_proper(), "Syn(F,G) = {x} is not proper");
    }
    Outcome::Holds
}

fn syn_thick_duality(env: &Env, i: &Instance) -> Outcome {
    let (f, g) = (&i.colls[0], &i.colls[1]);
    claim!(m(&syn(env.s, f, g)) == thick(env.s, f, g), "Syn(F,G)* ≠ Thick(F,G)");
    Outcome::Holds
}

fn maximal_filter_characterization(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g) = (&i.colls[0], &i.colls[1]);
    hyp!(env, NONDEGENERATE, !(f.contains_empty() && g.contains_empty()));
    let (sy, th) = (syn(s, f, g), thick(s, f, g));
    for a in subsets(s.n()) {
        let via = attempt!(env, syn_via_maximal_filters(s, &a, f, g));
        claim!(sy.contains(&a) == via, "A = {a}: tester says {}, maximal filters say {via}", sy.contains(&a));
        let via = attempt!(env, thick_via_maximal_filters(s, &a, f, g));
        claim!(th.contains(&a) == via, "A = {a}: thick tester says {}, maximal filters say {via}", th.contains(&a));
    }
    Outcome::Holds
}

fn kernel_point_characterization(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g) = (&i.colls[0], &i.colls[1]);
    hyp!(env, NONDEGENERATE, !(f.contains_empty() && g.contains_empty()));
    let gb = g.kernel_set();
    let fm = m(f);
    let (sy, th) = (syn(s, f, g), thick(s, f, g));
    for a in subsets(s.n()) {
        let all = gb.iter().all(|q| fm.contains(&der(s, &a, &pt(s, q))));
        let any = gb.iter().any(|q| f.contains(&der(s, &a, &pt(s, q))));
        claim!(sy.contains(&a) == all, "A = {a}: Syn membership vs every q in the kernel set");
        claim!(th.contains(&a) == any, "A = {a}: Thick membership vs some q in the kernel set");
    }
    claim!(syn(s, f, &m(g)) == prod(s, &fm, &m(g)), "Syn(F, G*) ≠ F*·G*");
    claim!(thick(s, f, &m(g)) == prod(s, f, g), "Thick(F, G*) ≠ F·G");
    Outcome::Holds
}

fn f_condition_translates(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g) = (&i.colls[0], &i.colls[1]);
    hyp!(env, F_CONDITION, attempt!(env, satisfies_f_condition(s, f, g)));
    for p in &g.kernel_set() {
        claim!(f.is_subset_of(&prod(s, f, &pt(s, p))), "F is not inside F·p for p = {p}");
    }
    Outcome::Holds
}

fn preorder(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let f = &i.colls[0];
    hyp!(env, PROPER_F, f.is_proper());
    let prods = attempt!(env, point_products(s, f));
    let le = |p: usize, q: usize| prods[p].is_subset_of(&prods[q]);
    let n = s.n();
    for p in 0..n {
        claim!(le(p, p), "not reflexive at {p}");
        for q in 0..n {
            for r in 0..n {
                claim!(!(le(p, q) && le(q, r)) || le(p, r), "not transitive at ({p}, {q}, {r})");
            }
        }
    }
    Outcome::Holds
}

fn product_filter_wedge(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f1, f2) = (&i.colls[0], &i.colls[1]);
    hyp!(env, F1_PRODUCT, attempt!(env, is_product_filter(s, f1)));
    hyp!(env, F2_PRODUCT, attempt!(env, is_product_filter(s, f2)));
    hyp!(env, F1_IN_MESH_F2, f1.is_subset_of(&m(f2)));
    if env.relaxed() {
        let x = w(f1, f2);
        claim!(x.is_filter() && attempt!(env, is_product_filter(s, &x)), "F1 ⊓ F2 = {x} is not a product filter");
    } else {
        attempt!(env, wedge_of_product_filters(s, f1, f2));
    }
    Outcome::Holds
}

fn product_filter_kernel(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let f = &i.colls[0];
    let by_def = attempt!(env, is_product_filter(s, f));
    claim!(by_def == kernel_is_subsemigroup(s, f), "definition says {by_def}, kernel set says the opposite");
    Outcome::Holds
}

fn f_condition_kernel(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g) = (&i.colls[0], &i.colls[1]);
    let by_def = attempt!(env, satisfies_f_condition(s, f, g));
    claim!(by_def == f_condition_by_kernels(s, f, g), "definition says {by_def}, kernel sets say the opposite");
    Outcome::Holds
}

fn maximal_elements(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let f = &i.colls[0];
    hyp!(env, F_PRODUCT, attempt!(env, is_product_filter(s, f)));
    let fb = f.kernel_set();
    let prods = attempt!(env, point_products(s, f));
    let le = |p: usize, q: usize| prods[p].is_subset_of(&prods[q]);
    let minimal_left = attempt!(env, s.minimal_left_ideals(&fb));
    for q in 0..s.n() {
        let fq = s.right_multiply(&fb, q);
        if !fq.is_subset_of(&fb) {
            continue;
        }
        let maximal = fb.iter().all(|p| !le(q, p) || le(p, q));
        let minimal = minimal_left.contains(&fq);
        claim!(maximal == minimal, "q = {q}: maximal {maximal}, F̄·q = {fq} minimal left ideal {minimal}");
    }
    Outcome::Holds
}

// ---- kernel-central ----

fn derived_syndetic_three_way(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g) = (&i.colls[0], &i.colls[1]);
    hyp!(env, PROPER_F, f.is_proper());
    let sy = syn(s, f, g);
    for q in 0..s.n() {
        let up_q = pt(s, q);
        let b = thick(s, &sy, &up_q);
        let c = syn(s, f, &thick(s, g, &up_q));
        for a in subsets(s.n()) {
            let x = sy.contains(&der(s, &a, &up_q));
            claim!(x == b.contains(&a) && x == c.contains(&a), "A = {a}, q = {q}: {x} {} {}", b.contains(&a), c.contains(&a));
        }
    }
    Outcome::Holds
}

fn derived_syndetic_lemma_a(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g) = (&i.colls[0], &i.colls[1]);
    hyp!(env, PROPER_F, f.is_proper());
    hyp!(env, G_PRODUCT, attempt!(env, is_product_filter(s, g)));
    let sy = syn(s, f, g);
    for b in sy.members() {
        for q in &g.kernel_set() {
            claim!(sy.contains(&der(s, &b, &pt(s, q))), "B = {b}, q = {q}");
        }
    }
    Outcome::Holds
}

fn derived_syndetic_lemma_b(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g) = (&i.colls[0], &i.colls[1]);
    hyp!(env, PROPER_F, f.is_proper());
    hyp!(env, F_CONDITION, attempt!(env, satisfies_f_condition(s, f, g)));
    let (th, sy_star) = (thick(s, f, g), syn(s, &m(f), g));
    for c in th.members() {
        let ok = g.kernel_set().iter().any(|q| {
            let d = der(s, &c, &pt(s, q));
            sy_star.contains(&d) && th.contains(&d)
        });
        claim!(ok, "C = {c} has no q with C'(q) in Syn(F*, G) and Thick(F, G)");
    }
    Outcome::Holds
}

fn kernel_membership(env: &Env, i: &Instance) -> Outcome {
    let ctx = attempt!(env, kernel_ctx(env, &i.colls[0], &i.colls[1]));
    let h = ctx.hypotheses();
    hyp!(env, F_CONDITION, h.f_condition);
    hyp!(env, G_PRODUCT, h.g_product);
    for p in 0..env.s.n() {
        let r = attempt!(env, check_relative_kernel_membership(&ctx, p));
        claim!(r.agree(), "p = {p}: {r:?}");
    }
    Outcome::Holds
}

fn ps_five_way(env: &Env, i: &Instance) -> Outcome {
    let ctx = attempt!(env, kernel_ctx(env, &i.colls[0], &i.colls[1]));
    let h = ctx.hypotheses();
    hyp!(env, F_CONDITION, h.f_condition);
    hyp!(env, G_PRODUCT, h.g_product);
    for a in subsets(env.s.n()) {
        let r = attempt!(env, is_rel_ps_equiv(&a, &ctx));
        claim!(r.agree(), "A = {a}: {r:?}");
    }
    Outcome::Holds
}

fn kernel_corollary(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g) = (&i.colls[0], &i.colls[1]);
    let ctx = attempt!(env, kernel_ctx(env, f, g));
    let h = ctx.hypotheses();
    hyp!(env, F_CONDITION, h.f_condition);
    hyp!(env, G_PRODUCT, h.g_product);
    let k = attempt!(env, relative_kernel(&ctx));
    let ps = ctx.ps();
    for a in subsets(s.n()) {
        claim!(ps.contains(&a) == a.intersects(&k), "A = {a}: PS membership vs meeting K = {k}");
    }
    let from_ps: Vec<usize> = (0..s.n()).filter(|&p| pt(s, p).is_subset_of(ps)).collect();
    claim!(from_ps == k.to_vec(), "K = {k} but the points with up(p) ⊆ PS are {from_ps:?}");
    let gg = attempt!(env, kernel_ctx(env, g, g));
    let kgg = attempt!(env, relative_kernel(&gg));
    claim!(kgg == attempt!(env, s.smallest_ideal(&g.kernel_set())), "K(G,G) = {kgg} differs from K(Ḡ)");
    Outcome::Holds
}

fn fip_form(env: &Env, i: &Instance) -> Outcome {
    let ctx = attempt!(env, kernel_ctx(env, &i.colls[0], &i.colls[1]));
    let h = ctx.hypotheses();
    hyp!(env, F_CONDITION, h.f_condition);
    hyp!(env, G_PRODUCT, h.g_product);
    for a in subsets(env.s.n()) {
        let fip = attempt!(env, fip_rel_ps(&a, &ctx));
        claim!(fip == ctx.ps().contains(&a), "A = {a}: intersection form says {fip}");
    }
    Outcome::Holds
}

fn collectionwise_four_way(env: &Env, i: &Instance) -> Outcome {
    let ctx = attempt!(env, kernel_ctx(env, &i.colls[0], &i.colls[1]));
    let h = ctx.hypotheses();
    hyp!(env, F_CONDITION, h.f_condition);
    hyp!(env, G_PRODUCT, h.g_product);
    let r = attempt!(env, collectionwise_forms(&i.colls[2], &ctx));
    claim!(r.a == r.c && r.a == r.d, "{r:?}");
    match r.b {
        Some(b) => {
            claim!(b == r.a, "{r:?}");
            Outcome::Holds
        }
        None => Outcome::Partial("intersection form bounded out".into()),
    }
}

fn collectionwise_kernel_point(env: &Env, i: &Instance) -> Outcome {
    let ctx = attempt!(env, kernel_ctx(env, &i.colls[0], &i.colls[1]));
    let h = ctx.hypotheses();
    hyp!(env, F_CONDITION, h.f_condition);
    hyp!(env, G_PRODUCT, h.g_product);
    let family = &i.colls[2];
    let def = attempt!(env, crate::kernel::is_collectionwise_ps(family, &ctx));
    let k = attempt!(env, relative_kernel(&ctx));
    let point = k.intersects(&family.kernel_set());
    claim!(def == point, "definition {def}, common point in K = {k}: {point}");
    Outcome::Holds
}

fn kernel_has_idempotents(env: &Env, i: &Instance) -> Outcome {
    let ctx = attempt!(env, kernel_ctx(env, &i.colls[0], &i.colls[1]));
    let h = ctx.hypotheses();
    hyp!(env, F_PRODUCT, h.f_product);
    hyp!(env, G_PRODUCT, h.g_product);
    hyp!(env, F_CONDITION, h.f_condition);
    let e = attempt!(env, kernel_idempotents(&ctx));
    claim!(!e.is_empty(), "no idempotent in K(F,G)");
    Outcome::Holds
}

fn central_idempotent_form(env: &Env, i: &Instance) -> Outcome {
    let ctx = attempt!(env, kernel_ctx(env, &i.colls[0], &i.colls[1]));
    let h = ctx.hypotheses();
    hyp!(env, F_PRODUCT, h.f_product);
    hyp!(env, G_PRODUCT, h.g_product);
    hyp!(env, F_CONDITION, h.f_condition);
    let e = attempt!(env, kernel_idempotents(&ctx));
    for a in subsets(env.s.n()) {
        let c = attempt!(env, is_rel_central(&a, &ctx));
        claim!(c == a.intersects(&e), "A = {a}: central {c}, E(K(F,G)) = {e}");
    }
    Outcome::Holds
}

fn central_is_grill(env: &Env, i: &Instance) -> Outcome {
    let ctx = attempt!(env, kernel_ctx(env, &i.colls[0], &i.colls[1]));
    let h = ctx.hypotheses();
    hyp!(env, F_PRODUCT, h.f_product);
    hyp!(env, G_PRODUCT, h.g_product);
    hyp!(env, F_CONDITION, h.f_condition);
    let cen = attempt!(env, central_collection(&ctx));
    claim!(cen.is_grill() && cen.is_proper(), "Cen(F,G) = {cen} is not a proper grill");
    Outcome::Holds
}

fn absolute_eight_way(env: &Env, _: &Instance) -> Outcome {
    let s = env.s;
    let n = s.n();
    let universe = Collection::universe(n).expect("small");
    let (sy, th) = (syn(s, &universe, &universe), thick(s, &universe, &universe));
    let ps = w(&sy, &th);
    let k = attempt!(env, s.smallest_ideal(&s.full()));
    let lefts = attempt!(env, s.minimal_left_ideals(&s.full()));
    let (e_k, e_s) = (s.idempotents(&k), s.idempotents(&s.full()));
    let points: Vec<Collection> = (0..n).map(|x| pt(s, x)).collect();
    for a in subsets(n) {
        let witness = |qs: &Subset| qs.iter().any(|q| sy.contains(&der(s, &a, &points[q])));
        let b = (1..1usize << n).any(|h| {
            let mut u = Subset::empty(n);
            for x in &Subset::from_index(n, h) {
                u = u.union(&s.preimage(x, &a).expect("in range"));
            }
            th.contains(&u)
        });
        let v = [
            ps.contains(&a),
            b,
            lefts.iter().any(|l| l.intersects(&a)),
            a.intersects(&k),
            witness(&k),
            witness(&e_k),
            witness(&e_s),
            witness(&s.full()),
        ];
        claim!(v.iter().all(|&x| x == v[0]), "A = {a}: {v:?}");
    }
    Outcome::Holds
}

fn selftest_syn_is_filter(env: &Env, i: &Instance) -> Outcome {
    let x = syn(env.s, &i.colls[0], &i.colls[1]);
    claim!(x.is_filter(), "Syn(F,G) = {x} is not a filter");
    Outcome::Holds
}

fn oracle_syn(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g, a) = (&i.colls[0], &i.colls[1], &i.sets[0]);
    let fast = attempt!(env, is_rel_syndetic(s, a, f, g));
    let slow = attempt!(env, definitional::is_rel_syndetic(s, a, f, g));
    claim!(fast == slow, "fast path {fast}, definition {slow}");
    Outcome::Holds
}

fn oracle_thick(env: &Env, i: &Instance) -> Outcome {
    let s = env.s;
    let (f, g, a) = (&i.colls[0], &i.colls[1], &i.sets[0]);
    let fast = attempt!(env, is_rel_thick(s, a, f, g));
    let slow = attempt!(env, definitional::is_rel_thick(s, a, f, g));
    claim!(fast == slow, "fast path {fast}, definition {slow}");
    Outcome::Holds
}

macro_rules! law {
    ($id:literal, $anchor:literal, $statement:literal, [$($h:expr),*], $space:expr, [$($name:literal),*], $max:expr, $check:path) => {
        Law {
            id: $id,
            anchor: $anchor,
            statement: $statement,
            hypotheses: &[$($h),*],
            space: $space,
            names: &[$($name),*],
            max_n: $max,
            expect_violation: false,
            check: $check,
        }
    };
}

static LAWS: &[Law] = &[
    law!("sg-associativity", "Cayley table validation", "(xy)z = x(yz)", [], Space::Semigroup, [], None, sg_associativity),
    law!("sg-smallest-ideal-two-sided", "smallest ideal", "S·K ⊆ K and K·S ⊆ K", [], Space::Semigroup, [], None, sg_smallest_ideal_two_sided),
    law!("sg-smallest-ideal-minimal", "smallest ideal", "K(T) ⊆ I for every two-sided ideal I of T", [], Space::Semigroup, [], Some(6), sg_smallest_ideal_minimal),
    law!("sg-minimal-left-ideal-idempotent", "minimal left ideals", "E(L) ≠ ∅ for every minimal left ideal L", [], Space::Semigroup, [], Some(8), sg_minimal_left_ideal_idempotent),
    law!("sg-preimage-distributes", "preimages", "h⁻¹(A∩B) = h⁻¹A ∩ h⁻¹B and h⁻¹(A∪B) = h⁻¹A ∪ h⁻¹B", [], tuple(&[], 2), ["A", "B"], None, sg_preimage),
    law!("prop-mesh-operator", "Proposition mesh-operator", "F1 ⊆ F2* iff F2 ⊆ F1*", [], tuple(&[All, All], 0), ["F1", "F2"], None, mesh_galois),
    law!("cor-mesh-operator-a", "Corollary mesh-operator (a)", "F ⊆ F**", [], tuple(&[All], 0), ["F"], None, mesh_a),
    law!("cor-mesh-operator-b", "Corollary mesh-operator (b)", "F1 ⊆ F2 implies F2* ⊆ F1* and F1** ⊆ F2**", [], tuple(&[All, All], 0), ["F1", "F2"], None, mesh_b),
    law!("cor-mesh-operator-c", "Corollary mesh-operator (c)", "F^* = F^{***}", [], tuple(&[All, All], 0), ["F1", "F2"], None, mesh_c),
    law!("cor-mesh-operator-d", "Corollary mesh-operator (d)", "{F : F = F**} = {F* : F collection}", [], tuple(&[All], 0), ["F"], None, mesh_d),
    law!("cor-mesh-operator-e", "Corollary mesh-operator (e)", "F* = max{F1 : F ⊆ F1*}", [], tuple(&[All, All], 0), ["F", "F1"], None, mesh_e),
    law!("cor-mesh-operator-f", "Corollary mesh-operator (f)", "(∪ Fi)* = ∩ Fi*", [], tuple(&[All, All, All], 0), ["F1", "F2", "F3"], None, mesh_f),
    law!("prop-stack-a", "Proposition stack (a)", "F* and F** are stacks, proper iff F is", [], tuple(&[All], 0), ["F"], None, stack_a),
    law!("prop-stack-b", "Proposition stack (b)", "A ∈ F* iff S∖A ∉ F", [], tuple(&[Stack], 1), ["F", "A"], None, stack_b),
    law!("prop-stack-c", "Proposition stack (c)", "F** = {A : B ⊆ A for some B ∈ F}", [], tuple(&[All], 0), ["F"], None, stack_c),
    law!("prop-stack-d", "Proposition stack (d)", "F = F**", [], tuple(&[All], 0), ["F"], None, stack_d),
    law!("prop-stack-e", "Proposition stack (e)", "(∩ Fi)* = ∪ Fi*", [], tuple(&[Stack, Stack, Stack], 0), ["F1", "F2", "F3"], None, stack_e),
    law!("prop-filter-grill-a", "Proposition filter-grill (a)", "F is a filter iff F* is a grill", [], tuple(&[Stack], 0), ["F"], None, filter_grill_a),
    law!("prop-filter-grill-b", "Proposition filter-grill (b)", "F is proper iff F ⊆ F*", [FILTER_F], tuple(&[Stack], 0), ["F"], None, filter_grill_b),
    law!("prop-filter-grill-c", "Proposition filter-grill (c)", "F is an ultrafilter iff F = F*", [FILTER_F], tuple(&[Stack], 0), ["F"], None, filter_grill_c),
    law!("prop-filter-grill-d", "Proposition filter-grill (d)", "F is an ultrafilter iff A ∈ F ⟺ S∖A ∉ F", [FILTER_F], tuple(&[Stack], 0), ["F"], None, filter_grill_d),
    law!("prop-filter-grill-e", "Proposition filter-grill (e)", "Ultrafilters are precisely maximal proper filters", [], tuple(&[Stack], 0), ["F"], None, filter_grill_e),
    law!("prop-binary-operation", "Proposition binary-operation", "F ⊓ F1 ⊆ F2 if and only if F1 ⊆ (F ⊓ F2*)*", [], tuple(&[All, Stack, Stack], 0), ["F", "F1", "F2"], None, binary_operation),
    law!("prop-grill-a", "Proposition grill (a)(i)(ii)", "F1 ⊓ F2 is a stack, nonempty iff F1 and F2 are", [], tuple(&[Stack, Stack], 0), ["F1", "F2"], None, grill_a),
    law!("prop-grill-a-iii", "Proposition grill (a)(iii)", "∅ ∉ F1 ⊓ F2 if and only if F1 ⊆ F2^* and ∅ ∉ F1, F2", [NONEMPTY_OPERANDS], tuple(&[Stack, Stack], 0), ["F1", "F2"], None, grill_a_iii),
    law!("prop-grill-b", "Proposition grill (b)", "F ⊓ F* is a grill, proper iff F is", [], tuple(&[Stack, Stack], 0), ["F", "F1"], None, grill_b),
    law!("prop-derived-set-a-i", "Proposition derived-set (a)(i)", "(A1∩A2)'(F) ⊆ A1'(F) ∩ A2'(F)", [], tuple(&[Stack], 2), ["F", "A1", "A2"], None, derived_a_i_inclusion),
    law!("prop-derived-set-a-i-equality", "Proposition derived-set (a)(i)", "If F is a filter, then equality holds", [FILTER_F], tuple(&[Stack], 2), ["F", "A1", "A2"], None, derived_a_i_equality),
    law!("prop-derived-set-a-ii", "Proposition derived-set (a)(ii)", "A1'(G) ∪ A2'(G) ⊆ (A1∪A2)'(G)", [], tuple(&[Stack], 2), ["G", "A1", "A2"], None, derived_a_ii_inclusion),
    law!("prop-derived-set-a-ii-equality", "Proposition derived-set (a)(ii)", "If G is a grill, then equality holds", [GRILL_G], tuple(&[Stack], 2), ["G", "A1", "A2"], None, derived_a_ii_equality),
    law!("prop-derived-set-a-iii", "Proposition derived-set (a)(iii)", "(A1∩A2)'(q) = A1'(q) ∩ A2'(q)", [], tuple(&[], 2), ["A1", "A2"], None, derived_a_iii),
    law!("prop-derived-set-a-iv", "Proposition derived-set (a)(iv)", "A1'(F) ∩ A2'(G) ⊆ (A1∩A2)'(F ⊓ G)", [], tuple(&[Stack, Stack], 2), ["F", "G", "A1", "A2"], None, derived_a_iv),
    law!("prop-derived-set-b-i", "Proposition derived-set (b)(i)", "(S∖A)'(F) = S∖A'(F*)", [], tuple(&[Stack], 1), ["F", "A"], None, derived_b_i),
    law!("prop-derived-set-b-ii", "Proposition derived-set (b)(ii)", "(S∖A)'(F) ⊆ S∖A'(F)", [PROPER_FILTER_F], tuple(&[Stack], 1), ["F", "A"], None, derived_b_ii),
    law!("prop-derived-set-b-iii", "Proposition derived-set (b)(iii)", "S∖A'(G) ⊆ (S∖A)'(G)", [PROPER_GRILL_G], tuple(&[Stack], 1), ["G", "A"], None, derived_b_iii),
    law!("prop-derived-set-b-iv", "Proposition derived-set (b)(iv)", "(A∖B)'(q) = A'(q) ∖ B'(q)", [], tuple(&[], 2), ["A", "B"], None, derived_b_iv),
    law!("prop-derived-set-c-i", "Proposition derived-set (c)(i)", "F1 ⊆ F2 implies A'(F1) ⊆ A'(F2)", [], tuple(&[All, All], 1), ["F1", "F2", "A"], None, derived_c_i),
    law!("prop-derived-set-c-ii", "Proposition derived-set (c)(ii)", "A'(∪ Fi) = ∪ A'(Fi) and A'(∩ Fi) = ∩ A'(Fi)", [], tuple(&[All, All], 1), ["F1", "F2", "A"], None, derived_c_ii),
    law!("prop-derived-set-c-iii", "Proposition derived-set (c)(iii)", "A1 ⊆ A2 implies A1'(F) ⊆ A2'(F)", [], tuple(&[Stack], 2), ["F", "A1", "A2"], None, derived_c_iii),
    law!("prop-derived-set-d", "Proposition derived-set (d)", "(g^{-1}A)'(F) = g^{-1}( A'(F) )", [], tuple(&[All], 1), ["F", "A"], None, derived_d),
    law!("cor-derived-set-a-i", "Corollary derived-set (a)(i)", "p ∈ A'(G) iff A ∈ p·G", [], tuple(&[All], 1), ["G", "A"], None, product_a_i),
    law!("cor-derived-set-a-ii", "Corollary derived-set (a)(ii)", "A'(F·G) = (A'(G))'(F)", [], tuple(&[All, All], 1), ["F", "G", "A"], None, product_a_ii),
    law!("cor-derived-set-a-iii", "Corollary derived-set (a)(iii)", "F · (G · H) = (F · G) · H", [], tuple(&[All, All, All], 0), ["F", "G", "H"], None, product_a_iii),
    law!("cor-derived-set-b", "Corollary derived-set (b)", "F1 ⊆ F2 implies F1·G ⊆ F2·G", [], tuple(&[All, All, All], 0), ["F1", "F2", "G"], None, product_b),
    law!("cor-derived-set-c", "Corollary derived-set (c)", "G1 ⊆ G2 implies F·G1 ⊆ F·G2", [], tuple(&[Stack, All, All], 0), ["F", "G1", "G2"], None, product_c),
    law!("cor-derived-set-d", "Corollary derived-set (d)", "(F · G)^* = F^* · G^*", [], tuple(&[Stack, Stack], 0), ["F", "G"], None, product_d),
    law!("cor-derived-set-e-i", "Corollary derived-set (e)(i)", "(F1·G1) ⊓ (F2·G2) ⊆ (F1⊓F2)·(G1⊓G2)", [], tuple(&[Stack, Stack, Stack, Stack], 0), ["F1", "G1", "F2", "G2"], None, product_e_i),
    law!("cor-derived-set-e-ii", "Corollary derived-set (e)(ii)", "F1 ⊓ F2 is translation invariant", [INVARIANT], tuple(&[Stack, Stack], 0), ["F1", "F2"], None, product_e_ii),
    law!("cor-derived-set-e-iii", "Corollary derived-set (e)(iii)", "F1 ⊓ F2 is idempotent", [IDEMPOTENT], tuple(&[Stack, Stack], 0), ["F1", "F2"], None, product_e_iii),
    law!("prop-assumption-of-stack", "Proposition assumption-of-stack", "Syn(F, G) = Syn(F^{**}, G^{**})", [], tuple(&[All, All], 0), ["F", "G"], None, assumption_of_stack),
    law!("prop-relative-syndetic-thick-a", "Proposition relative-syndetic-thick (a)", "Syn(F, G) is a stack, proper if F and G are", [], tuple(&[All, All], 0), ["F", "G"], None, syn_is_stack),
    law!("prop-relative-syndetic-thick-b", "Proposition relative-syndetic-thick (b)", "Syn(F, G)^* = Thick(F, G)", [], tuple(&[All, All], 0), ["F", "G"], None, syn_thick_duality),
    law!("thm-relative-syndetic-thick", "Theorem relative-syndetic-thick", "A ∈ Syn(F,G) iff A'(H*) ∈ F* for every maximal filter H ⊆ G*", [NONDEGENERATE], tuple(&[Stack, Stack], 0), ["F", "G"], None, maximal_filter_characterization),
    law!("cor-relative-syndetic-thick", "Corollary relative-syndetic-thick", "Thick(F, G^*) = F · G", [NONDEGENERATE], tuple(&[Stack, Filter], 0), ["F", "G"], None, kernel_point_characterization),
    law!("f-condition-translates", "Lemma derived-set-relative-syndetic (b), proof", "F ⊆ F·p for all p ∈ Ḡ", [F_CONDITION], tuple(&[PF, PF], 0), ["F", "G"], None, f_condition_translates),
    law!("preorder-is-preorder", "relative preorder", "p ≲ p, and p ≲ q ≲ r implies p ≲ r", [PROPER_F], tuple(&[Stack], 0), ["F"], None, preorder),
    law!("prop-product-filters", "Proposition product-filters", "F1 ⊓ F2 is a product filter", [F1_PRODUCT, F2_PRODUCT, F1_IN_MESH_F2], tuple(&[PF, PF], 0), ["F1", "F2"], None, product_filter_wedge),
    law!("product-filter-kernel", "Definition product-filters", "F ⊆ Syn(F*, F) iff the kernel set of F is a subsemigroup", [], tuple(&[PF], 0), ["F"], None, product_filter_kernel),
    law!("f-condition-kernel", "Corollary relative-syndetic-thick", "F ⊆ Syn(F*, G) iff F̄·Ḡ ⊆ F̄", [], tuple(&[PF, PF], 0), ["F", "G"], None, f_condition_kernel),
    law!("thm-maximal-elements", "Theorem maximal-elements", "q is maximal iff F̄·q is a minimal left ideal of F̄", [F_PRODUCT], tuple(&[PF], 0), ["F"], None, maximal_elements),
    law!("prop-derived-set-relative-syndetic", "Proposition derived-set-relative-syndetic", "A ∈ Syn(F, Thick(G, q))", [PROPER_F], tuple(&[Stack, PF], 0), ["F", "G"], None, derived_syndetic_three_way),
    law!("lemma-derived-set-relative-syndetic-a", "Lemma derived-set-relative-syndetic (a)", "B'(q) ∈ Syn(F, G) for all q ∈ Ḡ", [PROPER_F, G_PRODUCT], tuple(&[Stack, PF], 0), ["F", "G"], None, derived_syndetic_lemma_a),
    law!("lemma-derived-set-relative-syndetic-b", "Lemma derived-set-relative-syndetic (b)", "C'(q) ∈ Syn(F^*, G)", [PROPER_F, F_CONDITION], tuple(&[Stack, PF], 0), ["F", "G"], None, derived_syndetic_lemma_b),
    law!("thm-relative-kernel", "Theorem relative-kernel", "p ∈ K(F,G) and its three characterizations agree", [F_CONDITION, G_PRODUCT], tuple(&[PF, PF], 0), ["F", "G"], None, kernel_membership),
    law!("thm-relative-piecewise-syndetic", "Theorem relative-piecewise-syndetic", "A ∈ PS(F,G) iff A'(q) ∈ Syn(F,G) for some q", [F_CONDITION, G_PRODUCT], tuple(&[PF, PF], 0), ["F", "G"], None, ps_five_way),
    law!("cor-relative-kernel", "Corollary relative-kernel", "A ∈ PS(F,G) iff A ∩ K(F,G) ≠ ∅", [F_CONDITION, G_PRODUCT], tuple(&[PF, PF], 0), ["F", "G"], None, kernel_corollary),
    law!("fip-relative-piecewise-syndetic", "Theorem relative-piecewise-syndetic", "finite intersection property form", [F_CONDITION, G_PRODUCT], tuple(&[PF, PF], 0), ["F", "G"], None, fip_form),
    law!("prop-collectionwise-relative-piecewise-syndetic", "Proposition collectionwise-relative-piecewise-syndetic", "(a) iff (b) iff (c) iff (d)", [F_CONDITION, G_PRODUCT], tuple(&[PF, PF, All], 0), ["F", "G", "A"], None, collectionwise_four_way),
    law!("thm-collectionwise-relative-piecewise-syndetic", "Theorem collectionwise-relative-piecewise-syndetic", "there exists p ∈ K(F, G) in every member of A", [F_CONDITION, G_PRODUCT], tuple(&[PF, PF, All], 0), ["F", "G", "A"], None, collectionwise_kernel_point),
    law!("thm-relative-kernel-has-idempotents", "Theorem relative-kernel-has-idempotents", "E(K(F,G)) ≠ ∅", [F_PRODUCT, G_PRODUCT, F_CONDITION], tuple(&[PF, PF], 0), ["F", "G"], None, kernel_has_idempotents),
    law!("thm-relative-central-partition-regular", "Theorem relative-central-is-partition-regular", "A is (F,G)-central iff A ∩ E(K(F,G)) ≠ ∅", [F_PRODUCT, G_PRODUCT, F_CONDITION], tuple(&[PF, PF], 0), ["F", "G"], None, central_idempotent_form),
    law!("cor-relative-central-grill", "Corollary relative-central-is-partition-regular", "Cen(F,G) is a proper grill", [F_PRODUCT, G_PRODUCT, F_CONDITION], tuple(&[PF, PF], 0), ["F", "G"], None, central_is_grill),
    law!("thm-characterization-piecewise-syndetic", "Theorem characterization-piecewise-syndetic", "the eight statements agree for F = G = {S}", [], Space::Semigroup, [], Some(8), absolute_eight_way),
    law!("oracle-syn-fast-path", "relative syndetic tester", "fast tester agrees with the definitional scan", [], tuple(&[All, All], 1), ["F", "G", "A"], Some(8), oracle_syn),
    law!("oracle-thick-fast-path", "relative thick tester", "fast tester agrees with the definitional scan", [], tuple(&[All, All], 1), ["F", "G", "A"], Some(8), oracle_thick),
    Law {
        id: "selftest-syn-is-filter",
        anchor: "harness self-test",
        statement: "Syn(F, G) is always a filter (false on purpose)",
        hypotheses: &[],
        space: tuple(&[Stack, Stack], 0),
        names: &["F", "G"],
        max_n: None,
        expect_violation: true,
        check: selftest_syn_is_filter,
    },
];

pub(crate) fn registry() -> &'static [Law] {
    LAWS
}
