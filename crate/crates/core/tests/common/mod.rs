//! Pinned micro-examples, shared by the `micro_examples` unit tests and the acceptance run.
//!
//! `stated_` cases pin values that are stated outright for the definitions. `derived_` cases pin
//! values worked out by hand and re-derived here by an independent brute-force computation.

#![allow(dead_code)]

use relsize_core::derived::product;
use relsize_core::enumerate::{enumerate_collections, Mode};
use relsize_core::kernel::{make_kernel_context, relative_kernel};
use relsize_core::relative::{definitional, ps_collection, syn_collection, thick_collection};
use relsize_core::{standard_semigroup, Collection, FiniteSemigroup, SemigroupKind, Subset};

pub const CASES: &[(&str, fn())] = &[
    ("derived_semilattice_relative_kernel_is_zero", derived_semilattice_relative_kernel_is_zero),
    ("derived_left_zero_syn_thick_ps_tables", derived_left_zero_syn_thick_ps_tables),
    ("derived_principal_product_is_principal", derived_principal_product_is_principal),
    ("stated_improper_left_operands_are_left_zeros", stated_improper_left_operands_are_left_zeros),
    ("stated_product_with_empty_right_operand", stated_product_with_empty_right_operand),
    ("stated_product_with_full_right_operand", stated_product_with_full_right_operand),
];

fn sg(kind: SemigroupKind, n: usize) -> FiniteSemigroup {
    standard_semigroup(kind, n).unwrap()
}

fn sets(n: usize, members: &[&[usize]]) -> Collection {
    Collection::from_sets(n, members).unwrap()
}

fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0..1usize << n).map(move |i| Subset::from_index(n, i))
}

/// Smallest two-sided ideal by intersecting every ideal, with no use of minimal left ideals.
fn brute_smallest_ideal(s: &FiniteSemigroup) -> Subset {
    let n = s.n();
    let mut k = Subset::full(n);
    for i in all_subsets(n).filter(|i| !i.is_empty()) {
        let ideal = i.iter().all(|x| (0..n).all(|y| i.contains(s.mul(x, y)) && i.contains(s.mul(y, x))));
        if ideal {
            k = k.intersection(&i);
        }
    }
    k
}

fn brute_set_product(s: &FiniteSemigroup, a: &Subset, b: &Subset) -> Subset {
    let mut out = Subset::empty(s.n());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(s.mul(x, y));
        }
    }
    out
}

pub fn derived_semilattice_relative_kernel_is_zero() {
    // {0, 1} under multiplication, F = up({0}), G = {S}.
    let s = sg(SemigroupKind::MeetSemilatticeChain, 2);
    let f = Collection::principal(&Subset::from_elements(2, [0]).unwrap()).unwrap();
    let g = Collection::universe(2).unwrap();
    let ctx = make_kernel_context(&s, &f, &g).unwrap();
    let k = relative_kernel(&ctx).unwrap();
    assert_eq!(k.to_vec(), vec![0]);

    let oracle = brute_set_product(&s, &f.kernel_set(), &brute_smallest_ideal(&s));
    assert_eq!(k, oracle);
}

pub fn derived_left_zero_syn_thick_ps_tables() {
    // xy = x on {0, 1}, F = G = {S}.
    let s = sg(SemigroupKind::LeftZero, 2);
    let top = Collection::universe(2).unwrap();
    let nonempty = sets(2, &[&[0], &[1], &[0, 1]]);
    assert_eq!(syn_collection(&s, &top, &top).unwrap(), nonempty);
    assert_eq!(thick_collection(&s, &top, &top).unwrap(), sets(2, &[&[0, 1]]));
    assert_eq!(ps_collection(&s, &top, &top).unwrap(), nonempty);

    for a in all_subsets(2) {
        assert_eq!(definitional::is_rel_syndetic(&s, &a, &top, &top).unwrap(), !a.is_empty());
        assert_eq!(definitional::is_rel_thick(&s, &a, &top, &top).unwrap(), a.len() == 2);
    }
}

pub fn derived_principal_product_is_principal() {
    let roster = [
        sg(SemigroupKind::CyclicGroup, 3),
        sg(SemigroupKind::LeftZero, 2),
        sg(SemigroupKind::RightZero, 3),
        sg(SemigroupKind::MeetSemilatticeChain, 3),
        sg(SemigroupKind::RectangularBand, 2),
        sg(SemigroupKind::FullTransformation, 2),
    ];
    for s in &roster {
        let n = s.n();
        for x in 0..n {
            for y in 0..n {
                let up = |z: usize| Collection::principal(&Subset::singleton(n, z).unwrap()).unwrap();
                let got = product(s, &up(x), &up(y)).unwrap();
                assert_eq!(got, up(s.mul(x, y)), "{} x={x} y={y}", s.label());
                // A ∈ p·q iff {h : h⁻¹A ∈ q} ∈ p, expanded pointwise for p = up(x), q = up(y).
                for a in all_subsets(n) {
                    let hs: Vec<usize> = (0..n).filter(|&h| a.contains(s.mul(h, y))).collect();
                    assert_eq!(got.contains(&a), hs.contains(&x));
                }
            }
        }
    }
}

fn n2_semigroups() -> [FiniteSemigroup; 3] {
    [sg(SemigroupKind::CyclicGroup, 2), sg(SemigroupKind::LeftZero, 2), sg(SemigroupKind::MeetSemilatticeChain, 2)]
}

pub fn stated_improper_left_operands_are_left_zeros() {
    for s in n2_semigroups() {
        let empty = Collection::empty(2).unwrap();
        let power = Collection::power_set(2).unwrap();
        for g in enumerate_collections(2, Mode::All).unwrap() {
            assert_eq!(product(&s, &empty, &g).unwrap(), empty);
            assert_eq!(product(&s, &power, &g).unwrap(), power);
        }
    }
}

pub fn stated_product_with_empty_right_operand() {
    for s in n2_semigroups() {
        let empty = Collection::empty(2).unwrap();
        let power = Collection::power_set(2).unwrap();
        for f in enumerate_collections(2, Mode::All).unwrap() {
            let expected = if f.contains_empty() { &power } else { &empty };
            assert_eq!(&product(&s, &f, &empty).unwrap(), expected, "{} F={:?}", s.label(), f.to_sets());
        }
    }
}

pub fn stated_product_with_full_right_operand() {
    for s in n2_semigroups() {
        let empty = Collection::empty(2).unwrap();
        let power = Collection::power_set(2).unwrap();
        for f in enumerate_collections(2, Mode::All).unwrap() {
            let expected = if f.contains_full() { &power } else { &empty };
            assert_eq!(&product(&s, &f, &power).unwrap(), expected, "{} F={:?}", s.label(), f.to_sets());
        }
    }
}
