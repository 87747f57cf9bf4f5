//! Fixed inputs shared by the benchmarks.

use relsize_core::{stack_closure, standard_semigroup, Collection, FiniteSemigroup, SemigroupKind, Subset};

pub struct Fixture {
    pub s: FiniteSemigroup,
    pub f: Collection,
    pub g: Collection,
    pub a: Subset,
    /// A stack with several minimal members, for the closure operators.
    pub stack: Collection,
}

impl Fixture {
    pub fn label(&self) -> String {
        self.s.label()
    }
}

fn build(kind: SemigroupKind, n: usize) -> Fixture {
    let s = standard_semigroup(kind, n).expect("standard semigroup");
    let order = s.n();
    let full = (1usize << order) - 1;
    // f = up({0, 1}), g = up(S minus the last element), a = every other element.
    let f = Collection::principal(&Subset::from_index(order, 0b11)).unwrap();
    let g = Collection::principal(&Subset::from_index(order, full >> 1)).unwrap();
    let a = Subset::from_index(order, full & 0x5555_5555);
    let gens: Vec<Subset> = [0b101, 0b110, 1 << (order - 1)].iter().map(|&i| Subset::from_index(order, i & full)).collect();
    let stack = stack_closure(&Collection::from_subsets(order, &gens).unwrap());
    Fixture { s, f, g, a, stack }
}

/// One fixture per shape: a group, a band, a chain and a non-regular transformation monoid.
pub fn fixtures() -> Vec<Fixture> {
    vec![
        build(SemigroupKind::CyclicGroup, 4),
        build(SemigroupKind::CyclicGroup, 8),
        build(SemigroupKind::RectangularBand, 2),
        build(SemigroupKind::MeetSemilatticeChain, 6),
        build(SemigroupKind::FullTransformation, 2),
    ]
}
