//! Instance spaces of collections for exhaustive and sampled checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::collection::{mesh, stack_closure, Collection};
use crate::error::{Error, Result};
use crate::limits::check_enumerable;
use crate::subset::Subset;

/// Largest space that `Mode::All` and `Mode::Stacks` will enumerate.
pub const SPACE_BOUND: u128 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Every collection: `2^(2ⁿ)` of them.
    All,
    /// Every upward-closed collection, including `∅` and `P(S)`.
    Stacks,
    /// `up(B)` for every `B`, so `P(S) = up(∅)` comes first.
    Filters,
    /// `up(B)` for every nonempty `B`.
    ProperFilters,
    /// `{A : A ∩ B ≠ ∅}` for every `B`; `B = ∅` gives the improper grill `∅`.
    Grills,
    /// `count` collections, each subset included independently with probability 1/2.
    Sample { count: usize, seed: u64 },
}

/// Size of the space, or `None` when it does not fit a `u128`.
pub fn space_size(n: usize, mode: Mode) -> Option<u128> {
    match mode {
        Mode::All => {
            let bits = 1u32.checked_shl(n as u32)?;
            1u128.checked_shl(bits)
        }
        Mode::Stacks => DEDEKIND.get(n).copied(),
        Mode::Filters | Mode::Grills => Some(1u128 << n),
        Mode::ProperFilters => Some((1u128 << n) - 1),
        Mode::Sample { count, .. } => Some(count as u128),
    }
}

/// Number of stacks on an `n`-element set (Dedekind numbers).
const DEDEKIND: [u128; 9] = [2, 3, 6, 20, 168, 7581, 7_828_354, 2_414_682_040_998, 56_130_437_228_687_557_907_788];

pub type CollectionIter = Box<dyn Iterator<Item = Collection> + Send>;

/// Enumerates a space of collections on `0..n` in a fixed order.
pub fn enumerate_collections(n: usize, mode: Mode) -> Result<CollectionIter> {
    check_enumerable(n)?;
    let too_large = |size: Option<u128>| Error::SpaceTooLarge { size: size.unwrap_or(u128::MAX), bound: SPACE_BOUND };
    match mode {
        Mode::All => {
            let size = space_size(n, mode);
            match size {
                Some(s) if s <= SPACE_BOUND => Ok(Box::new((0..s as u64).map(move |w| Collection::from_word(n, w)))),
                _ => Err(too_large(size)),
            }
        }
        Mode::Stacks => {
            let size = space_size(n, mode);
            match size {
                Some(s) if s <= SPACE_BOUND && n <= 6 => Ok(Box::new(stack_words(n).into_iter().map(move |w| Collection::from_word(n, w)))),
                _ => Err(too_large(size)),
            }
        }
        Mode::Filters => Ok(Box::new((0..1usize << n).map(move |b| principal_index(n, b)))),
        Mode::ProperFilters => Ok(Box::new((1..1usize << n).map(move |b| principal_index(n, b)))),
        Mode::Grills => Ok(Box::new((0..1usize << n).map(move |b| mesh(&principal_index(n, b))))),
        Mode::Sample { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(Box::new((0..count).map(move |_| sample_any(n, &mut rng))))
        }
    }
}

fn principal_index(n: usize, b: usize) -> Collection {
    Collection::principal(&Subset::from_index(n, b)).expect("universe already checked")
}

/// Bitmap words of all stacks on `n <= 6` elements, ascending.
///
/// A stack on `n` elements is a pair `(a, b)` of stacks on `n - 1` elements with
/// `a ⊆ b`: `a` holds the members without the top element, `b` those with it.
fn stack_words(n: usize) -> Vec<u64> {
    let mut level: Vec<u64> = vec![0, 1];
    for k in 1..=n {
        let half = 1u32 << (k - 1);
        let mut next = Vec::new();
        for &a in &level {
            for &b in &level {
                if a & !b == 0 {
                    next.push(a | (b << half));
                }
            }
        }
        next.sort_unstable();
        level = next;
    }
    level
}

/// Each subset included independently with probability 1/2.
pub fn sample_any<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Collection {
    let mut c = Collection::empty(n).expect("universe already checked");
    for i in 0..1usize << n {
        if rng.gen::<bool>() {
            c.insert_index(i);
        }
    }
    c
}

/// A uniformly random subset of `0..n` (`n <= 64`).
pub fn sample_subset<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Subset {
    let mask = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    Subset::from_index(n, (rng.gen::<u64>() & mask) as usize)
}

/// Upward closure of between 0 and 3 uniformly random subsets.
pub fn sample_stack<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Collection {
    let k = rng.gen_range(0..=3);
    let gens: Vec<Subset> = (0..k).map(|_| sample_subset(n, rng)).collect();
    stack_closure(&Collection::from_subsets(n, &gens).expect("universe already checked"))
}

/// `up(B)` for a uniformly random `B`, so `P(S)` appears with probability 2⁻ⁿ.
pub fn sample_filter<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Collection {
    Collection::principal(&sample_subset(n, rng)).expect("universe already checked")
}

/// `up(B)` for a uniformly random nonempty `B`.
pub fn sample_proper_filter<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Collection {
    loop {
        let b = sample_subset(n, rng);
        if !b.is_empty() {
            return Collection::principal(&b).expect("universe already checked");
        }
    }
}

/// The mesh of [`sample_filter`].
pub fn sample_grill<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Collection {
    mesh(&sample_filter(n, rng))
}
