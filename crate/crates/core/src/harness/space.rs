use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::laws::Law;
use super::HarnessConfig;
use crate::collection::Collection;
use crate::enumerate::{self, enumerate_collections, Mode};
use crate::limits::max_enumeration_n;
use crate::semigroup::FiniteSemigroup;
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Class {
    All,
    Stack,
    Filter,
    ProperFilter,
}

impl Class {
    fn mode(self) -> Mode {
        match self {
            Class::All => Mode::All,
            Class::Stack => Mode::Stacks,
            Class::Filter => Mode::Filters,
            Class::ProperFilter => Mode::ProperFilters,
        }
    }

    fn sample(self, n: usize, rng: &mut ChaCha8Rng) -> Collection {
        match self {
            Class::All => enumerate::sample_any(n, rng),
            Class::Stack => enumerate::sample_stack(n, rng),
            Class::Filter => enumerate::sample_filter(n, rng),
            Class::ProperFilter => enumerate::sample_proper_filter(n, rng),
        }
    }
}

/// Instance space of a law on one semigroup.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Space {
    /// A single instance per semigroup.
    Semigroup,
    /// Tuples of collections followed by `sets` subsets of the universe.
    Tuple { classes: &'static [Class], sets: usize },
}

pub(crate) struct Instance {
    pub colls: Vec<Collection>,
    pub sets: Vec<Subset>,
}

impl Instance {
    pub fn bindings(&self, names: &[&str]) -> BTreeMap<String, serde_json::Value> {
        let mut out = BTreeMap::new();
        for (k, c) in self.colls.iter().enumerate() {
            out.insert(names[k].to_string(), serde_json::json!({ "sets": c.to_sets() }));
        }
        for (k, a) in self.sets.iter().enumerate() {
            out.insert(names[self.colls.len() + k].to_string(), serde_json::json!(a.to_vec()));
        }
        out
    }
}

/// What a check sees besides the instance.
pub(crate) struct Env<'a> {
    pub s: &'a FiniteSemigroup,
    active: Vec<&'static str>,
    pub weakened: Vec<&'static str>,
    pub fip_bound: u128,
}

impl<'a> Env<'a> {
    pub fn new(s: &'a FiniteSemigroup, law: &Law, weakened: &[&'static str], config: &HarnessConfig) -> Self {
        Self {
            s,
            active: law.hypotheses.iter().map(|h| h.id).filter(|h| !weakened.contains(h)).collect(),
            weakened: weakened.to_vec(),
            fip_bound: config.fip_bound,
        }
    }

    /// Whether the named hypothesis is enforced in this run.
    pub fn on(&self, hypothesis: &str) -> bool {
        self.active.contains(&hypothesis)
    }

    pub fn relaxed(&self) -> bool {
        !self.weakened.is_empty()
    }
}

pub(crate) enum Plan {
    NotApplicable(String),
    Exhaustive { lists: Vec<Vec<Collection>>, sets: usize, size: u64 },
    Sampled { size: Option<u128> },
}

fn fnv(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325u64, |h, &b| (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3))
}

/// Randomness for instance `index` depends only on the seed, the law and the semigroup.
pub(crate) fn instance_rng(seed: u64, law: &str, semigroup: &str, index: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&fnv(law.as_bytes()).to_le_bytes());
    key[16..24].copy_from_slice(&fnv(semigroup.as_bytes()).to_le_bytes());
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(index);
    rng
}

impl Plan {
    pub fn new(law: &Law, s: &FiniteSemigroup, config: &HarnessConfig) -> Plan {
        let n = s.n();
        if let Some(max) = law.max_n {
            if n > max {
                return Plan::NotApplicable(format!("law limited to order <= {max}"));
            }
        }
        let (classes, sets) = match law.space {
            Space::Semigroup => return Plan::Exhaustive { lists: Vec::new(), sets: 0, size: 1 },
            Space::Tuple { classes, sets } => (classes, sets),
        };
        if n > max_enumeration_n() || (sets > 0 && n > 63) {
            return Plan::NotApplicable(format!("order {n} exceeds the enumeration limit {}", max_enumeration_n()));
        }
        let mut size: Option<u128> = Some(1);
        let mut eligible = true;
        for &c in classes {
            let cs = enumerate::space_size(n, c.mode());
            size = size.zip(cs).and_then(|(a, b)| a.checked_mul(b));
            let cutoff = if c == Class::All { config.max_exhaustive_n } else { config.max_structured_exhaustive_n };
            eligible &= n <= cutoff;
        }
        for _ in 0..sets {
            size = size.and_then(|a| a.checked_mul(1u128 << n));
        }
        match size {
            Some(sz) if eligible && sz <= config.exhaustive_cap as u128 => {
                let lists = classes
                    .iter()
                    .map(|&c| enumerate_collections(n, c.mode()).map(|it| it.collect()))
                    .collect::<crate::Result<Vec<Vec<Collection>>>>();
                match lists {
                    Ok(lists) => Plan::Exhaustive { lists, sets, size: sz as u64 },
                    Err(_) => Plan::Sampled { size },
                }
            }
            _ => Plan::Sampled { size },
        }
    }

    pub fn instance(&self, law: &Law, s: &FiniteSemigroup, seed: u64, index: u64) -> Instance {
        let n = s.n();
        match self {
            Plan::NotApplicable(_) => unreachable!("no instances are drawn"),
            Plan::Exhaustive { lists, sets, .. } => {
                let mut rest = index;
                let mut set_out = Vec::with_capacity(*sets);
                for _ in 0..*sets {
                    set_out.push(Subset::from_index(n, (rest % (1u64 << n)) as usize));
                    rest >>= n;
                }
                set_out.reverse();
                let mut colls = Vec::with_capacity(lists.len());
                for list in lists.iter().rev() {
                    colls.push(list[(rest % list.len() as u64) as usize].clone());
                    rest /= list.len() as u64;
                }
                colls.reverse();
                Instance { colls, sets: set_out }
            }
            Plan::Sampled { .. } => {
                let Space::Tuple { classes, sets } = law.space else { unreachable!("semigroup spaces are exhaustive") };
                let mut rng = instance_rng(seed, law.id, &s.label(), index);
                let colls = classes.iter().map(|c| c.sample(n, &mut rng)).collect();
                let sets = (0..sets).map(|_| enumerate::sample_subset(n, &mut rng)).collect();
                Instance { colls, sets }
            }
        }
    }
}
