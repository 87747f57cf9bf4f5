//! Law registry, suite runner and counterexample hunter.
//!
//! Every law quantifies over an instance space of collection tuples and
//! subsets on each roster semigroup. Small spaces are enumerated in full;
//! larger ones are sampled with per-instance seeds, so results do not depend
//! on how rayon schedules the work.

mod laws;
mod space;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{CayleyRecord, FiniteSemigroup};
use crate::standard::{standard_semigroup, SemigroupKind};

pub use laws::LawInfo;
use laws::{registry, Law, Outcome};
use space::{Env, Plan};

/// Witnesses kept per report; the total is still counted.
pub const DEFAULT_MAX_WITNESSES: usize = 10;

/// Printed on every hunt report.
pub const HUNT_NOTE: &str =
    "finite search only: the absence of a counterexample here proves nothing about the general statement";

#[derive(Debug, Clone)]
pub struct HarnessConfig {
    pub semigroups: Vec<FiniteSemigroup>,
    /// Largest universe on which laws over arbitrary collections are enumerated in full.
    pub max_exhaustive_n: usize,
    /// Same for laws whose collections are stacks, filters or grills.
    pub max_structured_exhaustive_n: usize,
    /// Largest instance space enumerated in full; bigger spaces are sampled.
    pub exhaustive_cap: u64,
    /// Instances drawn per semigroup when a space is sampled.
    pub samples: u64,
    pub seed: u64,
    /// Bound for the finite-intersection-property searches.
    pub fip_bound: u128,
    pub max_witnesses: usize,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        Self {
            semigroups: default_roster(),
            max_exhaustive_n: 3,
            max_structured_exhaustive_n: 4,
            exhaustive_cap: 1 << 18,
            samples: 1000,
            seed: 0,
            fip_bound: crate::kernel::FIP_SEARCH_BOUND,
            max_witnesses: DEFAULT_MAX_WITNESSES,
        }
    }
}

impl HarnessConfig {
    pub fn with_semigroups(mut self, semigroups: Vec<FiniteSemigroup>) -> Self {
        self.semigroups = semigroups;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_samples(mut self, samples: u64) -> Self {
        self.samples = samples;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.semigroups.is_empty() {
            return Err(Error::Parse("empty semigroup roster".into()));
        }
        let mut labels: Vec<String> = self.semigroups.iter().map(|s| s.label()).collect();
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Parse(format!("semigroup label `{}` appears twice in the roster", w[0])));
        }
        Ok(())
    }
}

fn standard(list: &[(SemigroupKind, usize)]) -> Vec<FiniteSemigroup> {
    list.iter().map(|&(k, n)| standard_semigroup(k, n).expect("roster sizes are within limits")).collect()
}

/// Z2, Z3, LZ2, RZ2, SL2 and RB2x2.
pub fn default_roster() -> Vec<FiniteSemigroup> {
    use SemigroupKind::*;
    standard(&[(CyclicGroup, 2), (CyclicGroup, 3), (LeftZero, 2), (RightZero, 2), (MeetSemilatticeChain, 2), (RectangularBand, 2)])
}

/// Six semigroups of order at most 3: the default roster with SL3 in place of RB2x2.
pub fn small_roster() -> Vec<FiniteSemigroup> {
    use SemigroupKind::*;
    standard(&[(CyclicGroup, 2), (CyclicGroup, 3), (LeftZero, 2), (RightZero, 2), (MeetSemilatticeChain, 2), (MeetSemilatticeChain, 3)])
}

/// Every standard semigroup of order between 2 and `max_order`.
pub fn roster_up_to(max_order: usize) -> Vec<FiniteSemigroup> {
    let mut out = Vec::new();
    for kind in SemigroupKind::ALL {
        for n in 1..=max_order.min(kind.limit()) {
            let order = match kind {
                SemigroupKind::RectangularBand => n * n,
                SemigroupKind::FullTransformation => n.pow(n as u32),
                _ => n,
            };
            if (2..=max_order).contains(&order) {
                out.push(standard_semigroup(kind, n).expect("within limits"));
            }
        }
    }
    out
}

/// Resolves `default`, `small` or `upto-<N>`.
pub fn named_roster(name: &str) -> Result<Vec<FiniteSemigroup>> {
    match name {
        "default" => Ok(default_roster()),
        "small" => Ok(small_roster()),
        _ => name
            .strip_prefix("upto-")
            .and_then(|n| n.parse().ok())
            .map(roster_up_to)
            .ok_or_else(|| Error::Parse(format!("unknown roster `{name}` (expected default, small or upto-N)"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// A deliberately false law produced violations, as it should.
    ExpectedViolation,
    /// A deliberately false law produced none; the suite is not exercising it.
    VacuousSelfTest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceMode {
    Exhaustive,
    Sampled,
    NotApplicable,
}

/// A failing instance, self-contained: the full table plus every input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub semigroup: CayleyRecord,
    pub instance: BTreeMap<String, serde_json::Value>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSummary {
    pub semigroup: String,
    pub order: usize,
    pub mode: SpaceMode,
    /// Size of the full instance space; `None` when it overflows.
    pub space_size: Option<u128>,
    pub instances: u64,
    pub checked: u64,
    pub skipped: u64,
    pub violations: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    pub anchor: String,
    pub statement: String,
    pub hypotheses: Vec<String>,
    pub weakened: Vec<String>,
    pub hunt: bool,
    pub verdict: Verdict,
    pub seed: u64,
    pub samples: u64,
    pub instances_checked: u64,
    pub skipped: u64,
    pub skip_reasons: BTreeMap<String, u64>,
    /// Checked instances where an optional sub-check was bounded out.
    pub partial: BTreeMap<String, u64>,
    pub violation_count: u64,
    pub violations: Vec<Witness>,
    pub semigroups: Vec<SemigroupSummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    pub wall_time_ms: u64,
}

impl LawReport {
    pub fn is_pass(&self) -> bool {
        matches!(self.verdict, Verdict::Pass | Verdict::ExpectedViolation)
    }

    /// One JSON line.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Registered laws in registry order.
pub fn laws() -> Vec<LawInfo> {
    registry().iter().map(Law::info).collect()
}

pub fn law_ids() -> Vec<&'static str> {
    registry().iter().map(|l| l.id).collect()
}

fn find(id: &str) -> Result<&'static Law> {
    registry().iter().find(|l| l.id == id).ok_or_else(|| Error::UnknownLawId(id.to_string()))
}

/// Runs the selected laws (all when `filter` is `None`), one report each, in registry order.
pub fn run_law_suite(config: &HarnessConfig, filter: Option<&[String]>) -> Result<Vec<LawReport>> {
    config.validate()?;
    let selected: Vec<&Law> = match filter {
        None => registry().iter().collect(),
        Some(ids) => {
            let mut v = Vec::new();
            for id in ids {
                let law = find(id)?;
                if !v.iter().any(|l: &&Law| l.id == law.id) {
                    v.push(law);
                }
            }
            v
        }
    };
    Ok(selected.par_iter().map(|law| run_law(law, config, &[], false)).collect())
}

/// Runs one law with the named hypotheses dropped; findings are data, not failures.
pub fn hunt_counterexamples(id: &str, weaken: &[String], config: &HarnessConfig) -> Result<LawReport> {
    config.validate()?;
    let law = find(id)?;
    let mut dropped = Vec::new();
    for name in weaken {
        let h = law
            .hypotheses
            .iter()
            .find(|h| h.id == name || h.text == name)
            .ok_or_else(|| Error::UnknownHypothesis { law: id.to_string(), name: name.clone() })?;
        if !dropped.contains(&h.id) {
            dropped.push(h.id);
        }
    }
    Ok(run_law(law, config, &dropped, true))
}

/// Exit status for a suite: nonzero iff some law failed.
pub fn suite_exit_code(reports: &[LawReport]) -> i32 {
    if reports.iter().all(LawReport::is_pass) {
        0
    } else {
        1
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    skipped: u64,
    skip_reasons: BTreeMap<String, u64>,
    partial: BTreeMap<String, u64>,
    violations: u64,
    witnesses: Vec<Witness>,
}

const CHUNK: u64 = 1 << 12;

fn run_law(law: &Law, config: &HarnessConfig, weakened: &[&'static str], hunt: bool) -> LawReport {
    let start = Instant::now();
    let mut total = Tally::default();
    let mut summaries = Vec::new();
    for s in &config.semigroups {
        let env = Env::new(s, law, weakened, config);
        let plan = Plan::new(law, s, config);
        let mut tally = Tally::default();
        let (mode, space_size, count, reason) = match &plan {
            Plan::NotApplicable(reason) => (SpaceMode::NotApplicable, None, 0, Some(reason.clone())),
            Plan::Exhaustive { size, .. } => (SpaceMode::Exhaustive, Some(*size as u128), *size, None),
            Plan::Sampled { size } => (SpaceMode::Sampled, *size, config.samples, None),
        };
        let mut begin = 0;
        while begin < count {
            let end = (begin + CHUNK).min(count);
            let outcomes: Vec<(u64, Outcome)> = (begin..end)
                .into_par_iter()
                .map(|i| {
                    let inst = plan.instance(law, s, config.seed, i);
                    (i, (law.check)(&env, &inst))
                })
                .collect();
            for (i, outcome) in outcomes {
                match outcome {
                    Outcome::Holds => tally.checked += 1,
                    Outcome::Partial(why) => {
                        tally.checked += 1;
                        *tally.partial.entry(why).or_default() += 1;
                    }
                    Outcome::Skip(why) => {
                        tally.skipped += 1;
                        *tally.skip_reasons.entry(why).or_default() += 1;
                    }
                    Outcome::Fails(detail) => {
                        tally.checked += 1;
                        tally.violations += 1;
                        if total.witnesses.len() + tally.witnesses.len() < config.max_witnesses {
                            let inst = plan.instance(law, s, config.seed, i);
                            tally.witnesses.push(Witness {
                                semigroup: CayleyRecord::from(s),
                                instance: inst.bindings(law.names),
                                detail,
                            });
                        }
                    }
                }
            }
            begin = end;
        }
        summaries.push(SemigroupSummary {
            semigroup: s.label(),
            order: s.n(),
            mode,
            space_size,
            instances: count,
            checked: tally.checked,
            skipped: tally.skipped,
            violations: tally.violations,
            reason,
        });
        total.checked += tally.checked;
        total.skipped += tally.skipped;
        total.violations += tally.violations;
        for (k, v) in tally.skip_reasons {
            *total.skip_reasons.entry(k).or_default() += v;
        }
        for (k, v) in tally.partial {
            *total.partial.entry(k).or_default() += v;
        }
        total.witnesses.extend(tally.witnesses);
    }
    let verdict = match (law.expect_violation, total.violations > 0) {
        (false, false) => Verdict::Pass,
        (false, true) => Verdict::Fail,
        (true, true) => Verdict::ExpectedViolation,
        (true, false) => Verdict::VacuousSelfTest,
    };
    LawReport {
        law: law.id.to_string(),
        anchor: law.anchor.to_string(),
        statement: law.statement.to_string(),
        hypotheses: law.hypotheses.iter().map(|h| h.id.to_string()).collect(),
        weakened: weakened.iter().map(|s| s.to_string()).collect(),
        hunt,
        verdict,
        seed: config.seed,
        samples: config.samples,
        instances_checked: total.checked,
        skipped: total.skipped,
        skip_reasons: total.skip_reasons,
        partial: total.partial,
        violation_count: total.violations,
        violations: total.witnesses,
        semigroups: summaries,
        note: hunt.then(|| HUNT_NOTE.to_string()),
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}
