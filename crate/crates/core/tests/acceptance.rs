//! Acceptance run: one line per criterion, nonzero exit if any criterion fails.
//!
//! Runs as a plain binary (no libtest harness) so the summary lines are always printed.

mod common;

use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use relsize_core::harness::{roster_up_to, run_law_suite, small_roster, HarnessConfig, LawReport, SpaceMode, Verdict};

type Check = Result<String, String>;

fn run(cfg: &HarnessConfig, ids: &[&str]) -> Result<Vec<LawReport>, String> {
    let ids: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
    run_law_suite(cfg, Some(&ids)).map_err(|e| e.to_string())
}

fn all_pass(reports: &[LawReport]) -> Result<(), String> {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.is_pass())
        .map(|r| format!("{} ({} violations)", r.law, r.violation_count))
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(format!("failing laws: {}", failed.join(", ")))
    }
}

/// Every per-semigroup run with `order <= exhaustive_up_to`, or with a space small enough for
/// the configured cap, was exhaustive; every sampled run drew at least `min_samples` instances.
fn coverage(reports: &[LawReport], cfg: &HarnessConfig, exhaustive_up_to: usize, min_samples: u64) -> Result<(), String> {
    for r in reports {
        for s in &r.semigroups {
            match s.mode {
                SpaceMode::Exhaustive => {
                    if Some(s.instances as u128) != s.space_size {
                        return Err(format!("{} on {}: exhaustive run covered {} of {:?}", r.law, s.semigroup, s.instances, s.space_size));
                    }
                }
                SpaceMode::Sampled => {
                    let small = s.space_size.is_some_and(|z| z <= u128::from(cfg.exhaustive_cap));
                    if s.order <= exhaustive_up_to || small {
                        return Err(format!("{} on {} was sampled, expected exhaustive", r.law, s.semigroup));
                    }
                    if s.instances < min_samples {
                        return Err(format!("{} on {}: {} samples < {min_samples}", r.law, s.semigroup, s.instances));
                    }
                }
                SpaceMode::NotApplicable => {}
            }
        }
    }
    Ok(())
}

fn totals(reports: &[LawReport]) -> String {
    let checked: u64 = reports.iter().map(|r| r.instances_checked).sum();
    let skipped: u64 = reports.iter().map(|r| r.skipped).sum();
    format!("{} laws, {checked} instances checked, {skipped} skipped by hypothesis", reports.len())
}

fn criterion_1() -> Check {
    let cfg = HarnessConfig::default().with_semigroups(small_roster()).with_samples(100_000);
    let ids = [
        "prop-mesh-operator", "cor-mesh-operator-a", "cor-mesh-operator-b", "cor-mesh-operator-c", "cor-mesh-operator-d",
        "cor-mesh-operator-e", "cor-mesh-operator-f", "prop-stack-a", "prop-stack-b", "prop-stack-c", "prop-stack-d",
        "prop-stack-e", "prop-filter-grill-a", "prop-filter-grill-b", "prop-filter-grill-c", "prop-filter-grill-d",
        "prop-filter-grill-e", "prop-binary-operation", "prop-grill-a", "prop-grill-a-iii", "prop-grill-b",
    ];
    let reports = run(&cfg, &ids)?;
    all_pass(&reports)?;
    coverage(&reports, &cfg, 2, 100_000)?;
    // Single and pair quantifiers over arbitrary collections must be full 256 / 256² scans on n = 3.
    for r in &reports {
        for s in r.semigroups.iter().filter(|s| s.order == 3) {
            if matches!(s.space_size, Some(256) | Some(65_536)) && s.mode != SpaceMode::Exhaustive {
                return Err(format!("{} on {} not exhaustive", r.law, s.semigroup));
            }
        }
    }
    Ok(totals(&reports))
}

fn criterion_2() -> Check {
    let cfg = HarnessConfig::default().with_semigroups(small_roster()).with_samples(100_000);
    let ids = [
        "prop-derived-set-a-i", "prop-derived-set-a-i-equality", "prop-derived-set-a-ii", "prop-derived-set-a-ii-equality",
        "prop-derived-set-a-iii", "prop-derived-set-a-iv", "prop-derived-set-b-i", "prop-derived-set-b-ii",
        "prop-derived-set-b-iii", "prop-derived-set-b-iv", "prop-derived-set-c-i", "prop-derived-set-c-ii",
        "prop-derived-set-c-iii", "prop-derived-set-d", "cor-derived-set-a-i", "cor-derived-set-a-ii", "cor-derived-set-a-iii",
        "cor-derived-set-b", "cor-derived-set-c", "cor-derived-set-d", "cor-derived-set-e-i", "cor-derived-set-e-ii",
        "cor-derived-set-e-iii",
    ];
    let reports = run(&cfg, &ids)?;
    all_pass(&reports)?;
    coverage(&reports, &cfg, 2, 100_000)?;
    let assoc = reports.iter().find(|r| r.law == "cor-derived-set-a-iii").ok_or("associativity law missing")?;
    for s in &assoc.semigroups {
        let ok = match s.order {
            2 => s.mode == SpaceMode::Exhaustive && s.checked == 4096,
            3 => s.mode == SpaceMode::Sampled && s.checked >= 100_000,
            _ => true,
        };
        if !ok {
            return Err(format!("associativity on {}: {:?} with {} checked", s.semigroup, s.mode, s.checked));
        }
    }
    Ok(totals(&reports))
}

fn criterion_3() -> Check {
    let cfg = HarnessConfig::default().with_semigroups(small_roster());
    let ids = [
        "prop-assumption-of-stack", "prop-relative-syndetic-thick-a", "prop-relative-syndetic-thick-b",
        "thm-relative-syndetic-thick", "cor-relative-syndetic-thick",
    ];
    let reports = run(&cfg, &ids)?;
    all_pass(&reports)?;
    coverage(&reports, &cfg, 3, u64::MAX)?;
    Ok(totals(&reports))
}

fn criterion_4() -> Check {
    let cfg = HarnessConfig::default().with_semigroups(roster_up_to(4));
    let ids = [
        "thm-relative-piecewise-syndetic", "fip-relative-piecewise-syndetic", "thm-relative-kernel", "cor-relative-kernel",
        "thm-maximal-elements",
    ];
    let reports = run(&cfg, &ids)?;
    all_pass(&reports)?;
    coverage(&reports, &cfg, 4, u64::MAX)?;
    let partial: u64 = reports.iter().flat_map(|r| r.partial.values()).sum();
    Ok(format!("{}, {partial} bounded searches cut short", totals(&reports)))
}

fn criterion_5() -> Check {
    // n = 4 spaces under the exhaustive cap are enumerated in full; larger ones draw 10⁴ samples.
    let cfg = HarnessConfig::default().with_semigroups(roster_up_to(4)).with_samples(10_000);
    let ids = [
        "prop-collectionwise-relative-piecewise-syndetic", "thm-collectionwise-relative-piecewise-syndetic",
        "thm-relative-kernel-has-idempotents", "thm-relative-central-partition-regular", "cor-relative-central-grill",
    ];
    let reports = run(&cfg, &ids)?;
    all_pass(&reports)?;
    coverage(&reports, &cfg, 3, 10_000)?;
    let partial: u64 = reports.iter().flat_map(|r| r.partial.values()).sum();
    Ok(format!("{}, {partial} bounded (b) searches reported as partial", totals(&reports)))
}

fn criterion_6() -> Check {
    let roster = roster_up_to(5);
    let labels: Vec<String> = roster.iter().map(|s| s.label()).collect();
    let cfg = HarnessConfig::default().with_semigroups(roster);
    let reports = run(&cfg, &["thm-characterization-piecewise-syndetic"])?;
    all_pass(&reports)?;
    let r = &reports[0];
    if r.semigroups.iter().any(|s| s.mode == SpaceMode::NotApplicable) {
        return Err("a roster semigroup was not covered".into());
    }
    Ok(format!("{} on {}", totals(&reports), labels.join(" ")))
}

fn criterion_7() -> Check {
    let cfg = HarnessConfig::default().with_semigroups(small_roster()).with_samples(100_000);
    let reports = run(&cfg, &["oracle-syn-fast-path", "oracle-thick-fast-path", "selftest-syn-is-filter"])?;
    for r in &reports[..2] {
        if !r.is_pass() {
            return Err(format!("{} disagrees on {} instances", r.law, r.violation_count));
        }
        if r.instances_checked < 100_000 {
            return Err(format!("{} checked only {} instances", r.law, r.instances_checked));
        }
    }
    let selftest = &reports[2];
    if selftest.verdict != Verdict::ExpectedViolation || selftest.violation_count == 0 {
        return Err("self-test law found no violation".into());
    }
    Ok(format!(
        "oracles agree on {} and {} instances; self-test fired {} times",
        reports[0].instances_checked, reports[1].instances_checked, selftest.violation_count
    ))
}

fn criterion_8() -> Check {
    let mut failed = Vec::new();
    for (name, case) in common::CASES {
        if panic::catch_unwind(case).is_err() {
            failed.push(*name);
        }
    }
    if failed.is_empty() {
        Ok(format!("{} pinned examples match", common::CASES.len()))
    } else {
        Err(format!("mismatch in {}", failed.join(", ")))
    }
}

fn criterion_9() -> Check {
    let cfg = HarnessConfig::default().with_seed(2024);
    let render = || -> Result<String, String> {
        let mut reports = run_law_suite(&cfg, None).map_err(|e| e.to_string())?;
        for r in &mut reports {
            r.wall_time_ms = 0;
        }
        Ok(reports.iter().map(|r| r.to_json_line() + "\n").collect())
    };
    let (a, b) = (render()?, render()?);
    if a != b {
        return Err("reports differ between identical runs".into());
    }
    Ok(format!("{} bytes identical across two full-suite runs", a.len()))
}

fn main() -> ExitCode {
    let criteria: [(u32, Duration, fn() -> Check); 9] = [
        (1, Duration::from_secs(60), criterion_1),
        (2, Duration::from_secs(120), criterion_2),
        (3, Duration::from_secs(120), criterion_3),
        (4, Duration::from_secs(300), criterion_4),
        (5, Duration::from_secs(300), criterion_5),
        (6, Duration::from_secs(60), criterion_6),
        (7, Duration::from_secs(600), criterion_7),
        (8, Duration::from_secs(600), criterion_8),
        (9, Duration::from_secs(600), criterion_9),
    ];
    // Silence the default hook so pinned-example panics only show up in the summary line.
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (id, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(detail) if elapsed <= limit => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("over time limit of {}s; {detail}", limit.as_secs())),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("criterion {id}: {status} in {:.1}s ({detail})", elapsed.as_secs_f64());
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
