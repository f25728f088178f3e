//! Seeded scenario fuzzing: generate bounded random scenarios, run the full
//! check suite on each, and stop at the first failure with a greedily
//! minimized witness scenario. Same seed, same case count, byte-identical
//! report.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::checks::{run_scenario, RunOptions};
use crate::corpus::{random_scenario, CorpusOptions};
use crate::error::Result;
use crate::scenario::{CheckRecord, FunctionSpec, Report, Scenario};

/// Runs `cases` random scenarios. The per-case seed is derived from the base
/// seed, so reports are reproducible case by case as well as in bulk.
pub fn fuzz(seed: u64, cases: usize, approx: bool) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let corpus = CorpusOptions::default();
    let mut records = Vec::with_capacity(cases);
    for case in 0..cases {
        let scenario = random_scenario(&mut rng, &corpus);
        let opts = RunOptions {
            seed: seed.wrapping_add(case as u64),
            dual_samples: 8,
            approx,
        };
        let outcome = run_case(&scenario, &opts)?;
        match outcome {
            CaseOutcome::Pass { checks } => {
                records.push(
                    CheckRecord::pass(format!("case-{case:04}")).detail("checks", checks),
                );
            }
            CaseOutcome::Fail { failing_check, report } => {
                let minimized = minimize(scenario.clone(), |candidate| {
                    matches!(
                        run_case(candidate, &opts),
                        Ok(CaseOutcome::Fail { .. })
                    )
                });
                let record = CheckRecord::pass(format!("case-{case:04}"))
                    .detail("failing-check", &failing_check)
                    .fail_if(true)
                    .with_witness(serde_json::json!({
                        "scenario": minimized,
                        "report": report,
                    }));
                records.push(record);
                break;
            }
        }
    }
    Ok(Report::new("fuzz", if approx { "approx" } else { "exact" }, seed, records))
}

enum CaseOutcome {
    Pass { checks: usize },
    Fail { failing_check: String, report: Report },
}

fn run_case(scenario: &Scenario, opts: &RunOptions) -> Result<CaseOutcome> {
    let built = scenario.build()?;
    let report = run_scenario(&built, opts)?;
    if report.pass {
        Ok(CaseOutcome::Pass { checks: report.checks.len() })
    } else {
        let failing_check = report
            .checks
            .iter()
            .find(|c| !c.passed())
            .map(|c| c.name.clone())
            .unwrap_or_default();
        Ok(CaseOutcome::Fail { failing_check, report })
    }
}

/// Greedy structural shrinking: drop multipliers, sets, density terms and
/// exceptional values while the failure persists. Bounded by a fixed budget
/// of candidate evaluations.
pub fn minimize(scenario: Scenario, still_fails: impl Fn(&Scenario) -> bool) -> Scenario {
    let mut current = scenario;
    let mut budget = 200usize;
    loop {
        let mut improved = false;
        for candidate in shrink_candidates(&current) {
            if budget == 0 {
                return current;
            }
            budget -= 1;
            if still_fails(&candidate) {
                current = candidate;
                improved = true;
                break;
            }
        }
        if !improved {
            return current;
        }
    }
}

fn shrink_candidates(scenario: &Scenario) -> Vec<Scenario> {
    let mut out = Vec::new();
    for i in 0..scenario.multipliers.len() {
        let mut s = scenario.clone();
        s.multipliers.remove(i);
        out.push(s);
    }
    for i in 0..scenario.sets.len() {
        let mut s = scenario.clone();
        s.sets.remove(i);
        out.push(s);
    }
    if let FunctionSpec::Rank { terms } = &scenario.f {
        if terms.len() > 1 {
            for i in 0..terms.len() {
                let mut s = scenario.clone();
                if let FunctionSpec::Rank { terms } = &mut s.f {
                    terms.remove(i);
                }
                out.push(s);
            }
        }
    }
    if scenario.checks.len() > 1 {
        for i in 0..scenario.checks.len() {
            let mut s = scenario.clone();
            s.checks.remove(i);
            out.push(s);
        }
    }
    out
}
