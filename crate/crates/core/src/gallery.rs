//! The built-in counterexample gallery.
//!
//! Each entry is a self-contained scenario plus the profile of verdicts it
//! must exhibit. The gallery lives in code rather than in data files so the
//! counterexamples version together with the library; they are part of its
//! tested contract. Names are stable identifiers used by the command line.

use crate::banach::{FiniteDimSpace, FiniteDimVector, NormExponent};
use crate::checks::{run_scenario, RunOptions};
use crate::density::DensityMeasure;
use crate::error::Result;
use crate::extended::ExtendedRational;
use crate::functions::VectorFunction;
use crate::integration::integrability_flags;
use crate::multipliers::{in_l1_flag, in_l1_variation_flag, in_l1w_flag};
use crate::rational::{integer, rational};
use crate::scenario::{CheckName, CheckRecord, Report, Scenario};
use crate::sequence::GeometricSequence;
use crate::sets::RepresentableSet;
use crate::space::AtomicMeasureSpace;

/// A named scenario with its expected verdict profile.
pub struct GalleryEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub scenario: Scenario,
}

fn counting() -> AtomicMeasureSpace {
    AtomicMeasureSpace::counting()
}

fn plane(p: NormExponent) -> FiniteDimSpace {
    FiniteDimSpace::new(2, p)
}

fn direction_3_4(p: NormExponent) -> FiniteDimVector {
    FiniteDimVector::new(plane(p), vec![integer(3), integer(4)]).unwrap()
}

fn multipliers_pool() -> Vec<GeometricSequence> {
    vec![
        GeometricSequence::constant(integer(1)),
        GeometricSequence::geometric(integer(1), rational(1, 2)).unwrap(),
        crate::functions::spike_profile(&[(0, integer(2)), (1, rational(-1, 2))]),
    ]
}

fn standard_sets() -> Vec<RepresentableSet> {
    vec![
        RepresentableSet::finite([0, 1]),
        RepresentableSet::finite([0, 1, 2, 3]),
        RepresentableSet::cofinite([1, 3]),
        RepresentableSet::all(),
    ]
}

/// All gallery entries, in their fixed order.
#[allow(clippy::vec_init_then_push)]
pub fn gallery() -> Vec<GalleryEntry> {
    let mut entries = Vec::new();

    // Constant scalar profile times a fixed direction over counting measure:
    // locally Bochner integrable but not Bochner integrable, with infinite
    // variation and semivariation.
    entries.push(GalleryEntry {
        name: "example5",
        summary: "locally Bochner, not Bochner: constant profile over counting measure",
        scenario: Scenario::from_parts(
            "example5",
            &counting(),
            &VectorFunction::rank_one(
                GeometricSequence::constant(integer(1)),
                direction_3_4(NormExponent::Infinity),
            ),
            &multipliers_pool(),
            &standard_sets(),
            &CheckName::ALL,
        ),
    });

    // Rank-one density with a summable profile: semivariation and variation
    // coincide everywhere and everything is integrable.
    entries.push(GalleryEntry {
        name: "example10-rank-one",
        summary: "rank-one density: semivariation equals variation",
        scenario: Scenario::from_parts(
            "example10-rank-one",
            &counting(),
            &VectorFunction::rank_one(
                GeometricSequence::geometric(integer(1), rational(1, 2)).unwrap(),
                direction_3_4(NormExponent::Two),
            ),
            &multipliers_pool(),
            &standard_sets(),
            &CheckName::ALL,
        ),
    });

    // The diagonal of ones in c0: Dunford integrable, bounded, but neither
    // Pettis integrable nor strongly additive.
    entries.push(GalleryEntry {
        name: "c0-diagonal-ones",
        summary: "Dunford not Pettis: bounded measure that is not strongly additive",
        scenario: Scenario::from_parts(
            "c0-diagonal-ones",
            &counting(),
            &VectorFunction::Diagonal(crate::functions::DiagonalFunction::new(
                GeometricSequence::constant(integer(1)),
            )),
            &multipliers_pool(),
            &standard_sets(),
            &CheckName::ALL,
        ),
    });

    // A vanishing diagonal profile: Pettis integrable and strongly additive.
    entries.push(GalleryEntry {
        name: "c0-diagonal-geometric",
        summary: "Pettis integrable diagonal density, strongly additive",
        scenario: Scenario::from_parts(
            "c0-diagonal-geometric",
            &counting(),
            &VectorFunction::Diagonal(crate::functions::DiagonalFunction::new(
                GeometricSequence::geometric(integer(1), rational(1, 2)).unwrap(),
            )),
            &multipliers_pool(),
            &standard_sets(),
            &CheckName::ALL,
        ),
    });

    // Summable weights with a growing profile: not even locally Bochner, so
    // Bochner integrability fails through the local clause.
    entries.push(GalleryEntry {
        name: "remark8-equivalence",
        summary: "Bochner iff locally Bochner with bounded variation, exercised both ways",
        scenario: Scenario::from_parts(
            "remark8-equivalence",
            &AtomicMeasureSpace::new(
                GeometricSequence::geometric(integer(1), rational(1, 2)).unwrap(),
            )
            .unwrap(),
            &VectorFunction::rank_one(
                GeometricSequence::geometric(integer(1), integer(3)).unwrap(),
                direction_3_4(NormExponent::One),
            ),
            &multipliers_pool(),
            &standard_sets(),
            &CheckName::ALL,
        ),
    });

    // Both implications of the Pettis characterization on one instance that
    // is locally Pettis and strongly additive.
    entries.push(GalleryEntry {
        name: "corollary13-both-directions",
        summary: "Pettis iff locally Pettis and strongly additive",
        scenario: Scenario::from_parts(
            "corollary13-both-directions",
            &AtomicMeasureSpace::new(
                GeometricSequence::geometric(integer(2), rational(1, 3)).unwrap(),
            )
            .unwrap(),
            &VectorFunction::rank_one(
                crate::functions::spike_profile(&[(0, integer(5)), (2, integer(-1))])
                    .try_add(&GeometricSequence::geometric(integer(1), integer(1)).unwrap())
                    .unwrap(),
                direction_3_4(NormExponent::Infinity),
            ),
            &multipliers_pool(),
            &standard_sets(),
            &CheckName::ALL,
        ),
    });

    // Rank-one density where the three multiplier classes coincide.
    entries.push(GalleryEntry {
        name: "example16-equality",
        summary: "rank-one density: all three multiplier classes coincide",
        scenario: Scenario::from_parts(
            "example16-equality",
            &counting(),
            &VectorFunction::rank_one(
                GeometricSequence::geometric(integer(1), rational(1, 2)).unwrap(),
                direction_3_4(NormExponent::Two),
            ),
            &[
                GeometricSequence::constant(integer(1)),
                GeometricSequence::geometric(integer(3), rational(2, 3)).unwrap(),
                GeometricSequence::geometric(integer(1), integer(2)).unwrap(),
                crate::functions::spike_profile(&[(1, integer(-4))]),
            ],
            &standard_sets(),
            &CheckName::ALL,
        ),
    });

    entries
}

pub fn find(name: &str) -> Option<GalleryEntry> {
    gallery().into_iter().find(|e| e.name == name)
}

/// Runs one gallery entry: its profile record first, then the full check
/// suite of the underlying scenario.
pub fn run_entry(entry: &GalleryEntry, opts: &RunOptions) -> Result<Report> {
    let built = entry.scenario.build()?;
    let profile = profile_record(entry.name, &built)?;
    let mut report = run_scenario(&built, opts)?;
    report.checks.insert(0, profile);
    report.pass = report.checks.iter().all(CheckRecord::passed);
    Ok(report)
}

/// Asserts the verdict shape that makes the entry the counterexample it is.
fn profile_record(name: &str, built: &crate::scenario::BuiltScenario) -> Result<CheckRecord> {
    fn expect(record: CheckRecord, label: &str, actual: bool, expected: bool) -> CheckRecord {
        record.detail(label, actual).fail_if(actual != expected)
    }
    let mut record = CheckRecord::pass("expected-profile");
    let (dunford, pettis, bochner) = integrability_flags(&built.f, &built.space)?;
    let local = crate::integration::locally_integrable(&built.f, &built.space)?;
    let nu_opt = DensityMeasure::new(built.f.clone(), built.space.clone()).ok();
    let bounded = nu_opt.as_ref().is_some_and(DensityMeasure::bounded);
    let strongly_additive = nu_opt.as_ref().is_some_and(DensityMeasure::strongly_additive);
    match name {
        "example5" => {
            let nu = nu_opt.as_ref().expect("entry is locally Pettis integrable");
            record = expect(record, "locally-bochner", local.locally_bochner, true);
            record = expect(record, "bochner", bochner, false);
            record = expect(record, "dunford", dunford, false);
            record = expect(record, "bounded", bounded, false);
            record = expect(record, "strongly-additive", strongly_additive, false);
            // Variation and semivariation are both infinite on the whole line.
            let infinite = nu.variation(&RepresentableSet::all())? == ExtendedRational::Infinite
                && nu.semivariation(&RepresentableSet::all())? == ExtendedRational::Infinite;
            record = expect(record, "total-variation-infinite", infinite, true);
        }
        "example10-rank-one" => {
            let nu = nu_opt.as_ref().expect("entry is locally Pettis integrable");
            record = expect(record, "bochner", bochner, true);
            let coincide = nu.semivariation(&RepresentableSet::all())?
                == nu.variation(&RepresentableSet::all())?;
            record = expect(record, "semivariation-equals-variation", coincide, true);
            let is_ten =
                nu.semivariation(&RepresentableSet::all())? == ExtendedRational::from_int(10);
            record = expect(record, "total-is-ten", is_ten, true);
        }
        "c0-diagonal-ones" => {
            let nu = nu_opt.as_ref().expect("entry is locally Pettis integrable");
            record = expect(record, "dunford", dunford, true);
            record = expect(record, "pettis", pettis, false);
            record = expect(record, "bounded", bounded, true);
            record = expect(record, "strongly-additive", strongly_additive, false);
            let unit =
                nu.semivariation(&RepresentableSet::all())? == ExtendedRational::from_int(1);
            record = expect(record, "unit-semivariation", unit, true);
        }
        "c0-diagonal-geometric" => {
            record = expect(record, "pettis", pettis, true);
            record = expect(record, "strongly-additive", strongly_additive, true);
            record = expect(record, "bochner", bochner, true);
        }
        "remark8-equivalence" => {
            record = expect(record, "density-measure-constructible", nu_opt.is_some(), false);
            record = expect(record, "locally-bochner", local.locally_bochner, false);
            record = expect(record, "bochner", bochner, false);
            record = expect(record, "dunford", dunford, false);
        }
        "corollary13-both-directions" => {
            record = expect(record, "locally-pettis", local.locally_pettis, true);
            record = expect(record, "strongly-additive", strongly_additive, true);
            record = expect(record, "pettis", pettis, true);
        }
        "example16-equality" => {
            let nu = nu_opt.as_ref().expect("entry is locally Pettis integrable");
            record = expect(record, "bochner", bochner, true);
            // The three multiplier classes agree on every gallery multiplier.
            let mut all_equal = true;
            for g in &built.multipliers {
                let weak = in_l1w_flag(g, nu)?;
                let plain = in_l1_flag(g, nu)?;
                let variation = in_l1_variation_flag(g, nu)?;
                all_equal &= weak == plain && plain == variation;
            }
            record = expect(record, "three-classes-coincide", all_equal, true);
        }
        other => {
            record = record.detail("unknown-entry", other).fail_if(true);
        }
    }
    Ok(record)
}

/// Runs the whole gallery, or a single named entry.
pub fn run_gallery(name: Option<&str>, opts: &RunOptions) -> Result<Report> {
    let entries = match name {
        Some(n) => vec![find(n).ok_or_else(|| {
            crate::error::Error::Validation(format!("unknown gallery entry {n:?}"))
        })?],
        None => gallery(),
    };
    let mut reports = Vec::new();
    for entry in &entries {
        reports.push(run_entry(entry, opts)?);
    }
    Ok(crate::scenario::merge_reports("gallery", opts.mode(), opts.seed, reports))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::Verdict;

    #[test]
    fn every_entry_passes_its_profile_and_suite() {
        let opts = RunOptions { seed: 1, dual_samples: 8, approx: false };
        for entry in gallery() {
            let report = run_entry(&entry, &opts).unwrap();
            assert!(report.pass, "{} failed:\n{}", entry.name, report.render_text());
        }
    }

    #[test]
    fn lookup_by_name() {
        assert!(find("example5").is_some());
        assert!(find("missing").is_none());
        let report = run_gallery(Some("c0-diagonal-ones"), &RunOptions::default()).unwrap();
        assert!(report.pass);
        assert!(run_gallery(Some("missing"), &RunOptions::default()).is_err());
    }

    #[test]
    fn profile_catches_wrong_expectations() {
        // The profile machinery must actually discriminate: run the example5
        // profile against the wrong scenario and expect failure records.
        let entries = gallery();
        let other = entries.iter().find(|e| e.name == "c0-diagonal-geometric").unwrap();
        let built = other.scenario.build().unwrap();
        let record = profile_record("c0-diagonal-ones", &built).unwrap();
        assert_eq!(record.verdict, Verdict::Fail);
    }
}
