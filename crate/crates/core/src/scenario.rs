//! Scenario files and reports: the wire formats of the verification surface.
//!
//! A scenario bundles a measure space, a target space, a density, optional
//! multipliers and sets, and the list of checks to run. Unknown check names
//! are rejected at load time. Reports are deterministic given the scenario
//! and seed, in both the human text form and the machine JSON form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::banach::{FiniteDimSpace, FiniteDimVector, NormExponent};
use crate::error::{Error, Result};
use crate::functions::{DiagonalFunction, RankDecomposedFunction, VectorFunction};
use crate::rational::{format_rational, parse_rational};
use crate::sequence::GeometricSequence;
use crate::sets::RepresentableSet;
use crate::space::AtomicMeasureSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TargetDescriptor {
    FiniteDim { dim: usize, p: NormExponent },
    C0,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermSpec {
    pub seq: GeometricSequence,
    pub vec: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FunctionSpec {
    Rank { terms: Vec<TermSpec> },
    Diagonal { seq: GeometricSequence },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    #[serde(default)]
    pub name: String,
    pub space: AtomicMeasureSpace,
    pub target: TargetDescriptor,
    pub f: FunctionSpec,
    #[serde(default)]
    pub multipliers: Vec<GeometricSequence>,
    #[serde(default)]
    pub sets: Vec<RepresentableSet>,
    #[serde(default)]
    pub checks: Vec<String>,
}

/// The checks a scenario can request.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckName {
    MeasureAxioms,
    VariationOracle,
    SemivariationSoundness,
    RankOneEquality,
    IntegrabilityChain,
    LocalIntegrability,
    Corollary13,
    Remark8,
    Theorem12Isometry,
    Prop15Isometry,
    NullSets,
    SimpleDensity,
}

impl CheckName {
    pub const ALL: [CheckName; 12] = [
        CheckName::MeasureAxioms,
        CheckName::VariationOracle,
        CheckName::SemivariationSoundness,
        CheckName::RankOneEquality,
        CheckName::IntegrabilityChain,
        CheckName::LocalIntegrability,
        CheckName::Corollary13,
        CheckName::Remark8,
        CheckName::Theorem12Isometry,
        CheckName::Prop15Isometry,
        CheckName::NullSets,
        CheckName::SimpleDensity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::MeasureAxioms => "measure-axioms",
            CheckName::VariationOracle => "variation-oracle",
            CheckName::SemivariationSoundness => "semivariation-soundness",
            CheckName::RankOneEquality => "rank-one-equality",
            CheckName::IntegrabilityChain => "integrability-chain",
            CheckName::LocalIntegrability => "local-integrability",
            CheckName::Corollary13 => "corollary13",
            CheckName::Remark8 => "remark8",
            CheckName::Theorem12Isometry => "theorem12-isometry",
            CheckName::Prop15Isometry => "prop15-isometry",
            CheckName::NullSets => "null-sets",
            CheckName::SimpleDensity => "simple-density",
        }
    }
}

impl FromStr for CheckName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Validation(format!("unknown check name {s:?}")))
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A scenario with its pieces parsed into domain values.
#[derive(Debug, Clone)]
pub struct BuiltScenario {
    pub name: String,
    pub space: AtomicMeasureSpace,
    pub f: VectorFunction,
    pub multipliers: Vec<GeometricSequence>,
    pub sets: Vec<RepresentableSet>,
    pub checks: Vec<CheckName>,
}

impl Scenario {
    pub fn build(&self) -> Result<BuiltScenario> {
        let f = match (&self.target, &self.f) {
            (TargetDescriptor::FiniteDim { dim, p }, FunctionSpec::Rank { terms }) => {
                let space = FiniteDimSpace::new(*dim, *p);
                let mut built = Vec::with_capacity(terms.len());
                for term in terms {
                    let coords = term
                        .vec
                        .iter()
                        .map(|s| parse_rational(s))
                        .collect::<Result<Vec<_>>>()?;
                    built.push((term.seq.clone(), FiniteDimVector::new(space, coords)?));
                }
                VectorFunction::Rank(RankDecomposedFunction::new(space, built)?)
            }
            (TargetDescriptor::C0, FunctionSpec::Diagonal { seq }) => {
                VectorFunction::Diagonal(DiagonalFunction::new(seq.clone()))
            }
            (TargetDescriptor::FiniteDim { .. }, FunctionSpec::Diagonal { .. }) => {
                return Err(Error::Validation(
                    "a diagonal density needs the c0 target".to_string(),
                ))
            }
            (TargetDescriptor::C0, FunctionSpec::Rank { .. }) => {
                return Err(Error::Validation(
                    "a rank-decomposed density needs a finite-dimensional target".to_string(),
                ))
            }
        };
        let checks = self
            .checks
            .iter()
            .map(|name| name.parse())
            .collect::<Result<Vec<CheckName>>>()?;
        Ok(BuiltScenario {
            name: self.name.clone(),
            space: self.space.clone(),
            f,
            multipliers: self.multipliers.clone(),
            sets: self.sets.clone(),
            checks,
        })
    }

    /// The scenario serialization of an in-memory density, used by the fuzzer
    /// to emit reproducible witnesses.
    pub fn from_parts(
        name: &str,
        space: &AtomicMeasureSpace,
        f: &VectorFunction,
        multipliers: &[GeometricSequence],
        sets: &[RepresentableSet],
        checks: &[CheckName],
    ) -> Scenario {
        let (target, f_spec) = match f {
            VectorFunction::Rank(f) => (
                TargetDescriptor::FiniteDim { dim: f.space().dim, p: f.space().p },
                FunctionSpec::Rank {
                    terms: f
                        .terms()
                        .iter()
                        .map(|(s, v)| TermSpec {
                            seq: s.clone(),
                            vec: v.coords().iter().map(format_rational).collect(),
                        })
                        .collect(),
                },
            ),
            VectorFunction::Diagonal(f) => {
                (TargetDescriptor::C0, FunctionSpec::Diagonal { seq: f.entries().clone() })
            }
        };
        Scenario {
            name: name.to_string(),
            space: space.clone(),
            target,
            f: f_spec,
            multipliers: multipliers.to_vec(),
            sets: sets.to_vec(),
            checks: checks.iter().map(|c| c.as_str().to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub verdict: Verdict,
    /// Computed values, both routes where two routes exist.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
    /// Reproduction data for failures and attainment data for suprema.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

impl CheckRecord {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            verdict: Verdict::Pass,
            details: BTreeMap::new(),
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn detail(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.details.insert(key.to_string(), value.to_string());
        self
    }

    pub fn fail_if(mut self, failed: bool) -> Self {
        if failed {
            self.verdict = Verdict::Fail;
        }
        self
    }

    pub fn with_witness(mut self, witness: serde_json::Value) -> Self {
        self.witness = Some(witness);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub mode: String,
    pub seed: u64,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(scenario: impl Into<String>, mode: &str, seed: u64, checks: Vec<CheckRecord>) -> Self {
        let pass = checks.iter().all(CheckRecord::passed);
        Report { scenario: scenario.into(), mode: mode.to_string(), seed, pass, checks }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("scenario: {} (mode {}, seed {})\n", self.scenario, self.mode, self.seed));
        for check in &self.checks {
            let verdict = match check.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
            };
            out.push_str(&format!("  {verdict} {}", check.name));
            if !check.details.is_empty() {
                let details: Vec<String> =
                    check.details.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.push_str(&format!("  [{}]", details.join(", ")));
            }
            out.push('\n');
            if let (Verdict::Fail, Some(witness)) = (check.verdict, &check.witness) {
                out.push_str(&format!("    witness: {witness}\n"));
            }
        }
        out.push_str(&format!("result: {}\n", if self.pass { "PASS" } else { "FAIL" }));
        out
    }
}

/// Merges several reports into one, preserving order.
pub fn merge_reports(label: &str, mode: &str, seed: u64, reports: Vec<Report>) -> Report {
    let mut checks = Vec::new();
    for report in reports {
        for mut check in report.checks {
            check.name = format!("{}::{}", report.scenario, check.name);
            checks.push(check);
        }
    }
    Report::new(label, mode, seed, checks)
}
