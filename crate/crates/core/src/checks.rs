//! Executable statements: every check verifies one identity, inequality or
//! equivalence, always through at least two routes that share as little code
//! as the statement allows. A scenario run is the ordered list of its check
//! records; reports are deterministic in the scenario and seed.
//!
//! In exact mode, value comparisons are rational equalities. The approximate
//! mode exists for euclidean data whose norms leave the rationals; there the
//! affected values are recomputed in f64 and compared within 1e-9, while
//! every membership and implication stays exact (those are decided norm-free
//! throughout the library).

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::approx;
use crate::banach::{FiniteDimVector, NormValue};
use crate::corpus::{sample_dual, sample_l1_dual};
use crate::density::{DensityMeasure, PartitionWitness};
use crate::error::{Error, Result};
use crate::extended::ExtendedRational;
use crate::functions::VectorFunction;
use crate::integration::{
    bochner_norm, dunford_norm, integrability_flags, locally_integrable, DualFunctional,
    SupWitness,
};
use crate::multipliers::{
    in_l1_flag, in_l1_variation_flag, in_l1w_flag, integrate, normalize_multiplier, nu_norm,
    simple_function_approximation, variation_norm,
};
use crate::rational::Rational;
use crate::scenario::{BuiltScenario, CheckName, CheckRecord, Report};
use crate::sequence::GeometricSequence;
use crate::sets::RepresentableSet;

use num_traits::{One, Zero};

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub seed: u64,
    /// Dual-ball samples per soundness comparison.
    pub dual_samples: usize,
    /// Evaluate irrational euclidean norms in f64 within 1e-9.
    pub approx: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: 0, dual_samples: 24, approx: false }
    }
}

impl RunOptions {
    pub fn mode(&self) -> &'static str {
        if self.approx {
            "approx"
        } else {
            "exact"
        }
    }
}

/// An exact value, or its f64 stand-in when approximate mode had to take over.
#[derive(Debug, Clone)]
enum Num {
    Exact(ExtendedRational),
    Approx(f64),
}

impl Num {
    fn eq_num(&self, other: &Num) -> bool {
        match (self, other) {
            (Num::Exact(a), Num::Exact(b)) => a == b,
            (a, b) => approx::close(a.to_f64(), b.to_f64()),
        }
    }

    fn le_num(&self, other: &Num) -> bool {
        match (self, other) {
            (Num::Exact(a), Num::Exact(b)) => a <= b,
            (a, b) => {
                let (x, y) = (a.to_f64(), b.to_f64());
                x <= y || approx::close(x, y)
            }
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Num::Exact(v) => v.is_zero(),
            Num::Approx(v) => approx::close(*v, 0.0),
        }
    }

    fn to_f64(&self) -> f64 {
        match self {
            Num::Exact(v) => v.to_f64(),
            Num::Approx(v) => *v,
        }
    }

    fn scale(&self, c: &Rational) -> Num {
        match self {
            Num::Exact(v) => Num::Exact(v.scale(c)),
            Num::Approx(v) => Num::Approx(v * crate::rational::to_f64(c)),
        }
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Num::Exact(v) => v.fmt(f),
            Num::Approx(v) => write!(f, "~{v}"),
        }
    }
}

/// Falls back to the f64 route when exactness dies on an irrational norm and
/// approximate mode is on; any other error propagates.
fn or_approx(
    exact: Result<ExtendedRational>,
    opts: &RunOptions,
    fallback: impl FnOnce() -> Result<f64>,
) -> Result<Num> {
    match exact {
        Ok(v) => Ok(Num::Exact(v)),
        Err(Error::IrrationalNorm { .. }) if opts.approx => Ok(Num::Approx(fallback()?)),
        Err(e) => Err(e),
    }
}

struct Ctx<'a> {
    sc: &'a BuiltScenario,
    nu: Option<DensityMeasure>,
    nu_unavailable: Option<String>,
    sets: Vec<RepresentableSet>,
}

impl<'a> Ctx<'a> {
    fn new(sc: &'a BuiltScenario) -> Ctx<'a> {
        let (nu, nu_unavailable) = match DensityMeasure::new(sc.f.clone(), sc.space.clone()) {
            Ok(nu) => (Some(nu), None),
            Err(e) => (None, Some(e.to_string())),
        };
        let mut sets = vec![RepresentableSet::empty(), RepresentableSet::all()];
        for set in &sc.sets {
            if !sets.contains(set) {
                sets.push(set.clone());
            }
        }
        Ctx { sc, nu, nu_unavailable, sets }
    }

    fn vacuous(&self, name: CheckName) -> CheckRecord {
        CheckRecord::pass(name.as_str()).detail(
            "vacuous",
            self.nu_unavailable.as_deref().unwrap_or("density measure unavailable"),
        )
    }

    /// Window covering every exceptional region in play.
    fn horizon(&self) -> u64 {
        let f_start = match &self.sc.f {
            VectorFunction::Rank(f) => f.tail_start(),
            VectorFunction::Diagonal(f) => f.entries().tail_start(),
        };
        let g_start = self.sc.multipliers.iter().map(|g| g.tail_start()).max().unwrap_or(0);
        f_start.max(g_start).max(self.sc.space.weights().tail_start()) + 4
    }
}

fn fnv1a(text: &str) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for byte in text.bytes() {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

fn check_rng(opts: &RunOptions, name: CheckName) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(opts.seed ^ fnv1a(name.as_str()))
}

/// Runs every requested check of an already built scenario.
pub fn run_scenario(sc: &BuiltScenario, opts: &RunOptions) -> Result<Report> {
    let ctx = Ctx::new(sc);
    let mut records = Vec::with_capacity(sc.checks.len());
    for &check in &sc.checks {
        records.push(run_check(check, &ctx, opts)?);
    }
    let label = if sc.name.is_empty() { "scenario" } else { &sc.name };
    Ok(Report::new(label, opts.mode(), opts.seed, records))
}

fn run_check(check: CheckName, ctx: &Ctx<'_>, opts: &RunOptions) -> Result<CheckRecord> {
    let mut rng = check_rng(opts, check);
    match check {
        CheckName::MeasureAxioms => check_measure_axioms(ctx, &mut rng),
        CheckName::VariationOracle => check_variation_oracle(ctx, opts),
        CheckName::SemivariationSoundness => check_semivariation_soundness(ctx, opts, &mut rng),
        CheckName::RankOneEquality => check_rank_one_equality(ctx, opts),
        CheckName::IntegrabilityChain => check_integrability_chain(ctx, opts),
        CheckName::LocalIntegrability => check_local_integrability(ctx),
        CheckName::Corollary13 => check_corollary13(ctx),
        CheckName::Remark8 => check_remark8(ctx),
        CheckName::Theorem12Isometry => check_theorem12(ctx, opts, &mut rng),
        CheckName::Prop15Isometry => check_prop15(ctx, opts),
        CheckName::NullSets => check_null_sets(ctx),
        CheckName::SimpleDensity => check_simple_density(ctx, opts),
    }
}

fn fail(record: CheckRecord, witness: serde_json::Value) -> CheckRecord {
    record.fail_if(true).with_witness(witness)
}

// Finite additivity, monotone exhaustion, semi-finiteness in executable form,
// and the delta-ring closure laws, for the scalar measure and (when it
// exists) for the density measure.
fn check_measure_axioms(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng) -> Result<CheckRecord> {
    let record = CheckRecord::pass(CheckName::MeasureAxioms.as_str());
    let mu = &ctx.sc.space;
    for set in &ctx.sets {
        for _ in 0..4 {
            let splitter = crate::corpus::random_finite_set(rng, 6);
            let left = set.intersection(&splitter);
            let right = set.difference(&splitter);
            let total = mu.measure(set);
            let sum = mu.measure(&left) + mu.measure(&right);
            if total != sum {
                return Ok(fail(
                    record.detail("law", "finite additivity"),
                    serde_json::json!({"set": set, "splitter": splitter}),
                ));
            }
        }
        let mut previous = ExtendedRational::zero();
        for n in [0u64, 2, 4, 8, 16] {
            let partial = mu.measure(&RepresentableSet::Finite(set.truncate(n)));
            if partial < previous || partial > mu.measure(set) {
                return Ok(fail(
                    record.detail("law", "monotone exhaustion"),
                    serde_json::json!({"set": set, "n": n}),
                ));
            }
            previous = partial;
        }
        let (head, tail) = set.split_at(16);
        if mu.measure(&RepresentableSet::Finite(head)) + mu.measure(&tail) != mu.measure(set) {
            return Ok(fail(
                record.detail("law", "split identity"),
                serde_json::json!({"set": set}),
            ));
        }
        if !mu.measure(set).is_finite() && mu.validate_locally_determined() {
            // Semi-finiteness, executably: finite truncations exhaust any
            // infinite value beyond every bound.
            let bound = ExtendedRational::from_int(100);
            let mut n = 16u64;
            loop {
                if mu.measure(&RepresentableSet::Finite(set.truncate(n))) > bound {
                    break;
                }
                n *= 2;
                if n > 1 << 22 {
                    return Ok(fail(
                        record.detail("law", "semi-finiteness probe"),
                        serde_json::json!({"set": set}),
                    ));
                }
            }
        }
    }
    for a in &ctx.sets {
        for b in &ctx.sets {
            if mu.in_sigma_f(a) && mu.in_sigma_f(b) {
                let closed = mu.in_sigma_f(&a.union(b))
                    && mu.in_sigma_f(&a.intersection(b))
                    && mu.in_sigma_f(&a.difference(b));
                if !closed {
                    return Ok(fail(
                        record.detail("law", "delta-ring closure"),
                        serde_json::json!({"a": a, "b": b}),
                    ));
                }
            }
        }
    }
    let Some(nu) = &ctx.nu else {
        return Ok(record.detail("nu", "skipped (density measure unavailable)"));
    };
    for set in &ctx.sets {
        if !mu.in_sigma_f(set) {
            continue;
        }
        for _ in 0..2 {
            let splitter = crate::corpus::random_finite_set(rng, 6);
            let left = nu.evaluate(&set.intersection(&splitter))?;
            let right = nu.evaluate(&set.difference(&splitter))?;
            if left.add(&right)? != nu.evaluate(set)? {
                return Ok(fail(
                    record.detail("law", "vector additivity"),
                    serde_json::json!({"set": set, "splitter": splitter}),
                ));
            }
        }
        // Countable additivity along exhaustions: the remainder norms must
        // decrease to zero, and they do so through the exact tail norms.
        let mut previous: Option<NormValue> = None;
        for n in [4u64, 8, 16, 24] {
            let (_, tail) = set.split_at(n);
            let remainder = nu.evaluate(&tail)?.norm();
            if let Some(p) = previous {
                if remainder > p {
                    return Ok(fail(
                        record.detail("law", "norm convergence along exhaustion"),
                        serde_json::json!({"set": set, "n": n}),
                    ));
                }
            }
            previous = Some(remainder);
        }
    }
    Ok(record.detail("sets", ctx.sets.len()))
}

// Closed-form variation against the partition-enumeration supremum.
fn check_variation_oracle(ctx: &Ctx<'_>, opts: &RunOptions) -> Result<CheckRecord> {
    let Some(nu) = &ctx.nu else { return Ok(ctx.vacuous(CheckName::VariationOracle)) };
    if !nu.local().locally_bochner {
        return Ok(CheckRecord::pass(CheckName::VariationOracle.as_str())
            .detail("vacuous", "density is not locally Bochner integrable"));
    }
    let mut record = CheckRecord::pass(CheckName::VariationOracle.as_str());
    let mut compared = 0usize;
    for set in &ctx.sets {
        let small_enough = set.elements().is_some_and(|e| e.len() <= 8);
        if !small_enough {
            continue;
        }
        let closed = or_approx(nu.variation(set), opts, || {
            approx::weighted_norm_sum_f64(nu.density(), nu.space(), None, set)
        })?;
        let brute: Num;
        let mut witness: Option<PartitionWitness> = None;
        match nu.variation_bruteforce(set) {
            Ok((value, w)) => {
                brute = Num::Exact(value);
                witness = Some(w);
            }
            Err(Error::IrrationalNorm { .. }) if opts.approx => {
                brute = Num::Approx(approx::variation_bruteforce_f64(nu, set)?);
            }
            Err(e) => return Err(e),
        }
        compared += 1;
        if !closed.eq_num(&brute) {
            return Ok(fail(
                record.detail("closed", closed).detail("bruteforce", brute),
                serde_json::json!({"set": set, "partition": witness}),
            ));
        }
        record = record.detail(&format!("set {set}"), format!("{closed} = {brute}"));
    }
    Ok(record.detail("sets-compared", compared))
}

// The sign-pattern supremum dominates every sampled dual evaluation, its
// witness attains it, and it never exceeds the variation.
fn check_semivariation_soundness(
    ctx: &Ctx<'_>,
    opts: &RunOptions,
    rng: &mut ChaCha8Rng,
) -> Result<CheckRecord> {
    let Some(nu) = &ctx.nu else { return Ok(ctx.vacuous(CheckName::SemivariationSoundness)) };
    let record = CheckRecord::pass(CheckName::SemivariationSoundness.as_str());
    let mut samples_total = 0usize;
    for set in &ctx.sets {
        let mut witness_data: Option<SupWitness> = None;
        let value = match nu.semivariation_with_witness(set) {
            Ok((value, witness)) => {
                witness_data = Some(witness);
                Num::Exact(value)
            }
            Err(Error::IrrationalNorm { .. }) if opts.approx => Num::Approx(
                approx::weighted_dual_sup_f64(nu.density(), nu.space(), None, set)?,
            ),
            Err(e) => return Err(e),
        };
        for _ in 0..opts.dual_samples {
            let functional = match nu.density() {
                VectorFunction::Rank(f) => {
                    DualFunctional::FiniteDim(sample_dual(rng, f.space()))
                }
                VectorFunction::Diagonal(_) => {
                    DualFunctional::L1(sample_l1_dual(rng, ctx.horizon()))
                }
            };
            let lower = Num::Exact(nu.scalar_component(functional.clone())?.variation(set)?);
            samples_total += 1;
            if !lower.le_num(&value) {
                return Ok(fail(
                    record.detail("semivariation", value).detail("sampled", lower),
                    serde_json::json!({"set": set}),
                ));
            }
        }
        if let Some(witness) = &witness_data {
            if !witness_attains(nu, set, witness, &value)? {
                return Ok(fail(
                    record.detail("semivariation", value),
                    serde_json::json!({"set": set, "witness": witness}),
                ));
            }
        }
        if nu.local().locally_bochner {
            let variation = or_approx(nu.variation(set), opts, || {
                approx::weighted_norm_sum_f64(nu.density(), nu.space(), None, set)
            })?;
            if !value.le_num(&variation) {
                return Ok(fail(
                    record.detail("semivariation", value).detail("variation", variation),
                    serde_json::json!({"set": set}),
                ));
            }
        }
    }
    Ok(record.detail("dual-samples", samples_total))
}

/// Re-derives the reported supremum from its witness through an honest dual
/// vector: the attaining functional must lie in the unit ball and its scalar
/// variation must reproduce the value.
fn witness_attains(
    nu: &DensityMeasure,
    set: &RepresentableSet,
    witness: &SupWitness,
    value: &Num,
) -> Result<bool> {
    match witness {
        // No witness accompanies an empty supremum or an infinite one.
        SupWitness::Unattained => Ok(value.is_zero() || value.to_f64().is_infinite()),
        SupWitness::Atom { index } => {
            let functional = DualFunctional::L1(GeometricSequence::delta(
                *index,
                crate::rational::integer(1),
            ));
            let attained = nu.scalar_component(functional)?.variation(set)?;
            Ok(Num::Exact(attained).eq_num(value))
        }
        SupWitness::SignPattern(pattern) => {
            if value.is_zero() {
                return Ok(true);
            }
            match &pattern.functional {
                Some(coords) => {
                    let f = nu.density().as_rank().expect("sign patterns come from rank densities");
                    let dual = f.space().dual();
                    let xstar = FiniteDimVector::new(dual, coords.clone())?;
                    if xstar.norm() > NormValue::Rational(Rational::one()) {
                        return Ok(false);
                    }
                    let attained =
                        nu.scalar_component(DualFunctional::FiniteDim(xstar))?.variation(set)?;
                    Ok(Num::Exact(attained).eq_num(value))
                }
                // No rational norming functional exists (irrational euclidean
                // norm); fall back to the combination itself.
                None => {
                    let f = nu.density().as_rank().expect("sign patterns come from rank densities");
                    let combo = FiniteDimVector::new(f.space(), pattern.combination.clone())?;
                    Ok(approx::close(approx::norm_f64(&combo), value.to_f64()))
                }
            }
        }
    }
}

// Rank-one densities: semivariation and variation coincide on every set.
fn check_rank_one_equality(ctx: &Ctx<'_>, opts: &RunOptions) -> Result<CheckRecord> {
    let Some(nu) = &ctx.nu else { return Ok(ctx.vacuous(CheckName::RankOneEquality)) };
    let rank_one = match nu.density() {
        VectorFunction::Rank(f) => f.is_rank_one(),
        VectorFunction::Diagonal(_) => false,
    };
    if !rank_one {
        return Ok(CheckRecord::pass(CheckName::RankOneEquality.as_str())
            .detail("vacuous", "density is not rank one"));
    }
    let mut record = CheckRecord::pass(CheckName::RankOneEquality.as_str());
    for set in &ctx.sets {
        let semivariation = or_approx(nu.semivariation(set), opts, || {
            approx::weighted_dual_sup_f64(nu.density(), nu.space(), None, set)
        })?;
        let variation = or_approx(nu.variation(set), opts, || {
            approx::weighted_norm_sum_f64(nu.density(), nu.space(), None, set)
        })?;
        if !semivariation.eq_num(&variation) {
            return Ok(fail(
                record.detail("semivariation", semivariation).detail("variation", variation),
                serde_json::json!({"set": set}),
            ));
        }
        record = record.detail(&format!("set {set}"), semivariation);
    }
    Ok(record)
}

// Bochner implies Pettis implies Dunford; the flag route agrees with the
// value route; in finite dimensions all three collapse.
fn check_integrability_chain(ctx: &Ctx<'_>, opts: &RunOptions) -> Result<CheckRecord> {
    let f = &ctx.sc.f;
    let space = &ctx.sc.space;
    let (dunford, pettis, bochner) = integrability_flags(f, space)?;
    let record = CheckRecord::pass(CheckName::IntegrabilityChain.as_str())
        .detail("dunford", dunford)
        .detail("pettis", pettis)
        .detail("bochner", bochner);
    if (bochner && !pettis) || (pettis && !dunford) {
        return Ok(fail(record, serde_json::json!({"law": "inclusion chain"})));
    }
    if matches!(f, VectorFunction::Rank(_)) && !(dunford == pettis && pettis == bochner) {
        return Ok(fail(record, serde_json::json!({"law": "finite-dimensional collapse"})));
    }
    let dn = or_approx(dunford_norm(f, space), opts, || {
        approx::weighted_dual_sup_f64(f, space, None, &RepresentableSet::all())
    })?;
    let bn = or_approx(bochner_norm(f, space, &RepresentableSet::all()), opts, || {
        approx::weighted_norm_sum_f64(f, space, None, &RepresentableSet::all())
    })?;
    if let (Num::Exact(dn_exact), Num::Exact(bn_exact)) = (&dn, &bn) {
        if dunford != dn_exact.is_finite() || bochner != bn_exact.is_finite() {
            return Ok(fail(
                record.detail("dunford-norm", dn).detail("bochner-norm", bn),
                serde_json::json!({"law": "flag and value routes"}),
            ));
        }
    }
    if !dn.le_num(&bn) {
        return Ok(fail(
            record.detail("dunford-norm", dn).detail("bochner-norm", bn),
            serde_json::json!({"law": "Dunford norm below Bochner norm"}),
        ));
    }
    Ok(record.detail("dunford-norm", dn).detail("bochner-norm", bn))
}

// The analytic local-integrability rule against restricted instances.
fn check_local_integrability(ctx: &Ctx<'_>) -> Result<CheckRecord> {
    let f = &ctx.sc.f;
    let space = &ctx.sc.space;
    let record = CheckRecord::pass(CheckName::LocalIntegrability.as_str());
    if !space.validate_locally_determined() {
        let rejected = locally_integrable(f, space).is_err() && ctx.nu.is_none();
        return Ok(record
            .detail("space", "not locally determined")
            .fail_if(!rejected));
    }
    let local = locally_integrable(f, space)?;
    let (_, pettis, bochner) = integrability_flags(f, space)?;
    let record = record
        .detail("locally-pettis", local.locally_pettis)
        .detail("locally-bochner", local.locally_bochner);
    // Global integrability sits inside both local classes, and locally
    // Bochner sits inside locally Pettis.
    if (bochner && !local.locally_bochner)
        || (pettis && !local.locally_pettis)
        || (local.locally_bochner && !local.locally_pettis)
    {
        return Ok(fail(record, serde_json::json!({"law": "inclusion chain"})));
    }
    // Instance checks: restrictions to the scenario's finite-measure sets.
    for set in &ctx.sets {
        if !space.in_sigma_f(set) {
            continue;
        }
        let restricted = f.multiply(&GeometricSequence::indicator(set));
        let (_, pettis_b, bochner_b) = integrability_flags(&restricted, space)?;
        if local.locally_bochner && !bochner_b {
            return Ok(fail(
                record.detail("law", "locally Bochner instance"),
                serde_json::json!({"set": set}),
            ));
        }
        if local.locally_pettis && !pettis_b {
            return Ok(fail(
                record.detail("law", "locally Pettis instance"),
                serde_json::json!({"set": set}),
            ));
        }
    }
    // When the rule says no, the worst case is the whole line; confirm the
    // obstruction whenever the whole line has finite measure.
    if !local.locally_bochner && space.in_sigma_f(&RepresentableSet::all()) {
        let (_, _, bochner_all) = integrability_flags(f, space)?;
        if bochner_all {
            return Ok(fail(
                record.detail("law", "negative verdict needs an obstruction"),
                serde_json::json!({"set": RepresentableSet::all()}),
            ));
        }
    }
    Ok(record)
}

// Pettis integrability of the density is equivalent to local Pettis
// integrability plus strong additivity of its measure.
fn check_corollary13(ctx: &Ctx<'_>) -> Result<CheckRecord> {
    let f = &ctx.sc.f;
    let space = &ctx.sc.space;
    if !space.validate_locally_determined() {
        return Ok(CheckRecord::pass(CheckName::Corollary13.as_str())
            .detail("vacuous", "space is not locally determined"));
    }
    let (_, pettis, _) = integrability_flags(f, space)?;
    let local = locally_integrable(f, space)?;
    let strongly_additive = ctx.nu.as_ref().map(DensityMeasure::strongly_additive);
    let rhs = local.locally_pettis && strongly_additive.unwrap_or(false);
    let record = CheckRecord::pass(CheckName::Corollary13.as_str())
        .detail("pettis", pettis)
        .detail("locally-pettis", local.locally_pettis)
        .detail(
            "strongly-additive",
            strongly_additive.map_or("undefined".to_string(), |b| b.to_string()),
        );
    Ok(record.fail_if(pettis != rhs))
}

// Bochner integrability of the density is equivalent to local Bochner
// integrability plus bounded variation of its measure.
fn check_remark8(ctx: &Ctx<'_>) -> Result<CheckRecord> {
    let f = &ctx.sc.f;
    let space = &ctx.sc.space;
    if !space.validate_locally_determined() {
        return Ok(CheckRecord::pass(CheckName::Remark8.as_str())
            .detail("vacuous", "space is not locally determined"));
    }
    let (_, _, bochner) = integrability_flags(f, space)?;
    let local = locally_integrable(f, space)?;
    let bounded_variation = match &ctx.nu {
        Some(nu) if local.locally_bochner => nu.variation_is_finite(&RepresentableSet::all())?,
        _ => false,
    };
    let rhs = local.locally_bochner && bounded_variation;
    let record = CheckRecord::pass(CheckName::Remark8.as_str())
        .detail("bochner", bochner)
        .detail("locally-bochner", local.locally_bochner)
        .detail("bounded-variation", bounded_variation);
    Ok(record.fail_if(bochner != rhs))
}

// The multiplication operator is an isometry into the Dunford space, with the
// membership equivalences and the integral identity against sampled duals.
fn check_theorem12(ctx: &Ctx<'_>, opts: &RunOptions, rng: &mut ChaCha8Rng) -> Result<CheckRecord> {
    let Some(nu) = &ctx.nu else { return Ok(ctx.vacuous(CheckName::Theorem12Isometry)) };
    let mut record = CheckRecord::pass(CheckName::Theorem12Isometry.as_str());
    let mut triples = 0usize;
    for (index, g) in ctx.sc.multipliers.iter().enumerate() {
        triples += 1;
        let gf = nu.density().multiply(&normalize_multiplier(g, nu));
        let lhs = or_approx(nu_norm(g, nu), opts, || {
            approx::weighted_dual_sup_f64(
                nu.density(),
                nu.space(),
                Some(&normalize_multiplier(g, nu)),
                &RepresentableSet::all(),
            )
        })?;
        let rhs = or_approx(dunford_norm(&gf, nu.space()), opts, || {
            approx::weighted_dual_sup_f64(&gf, nu.space(), None, &RepresentableSet::all())
        })?;
        if !lhs.eq_num(&rhs) {
            return Ok(fail(
                record.detail("nu-norm", lhs).detail("dunford-norm", rhs),
                serde_json::json!({"multiplier": index}),
            ));
        }
        let (gf_dunford, gf_pettis, _) = integrability_flags(&gf, nu.space())?;
        if in_l1w_flag(g, nu)? != gf_dunford {
            return Ok(fail(
                record.detail("law", "weak membership equivalence"),
                serde_json::json!({"multiplier": index}),
            ));
        }
        if in_l1_flag(g, nu)? != gf_pettis {
            return Ok(fail(
                record.detail("law", "membership equivalence"),
                serde_json::json!({"multiplier": index}),
            ));
        }
        record = record.detail(&format!("g{index}"), format!("{lhs} = {rhs}"));
        if !in_l1_flag(g, nu)? {
            continue;
        }
        // The integral identity, against the defining duality on every set.
        for set in &ctx.sets {
            let value = integrate(g, nu, set)?;
            for _ in 0..opts.dual_samples.min(8) {
                let functional = match nu.density() {
                    VectorFunction::Rank(f) => {
                        DualFunctional::FiniteDim(sample_dual(rng, f.space()))
                    }
                    VectorFunction::Diagonal(_) => {
                        DualFunctional::L1(sample_l1_dual(rng, ctx.horizon()))
                    }
                };
                let lhs = functional.pair_integral(&value)?;
                let profile = functional.pair_function(nu.density())?;
                let rhs = nu.space().weights().mul(g).mul(&profile).sum_signed(set)?;
                if lhs != rhs {
                    return Ok(fail(
                        record.detail("law", "integral identity"),
                        serde_json::json!({"multiplier": index, "set": set}),
                    ));
                }
            }
        }
    }
    Ok(record.detail("triples", triples))
}

// The multiplication operator is an isometry into the Bochner space on the
// variation-integrable class.
fn check_prop15(ctx: &Ctx<'_>, opts: &RunOptions) -> Result<CheckRecord> {
    let Some(nu) = &ctx.nu else { return Ok(ctx.vacuous(CheckName::Prop15Isometry)) };
    if !nu.local().locally_bochner {
        return Ok(CheckRecord::pass(CheckName::Prop15Isometry.as_str())
            .detail("vacuous", "density is not locally Bochner integrable"));
    }
    let mut record = CheckRecord::pass(CheckName::Prop15Isometry.as_str());
    for (index, g) in ctx.sc.multipliers.iter().enumerate() {
        let g_normalized = normalize_multiplier(g, nu);
        let gf = nu.density().multiply(&g_normalized);
        let lhs = or_approx(variation_norm(g, nu), opts, || {
            approx::weighted_norm_sum_f64(
                nu.density(),
                nu.space(),
                Some(&g_normalized),
                &RepresentableSet::all(),
            )
        })?;
        let rhs = or_approx(bochner_norm(&gf, nu.space(), &RepresentableSet::all()), opts, || {
            approx::weighted_norm_sum_f64(&gf, nu.space(), None, &RepresentableSet::all())
        })?;
        if !lhs.eq_num(&rhs) {
            return Ok(fail(
                record.detail("variation-norm", lhs).detail("bochner-norm", rhs),
                serde_json::json!({"multiplier": index}),
            ));
        }
        let (_, _, gf_bochner) = integrability_flags(&gf, nu.space())?;
        if in_l1_variation_flag(g, nu)? != gf_bochner {
            return Ok(fail(
                record.detail("law", "membership equivalence"),
                serde_json::json!({"multiplier": index}),
            ));
        }
        record = record.detail(&format!("g{index}"), format!("{lhs} = {rhs}"));
    }
    Ok(record)
}

// Null sets of the scalar measure sit inside those of the density measure,
// strictly when the density vanishes on an atom of positive mass.
fn check_null_sets(ctx: &Ctx<'_>) -> Result<CheckRecord> {
    let Some(nu) = &ctx.nu else { return Ok(ctx.vacuous(CheckName::NullSets)) };
    let mut record = CheckRecord::pass(CheckName::NullSets.as_str());
    for set in &ctx.sets {
        // is_nu_null cross-checks its two routes internally.
        if nu.space().is_mu_null(set) && !nu.is_nu_null(set) {
            return Ok(fail(
                record.detail("law", "null-set inclusion"),
                serde_json::json!({"set": set}),
            ));
        }
    }
    let mut strictness: Option<u64> = None;
    for t in 0..ctx.horizon() {
        let charged = !nu.space().weights().value(t).is_zero();
        if charged && nu.is_nu_null(&RepresentableSet::singleton(t)) {
            strictness = Some(t);
            break;
        }
    }
    match strictness {
        Some(t) => {
            let witness = RepresentableSet::singleton(t);
            if nu.space().is_mu_null(&witness) {
                return Ok(fail(
                    record.detail("law", "strictness witness"),
                    serde_json::json!({"atom": t}),
                ));
            }
            record = record.detail("strictness-witness", format!("atom {t}"));
        }
        None => {
            record = record.detail("strictness-witness", "none in window");
        }
    }
    Ok(record)
}

// Truncations are simple functions converging in the multiplier norm, with
// geometrically decaying defects.
fn check_simple_density(ctx: &Ctx<'_>, opts: &RunOptions) -> Result<CheckRecord> {
    let Some(nu) = &ctx.nu else { return Ok(ctx.vacuous(CheckName::SimpleDensity)) };
    let mut record = CheckRecord::pass(CheckName::SimpleDensity.as_str());
    let mut tested = 0usize;
    for (index, g) in ctx.sc.multipliers.iter().enumerate() {
        if !in_l1_flag(g, nu)? {
            continue;
        }
        tested += 1;
        let defect_at = |n: u64| -> Result<Num> {
            match simple_function_approximation(g, nu, n) {
                Ok(step) => Ok(Num::Exact(step.defect)),
                Err(Error::IrrationalNorm { .. }) if opts.approx => {
                    let discarded = normalize_multiplier(g, nu)
                        .restrict(&RepresentableSet::from_index(n));
                    Ok(Num::Approx(approx::weighted_dual_sup_f64(
                        nu.density(),
                        nu.space(),
                        Some(&discarded),
                        &RepresentableSet::all(),
                    )?))
                }
                Err(e) => Err(e),
            }
        };
        let mut defects = Vec::new();
        for n in 0..=12u64 {
            defects.push(defect_at(n)?);
        }
        for window in defects.windows(2) {
            if !window[1].le_num(&window[0]) {
                return Ok(fail(
                    record.detail("law", "defects nonincreasing"),
                    serde_json::json!({"multiplier": index}),
                ));
            }
        }
        // Beyond every exceptional region the defect is a pure geometric
        // tail: one ratio step per truncation level, converging to zero.
        let horizon = ctx.horizon();
        let ratio = defect_tail_ratio(g, nu);
        let base = defect_at(horizon)?;
        match ratio {
            None => {
                if !base.is_zero() {
                    return Ok(fail(
                        record.detail("law", "defect vanishes beyond the support"),
                        serde_json::json!({"multiplier": index}),
                    ));
                }
            }
            Some(q) => {
                let mut expected = base.clone();
                for k in 1..=4u64 {
                    expected = expected.scale(&q);
                    let actual = defect_at(horizon + k)?;
                    if !actual.eq_num(&expected) {
                        return Ok(fail(
                            record
                                .detail("law", "geometric defect decay")
                                .detail("expected", expected)
                                .detail("actual", actual),
                            serde_json::json!({"multiplier": index, "n": horizon + k}),
                        ));
                    }
                }
            }
        }
        record = record.detail(&format!("g{index} defect(0)"), &defects[0]);
    }
    Ok(record.detail("multipliers-tested", tested))
}

/// The ratio the defect shrinks by per truncation step beyond the exceptional
/// window, or None when it is exactly zero there.
fn defect_tail_ratio(g: &GeometricSequence, nu: &DensityMeasure) -> Option<Rational> {
    let g = normalize_multiplier(g, nu);
    let mass = nu.space().weights().mul(&g.abs());
    match nu.density() {
        VectorFunction::Rank(f) => {
            if mass.has_zero_tail() || f.tail_vector().is_zero() {
                None
            } else {
                Some(mass.tail_ratio() * f.tail_ratio())
            }
        }
        VectorFunction::Diagonal(f) => {
            let profile = mass.mul(&f.entries().abs());
            if profile.has_zero_tail() {
                None
            } else {
                Some(profile.tail_ratio().clone())
            }
        }
    }
}
