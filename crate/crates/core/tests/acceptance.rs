//! Acceptance suite: one test per criterion, each printing its own PASS line
//! (run with `cargo test --test acceptance -- --nocapture` to see them). All
//! comparisons are exact rational equalities; the only tolerances are the
//! stated runtime budgets.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vecdens_core::banach::FiniteDimVector;
use vecdens_core::corpus::{random_finite_set, random_scenario, sample_dual, sample_l1_dual, CorpusOptions};
use vecdens_core::integration::{integrability_flags, SupWitness};
use vecdens_core::multipliers::{
    in_l1_flag, in_l1_variation_flag, in_l1w_flag, integrate, normalize_multiplier, nu_norm,
    simple_function_approximation, variation_norm,
};
use vecdens_core::rational::{integer, Rational};
use vecdens_core::scenario::BuiltScenario;
use vecdens_core::sequence::GeometricSequence;
use vecdens_core::sets::RepresentableSet;
use vecdens_core::{
    bochner_norm, dunford_norm, DensityMeasure, DualFunctional, ExtendedRational, VectorFunction,
};

struct Corpus {
    scenarios: Vec<BuiltScenario>,
}

fn corpus(seed: u64, count: usize, locally_bochner: bool, wide_sets: bool) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = CorpusOptions {
        allow_c0: true,
        require_density_measure: true,
        require_locally_bochner: locally_bochner,
        max_finite_set: 5,
        multipliers: 3,
        checks: Vec::new(),
    };
    let mut scenarios = Vec::with_capacity(count);
    for index in 0..count {
        let mut scenario = random_scenario(&mut rng, &opts);
        if wide_sets && index < 50 {
            // A slice of the corpus carries wider finite sets so the
            // partition oracle is exercised up to eight elements.
            let mut wide = random_finite_set(&mut rng, 8);
            while wide.elements().is_some_and(|e| e.len() < 6) {
                wide = wide.union(&random_finite_set(&mut rng, 8));
            }
            let wide = RepresentableSet::finite(
                wide.elements().unwrap().iter().copied().take(8).collect::<Vec<_>>(),
            );
            scenario.sets.push(wide);
        }
        scenarios.push(scenario.build().expect("generated scenarios build"));
    }
    Corpus { scenarios }
}

fn density_measure(sc: &BuiltScenario) -> DensityMeasure {
    DensityMeasure::new(sc.f.clone(), sc.space.clone()).expect("corpus requires the measure")
}

/// Criterion 1: the closed-form variation equals the partition-enumeration
/// supremum on every finite set of at most eight atoms, across at least five
/// hundred locally Bochner scenarios, within sixty seconds.
#[test]
fn criterion_1_variation_oracle() {
    let started = Instant::now();
    let corpus = corpus(101, 500, true, true);
    assert!(corpus.scenarios.len() >= 500);
    let mut sets_compared = 0usize;
    for sc in &corpus.scenarios {
        let nu = density_measure(sc);
        for set in &sc.sets {
            let Some(elements) = set.elements() else { continue };
            if elements.len() > 8 {
                continue;
            }
            let closed = nu.variation(set).expect("corpus avoids irrational norms");
            let (brute, _) = nu.variation_bruteforce(set).expect("within the partition cap");
            assert_eq!(closed, brute, "variation routes disagree on {set}");
            sets_compared += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 60, "variation oracle overran: {elapsed:?}");
    println!(
        "ACCEPTANCE 1 variation-oracle: PASS ({} scenarios, {} sets, {:.2?})",
        corpus.scenarios.len(),
        sets_compared,
        elapsed
    );
}

/// Criterion 2: the sign-pattern semivariation dominates every sampled dual
/// evaluation (a thousand samples or more in total), its witness attains it,
/// it never exceeds the variation, and it equals the variation on every
/// rank-one scenario.
#[test]
fn criterion_2_semivariation_soundness() {
    let corpus = corpus(202, 150, true, false);
    let mut rng = ChaCha8Rng::seed_from_u64(2020);
    let mut samples = 0usize;
    let mut rank_one_equalities = 0usize;
    for sc in &corpus.scenarios {
        let nu = density_measure(sc);
        let rank_one = match nu.density() {
            VectorFunction::Rank(f) => f.is_rank_one(),
            VectorFunction::Diagonal(_) => false,
        };
        for set in &sc.sets {
            let (sv, witness) = nu.semivariation_with_witness(set).unwrap();
            for _ in 0..4 {
                let functional = match nu.density() {
                    VectorFunction::Rank(f) => {
                        DualFunctional::FiniteDim(sample_dual(&mut rng, f.space()))
                    }
                    VectorFunction::Diagonal(_) => {
                        DualFunctional::L1(sample_l1_dual(&mut rng, 10))
                    }
                };
                let lower = nu.scalar_component(functional).unwrap().variation(set).unwrap();
                assert!(lower <= sv, "sampled dual exceeds the semivariation on {set}");
                samples += 1;
            }
            assert_witness_attains(&nu, set, &witness, &sv);
            let variation = nu.variation(set).unwrap();
            assert!(sv <= variation, "semivariation above variation on {set}");
            if rank_one {
                assert_eq!(sv, variation, "rank-one semivariation must equal variation");
                rank_one_equalities += 1;
            }
        }
    }
    assert!(samples >= 1000, "only {samples} dual samples drawn");
    assert!(rank_one_equalities > 0, "corpus contained no rank-one scenario");
    println!(
        "ACCEPTANCE 2 semivariation-soundness: PASS ({} dual samples, {} rank-one equalities)",
        samples, rank_one_equalities
    );
}

/// Independent re-derivation of a reported supremum from its witness.
fn assert_witness_attains(
    nu: &DensityMeasure,
    set: &RepresentableSet,
    witness: &SupWitness,
    value: &ExtendedRational,
) {
    match witness {
        SupWitness::Unattained => {
            assert!(
                value.is_zero() || !value.is_finite(),
                "missing witness for a finite positive supremum"
            );
        }
        SupWitness::Atom { index } => {
            let functional =
                DualFunctional::L1(GeometricSequence::delta(*index, integer(1)));
            let attained = nu.scalar_component(functional).unwrap().variation(set).unwrap();
            assert_eq!(&attained, value, "atom witness does not attain the supremum");
        }
        SupWitness::SignPattern(pattern) => {
            if value.is_zero() {
                return;
            }
            let coords = pattern
                .functional
                .as_ref()
                .expect("rational-norm corpus always has a norming functional");
            let f = nu.density().as_rank().expect("sign patterns come from rank densities");
            let xstar = FiniteDimVector::new(f.space().dual(), coords.clone()).unwrap();
            assert!(
                xstar.norm().squared() <= Rational::from_integer(1.into()),
                "witness functional escapes the dual ball"
            );
            let attained = nu
                .scalar_component(DualFunctional::FiniteDim(xstar))
                .unwrap()
                .variation(set)
                .unwrap();
            assert_eq!(&attained, value, "sign-pattern witness does not attain the supremum");
        }
    }
}

/// Criterion 3: the multiplier norm equals the Dunford norm of the product on
/// a thousand or more triples, with finite and infinite outcomes both
/// represented, the membership equivalences holding throughout, and the
/// integral identity verified against sampled duals on every set.
#[test]
fn criterion_3_theorem12_isometry() {
    let corpus = corpus(303, 400, false, false);
    let mut rng = ChaCha8Rng::seed_from_u64(3030);
    let mut triples = 0usize;
    let mut finite_outcomes = 0usize;
    let mut infinite_outcomes = 0usize;
    let mut identities = 0usize;
    for sc in &corpus.scenarios {
        let nu = density_measure(sc);
        for g in &sc.multipliers {
            triples += 1;
            let gf = nu.density().multiply(&normalize_multiplier(g, &nu));
            let lhs = nu_norm(g, &nu).unwrap();
            let rhs = dunford_norm(&gf, nu.space()).unwrap();
            assert_eq!(lhs, rhs, "isometry into the Dunford space broke");
            if lhs.is_finite() {
                finite_outcomes += 1;
            } else {
                infinite_outcomes += 1;
            }
            let (gf_dunford, gf_pettis, _) = integrability_flags(&gf, nu.space()).unwrap();
            assert_eq!(in_l1w_flag(g, &nu).unwrap(), gf_dunford, "weak membership equivalence");
            assert_eq!(in_l1_flag(g, &nu).unwrap(), gf_pettis, "membership equivalence");
            if !gf_pettis {
                continue;
            }
            for set in &sc.sets {
                let value = integrate(g, &nu, set).unwrap();
                for _ in 0..3 {
                    let functional = match nu.density() {
                        VectorFunction::Rank(f) => {
                            DualFunctional::FiniteDim(sample_dual(&mut rng, f.space()))
                        }
                        VectorFunction::Diagonal(_) => {
                            DualFunctional::L1(sample_l1_dual(&mut rng, 10))
                        }
                    };
                    let lhs = functional.pair_integral(&value).unwrap();
                    let profile = functional.pair_function(nu.density()).unwrap();
                    let rhs =
                        nu.space().weights().mul(g).mul(&profile).sum_signed(set).unwrap();
                    assert_eq!(lhs, rhs, "integral identity failed on {set}");
                    identities += 1;
                }
            }
        }
    }
    assert!(triples >= 1000, "only {triples} triples exercised");
    assert!(finite_outcomes > 0 && infinite_outcomes > 0, "need both outcome kinds");
    println!(
        "ACCEPTANCE 3 theorem12-isometry: PASS ({} triples, {} finite, {} infinite, {} identities)",
        triples, finite_outcomes, infinite_outcomes, identities
    );
}

/// Criterion 4: the variation-norm isometry into the Bochner space on the
/// locally Bochner part of the corpus, with the membership equivalence.
#[test]
fn criterion_4_prop15_isometry() {
    let corpus = corpus(404, 400, true, false);
    let mut triples = 0usize;
    for sc in &corpus.scenarios {
        let nu = density_measure(sc);
        for g in &sc.multipliers {
            triples += 1;
            let gf = nu.density().multiply(&normalize_multiplier(g, &nu));
            let lhs = variation_norm(g, &nu).unwrap();
            let rhs = bochner_norm(&gf, nu.space(), &RepresentableSet::all()).unwrap();
            assert_eq!(lhs, rhs, "isometry into the Bochner space broke");
            let (_, _, gf_bochner) = integrability_flags(&gf, nu.space()).unwrap();
            assert_eq!(
                in_l1_variation_flag(g, &nu).unwrap(),
                gf_bochner,
                "variation membership equivalence"
            );
        }
    }
    assert!(triples >= 500, "only {triples} triples exercised");
    println!("ACCEPTANCE 4 prop15-isometry: PASS ({} triples)", triples);
}

/// Criterion 5: the whole counterexample gallery passes in under five seconds.
#[test]
fn criterion_5_gallery() {
    let started = Instant::now();
    let opts = vecdens_core::RunOptions { seed: 5, dual_samples: 16, approx: false };
    let report = vecdens_core::run_gallery(None, &opts).unwrap();
    let elapsed = started.elapsed();
    assert!(report.pass, "gallery failed:\n{}", report.render_text());
    assert!(elapsed.as_secs_f64() < 5.0, "gallery overran: {elapsed:?}");
    let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
    for expected in [
        "example5",
        "example10-rank-one",
        "c0-diagonal-ones",
        "c0-diagonal-geometric",
        "remark8-equivalence",
        "corollary13-both-directions",
        "example16-equality",
    ] {
        assert!(
            names.iter().any(|n| n.starts_with(expected)),
            "gallery entry {expected} missing"
        );
    }
    println!("ACCEPTANCE 5 gallery: PASS ({} records, {:.2?})", report.checks.len(), elapsed);
}

/// Criterion 6: measure axioms for both measures, monotonicity of variation
/// and semivariation, and the strict inclusion of the scalar null sets in the
/// vector null sets.
#[test]
fn criterion_6_measure_axioms() {
    let corpus = corpus(606, 200, true, false);
    let mut rng = ChaCha8Rng::seed_from_u64(6060);
    let mut strictness_witnesses = 0usize;
    for sc in &corpus.scenarios {
        let nu = density_measure(sc);
        let mu = nu.space();
        for set in &sc.sets {
            // Scalar and vector additivity over a random disjoint split.
            let splitter = random_finite_set(&mut rng, 6);
            let left = set.intersection(&splitter);
            let right = set.difference(&splitter);
            assert_eq!(mu.measure(set), mu.measure(&left) + mu.measure(&right));
            if mu.in_sigma_f(set) {
                let total = nu.evaluate(set).unwrap();
                let sum = nu.evaluate(&left).unwrap().add(&nu.evaluate(&right).unwrap()).unwrap();
                assert_eq!(total, sum);
                // Monotone exhaustion in norm: remainders shrink.
                let mut previous: Option<vecdens_core::NormValue> = None;
                for n in [4u64, 8, 16] {
                    let (_, tail) = set.split_at(n);
                    let remainder = nu.evaluate(&tail).unwrap().norm();
                    if let Some(p) = &previous {
                        assert!(&remainder <= p, "remainder norms must not grow");
                    }
                    previous = Some(remainder);
                }
            }
            // Scalar monotone exhaustion.
            let mut previous = ExtendedRational::zero();
            for n in [0u64, 4, 8, 16] {
                let partial = mu.measure(&RepresentableSet::Finite(set.truncate(n)));
                assert!(partial >= previous && partial <= mu.measure(set));
                previous = partial;
            }
            // Monotonicity of variation and semivariation in the set.
            let subset = set.intersection(&random_finite_set(&mut rng, 8));
            assert!(nu.variation(&subset).unwrap() <= nu.variation(set).unwrap());
            assert!(nu.semivariation(&subset).unwrap() <= nu.semivariation(set).unwrap());
            // Scalar null sets are vector null sets.
            if mu.is_mu_null(set) {
                assert!(nu.is_nu_null(set), "null inclusion failed on {set}");
            }
        }
        // Count scenarios exhibiting the strictness of the inclusion.
        for t in 0..10u64 {
            use num_traits::Zero;
            let single = RepresentableSet::singleton(t);
            if !mu.weights().value(t).is_zero() && nu.is_nu_null(&single) {
                strictness_witnesses += 1;
                break;
            }
        }
    }
    // The inclusion must be witnessed strict somewhere in the corpus, and is
    // always witnessable by construction.
    let space = vecdens_core::banach::FiniteDimSpace::new(1, vecdens_core::NormExponent::One);
    let f = VectorFunction::rank_one(
        GeometricSequence::indicator(&RepresentableSet::cofinite([0])),
        FiniteDimVector::new(space, vec![integer(1)]).unwrap(),
    );
    let nu = DensityMeasure::new(f, vecdens_core::AtomicMeasureSpace::counting()).unwrap();
    assert!(nu.is_nu_null(&RepresentableSet::singleton(0)));
    assert!(!nu.space().is_mu_null(&RepresentableSet::singleton(0)));
    strictness_witnesses += 1;
    println!(
        "ACCEPTANCE 6 measure-axioms: PASS ({} scenarios, {} strictness witnesses)",
        corpus.scenarios.len(),
        strictness_witnesses
    );
}

/// Criterion 7: truncation defects are nonincreasing and follow their closed
/// geometric form down to zero for every integrable multiplier in the corpus.
#[test]
fn criterion_7_simple_function_density() {
    let corpus = corpus(707, 300, false, false);
    let mut multipliers_tested = 0usize;
    for sc in &corpus.scenarios {
        let nu = density_measure(sc);
        for g in &sc.multipliers {
            if !in_l1_flag(g, &nu).unwrap() {
                continue;
            }
            multipliers_tested += 1;
            let defect =
                |n: u64| simple_function_approximation(g, &nu, n).unwrap().defect;
            let mut previous = ExtendedRational::Infinite;
            for n in 0..=12u64 {
                let d = defect(n);
                assert!(d <= previous, "defect grew at truncation level {n}");
                previous = d;
            }
            // Beyond the exceptional window the defect is a pure geometric
            // tail; one ratio step per level, hence convergence to zero.
            let g_norm = normalize_multiplier(g, &nu);
            let horizon = horizon_of(&nu, &g_norm);
            match defect_ratio(&nu, &g_norm) {
                None => assert!(defect(horizon).is_zero(), "defect must vanish beyond support"),
                Some(q) => {
                    let base = defect(horizon);
                    let mut expected = base;
                    for k in 1..=4u64 {
                        expected = expected.scale(&q);
                        assert_eq!(
                            defect(horizon + k),
                            expected,
                            "defect left its closed geometric form"
                        );
                    }
                }
            }
        }
    }
    assert!(multipliers_tested >= 100, "only {multipliers_tested} integrable multipliers");
    println!(
        "ACCEPTANCE 7 simple-function-density: PASS ({} multipliers)",
        multipliers_tested
    );
}

fn horizon_of(nu: &DensityMeasure, g: &GeometricSequence) -> u64 {
    let f_start = match nu.density() {
        VectorFunction::Rank(f) => f.tail_start(),
        VectorFunction::Diagonal(f) => f.entries().tail_start(),
    };
    f_start.max(g.tail_start()).max(nu.space().weights().tail_start()) + 2
}

fn defect_ratio(nu: &DensityMeasure, g: &GeometricSequence) -> Option<Rational> {
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

/// Criterion 8: fuzzing with a fixed seed is byte-identical across runs.
#[test]
fn criterion_8_determinism() {
    let first = vecdens_core::fuzz(42, 100, false).unwrap();
    let second = vecdens_core::fuzz(42, 100, false).unwrap();
    assert_eq!(first.to_json(), second.to_json(), "fuzz reports must be byte-identical");
    assert!(first.pass, "fuzz found a failure:\n{}", first.render_text());
    println!(
        "ACCEPTANCE 8 determinism: PASS ({} cases, {} bytes)",
        first.checks.len(),
        first.to_json().len()
    );
}
