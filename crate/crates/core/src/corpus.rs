//! Seeded random scenarios and dual-ball samplers.
//!
//! Sizes are kept at desk scale on purpose: dimension at most four, at most
//! six exceptional indices, ratios from a fixed rational pool. Euclidean
//! targets draw their directions from a pool of vectors with rational length
//! and only in rank-one form, so every exact norm computation downstream
//! stays inside the rationals.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::banach::{FiniteDimSpace, FiniteDimVector, NormExponent};
use crate::rational::{integer, rational, Rational};
use crate::scenario::{CheckName, Scenario};
use crate::sequence::GeometricSequence;
use crate::sets::RepresentableSet;
use crate::space::AtomicMeasureSpace;

use num_traits::{Signed, Zero};

use crate::functions::{DiagonalFunction, RankDecomposedFunction, VectorFunction};

pub fn ratio_pool() -> Vec<Rational> {
    vec![
        integer(0),
        rational(1, 3),
        rational(1, 2),
        rational(2, 3),
        integer(1),
        rational(3, 2),
        integer(2),
    ]
}

fn signed_value_pool() -> Vec<Rational> {
    vec![
        integer(0),
        integer(1),
        integer(-1),
        rational(1, 2),
        rational(-1, 2),
        integer(2),
        integer(-2),
        integer(3),
        rational(5, 2),
        rational(-3, 2),
        rational(1, 3),
    ]
}

fn weight_pool() -> Vec<Rational> {
    vec![integer(0), integer(1), rational(1, 2), integer(2), rational(1, 3), integer(3), rational(3, 2)]
}

/// Directions of rational euclidean length, padded with zeros as needed.
fn pythagorean_pool(dim: usize) -> Vec<Vec<Rational>> {
    let seeds: Vec<Vec<i64>> = vec![
        vec![1],
        vec![2],
        vec![3, 4],
        vec![-3, 4],
        vec![5, 12],
        vec![8, -15],
        vec![1, 0],
        vec![0, 2],
        vec![2, 3, 6],
        vec![1, -2, 2],
        vec![4, 0, 3],
        vec![2, -3, 6, 0],
        vec![1, 2, -2, 0],
    ];
    seeds
        .into_iter()
        .filter(|s| s.len() <= dim)
        .map(|s| {
            let mut coords: Vec<Rational> = s.into_iter().map(integer).collect();
            coords.resize(dim, Rational::zero());
            coords
        })
        .collect()
}

fn pick<T: Clone>(rng: &mut ChaCha8Rng, pool: &[T]) -> T {
    pool[rng.random_range(0..pool.len())].clone()
}

pub fn random_sequence(rng: &mut ChaCha8Rng, values: &[Rational], nonneg: bool) -> GeometricSequence {
    let exceptional_count = rng.random_range(0..=6usize);
    let mut exceptional = std::collections::BTreeMap::new();
    let tail_start = rng.random_range(0..=6u64);
    for _ in 0..exceptional_count {
        if tail_start == 0 {
            break;
        }
        let t = rng.random_range(0..tail_start);
        let mut v = pick(rng, values);
        if nonneg {
            v = v.abs();
        }
        exceptional.insert(t, v);
    }
    let mut coeff = if rng.random_range(0..4usize) == 0 {
        Rational::zero()
    } else {
        pick(rng, values)
    };
    if nonneg {
        coeff = coeff.abs();
    }
    let ratio = pick(rng, &ratio_pool());
    GeometricSequence::new(exceptional, tail_start, coeff, ratio)
        .expect("pool ratios are nonnegative and indices stay below the tail start")
}

pub fn random_space(rng: &mut ChaCha8Rng) -> AtomicMeasureSpace {
    AtomicMeasureSpace::new(random_sequence(rng, &weight_pool(), true))
        .expect("weight pool values are nonnegative")
}

fn random_rank_density(rng: &mut ChaCha8Rng) -> VectorFunction {
    let p = [NormExponent::One, NormExponent::Infinity, NormExponent::Two]
        [rng.random_range(0..3usize)];
    let dim = rng.random_range(1..=4usize);
    let space = FiniteDimSpace::new(dim, p);
    let directions = pythagorean_pool(dim);
    // Euclidean targets stay rank one so block norms of atom sums remain
    // rational; the other exponents exercise genuine multi-term densities.
    let term_count = if p == NormExponent::Two { 1 } else { rng.random_range(1..=3usize) };
    let shared_ratio = pick(rng, &ratio_pool());
    let mut terms = Vec::with_capacity(term_count);
    for _ in 0..term_count {
        let mut profile = random_sequence(rng, &signed_value_pool(), false);
        if !profile.has_zero_tail() && profile.tail_ratio() != &shared_ratio {
            profile = GeometricSequence::new(
                profile.exceptional().clone(),
                profile.tail_start(),
                profile.tail_coeff().clone(),
                shared_ratio.clone(),
            )
            .expect("replacing the ratio keeps the representation valid");
        }
        let direction =
            FiniteDimVector::new(space, pick(rng, &directions)).expect("pool matches dimension");
        terms.push((profile, direction));
    }
    VectorFunction::Rank(
        RankDecomposedFunction::new(space, terms).expect("profiles share one ratio"),
    )
}

pub fn random_density(rng: &mut ChaCha8Rng, allow_c0: bool) -> VectorFunction {
    if allow_c0 && rng.random_range(0..3usize) == 0 {
        VectorFunction::Diagonal(DiagonalFunction::new(random_sequence(
            rng,
            &signed_value_pool(),
            false,
        )))
    } else {
        random_rank_density(rng)
    }
}

pub fn random_finite_set(rng: &mut ChaCha8Rng, max_size: usize) -> RepresentableSet {
    let size = rng.random_range(0..=max_size);
    let mut elements = std::collections::BTreeSet::new();
    for _ in 0..size {
        elements.insert(rng.random_range(0..10u64));
    }
    RepresentableSet::Finite(elements)
}

pub fn random_set(rng: &mut ChaCha8Rng, max_finite: usize) -> RepresentableSet {
    match rng.random_range(0..4usize) {
        0 => RepresentableSet::all(),
        1 => {
            let excluded = random_finite_set(rng, 4);
            excluded.complement()
        }
        _ => random_finite_set(rng, max_finite),
    }
}

/// Options shaping a random scenario.
#[derive(Debug, Clone)]
pub struct CorpusOptions {
    pub allow_c0: bool,
    /// Retry until the density measure exists (space valid, locally Pettis).
    pub require_density_measure: bool,
    /// Retry until the density is locally Bochner integrable.
    pub require_locally_bochner: bool,
    /// Largest finite set size to include.
    pub max_finite_set: usize,
    pub multipliers: usize,
    pub checks: Vec<CheckName>,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            allow_c0: true,
            require_density_measure: false,
            require_locally_bochner: false,
            max_finite_set: 5,
            multipliers: 2,
            checks: CheckName::ALL.to_vec(),
        }
    }
}

/// Draws one scenario; retries internally until the structural requirements
/// in `opts` hold, so the output distribution is conditional but the draw
/// stays deterministic in the rng state.
pub fn random_scenario(rng: &mut ChaCha8Rng, opts: &CorpusOptions) -> Scenario {
    loop {
        let space = random_space(rng);
        let f = random_density(rng, opts.allow_c0);
        if opts.require_density_measure || opts.require_locally_bochner {
            match crate::integration::locally_integrable(&f, &space) {
                Ok(local) => {
                    if opts.require_density_measure && !local.locally_pettis {
                        continue;
                    }
                    if opts.require_locally_bochner && !local.locally_bochner {
                        continue;
                    }
                }
                Err(_) => continue,
            }
        }
        let mut sets = vec![RepresentableSet::empty()];
        sets.push(random_finite_set(rng, opts.max_finite_set));
        sets.push(random_set(rng, opts.max_finite_set));
        let multipliers = (0..opts.multipliers)
            .map(|_| random_sequence(rng, &signed_value_pool(), false))
            .collect::<Vec<_>>();
        return Scenario::from_parts("", &space, &f, &multipliers, &sets, &opts.checks);
    }
}

/// A rational point of the dual unit ball of the given target space; exact
/// membership is guaranteed by construction.
pub fn sample_dual(rng: &mut ChaCha8Rng, space: FiniteDimSpace) -> FiniteDimVector {
    let dual = space.dual();
    let numerators: Vec<i64> = (0..dual.dim).map(|_| rng.random_range(-3..=3i64)).collect();
    let coords = match dual.p {
        NormExponent::Infinity => {
            // Entries in [-1, 1].
            numerators.iter().map(|&n| rational(n, 3)).collect()
        }
        NormExponent::One => {
            let total: i64 = numerators.iter().map(|n| n.abs()).sum();
            let denom = total.max(1) + rng.random_range(0..=2i64);
            numerators.iter().map(|&n| rational(n, denom)).collect()
        }
        NormExponent::Two => {
            let sum_sq: i64 = numerators.iter().map(|n| n * n).sum();
            let bound = (sum_sq as f64).sqrt().ceil() as i64 + rng.random_range(0..=1i64);
            numerators.iter().map(|&n| rational(n, bound.max(1))).collect()
        }
    };
    FiniteDimVector::new(dual, coords).expect("dimension matches by construction")
}

/// A rational point of the l1 unit ball with finite support inside
/// `[0, horizon)`.
pub fn sample_l1_dual(rng: &mut ChaCha8Rng, horizon: u64) -> GeometricSequence {
    let support = rng.random_range(1..=4usize);
    let mut entries: Vec<(u64, i64)> = Vec::new();
    let mut total = 0i64;
    for _ in 0..support {
        let t = rng.random_range(0..horizon.max(1));
        let n = rng.random_range(-3..=3i64);
        total += n.abs();
        entries.push((t, n));
    }
    let denom = total.max(1) + rng.random_range(0..=2i64);
    let mut acc = GeometricSequence::zero();
    for (t, n) in entries {
        acc = acc
            .try_add(&GeometricSequence::delta(t, rational(n, denom)))
            .expect("zero tails always add");
    }
    acc
}
