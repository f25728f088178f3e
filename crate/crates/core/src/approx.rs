//! Floating-point fallback for quantities that leave the rationals.
//!
//! Exact evaluation fails only when a euclidean norm is irrational. The
//! functions here mirror the exact routes but read every norm through f64,
//! keeping all coefficient arithmetic (weights, multipliers, tail masses)
//! exact until the final conversion. Comparisons in this mode use a relative
//! tolerance of 1e-9.

use crate::banach::{FiniteDimVector, NormExponent};
use crate::density::DensityMeasure;
use crate::error::Result;
use crate::extended::ExtendedRational;
use crate::functions::VectorFunction;
use crate::partitions::{blocks_of, RestrictedGrowthStrings};
use crate::rational::{to_f64, Rational};
use crate::sequence::GeometricSequence;
use crate::sets::RepresentableSet;
use crate::space::AtomicMeasureSpace;

use num_traits::{One, Zero};

pub const TOLERANCE: f64 = 1e-9;

pub fn close(a: f64, b: f64) -> bool {
    if a.is_infinite() || b.is_infinite() {
        return a == b;
    }
    (a - b).abs() <= TOLERANCE * a.abs().max(b.abs()).max(1.0)
}

pub fn norm_f64(v: &FiniteDimVector) -> f64 {
    let coords: Vec<f64> = v.coords().iter().map(to_f64).collect();
    norm_f64_raw(&coords, v.space().p)
}

fn norm_f64_raw(coords: &[f64], p: NormExponent) -> f64 {
    match p {
        NormExponent::One => coords.iter().map(|x| x.abs()).sum(),
        NormExponent::Infinity => coords.iter().map(|x| x.abs()).fold(0.0, f64::max),
        NormExponent::Two => coords.iter().map(|x| x * x).sum::<f64>().sqrt(),
    }
}

fn ext_f64(value: &ExtendedRational) -> f64 {
    value.to_f64()
}

/// `sum over set of |extra_t| mu_t ||F(t)||` with norms in f64 and all mass
/// bookkeeping exact.
pub fn weighted_norm_sum_f64(
    f: &VectorFunction,
    space: &AtomicMeasureSpace,
    extra: Option<&GeometricSequence>,
    set: &RepresentableSet,
) -> Result<f64> {
    if !crate::integration::weighted_norm_sum_is_finite(f, space, extra, set) {
        return Ok(f64::INFINITY);
    }
    let coeff = match extra {
        Some(g) => space.weights().mul(&g.abs()),
        None => space.weights().clone(),
    };
    match f {
        VectorFunction::Diagonal(d) => {
            let exact = coeff.mul(&d.norm_sequence()).sum(set)?;
            Ok(ext_f64(&exact))
        }
        VectorFunction::Rank(r) => {
            let (head, tail_set) = set.split_at(r.tail_start());
            let mut total = 0.0;
            for t in head {
                total += ext_f64(&ExtendedRational::Finite(coeff.value(t))) * norm_f64(&r.evaluate(t));
            }
            let powers = GeometricSequence::geometric(Rational::one(), r.tail_ratio().clone())?;
            let tail_mass = coeff.mul(&powers).sum(&tail_set)?;
            total += ext_f64(&tail_mass) * norm_f64(r.tail_vector());
            Ok(total)
        }
    }
}

/// `sup over the dual ball of sum |extra_t| mu_t |<F(t), x*>|` with the sign
/// enumeration run in f64.
pub fn weighted_dual_sup_f64(
    f: &VectorFunction,
    space: &AtomicMeasureSpace,
    extra: Option<&GeometricSequence>,
    set: &RepresentableSet,
) -> Result<f64> {
    match f {
        VectorFunction::Diagonal(_) => {
            // Diagonal suprema never leave the rationals.
            let (value, _) = crate::integration::weighted_dual_sup(f, space, extra, set)?;
            Ok(match value.to_extended() {
                Ok(v) => ext_f64(&v),
                Err(_) => unreachable!("diagonal suprema are rational"),
            })
        }
        VectorFunction::Rank(r) => {
            let coeff = match extra {
                Some(g) => space.weights().mul(&g.abs()),
                None => space.weights().clone(),
            };
            for &t in space.infinite_atoms() {
                if set.contains(t) && !coeff.value(t).is_zero() && !r.evaluate(t).is_zero() {
                    return Ok(f64::INFINITY);
                }
            }
            let set =
                set.difference(&RepresentableSet::finite(space.infinite_atoms().iter().copied()));
            let (head, tail_set) = set.split_at(r.tail_start());
            let mut terms: Vec<(f64, Vec<f64>)> = head
                .into_iter()
                .map(|t| {
                    (to_f64(&coeff.value(t)), r.evaluate(t).coords().iter().map(to_f64).collect())
                })
                .collect();
            if !tail_set.is_empty() && !r.tail_vector().is_zero() {
                let powers = GeometricSequence::geometric(Rational::one(), r.tail_ratio().clone())?;
                let mass = coeff.mul(&powers).sum(&tail_set)?;
                if !mass.is_finite() {
                    return Ok(f64::INFINITY);
                }
                terms.push((ext_f64(&mass), r.tail_vector().coords().iter().map(to_f64).collect()));
            }
            terms.retain(|(c, v)| *c != 0.0 && v.iter().any(|x| *x != 0.0));
            if terms.is_empty() {
                return Ok(0.0);
            }
            let m = terms.len();
            let dim = terms[0].1.len();
            let mut best = 0.0f64;
            for mask in 0u64..(1u64 << (m - 1)) {
                let mut combo = vec![0.0; dim];
                for (i, (c, v)) in terms.iter().enumerate() {
                    let sign = if i == 0 || (mask >> (m - 1 - i)) & 1 == 0 { 1.0 } else { -1.0 };
                    for (acc, x) in combo.iter_mut().zip(v) {
                        *acc += sign * c * x;
                    }
                }
                best = best.max(norm_f64_raw(&combo, r.space().p));
            }
            Ok(best)
        }
    }
}

/// Brute-force variation over a finite set with norms in f64.
pub fn variation_bruteforce_f64(nu: &DensityMeasure, set: &RepresentableSet) -> Result<f64> {
    let elements: Vec<u64> = set.elements().expect("brute force needs a finite set").iter().copied().collect();
    let mut best = 0.0f64;
    for rgs in RestrictedGrowthStrings::new(elements.len()) {
        let mut total = 0.0;
        for block in blocks_of(&elements, &rgs) {
            let value = nu.evaluate(&RepresentableSet::finite(block))?;
            total += match &value {
                crate::integration::IntegralValue::FiniteDim(v) => norm_f64(v),
                crate::integration::IntegralValue::C0(v) => ext_f64(&v.sup_norm()),
            };
        }
        best = best.max(total);
    }
    Ok(best)
}
