//! Bochner, Dunford and Pettis integrals against an atomic measure, together
//! with the local variants quantified over the finite-measure delta-ring.
//!
//! Atomicity turns every integral into a series with an exact closed form:
//! a finite sum over the exceptional region plus a geometric tail. The three
//! global integrability notions are decided through separate routes and the
//! finite-dimensional collapse (all three coincide there because coordinate
//! functionals dominate the norm) is asserted rather than assumed, so the
//! independent paths cross-check each other.
//!
//! The local predicates quantify over every finite-measure subset, not just
//! representable ones, and are discharged analytically: a finite set never
//! obstructs, and an infinite obstruction exists exactly when infinite sets of
//! finite measure exist (weight tail summable) while the weighted norm profile
//! `mu_t * ||F(t)||` fails to decay. With geometric tails both the summability
//! and the vanishing of that profile over infinite sets reduce to the same
//! ratio test, so the worst case is the full tail and the quantifier
//! disappears.

use serde::Serialize;

use crate::banach::{
    dual_ball_abs_max, C0DiagonalVector, DualMaxValue, DualMaxWitness, FiniteDimVector,
};
use crate::error::{Error, Result};
use crate::extended::ExtendedRational;
use crate::functions::VectorFunction;
use crate::rational::{Rational, format_rational};
use crate::sequence::GeometricSequence;
use crate::sets::RepresentableSet;
use crate::space::AtomicMeasureSpace;

use num_traits::{One, Zero};

/// A computed integral: a vector of the finite-dimensional target or of the
/// diagonal c0 family.
#[derive(Debug, Clone, PartialEq)]
pub enum IntegralValue {
    FiniteDim(FiniteDimVector),
    C0(C0DiagonalVector),
}

impl IntegralValue {
    pub fn is_zero(&self) -> bool {
        match self {
            IntegralValue::FiniteDim(v) => v.is_zero(),
            IntegralValue::C0(v) => v.is_zero(),
        }
    }

    pub fn add(&self, other: &IntegralValue) -> Result<IntegralValue> {
        match (self, other) {
            (IntegralValue::FiniteDim(a), IntegralValue::FiniteDim(b)) => {
                Ok(IntegralValue::FiniteDim(a.add(b)?))
            }
            (IntegralValue::C0(a), IntegralValue::C0(b)) => Ok(IntegralValue::C0(
                C0DiagonalVector::new(a.entries().try_add(b.entries())?),
            )),
            _ => Err(Error::MixedSpace),
        }
    }

    pub fn as_finite_dim(&self) -> Option<&FiniteDimVector> {
        match self {
            IntegralValue::FiniteDim(v) => Some(v),
            IntegralValue::C0(_) => None,
        }
    }

    pub fn as_c0(&self) -> Option<&C0DiagonalVector> {
        match self {
            IntegralValue::C0(v) => Some(v),
            IntegralValue::FiniteDim(_) => None,
        }
    }

    /// The target-space norm of the value; integral values always have finite
    /// norm, so a diagonal value with unbounded entries is a logic error.
    pub fn norm(&self) -> crate::banach::NormValue {
        match self {
            IntegralValue::FiniteDim(v) => v.norm(),
            IntegralValue::C0(v) => match v.sup_norm() {
                ExtendedRational::Finite(r) => crate::banach::NormValue::Rational(r),
                ExtendedRational::Infinite => {
                    unreachable!("integral values lie in the target space")
                }
            },
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            IntegralValue::FiniteDim(v) => serde_json::Value::Array(
                v.coords().iter().map(|c| serde_json::Value::String(format_rational(c))).collect(),
            ),
            IntegralValue::C0(v) => serde_json::to_value(v.entries()).expect("sequences serialize"),
        }
    }
}

impl Serialize for IntegralValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

/// A functional on the target space: a dual vector in finite dimensions, an
/// l1 sequence against the diagonal c0 family.
#[derive(Debug, Clone, PartialEq)]
pub enum DualFunctional {
    FiniteDim(FiniteDimVector),
    L1(GeometricSequence),
}

impl DualFunctional {
    pub fn pair_integral(&self, value: &IntegralValue) -> Result<Rational> {
        match (value, self) {
            (IntegralValue::FiniteDim(v), DualFunctional::FiniteDim(xstar)) => v.pairing(xstar),
            (IntegralValue::C0(v), DualFunctional::L1(xstar)) => v.pairing(xstar),
            _ => Err(Error::DualSpaceMismatch),
        }
    }

    /// The scalar profile `t -> <F(t), x*>`.
    pub fn pair_function(&self, f: &VectorFunction) -> Result<GeometricSequence> {
        match (f, self) {
            (VectorFunction::Rank(f), DualFunctional::FiniteDim(xstar)) => {
                f.pairing_sequence(xstar)
            }
            (VectorFunction::Diagonal(f), DualFunctional::L1(xstar)) => {
                Ok(f.entries().mul(xstar))
            }
            _ => Err(Error::DualSpaceMismatch),
        }
    }
}

/// Candidate Pettis integral that escapes the target space; the recorded set
/// realizes the escape.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PettisEscape {
    pub set: RepresentableSet,
    pub candidate: GeometricSequence,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegrabilityVerdict {
    pub bochner: bool,
    pub pettis: bool,
    pub dunford: bool,
    pub dunford_norm: ExtendedRational,
    pub bochner_norm: ExtendedRational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PettisEscape>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocalIntegrability {
    pub locally_pettis: bool,
    pub locally_bochner: bool,
}

/// Attaining data for a weighted dual-ball supremum.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SupWitness {
    /// Sign pattern over the collapsed terms of a finite-dimensional sup.
    SignPattern(DualMaxWitness),
    /// Atom index attaining a diagonal sup.
    Atom { index: u64 },
    /// The supremum is infinite or otherwise not attained.
    Unattained,
}

/// Removes infinite atoms whose contribution is zero from `set`; signals an
/// infinite integral when some infinite atom carries a nonzero integrand.
/// `extra` is an optional additional scalar factor in the integrand.
fn screen_infinite_atoms(
    f: &VectorFunction,
    space: &AtomicMeasureSpace,
    extra: Option<&GeometricSequence>,
    set: &RepresentableSet,
) -> Option<RepresentableSet> {
    if space.infinite_atoms().is_empty() {
        return Some(set.clone());
    }
    for &t in space.infinite_atoms() {
        if set.contains(t)
            && extra.is_none_or(|g| !g.value(t).is_zero())
            && !function_vanishes_at(f, t)
        {
            return None;
        }
    }
    Some(set.difference(&RepresentableSet::finite(space.infinite_atoms().iter().copied())))
}

fn function_vanishes_at(f: &VectorFunction, t: u64) -> bool {
    match f {
        VectorFunction::Rank(f) => f.evaluate(t).is_zero(),
        VectorFunction::Diagonal(f) => f.scalar(t).is_zero(),
    }
}

/// `integral over set of ||F|| dmu`, exact.
pub fn bochner_norm(
    f: &VectorFunction,
    space: &AtomicMeasureSpace,
    set: &RepresentableSet,
) -> Result<ExtendedRational> {
    let set = match screen_infinite_atoms(f, space, None, set) {
        None => return Ok(ExtendedRational::Infinite),
        Some(s) => s,
    };
    space.weights().mul(&f.norm_sequence()?).sum(&set)
}

/// Finiteness of the norm integral, decidable without evaluating any norm:
/// only whether the tail direction vanishes matters, never its exact length.
pub fn bochner_norm_is_finite(
    f: &VectorFunction,
    space: &AtomicMeasureSpace,
    set: &RepresentableSet,
) -> bool {
    weighted_norm_sum_is_finite(f, space, None, set)
}

/// Finiteness of `sum over set of |extra_t| mu_t ||F(t)||`, norm-free.
pub(crate) fn weighted_norm_sum_is_finite(
    f: &VectorFunction,
    space: &AtomicMeasureSpace,
    extra: Option<&GeometricSequence>,
    set: &RepresentableSet,
) -> bool {
    let set = match screen_infinite_atoms(f, space, extra, set) {
        None => return false,
        Some(s) => s,
    };
    if set.is_finite() {
        return true;
    }
    let (tail_zero, ratio) = function_tail(f);
    let weights = match extra {
        Some(g) => space.weights().mul(&g.abs()),
        None => space.weights().clone(),
    };
    tail_zero || weights.has_zero_tail() || weights.tail_ratio() * &ratio < Rational::one()
}

/// Norm-free integrability booleans `(dunford, pettis, bochner)`; the value
/// route in [`pettis_decide`] must agree with these.
pub fn integrability_flags(
    f: &VectorFunction,
    space: &AtomicMeasureSpace,
) -> Result<(bool, bool, bool)> {
    let (sup, _) = weighted_dual_sup(f, space, None, &RepresentableSet::all())?;
    let dunford = !matches!(sup, DualMaxValue::Infinite);
    let bochner = bochner_norm_is_finite(f, space, &RepresentableSet::all());
    let pettis = match f {
        VectorFunction::Rank(_) => {
            assert_eq!(
                dunford, bochner,
                "finite-dimensional targets admit no gap between Dunford and Bochner"
            );
            dunford
        }
        VectorFunction::Diagonal(f) => {
            dunford && space.weights().mul(f.entries()).vanishes_at_infinity()
        }
    };
    Ok((dunford, pettis, bochner))
}

/// Tail data of the norm profile: whether the eventual values vanish, and the
/// geometric ratio they decay or grow with.
fn function_tail(f: &VectorFunction) -> (bool, Rational) {
    match f {
        VectorFunction::Rank(f) => (f.tail_vector().is_zero(), f.tail_ratio().clone()),
        VectorFunction::Diagonal(f) => {
            (f.entries().has_zero_tail(), f.entries().tail_ratio().clone())
        }
    }
}

/// The Bochner integral over `set`, defined when the norm integral is finite.
pub fn bochner_integral(
    f: &VectorFunction,
    space: &AtomicMeasureSpace,
    set: &RepresentableSet,
) -> Result<IntegralValue> {
    if !bochner_norm_is_finite(f, space, set) {
        return Err(Error::NotBochnerIntegrable { norm: "inf".to_string() });
    }
    let set = screen_infinite_atoms(f, space, None, set)
        .expect("screened above: infinite atoms contribute nothing");
    absolutely_convergent_integral(f, space, &set)
}

/// Termwise integral `sum_{t in set} mu_t F(t)`; callers must have
/// established absolute convergence.
pub(crate) fn absolutely_convergent_integral(
    f: &VectorFunction,
    space: &AtomicMeasureSpace,
    set: &RepresentableSet,
) -> Result<IntegralValue> {
    match f {
        VectorFunction::Rank(f) => {
            let mut coords = Vec::with_capacity(f.space().dim);
            for i in 0..f.space().dim {
                let integrand = space.weights().mul(&f.coordinate_sequence(i));
                coords.push(integrand.sum_signed(set)?);
            }
            Ok(IntegralValue::FiniteDim(FiniteDimVector::new(f.space(), coords)?))
        }
        VectorFunction::Diagonal(f) => {
            let product = space.weights().mul(f.entries());
            Ok(IntegralValue::C0(C0DiagonalVector::new(product.restrict(set))))
        }
    }
}

/// The supremum over the dual unit ball of
/// `sum_{t in set} coeff_t |<F(t), x*>|` where `coeff = mu * |extra|`.
///
/// In finite dimensions the atoms below the tail start enter as individual
/// terms and the whole tail collapses into one term carrying the tail vector,
/// because `F(t) = r^t w` there and `r^t >= 0` factors out of the absolute
/// pairing. For the diagonal family the extreme points of the dual ball are
/// the signed coordinate functionals, so the supremum is a pointwise sup.
pub(crate) fn weighted_dual_sup(
    f: &VectorFunction,
    space: &AtomicMeasureSpace,
    extra: Option<&GeometricSequence>,
    set: &RepresentableSet,
) -> Result<(DualMaxValue, SupWitness)> {
    let set = match screen_infinite_atoms(f, space, extra, set) {
        None => return Ok((DualMaxValue::Infinite, SupWitness::Unattained)),
        Some(s) => s,
    };
    let coeff = match extra {
        Some(g) => space.weights().mul(&g.abs()),
        None => space.weights().clone(),
    };
    match f {
        VectorFunction::Rank(f) => {
            let (head, tail_set) = set.split_at(f.tail_start());
            let mut terms: Vec<(ExtendedRational, FiniteDimVector)> = head
                .into_iter()
                .map(|t| (ExtendedRational::Finite(coeff.value(t)), f.evaluate(t)))
                .collect();
            if !tail_set.is_empty() && !f.tail_vector().is_zero() {
                let powers = GeometricSequence::geometric(Rational::one(), f.tail_ratio().clone())?;
                let tail_mass = coeff.mul(&powers).sum(&tail_set)?;
                terms.push((tail_mass, f.tail_vector().clone()));
            }
            let (value, witness) = dual_ball_abs_max(&terms)?;
            let witness = match witness {
                Some(w) => SupWitness::SignPattern(w),
                None => SupWitness::Unattained,
            };
            Ok((value, witness))
        }
        VectorFunction::Diagonal(f) => {
            let profile = coeff.mul(&f.entries().abs());
            let (value, argmax) = profile.sup_argmax(&set)?;
            let witness = match argmax {
                Some(t) => SupWitness::Atom { index: t },
                None => SupWitness::Unattained,
            };
            match value {
                ExtendedRational::Finite(v) => {
                    Ok((DualMaxValue::Finite(crate::banach::NormValue::Rational(v)), witness))
                }
                ExtendedRational::Infinite => Ok((DualMaxValue::Infinite, SupWitness::Unattained)),
            }
        }
    }
}

/// The Dunford norm `sup over the dual ball of the integral of |<F, x*>|`.
pub fn dunford_norm(f: &VectorFunction, space: &AtomicMeasureSpace) -> Result<ExtendedRational> {
    weighted_dual_sup(f, space, None, &RepresentableSet::all())?.0.to_extended()
}

/// Decides Dunford, Pettis and Bochner integrability together, with both
/// norms. In finite dimensions the three verdicts must coincide; that
/// collapse is recomputed from independent routes and asserted.
pub fn pettis_decide(
    f: &VectorFunction,
    space: &AtomicMeasureSpace,
) -> Result<IntegrabilityVerdict> {
    let (dunford, pettis, bochner) = integrability_flags(f, space)?;
    let dn = dunford_norm(f, space)?;
    let bn = bochner_norm(f, space, &RepresentableSet::all())?;
    assert_eq!(dunford, dn.is_finite(), "flag route and value route disagree on Dunford");
    assert_eq!(bochner, bn.is_finite(), "flag route and value route disagree on Bochner");
    let witness = match f {
        VectorFunction::Rank(_) => None,
        VectorFunction::Diagonal(f) => {
            let candidate = space.weights().mul(f.entries());
            (dunford && !pettis).then(|| PettisEscape {
                set: RepresentableSet::all(),
                candidate,
            })
        }
    };
    Ok(IntegrabilityVerdict { bochner, pettis, dunford, dunford_norm: dn, bochner_norm: bn, witness })
}

/// The Pettis integral over `set`.
pub fn pettis_integral(
    f: &VectorFunction,
    space: &AtomicMeasureSpace,
    set: &RepresentableSet,
) -> Result<IntegralValue> {
    let (dunford, pettis, _) = integrability_flags(f, space)?;
    if !dunford {
        return Err(Error::NotDunford { norm: "inf".to_string() });
    }
    if !pettis {
        return Err(Error::NotPettis { set: RepresentableSet::all().to_string() });
    }
    match f {
        VectorFunction::Rank(_) => {
            // The finite-dimensional collapse makes the Pettis and Bochner
            // integrals one and the same vector.
            bochner_integral(f, space, set)
        }
        VectorFunction::Diagonal(f) => {
            let set = screen_infinite_atoms(&VectorFunction::Diagonal(f.clone()), space, None, set)
                .expect("Dunford integrability forces the scalar to vanish on infinite atoms");
            let candidate = space.weights().mul(f.entries()).restrict(&set);
            Ok(IntegralValue::C0(C0DiagonalVector::new(candidate)))
        }
    }
}

/// Local integrability: is the restriction to every finite-measure set
/// integrable in the Pettis, respectively Bochner, sense?
pub fn locally_integrable(
    f: &VectorFunction,
    space: &AtomicMeasureSpace,
) -> Result<LocalIntegrability> {
    if let Some(atom) = space.first_infinite_atom() {
        return Err(Error::NotLocallyDetermined { atom });
    }
    let (tail_zero, ratio) = function_tail(f);
    let weights = space.weights();
    // Finite sets never obstruct. An infinite set of finite measure exists
    // exactly when the weight tail is summable; over any such set both the
    // summability and the vanishing of mu_t ||F(t)|| come down to the product
    // ratio staying below one.
    let locally_bochner = tail_zero
        || weights.has_zero_tail()
        || weights.tail_ratio() >= &Rational::one()
        || weights.tail_ratio() * &ratio < Rational::one();
    Ok(LocalIntegrability { locally_pettis: locally_bochner, locally_bochner })
}
