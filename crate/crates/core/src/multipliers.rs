//! Multipliers against the density measure: the weak, plain, and
//! variation-norm integrable classes, their norms, the integral
//! `integral of g d(nu_F)`, and the multiplication operator `g -> gF` that
//! carries each class isometrically onto a space of integrable densities.
//!
//! Each isometry has two sides computed through disjoint routes. The measure
//! side works from the atom values of `nu_F`: coefficients `mu_t |g(t)|`
//! against the density values `F(t)` (respectively the diagonal atom values),
//! never forming `gF`. The function side multiplies first and then runs the
//! integration module on the product. The equalities of the two sides are the
//! isometry statements themselves, which is exactly why they must not share
//! an evaluation path.
//!
//! Multiplier inputs are normalized by zeroing the atoms the density measure
//! does not charge, which makes well-definedness on the almost-everywhere
//! classes mechanical instead of a bookkeeping concern.

use serde::Serialize;

use crate::density::DensityMeasure;
use crate::error::{Error, Result};
use crate::extended::ExtendedRational;
use crate::functions::VectorFunction;
use crate::integration::{pettis_integral, weighted_dual_sup, DualFunctional, IntegralValue};
use crate::sequence::GeometricSequence;
use crate::sets::RepresentableSet;

/// Membership and norms of one multiplier against one density measure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultiplierVerdict {
    /// Weakly integrable: finite measure-side norm.
    pub in_l1w: bool,
    /// Integrable: the integral lands in the target space.
    pub in_l1: bool,
    /// Integrable against the variation measure.
    pub in_l1_variation: bool,
    /// `sup over the dual ball of integral |g| d|<nu_F, x*>|`.
    pub nu_norm: ExtendedRational,
    /// `integral |g| d|nu_F|`.
    pub variation_norm: ExtendedRational,
    /// `integral g d(nu_F)` over the whole space, when integrable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral: Option<IntegralValue>,
}

/// Both sides of an isometry identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsometryReport {
    pub lhs: ExtendedRational,
    pub rhs: ExtendedRational,
    pub equal: bool,
}

/// One step of the simple-function approximation of a multiplier.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproximationStep {
    pub truncated: GeometricSequence,
    pub defect: ExtendedRational,
}

/// Zeroes `g` on the atoms `nu_F` does not charge, producing the canonical
/// representative of its almost-everywhere class.
pub fn normalize_multiplier(g: &GeometricSequence, nu: &DensityMeasure) -> GeometricSequence {
    g.restrict(&nu.support())
}

/// The multiplier norm `||g||_nu`, computed on the measure side: a dual-ball
/// supremum with coefficients `mu_t |g(t)|` against the density atom values,
/// using the scalar-component variations and never the product `gF`.
pub fn nu_norm(g: &GeometricSequence, nu: &DensityMeasure) -> Result<ExtendedRational> {
    let g = normalize_multiplier(g, nu);
    weighted_dual_sup(nu.density(), nu.space(), Some(&g), &RepresentableSet::all())?
        .0
        .to_extended()
}

/// Weak integrability (finite multiplier norm), decided norm-free.
pub fn in_l1w_flag(g: &GeometricSequence, nu: &DensityMeasure) -> Result<bool> {
    let g = normalize_multiplier(g, nu);
    let (value, _) =
        weighted_dual_sup(nu.density(), nu.space(), Some(&g), &RepresentableSet::all())?;
    Ok(!matches!(value, crate::banach::DualMaxValue::Infinite))
}

/// Integrability against the variation measure, decided norm-free on the
/// measure side.
pub fn in_l1_variation_flag(g: &GeometricSequence, nu: &DensityMeasure) -> Result<bool> {
    let g = normalize_multiplier(g, nu);
    Ok(crate::integration::weighted_norm_sum_is_finite(
        nu.density(),
        nu.space(),
        Some(&g),
        &RepresentableSet::all(),
    ))
}

/// Weak integrability decided on the measure side, and the isometry of the
/// multiplication operator into the Dunford space checked exactly: the
/// multiplier norm must equal the Dunford norm of `gF`.
pub fn mf_isometry_check(g: &GeometricSequence, nu: &DensityMeasure) -> Result<IsometryReport> {
    let lhs = nu_norm(g, nu)?;
    let gf = nu.density().multiply(&normalize_multiplier(g, nu));
    let rhs = crate::integration::dunford_norm(&gf, nu.space())?;
    Ok(IsometryReport { equal: lhs == rhs, lhs, rhs })
}

/// Measure-side decision of plain integrability: weak integrability plus the
/// representability of every set integral by a target vector. In finite
/// dimensions nothing more can fail; for the diagonal family the candidate
/// built from the atom values `g(t) nu_F({t})` has to stay in c0.
pub fn in_l1_flag(g: &GeometricSequence, nu: &DensityMeasure) -> Result<bool> {
    if !in_l1w_flag(g, nu)? {
        return Ok(false);
    }
    match nu.density() {
        VectorFunction::Rank(_) => Ok(true),
        VectorFunction::Diagonal(f) => {
            let g = normalize_multiplier(g, nu);
            let atom_values = nu.space().weights().mul(f.entries());
            Ok(atom_values.mul(&g).vanishes_at_infinity())
        }
    }
}

/// `integral over set of g d(nu_F)`, realized through the product density:
/// the integral equals the Pettis integral of `gF`. The defining duality
/// `<x_A, x*> = integral over A of g d<nu_F, x*>` is re-verified against the
/// canonical functionals of the target space on every call; a failure there
/// would falsify the construction itself, so it panics rather than returns.
pub fn integrate(
    g: &GeometricSequence,
    nu: &DensityMeasure,
    set: &RepresentableSet,
) -> Result<IntegralValue> {
    if !in_l1_flag(g, nu)? {
        return Err(Error::NotNuIntegrable);
    }
    let g = normalize_multiplier(g, nu);
    let gf = nu.density().multiply(&g);
    let value = pettis_integral(&gf, nu.space(), set).map_err(|e| match e {
        Error::NotPettis { .. } | Error::NotDunford { .. } => Error::NotNuIntegrable,
        other => other,
    })?;
    for xstar in canonical_duals(nu.density()) {
        let lhs = xstar.pair_integral(&value)?;
        let profile = xstar.pair_function(nu.density())?;
        let rhs = nu.space().weights().mul(&g).mul(&profile).sum_signed(set)?;
        assert_eq!(
            lhs, rhs,
            "set integral of the multiplier disagrees with its scalar measures"
        );
    }
    Ok(value)
}

/// A deterministic family of norm-one functionals of the target space, used
/// to spot-check duality identities.
pub fn canonical_duals(f: &VectorFunction) -> Vec<DualFunctional> {
    match f {
        VectorFunction::Rank(f) => {
            let dual = f.space().dual();
            (0..dual.dim)
                .map(|i| DualFunctional::FiniteDim(crate::banach::FiniteDimVector::basis(dual, i)))
                .collect()
        }
        VectorFunction::Diagonal(f) => {
            let horizon = f.entries().tail_start() + 3;
            (0..horizon)
                .map(|t| {
                    DualFunctional::L1(GeometricSequence::delta(
                        t,
                        crate::rational::integer(1),
                    ))
                })
                .collect()
        }
    }
}

/// `integral |g| d|nu_F|` on the measure side: the weighted series of
/// `mu_t |g(t)| ||F(t)||`, which is integration against the variation because
/// the variation of a density measure has exactly that atom weight.
pub fn variation_norm(g: &GeometricSequence, nu: &DensityMeasure) -> Result<ExtendedRational> {
    if !nu.local().locally_bochner {
        return Err(Error::NotLocallyBochner);
    }
    let g = normalize_multiplier(g, nu);
    nu.space().weights().mul(&g.abs()).mul(&nu.density().norm_sequence()?).sum(&RepresentableSet::all())
}

/// The variation-norm isometry: `||g||_{|nu_F|}` against the Bochner norm of
/// `gF`, combined with the membership equivalence between the two classes.
pub fn l1_variation_check(g: &GeometricSequence, nu: &DensityMeasure) -> Result<IsometryReport> {
    let lhs = variation_norm(g, nu)?;
    let gf = nu.density().multiply(&normalize_multiplier(g, nu));
    let rhs = crate::integration::bochner_norm(&gf, nu.space(), &RepresentableSet::all())?;
    Ok(IsometryReport { equal: lhs == rhs, lhs, rhs })
}

/// Full verdict for one multiplier: memberships along the chain
/// `L1(|nu_F|) ⊆ L1(nu_F) ⊆ L1_w(nu_F)`, both norms, and the integral when it
/// exists. Memberships are decided on the measure side; the function side
/// (the verdict on `gF`) is what the isometry checks compare them against.
pub fn multiplier_verdict(g: &GeometricSequence, nu: &DensityMeasure) -> Result<MultiplierVerdict> {
    let in_l1w = in_l1w_flag(g, nu)?;
    let in_l1 = in_l1_flag(g, nu)?;
    let nu_norm_value = nu_norm(g, nu)?;
    let (in_l1_variation, variation_norm_value) = if nu.local().locally_bochner {
        let value = variation_norm(g, nu)?;
        (value.is_finite(), value)
    } else {
        // Without local Bochner integrability the variation characterization
        // is unavailable; fall back to the function side for the norm value.
        let gf = nu.density().multiply(&normalize_multiplier(g, nu));
        let value = crate::integration::bochner_norm(&gf, nu.space(), &RepresentableSet::all())?;
        (value.is_finite(), value)
    };
    let integral = if in_l1 { Some(integrate(g, nu, &RepresentableSet::all())?) } else { None };
    Ok(MultiplierVerdict {
        in_l1w,
        in_l1,
        in_l1_variation,
        nu_norm: nu_norm_value,
        variation_norm: variation_norm_value,
        integral,
    })
}

/// Truncation step of the simple-function approximation: `g` restricted to
/// `[0, n)` (a finitely supported, finite-measure-support simple function once
/// all atoms have finite mass), with the defect `||g - g_n||_nu` in closed
/// form. The defect is the norm of the discarded tail, so it is nonincreasing
/// in `n` and converges to zero for every integrable multiplier.
pub fn simple_function_approximation(
    g: &GeometricSequence,
    nu: &DensityMeasure,
    n: u64,
) -> Result<ApproximationStep> {
    if !in_l1_flag(g, nu)? {
        return Err(Error::NotNuIntegrable);
    }
    let g = normalize_multiplier(g, nu);
    let truncated = g.restrict(&RepresentableSet::range(0, n));
    let discarded = g.restrict(&RepresentableSet::from_index(n));
    let defect = nu_norm(&discarded, nu)?;
    Ok(ApproximationStep { truncated, defect })
}
