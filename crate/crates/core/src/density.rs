//! The vector measure with density `F`: `nu_F(B)` is the Pettis integral of
//! `F` over `B` for every finite-measure set `B`, defined whenever the space
//! is locally determined and `F` is locally Pettis integrable.
//!
//! Variation and semivariation each come with two computation routes that
//! deliberately share no code: the closed-form route (weighted norm series,
//! respectively collapsed sign-pattern maximization) and an oracle route
//! (partition enumeration over finite sets, respectively sampled dual-ball
//! lower bounds in the test suites). The agreements of those routes are the
//! content of the theorems this library exists to exercise, so keeping the
//! routes independent is what makes the checks meaningful.

use serde::Serialize;

use crate::banach::DualMaxValue;
use crate::banach::NormValue;
use crate::error::{Error, Result};
use crate::extended::ExtendedRational;
use crate::functions::VectorFunction;
use crate::integration::{
    absolutely_convergent_integral, locally_integrable, weighted_dual_sup, DualFunctional,
    IntegralValue, LocalIntegrability, SupWitness,
};
use crate::partitions::{blocks_of, RestrictedGrowthStrings};
use crate::sets::RepresentableSet;
use crate::space::AtomicMeasureSpace;

/// Cap on brute-force partition enumeration; Bell(12) is about 4.2 million.
pub const PARTITION_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct DensityMeasure {
    f: VectorFunction,
    space: AtomicMeasureSpace,
    local: LocalIntegrability,
}

/// The winning partition of a brute-force variation run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartitionWitness {
    pub blocks: Vec<Vec<u64>>,
}

impl DensityMeasure {
    /// Builds the measure, checking the standing hypotheses: the space must
    /// be locally determined and the density locally Pettis integrable.
    pub fn new(f: VectorFunction, space: AtomicMeasureSpace) -> Result<Self> {
        let local = locally_integrable(&f, &space)?;
        if !local.locally_pettis {
            return Err(Error::NotLocallyPettis);
        }
        Ok(DensityMeasure { f, space, local })
    }

    pub fn density(&self) -> &VectorFunction {
        &self.f
    }

    pub fn space(&self) -> &AtomicMeasureSpace {
        &self.space
    }

    pub fn local(&self) -> LocalIntegrability {
        self.local
    }

    /// `nu_F(B)`, the Pettis integral of the density over `B`; only defined
    /// on the delta-ring of finite-measure sets.
    pub fn evaluate(&self, set: &RepresentableSet) -> Result<IntegralValue> {
        if !self.space.in_sigma_f(set) {
            return Err(Error::NotInSigmaF);
        }
        // Local Pettis integrability of the density makes the restricted
        // series absolutely convergent.
        absolutely_convergent_integral(&self.f, &self.space, set)
    }

    /// The variation over `set` in closed form: the weighted norm series
    /// `sum mu_t ||F(t)||`. Requires a locally Bochner density.
    pub fn variation(&self, set: &RepresentableSet) -> Result<ExtendedRational> {
        if !self.local.locally_bochner {
            return Err(Error::NotLocallyBochner);
        }
        self.space.weights().mul(&self.f.norm_sequence()?).sum(set)
    }

    /// Finiteness of the variation, decidable without evaluating norms.
    pub fn variation_is_finite(&self, set: &RepresentableSet) -> Result<bool> {
        if !self.local.locally_bochner {
            return Err(Error::NotLocallyBochner);
        }
        Ok(crate::integration::bochner_norm_is_finite(&self.f, &self.space, set))
    }

    /// The variation over a finite set by exhaustive partition enumeration:
    /// the supremum over all set partitions of the summed block norms. This is
    /// the defining formula executed literally and serves as the independent
    /// oracle for [`DensityMeasure::variation`]. The first attaining partition
    /// in restricted-growth-string order is returned as witness.
    pub fn variation_bruteforce(
        &self,
        set: &RepresentableSet,
    ) -> Result<(ExtendedRational, PartitionWitness)> {
        let elements: Vec<u64> = match set.elements() {
            Some(e) => e.iter().copied().collect(),
            None => return Err(Error::TooLarge { size: usize::MAX, cap: PARTITION_CAP }),
        };
        if elements.len() > PARTITION_CAP {
            return Err(Error::TooLarge { size: elements.len(), cap: PARTITION_CAP });
        }
        let mut best: Option<(NormValue, PartitionWitness)> = None;
        for rgs in RestrictedGrowthStrings::new(elements.len()) {
            let blocks = blocks_of(&elements, &rgs);
            let mut total = NormValue::zero();
            for block in &blocks {
                let value = self.evaluate(&RepresentableSet::finite(block.iter().copied()))?;
                total = total.try_add(&block_norm(&value))?;
            }
            let improves = match &best {
                None => true,
                Some((current, _)) => total > *current,
            };
            if improves {
                best = Some((total, PartitionWitness { blocks }));
            }
        }
        let (value, witness) = best.expect("every set has at least one partition");
        Ok((value.to_extended()?, witness))
    }

    /// The semivariation over `set`: the supremum over the dual unit ball of
    /// `integral over set of |<F, x*>| dmu`, computed exactly by sign-pattern
    /// maximization with the geometric tail collapsed into a single term (for
    /// the diagonal family, by the pointwise sup that the signed coordinate
    /// functionals realize).
    pub fn semivariation(&self, set: &RepresentableSet) -> Result<ExtendedRational> {
        self.semivariation_with_witness(set).map(|(v, _)| v)
    }

    pub fn semivariation_with_witness(
        &self,
        set: &RepresentableSet,
    ) -> Result<(ExtendedRational, SupWitness)> {
        let (value, witness) = weighted_dual_sup(&self.f, &self.space, None, set)?;
        Ok((value.to_extended()?, witness))
    }

    fn semivariation_is_zero(&self, set: &RepresentableSet) -> bool {
        let (value, _) = weighted_dual_sup(&self.f, &self.space, None, set)
            .expect("weights are nonnegative and the space validated");
        value.is_zero()
    }

    /// Is `nu_F` of bounded semivariation on the whole space?
    pub fn bounded(&self) -> bool {
        let (value, _) = weighted_dual_sup(&self.f, &self.space, None, &RepresentableSet::all())
            .expect("weights are nonnegative and the space validated");
        !matches!(value, DualMaxValue::Infinite)
    }

    /// Strong additivity: `nu_F(B_n) -> 0` along every disjoint sequence.
    ///
    /// A finite-dimensional target contains no copy of c0, so there strong
    /// additivity is equivalent to boundedness and is decided that way. On the
    /// diagonal family `nu_F({t}) = mu_t s(t) e_t`, and vanishing of
    /// `mu_t s(t)` is both necessary (take the singletons) and sufficient
    /// (block sums of a c0-tending diagonal profile tend to zero in sup norm).
    pub fn strongly_additive(&self) -> bool {
        match &self.f {
            VectorFunction::Rank(_) => self.bounded(),
            VectorFunction::Diagonal(f) => {
                self.space.weights().mul(f.entries()).vanishes_at_infinity()
            }
        }
    }

    /// Is `set` null for the density measure? Decided directly from the atoms
    /// (`mu_t F(t) = 0` on the set) and cross-checked against the vanishing of
    /// the semivariation; the two must agree, being two readings of one
    /// definition.
    pub fn is_nu_null(&self, set: &RepresentableSet) -> bool {
        let direct = self.support().is_disjoint(set);
        let via_semivariation = self.semivariation_is_zero(set);
        assert_eq!(
            direct, via_semivariation,
            "atom support and semivariation disagree on nullity of {set}"
        );
        direct
    }

    /// Atoms where the measure actually charges: positive mass and nonzero
    /// density value.
    pub fn support(&self) -> RepresentableSet {
        self.space.positive_support().intersection(&self.f.support())
    }

    /// The scalar component `<nu_F, x*>`.
    pub fn scalar_component(&self, xstar: DualFunctional) -> Result<ScalarComponentMeasure<'_>> {
        match (&self.f, &xstar) {
            (VectorFunction::Rank(f), DualFunctional::FiniteDim(x)) => {
                if x.space() != f.space().dual() {
                    return Err(Error::DualSpaceMismatch);
                }
            }
            (VectorFunction::Diagonal(_), DualFunctional::L1(x)) => {
                let l1 = x.abs().sum(&RepresentableSet::all())?;
                if !l1.is_finite() {
                    return Err(Error::NotL1Dual(l1.to_string()));
                }
            }
            _ => return Err(Error::DualSpaceMismatch),
        }
        Ok(ScalarComponentMeasure { parent: self, xstar })
    }
}

fn block_norm(value: &IntegralValue) -> NormValue {
    match value {
        IntegralValue::FiniteDim(v) => v.norm(),
        IntegralValue::C0(v) => match v.sup_norm() {
            ExtendedRational::Finite(r) => NormValue::Rational(r),
            ExtendedRational::Infinite => {
                unreachable!("finite blocks of a diagonal vector have finite sup norm")
            }
        },
    }
}

/// The scalar measure `B -> <nu_F(B), x*>` together with its variation.
#[derive(Debug, Clone)]
pub struct ScalarComponentMeasure<'a> {
    parent: &'a DensityMeasure,
    xstar: DualFunctional,
}

impl ScalarComponentMeasure<'_> {
    pub fn functional(&self) -> &DualFunctional {
        &self.xstar
    }

    /// `<nu_F(B), x*>` computed on the scalar side, as the series of
    /// `mu_t <F(t), x*>` over `B`.
    pub fn evaluate(&self, set: &RepresentableSet) -> Result<crate::rational::Rational> {
        if !self.parent.space.in_sigma_f(set) {
            return Err(Error::NotInSigmaF);
        }
        let profile = self.xstar.pair_function(&self.parent.f)?;
        self.parent.space.weights().mul(&profile).sum_signed(set)
    }

    /// The variation of the scalar component: `integral of |<F, x*>| dmu`.
    pub fn variation(&self, set: &RepresentableSet) -> Result<ExtendedRational> {
        let profile = self.xstar.pair_function(&self.parent.f)?;
        self.parent.space.weights().mul(&profile.abs()).sum(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::banach::{FiniteDimSpace, FiniteDimVector, NormExponent};
    use crate::functions::{spike_profile, DiagonalFunction, RankDecomposedFunction};
    use crate::rational::{integer, rational};
    use crate::sequence::GeometricSequence;

    fn counting() -> AtomicMeasureSpace {
        AtomicMeasureSpace::counting()
    }

    /// Two atoms: F(0) = (1, 0), F(1) = (0, 2), zero elsewhere.
    fn two_atom_density(p: NormExponent) -> VectorFunction {
        let space = FiniteDimSpace::new(2, p);
        VectorFunction::Rank(
            RankDecomposedFunction::new(
                space,
                vec![
                    (
                        GeometricSequence::delta(0, integer(1)),
                        FiniteDimVector::basis(space, 0),
                    ),
                    (
                        GeometricSequence::delta(1, integer(2)),
                        FiniteDimVector::basis(space, 1),
                    ),
                ],
            )
            .unwrap(),
        )
    }

    fn two_atom_measure(p: NormExponent) -> DensityMeasure {
        DensityMeasure::new(two_atom_density(p), counting()).unwrap()
    }

    fn halving_rank_one() -> DensityMeasure {
        let space = FiniteDimSpace::new(2, NormExponent::Two);
        let f = VectorFunction::rank_one(
            GeometricSequence::geometric(integer(1), rational(1, 2)).unwrap(),
            FiniteDimVector::new(space, vec![integer(3), integer(4)]).unwrap(),
        );
        DensityMeasure::new(f, counting()).unwrap()
    }

    #[test]
    fn measure_values() {
        let nu = two_atom_measure(NormExponent::Infinity);
        let value = nu.evaluate(&RepresentableSet::finite([0, 1])).unwrap();
        let expected = FiniteDimVector::new(
            FiniteDimSpace::new(2, NormExponent::Infinity),
            vec![integer(1), integer(2)],
        )
        .unwrap();
        assert_eq!(value, IntegralValue::FiniteDim(expected));
        assert!(nu.evaluate(&RepresentableSet::empty()).unwrap().is_zero());
        assert!(matches!(
            nu.evaluate(&RepresentableSet::all()),
            Err(Error::NotInSigmaF)
        ));
    }

    #[test]
    fn rank_one_measure_is_scalar_integral_times_direction() {
        let nu = halving_rank_one();
        let b = RepresentableSet::finite([0, 1, 2]);
        // (1 + 1/2 + 1/4) * (3, 4) = (21/4, 7).
        let value = nu.evaluate(&b).unwrap();
        let expected = FiniteDimVector::new(
            FiniteDimSpace::new(2, NormExponent::Two),
            vec![rational(21, 4), integer(7)],
        )
        .unwrap();
        assert_eq!(value, IntegralValue::FiniteDim(expected));
    }

    #[test]
    fn variation_closed_form_and_bruteforce_agree() {
        let nu = two_atom_measure(NormExponent::Infinity);
        let set = RepresentableSet::finite([0, 1]);
        assert_eq!(nu.variation(&set).unwrap(), ExtendedRational::from_int(3));
        let (brute, witness) = nu.variation_bruteforce(&set).unwrap();
        assert_eq!(brute, ExtendedRational::from_int(3));
        // The coarse partition gives ||(1,2)||_inf = 2; the split gives 1 + 2
        // = 3 and is the first attaining one.
        assert_eq!(witness.blocks, vec![vec![0], vec![1]]);
    }

    #[test]
    fn variation_edge_cases() {
        let nu = two_atom_measure(NormExponent::Infinity);
        assert_eq!(nu.variation(&RepresentableSet::empty()).unwrap(), ExtendedRational::zero());
        let (brute, _) = nu.variation_bruteforce(&RepresentableSet::empty()).unwrap();
        assert_eq!(brute, ExtendedRational::zero());
        // Singleton: the only partition is the singleton block.
        let (single, w) = nu.variation_bruteforce(&RepresentableSet::singleton(1)).unwrap();
        assert_eq!(single, ExtendedRational::from_int(2));
        assert_eq!(w.blocks, vec![vec![1]]);
        assert!(matches!(
            nu.variation_bruteforce(&RepresentableSet::all()),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            nu.variation_bruteforce(&RepresentableSet::range(0, 13)),
            Err(Error::TooLarge { size: 13, .. })
        ));
    }

    #[test]
    fn constant_rank_one_density_has_infinite_variation() {
        let space = FiniteDimSpace::new(2, NormExponent::Infinity);
        let f = VectorFunction::rank_one(
            GeometricSequence::constant(integer(1)),
            FiniteDimVector::new(space, vec![integer(1), integer(1)]).unwrap(),
        );
        let nu = DensityMeasure::new(f, counting()).unwrap();
        assert_eq!(nu.variation(&RepresentableSet::all()).unwrap(), ExtendedRational::Infinite);
        assert_eq!(nu.semivariation(&RepresentableSet::all()).unwrap(), ExtendedRational::Infinite);
        assert!(!nu.bounded());
        assert!(!nu.strongly_additive());
    }

    #[test]
    fn semivariation_against_variation() {
        let nu_sup = two_atom_measure(NormExponent::Infinity);
        let set = RepresentableSet::finite([0, 1]);
        // Sign patterns of (±1, ±2): sup norm 2 < variation 3.
        assert_eq!(nu_sup.semivariation(&set).unwrap(), ExtendedRational::from_int(2));
        assert_eq!(nu_sup.variation(&set).unwrap(), ExtendedRational::from_int(3));
        // In the 1-norm the same data has coinciding semivariation and variation.
        let nu_one = two_atom_measure(NormExponent::One);
        assert_eq!(nu_one.semivariation(&set).unwrap(), ExtendedRational::from_int(3));
    }

    #[test]
    fn rank_one_semivariation_equals_variation() {
        let nu = halving_rank_one();
        for set in [
            RepresentableSet::all(),
            RepresentableSet::finite([0, 2, 5]),
            RepresentableSet::cofinite([1]),
        ] {
            let sv = nu.semivariation(&set).unwrap();
            let var = nu.variation(&set).unwrap();
            assert_eq!(sv, var);
        }
        assert_eq!(
            nu.semivariation(&RepresentableSet::all()).unwrap(),
            ExtendedRational::from_int(10)
        );
        assert!(nu.bounded());
        assert!(nu.strongly_additive());
    }

    #[test]
    fn scalar_components() {
        let nu = two_atom_measure(NormExponent::Infinity);
        let dual = FiniteDimSpace::new(2, NormExponent::One);
        let comp = nu
            .scalar_component(DualFunctional::FiniteDim(FiniteDimVector::basis(dual, 1)))
            .unwrap();
        let set = RepresentableSet::finite([0, 1]);
        assert_eq!(comp.evaluate(&set).unwrap(), integer(2));
        assert_eq!(comp.variation(&set).unwrap(), ExtendedRational::from_int(2));
        let zero = nu
            .scalar_component(DualFunctional::FiniteDim(FiniteDimVector::zero(dual)))
            .unwrap();
        assert_eq!(zero.variation(&set).unwrap(), ExtendedRational::zero());
        // Wrong dual exponent is rejected.
        let bad = FiniteDimVector::basis(FiniteDimSpace::new(2, NormExponent::Infinity), 0);
        assert!(nu.scalar_component(DualFunctional::FiniteDim(bad)).is_err());
    }

    #[test]
    fn nullity_and_support() {
        // Weight zero at atom 5; density zero at atom 2.
        let weights = GeometricSequence::constant(integer(1))
            .mul(&GeometricSequence::indicator(&RepresentableSet::cofinite([5])));
        let space = FiniteDimSpace::new(2, NormExponent::Infinity);
        let f = VectorFunction::rank_one(
            GeometricSequence::constant(integer(1))
                .mul(&GeometricSequence::indicator(&RepresentableSet::cofinite([2]))),
            FiniteDimVector::basis(space, 0),
        );
        let nu = DensityMeasure::new(f, AtomicMeasureSpace::new(weights).unwrap()).unwrap();
        // mu-null implies nu-null.
        assert!(nu.space().is_mu_null(&RepresentableSet::finite([5])));
        assert!(nu.is_nu_null(&RepresentableSet::finite([5])));
        // nu-null strictly larger: atom 2 has positive mass but zero density.
        assert!(nu.is_nu_null(&RepresentableSet::finite([2, 5])));
        assert!(!nu.space().is_mu_null(&RepresentableSet::finite([2])));
        assert!(!nu.is_nu_null(&RepresentableSet::finite([0])));
        assert_eq!(nu.support(), RepresentableSet::cofinite([2, 5]));
    }

    #[test]
    fn diagonal_ones_bounded_but_not_strongly_additive() {
        let f = VectorFunction::Diagonal(DiagonalFunction::new(GeometricSequence::constant(
            integer(1),
        )));
        let nu = DensityMeasure::new(f, counting()).unwrap();
        assert_eq!(nu.semivariation(&RepresentableSet::all()).unwrap(), ExtendedRational::from_int(1));
        assert!(nu.bounded());
        assert!(!nu.strongly_additive());
        // Every singleton value has sup norm one.
        let v = nu.evaluate(&RepresentableSet::singleton(7)).unwrap();
        assert_eq!(v.as_c0().unwrap().sup_norm(), ExtendedRational::from_int(1));
    }

    #[test]
    fn diagonal_geometric_is_strongly_additive() {
        let f = VectorFunction::Diagonal(DiagonalFunction::new(
            GeometricSequence::geometric(integer(1), rational(1, 2)).unwrap(),
        ));
        let nu = DensityMeasure::new(f, counting()).unwrap();
        assert!(nu.bounded());
        assert!(nu.strongly_additive());
    }

    #[test]
    fn zero_density_measure_is_trivial() {
        let space = FiniteDimSpace::new(2, NormExponent::One);
        let f = VectorFunction::Rank(RankDecomposedFunction::zero(space));
        let nu = DensityMeasure::new(f, counting()).unwrap();
        assert!(nu.evaluate(&RepresentableSet::finite([0, 4])).unwrap().is_zero());
        assert_eq!(nu.variation(&RepresentableSet::all()).unwrap(), ExtendedRational::zero());
        assert_eq!(nu.semivariation(&RepresentableSet::all()).unwrap(), ExtendedRational::zero());
        assert!(nu.bounded());
        assert!(nu.strongly_additive());
        assert!(nu.is_nu_null(&RepresentableSet::all()));
    }

    #[test]
    fn spiky_brute_force_supremum() {
        // Three atoms with mixed signs in the 1-norm, where cancellation makes
        // coarse partitions strictly worse.
        let space = FiniteDimSpace::new(2, NormExponent::One);
        let f = VectorFunction::Rank(
            RankDecomposedFunction::new(
                space,
                vec![
                    (spike_profile(&[(0, integer(1)), (2, integer(-1))]), FiniteDimVector::basis(space, 0)),
                    (spike_profile(&[(1, integer(1))]), FiniteDimVector::basis(space, 1)),
                ],
            )
            .unwrap(),
        );
        let nu = DensityMeasure::new(f, counting()).unwrap();
        let set = RepresentableSet::finite([0, 1, 2]);
        let (brute, _) = nu.variation_bruteforce(&set).unwrap();
        assert_eq!(brute, nu.variation(&set).unwrap());
        assert_eq!(brute, ExtendedRational::from_int(3));
    }
}
