//! Atomic measure spaces on the naturals.
//!
//! Atom `t` carries mass `weights(t)`, a nonnegative rational; a finite list
//! of atoms may instead carry infinite mass, which destroys semi-finiteness
//! and is kept constructible purely so that the standing hypotheses can be
//! violated on purpose in tests. On the full power set every semi-finite
//! measure is locally determined, so the checked condition is semi-finiteness,
//! which for an atomic measure is exactly "no infinite atom".

use std::collections::BTreeSet;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extended::ExtendedRational;
use crate::rational::Rational;
use crate::sequence::GeometricSequence;
use crate::sets::RepresentableSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomicMeasureSpace {
    weights: GeometricSequence,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    infinite_atoms: BTreeSet<u64>,
}

impl AtomicMeasureSpace {
    pub fn new(weights: GeometricSequence) -> Result<Self> {
        Self::with_infinite_atoms(weights, BTreeSet::new())
    }

    pub fn with_infinite_atoms(
        weights: GeometricSequence,
        infinite_atoms: BTreeSet<u64>,
    ) -> Result<Self> {
        for (&t, v) in weights.exceptional() {
            if v.is_negative() {
                return Err(Error::NegativeWeight { index: t });
            }
        }
        if weights.tail_coeff().is_negative() {
            return Err(Error::NegativeWeight { index: weights.tail_start() });
        }
        Ok(AtomicMeasureSpace { weights, infinite_atoms })
    }

    /// The counting measure: every atom has mass one.
    pub fn counting() -> Self {
        AtomicMeasureSpace::new(GeometricSequence::constant(Rational::one()))
            .expect("unit weights are nonnegative")
    }

    pub fn weights(&self) -> &GeometricSequence {
        &self.weights
    }

    pub fn infinite_atoms(&self) -> &BTreeSet<u64> {
        &self.infinite_atoms
    }

    pub fn atom_mass(&self, t: u64) -> ExtendedRational {
        if self.infinite_atoms.contains(&t) {
            ExtendedRational::Infinite
        } else {
            ExtendedRational::Finite(self.weights.value(t))
        }
    }

    pub fn measure(&self, set: &RepresentableSet) -> ExtendedRational {
        if self.infinite_atoms.iter().any(|&t| set.contains(t)) {
            return ExtendedRational::Infinite;
        }
        self.weights.sum(set).expect("weights are nonnegative by construction")
    }

    /// Membership in the delta-ring of finite-measure sets.
    pub fn in_sigma_f(&self, set: &RepresentableSet) -> bool {
        self.measure(set).is_finite()
    }

    /// Semi-finiteness, which on the power set of the naturals is equivalent
    /// to being locally determined: an atom of infinite mass admits no finite
    /// positive subset, and nothing else can fail.
    pub fn validate_locally_determined(&self) -> bool {
        self.infinite_atoms.is_empty()
    }

    /// The first offending atom when validation fails.
    pub fn first_infinite_atom(&self) -> Option<u64> {
        self.infinite_atoms.iter().next().copied()
    }

    pub fn is_mu_null(&self, set: &RepresentableSet) -> bool {
        if self.infinite_atoms.iter().any(|&t| set.contains(t)) {
            return false;
        }
        self.weights.support().is_disjoint(set)
    }

    /// Atoms of nonzero mass.
    pub fn positive_support(&self) -> RepresentableSet {
        self.weights
            .support()
            .union(&RepresentableSet::finite(self.infinite_atoms.iter().copied()))
    }
}
