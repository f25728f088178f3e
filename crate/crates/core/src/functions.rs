//! Vector-valued densities and their multiplier algebra.
//!
//! Two families cover every construction in the library:
//!
//! * [`RankDecomposedFunction`]: `F(t) = sum_k s_k(t) * v_k` into a
//!   finite-dimensional space, where all scalar profiles share one tail ratio.
//!   From the shared tail start on, `F(t) = r^t * w` for the fixed vector
//!   `w = sum_k c_k v_k`; that normal form is what every closed-form integral
//!   downstream relies on, so the constructor enforces it.
//! * [`DiagonalFunction`]: `F(t) = s(t) * e_t` into c0 with the sup norm, the
//!   engine of bounded-but-not-convergent counterexamples.
//!
//! Every function here is a pointwise limit of its truncations to `[0, n)`,
//! each a simple function with finite-measure support once atoms have finite
//! mass, so strong measurability holds by construction and weak and strong
//! measurability coincide; the distinction survives only in how the c0 family
//! accounts for norms versus coordinates.

use num_traits::Zero;

use crate::banach::{C0DiagonalVector, FiniteDimSpace, FiniteDimVector, NormValue};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sequence::GeometricSequence;
use crate::sets::RepresentableSet;
use crate::space::AtomicMeasureSpace;

#[derive(Debug, Clone, PartialEq)]
pub struct RankDecomposedFunction {
    space: FiniteDimSpace,
    terms: Vec<(GeometricSequence, FiniteDimVector)>,
    tail_start: u64,
    tail_ratio: Rational,
    tail_vector: FiniteDimVector,
}

impl RankDecomposedFunction {
    pub fn new(
        space: FiniteDimSpace,
        terms: Vec<(GeometricSequence, FiniteDimVector)>,
    ) -> Result<Self> {
        let mut ratio: Option<Rational> = None;
        for (s, v) in &terms {
            if v.space() != space {
                return Err(Error::MixedSpace);
            }
            if !s.has_zero_tail() {
                match &ratio {
                    None => ratio = Some(s.tail_ratio().clone()),
                    Some(r) if r == s.tail_ratio() => {}
                    Some(r) => {
                        return Err(Error::TailRatioMismatch {
                            left: crate::rational::format_rational(r),
                            right: crate::rational::format_rational(s.tail_ratio()),
                        })
                    }
                }
            }
        }
        let tail_ratio = ratio.unwrap_or_else(Rational::zero);
        let tail_start = terms.iter().map(|(s, _)| s.tail_start()).max().unwrap_or(0);
        let mut tail_vector = FiniteDimVector::zero(space);
        for (s, v) in &terms {
            tail_vector = tail_vector.add(&v.scale(s.tail_coeff()))?;
        }
        Ok(RankDecomposedFunction { space, terms, tail_start, tail_ratio, tail_vector })
    }

    pub fn zero(space: FiniteDimSpace) -> Self {
        RankDecomposedFunction::new(space, Vec::new()).expect("empty term list is valid")
    }

    /// The one-term density `t -> f(t) x`.
    pub fn rank_one(profile: GeometricSequence, direction: FiniteDimVector) -> Self {
        RankDecomposedFunction::new(direction.space(), vec![(profile, direction)])
            .expect("a single term always shares its own ratio")
    }

    pub fn space(&self) -> FiniteDimSpace {
        self.space
    }

    pub fn terms(&self) -> &[(GeometricSequence, FiniteDimVector)] {
        &self.terms
    }

    /// Start of the region where `F(t) = tail_ratio^t * tail_vector`.
    pub fn tail_start(&self) -> u64 {
        self.tail_start
    }

    pub fn tail_ratio(&self) -> &Rational {
        &self.tail_ratio
    }

    pub fn tail_vector(&self) -> &FiniteDimVector {
        &self.tail_vector
    }

    pub fn evaluate(&self, t: u64) -> FiniteDimVector {
        let mut acc = FiniteDimVector::zero(self.space);
        for (s, v) in &self.terms {
            acc = acc.add(&v.scale(&s.value(t))).expect("terms share the space");
        }
        acc
    }

    /// The scalar profile of coordinate `i`: `t -> F(t)_i`.
    pub fn coordinate_sequence(&self, i: usize) -> GeometricSequence {
        let mut acc = GeometricSequence::zero();
        for (s, v) in &self.terms {
            acc = acc
                .try_add(&s.scale(&v.coords()[i]))
                .expect("terms share one tail ratio by construction");
        }
        acc
    }

    /// The scalar profile `t -> <F(t), xstar>`.
    pub fn pairing_sequence(&self, xstar: &FiniteDimVector) -> Result<GeometricSequence> {
        let mut acc = GeometricSequence::zero();
        for (s, v) in &self.terms {
            acc = acc
                .try_add(&s.scale(&v.pairing(xstar)?))
                .expect("terms share one tail ratio by construction");
        }
        Ok(acc)
    }

    /// The profile `t -> ||F(t)||`, exact; errors when a euclidean norm along
    /// the way is irrational.
    pub fn norm_sequence(&self) -> Result<GeometricSequence> {
        let mut exceptional = std::collections::BTreeMap::new();
        for t in 0..self.tail_start {
            let n = match self.evaluate(t).norm() {
                NormValue::Rational(r) => r,
                NormValue::Sqrt(q) => {
                    return Err(Error::IrrationalNorm {
                        squared: crate::rational::format_rational(&q),
                    })
                }
            };
            if !n.is_zero() {
                exceptional.insert(t, n);
            }
        }
        let coeff = match self.tail_vector.norm() {
            NormValue::Rational(r) => r,
            NormValue::Sqrt(q) => {
                return Err(Error::IrrationalNorm {
                    squared: crate::rational::format_rational(&q),
                })
            }
        };
        GeometricSequence::new(exceptional, self.tail_start, coeff, self.tail_ratio.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.tail_vector.is_zero()
            && (0..self.tail_start).all(|t| self.evaluate(t).is_zero())
    }

    /// True when all direction vectors are parallel, so `F = f(t) x` for a
    /// single direction `x`.
    pub fn is_rank_one(&self) -> bool {
        let mut lead: Option<&FiniteDimVector> = None;
        for (_, v) in &self.terms {
            if v.is_zero() {
                continue;
            }
            match lead {
                None => lead = Some(v),
                Some(first) => {
                    if !first.is_parallel_to(v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn multiply(&self, g: &GeometricSequence) -> Self {
        let terms = self.terms.iter().map(|(s, v)| (s.mul(g), v.clone())).collect();
        RankDecomposedFunction::new(self.space, terms)
            .expect("multiplying every term by one profile preserves the shared ratio")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalFunction {
    entries: GeometricSequence,
}

impl DiagonalFunction {
    pub fn new(entries: GeometricSequence) -> Self {
        DiagonalFunction { entries }
    }

    pub fn entries(&self) -> &GeometricSequence {
        &self.entries
    }

    /// The scalar in `F(t) = s(t) e_t`.
    pub fn scalar(&self, t: u64) -> Rational {
        self.entries.value(t)
    }

    pub fn evaluate(&self, t: u64) -> C0DiagonalVector {
        C0DiagonalVector::new(GeometricSequence::delta(t, self.entries.value(t)))
    }

    /// `t -> ||F(t)||_sup = |s(t)|`.
    pub fn norm_sequence(&self) -> GeometricSequence {
        self.entries.abs()
    }

    pub fn multiply(&self, g: &GeometricSequence) -> Self {
        DiagonalFunction { entries: self.entries.mul(g) }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum VectorFunction {
    Rank(RankDecomposedFunction),
    Diagonal(DiagonalFunction),
}

impl VectorFunction {
    pub fn rank_one(profile: GeometricSequence, direction: FiniteDimVector) -> Self {
        VectorFunction::Rank(RankDecomposedFunction::rank_one(profile, direction))
    }

    pub fn multiply(&self, g: &GeometricSequence) -> VectorFunction {
        match self {
            VectorFunction::Rank(f) => VectorFunction::Rank(f.multiply(g)),
            VectorFunction::Diagonal(f) => VectorFunction::Diagonal(f.multiply(g)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            VectorFunction::Rank(f) => f.is_zero(),
            VectorFunction::Diagonal(f) => f.is_zero(),
        }
    }

    pub fn as_rank(&self) -> Option<&RankDecomposedFunction> {
        match self {
            VectorFunction::Rank(f) => Some(f),
            VectorFunction::Diagonal(_) => None,
        }
    }

    pub fn as_diagonal(&self) -> Option<&DiagonalFunction> {
        match self {
            VectorFunction::Diagonal(f) => Some(f),
            VectorFunction::Rank(_) => None,
        }
    }

    /// `t -> ||F(t)||`, exact where representable.
    pub fn norm_sequence(&self) -> Result<GeometricSequence> {
        match self {
            VectorFunction::Rank(f) => f.norm_sequence(),
            VectorFunction::Diagonal(f) => Ok(f.norm_sequence()),
        }
    }

    /// The set where `F(t)` is nonzero, always representable thanks to the
    /// geometric tail normal form.
    pub fn support(&self) -> RepresentableSet {
        match self {
            VectorFunction::Diagonal(f) => f.entries().support(),
            VectorFunction::Rank(f) => {
                let head = (0..f.tail_start()).filter(|&t| !f.evaluate(t).is_zero());
                if f.tail_vector().is_zero() || f.tail_ratio().is_zero() {
                    RepresentableSet::finite(head)
                } else {
                    let zeros = (0..f.tail_start()).filter(|&t| f.evaluate(t).is_zero());
                    RepresentableSet::cofinite(zeros)
                }
            }
        }
    }
}

/// Marks a tolerated discrepancy region: two functions tagged with this agree
/// pointwise off the recorded null set.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceTag {
    pub null_set: RepresentableSet,
}

impl EquivalenceTag {
    pub fn new(null_set: RepresentableSet) -> Self {
        EquivalenceTag { null_set }
    }

    /// Do `f` and `g` agree everywhere outside the tagged null set?
    pub fn respected_by(&self, f: &VectorFunction, g: &VectorFunction) -> Result<bool> {
        equal_on_set(f, g, &self.null_set.complement())
    }
}

/// Pointwise equality of two scalar profiles on a representable set, decided
/// from the representations: a finite window check plus a comparison of the
/// eventual tails when the set is infinite.
pub fn sequences_equal_on(
    a: &GeometricSequence,
    b: &GeometricSequence,
    set: &RepresentableSet,
) -> bool {
    let horizon = a.tail_start().max(b.tail_start());
    match set {
        RepresentableSet::Finite(elements) => {
            elements.iter().all(|&t| a.value(t) == b.value(t))
        }
        RepresentableSet::Cofinite(_) => {
            let window = horizon.max(set.truncate(horizon).last().map_or(0, |t| t + 1));
            for t in 0..window {
                if set.contains(t) && a.value(t) != b.value(t) {
                    return false;
                }
            }
            // Beyond the horizon both sides follow their tail formulas, and
            // two geometric tails agree on an infinite set only if they agree
            // identically.
            tails_identical(a, b)
        }
    }
}

fn tails_identical(a: &GeometricSequence, b: &GeometricSequence) -> bool {
    (a.has_zero_tail() && b.has_zero_tail())
        || (a.tail_ratio() == b.tail_ratio() && a.tail_coeff() == b.tail_coeff())
}

/// Pointwise equality of two densities on a representable set.
pub fn equal_on_set(
    f: &VectorFunction,
    g: &VectorFunction,
    set: &RepresentableSet,
) -> Result<bool> {
    match (f, g) {
        (VectorFunction::Diagonal(a), VectorFunction::Diagonal(b)) => {
            Ok(sequences_equal_on(a.entries(), b.entries(), set))
        }
        (VectorFunction::Rank(a), VectorFunction::Rank(b)) => {
            if a.space() != b.space() {
                return Err(Error::MixedSpace);
            }
            Ok((0..a.space().dim).all(|i| {
                sequences_equal_on(&a.coordinate_sequence(i), &b.coordinate_sequence(i), set)
            }))
        }
        _ => Err(Error::MixedSpace),
    }
}

/// Equality almost everywhere: do `f` and `g` agree at every atom of positive
/// mass? In this atomic model weak and strong almost-everywhere equality
/// coincide, since coordinates of the targets separate points.
pub fn weakly_equal_ae(
    f: &VectorFunction,
    g: &VectorFunction,
    space: &AtomicMeasureSpace,
) -> Result<bool> {
    equal_on_set(f, g, &space.positive_support())
}

/// Convenience for building multipliers from spot values.
pub fn spike_profile(values: &[(u64, Rational)]) -> GeometricSequence {
    let mut acc = GeometricSequence::zero();
    for (t, v) in values {
        acc = acc.try_add(&GeometricSequence::delta(*t, v.clone())).expect("zero tails always add");
    }
    acc
}
