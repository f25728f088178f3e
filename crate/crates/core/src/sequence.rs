//! Scalar sequences on the naturals with finitely many exceptional values and
//! a geometric tail `c * r^t`, the common representation of densities, measure
//! weights and multipliers.
//!
//! The family is closed under pointwise product, absolute value, scalar
//! multiples, restriction to a representable set, and pointwise sums of
//! sequences whose tails are compatible. Sums over representable sets have
//! exact closed forms: a finite part plus `c * r^T / (1 - r)` when `r < 1`,
//! and a clean divergence verdict otherwise.
//!
//! Construction canonicalizes the representation (zero exceptional entries
//! dropped, a ratio-zero tail folded into the exceptional region, the tail
//! start pulled down over entries the tail formula already produces), so
//! structural equality coincides with pointwise equality.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extended::ExtendedRational;
use crate::rational::{format_rational, pow_u64, Rational};
use crate::sets::RepresentableSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeometricSequence {
    exceptional: BTreeMap<u64, Rational>,
    tail_start: u64,
    tail_coeff: Rational,
    tail_ratio: Rational,
}

impl GeometricSequence {
    pub fn new(
        exceptional: BTreeMap<u64, Rational>,
        tail_start: u64,
        tail_coeff: Rational,
        tail_ratio: Rational,
    ) -> Result<Self> {
        if tail_ratio.is_negative() {
            return Err(Error::NegativeRatio(format_rational(&tail_ratio)));
        }
        if let Some((&index, _)) = exceptional.range(tail_start..).next() {
            return Err(Error::ExceptionalBeyondTail { index, tail_start });
        }
        let mut seq = GeometricSequence { exceptional, tail_start, tail_coeff, tail_ratio };
        seq.canonicalize();
        Ok(seq)
    }

    pub fn zero() -> Self {
        GeometricSequence {
            exceptional: BTreeMap::new(),
            tail_start: 0,
            tail_coeff: Rational::zero(),
            tail_ratio: Rational::zero(),
        }
    }

    /// The constant sequence `value, value, ...`.
    pub fn constant(value: Rational) -> Self {
        GeometricSequence::new(BTreeMap::new(), 0, value, Rational::one()).expect("ratio 1 is valid")
    }

    /// The pure tail `c * r^t` from `t = 0` on.
    pub fn geometric(coeff: Rational, ratio: Rational) -> Result<Self> {
        GeometricSequence::new(BTreeMap::new(), 0, coeff, ratio)
    }

    /// A single spike at `index`, zero elsewhere.
    pub fn delta(index: u64, value: Rational) -> Self {
        GeometricSequence::new(
            BTreeMap::from([(index, value)]),
            index + 1,
            Rational::zero(),
            Rational::zero(),
        )
        .expect("delta data is canonical")
    }

    /// The indicator of a representable set.
    pub fn indicator(set: &RepresentableSet) -> Self {
        GeometricSequence::constant(Rational::one()).restrict(set)
    }

    fn canonicalize(&mut self) {
        self.exceptional.retain(|_, v| !v.is_zero());
        // A tail with ratio zero contributes only at t = 0 (0^0 = 1); fold it
        // into the exceptional region so a zero tail has a unique form.
        if self.tail_ratio.is_zero() && !self.tail_coeff.is_zero() {
            if self.tail_start == 0 {
                let c = std::mem::replace(&mut self.tail_coeff, Rational::zero());
                self.exceptional.insert(0, c);
                self.tail_start = 1;
            } else {
                self.tail_coeff = Rational::zero();
            }
        }
        if self.tail_coeff.is_zero() {
            self.tail_ratio = Rational::zero();
        }
        // Pull the tail start down over boundary entries that the tail formula
        // already reproduces.
        loop {
            if self.tail_start == 0 {
                break;
            }
            let t = self.tail_start - 1;
            let formula = if self.tail_coeff.is_zero() {
                Rational::zero()
            } else {
                &self.tail_coeff * pow_u64(&self.tail_ratio, t).expect("small exponent")
            };
            let stored = self.exceptional.get(&t).cloned().unwrap_or_else(Rational::zero);
            if stored == formula {
                self.exceptional.remove(&t);
                self.tail_start = t;
            } else {
                break;
            }
        }
        if self.tail_coeff.is_zero() {
            let support_end = self.exceptional.keys().next_back().map_or(0, |t| t + 1);
            self.tail_start = support_end;
        }
    }

    pub fn value(&self, t: u64) -> Rational {
        if t < self.tail_start {
            self.exceptional.get(&t).cloned().unwrap_or_else(Rational::zero)
        } else if self.tail_coeff.is_zero() {
            Rational::zero()
        } else {
            &self.tail_coeff * pow_u64(&self.tail_ratio, t).expect("desk-scale exponent")
        }
    }

    pub fn tail_start(&self) -> u64 {
        self.tail_start
    }

    pub fn tail_coeff(&self) -> &Rational {
        &self.tail_coeff
    }

    pub fn tail_ratio(&self) -> &Rational {
        &self.tail_ratio
    }

    pub fn exceptional(&self) -> &BTreeMap<u64, Rational> {
        &self.exceptional
    }

    pub fn has_zero_tail(&self) -> bool {
        self.tail_coeff.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.exceptional.is_empty() && self.tail_coeff.is_zero()
    }

    /// True when the values converge to zero, i.e. the sequence is a c0 member.
    pub fn vanishes_at_infinity(&self) -> bool {
        self.tail_coeff.is_zero() || self.tail_ratio < Rational::one()
    }

    /// The set where the sequence is nonzero; representable because the tail
    /// is either identically zero or nonzero from its start on.
    pub fn support(&self) -> RepresentableSet {
        if self.tail_coeff.is_zero() {
            RepresentableSet::finite(self.exceptional.keys().copied())
        } else {
            let zeros = (0..self.tail_start).filter(|t| self.value(*t).is_zero());
            RepresentableSet::cofinite(zeros)
        }
    }

    /// Pointwise sum. Requires compatible tails: equal ratios, unless one side
    /// has a zero tail.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let ratio = match (self.tail_coeff.is_zero(), other.tail_coeff.is_zero()) {
            (true, true) => Rational::zero(),
            (true, false) => other.tail_ratio.clone(),
            (false, true) => self.tail_ratio.clone(),
            (false, false) => {
                if self.tail_ratio != other.tail_ratio {
                    return Err(Error::TailRatioMismatch {
                        left: format_rational(&self.tail_ratio),
                        right: format_rational(&other.tail_ratio),
                    });
                }
                self.tail_ratio.clone()
            }
        };
        let start = self.tail_start.max(other.tail_start);
        let mut exceptional = BTreeMap::new();
        for t in 0..start {
            let v = self.value(t) + other.value(t);
            if !v.is_zero() {
                exceptional.insert(t, v);
            }
        }
        GeometricSequence::new(exceptional, start, &self.tail_coeff + &other.tail_coeff, ratio)
    }

    /// Pointwise product; tails multiply, so the ratio of the product is the
    /// product of the ratios. Always defined.
    pub fn mul(&self, other: &Self) -> Self {
        let start = self.tail_start.max(other.tail_start);
        let mut exceptional = BTreeMap::new();
        for t in 0..start {
            let v = self.value(t) * other.value(t);
            if !v.is_zero() {
                exceptional.insert(t, v);
            }
        }
        GeometricSequence::new(
            exceptional,
            start,
            &self.tail_coeff * &other.tail_coeff,
            &self.tail_ratio * &other.tail_ratio,
        )
        .expect("product of nonnegative ratios is nonnegative")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GeometricSequence::new(
            self.exceptional.iter().map(|(t, v)| (*t, c * v)).collect(),
            self.tail_start,
            c * &self.tail_coeff,
            self.tail_ratio.clone(),
        )
        .expect("scaling preserves canonicity preconditions")
    }

    pub fn abs(&self) -> Self {
        GeometricSequence::new(
            self.exceptional.iter().map(|(t, v)| (*t, v.abs())).collect(),
            self.tail_start,
            self.tail_coeff.abs(),
            self.tail_ratio.clone(),
        )
        .expect("absolute value preserves the representation")
    }

    /// Pointwise restriction: the sequence multiplied by the indicator of `set`.
    pub fn restrict(&self, set: &RepresentableSet) -> Self {
        match set {
            RepresentableSet::Finite(elements) => {
                let exceptional: BTreeMap<u64, Rational> = elements
                    .iter()
                    .filter_map(|&t| {
                        let v = self.value(t);
                        (!v.is_zero()).then_some((t, v))
                    })
                    .collect();
                let start = exceptional.keys().next_back().map_or(0, |t| t + 1);
                GeometricSequence::new(exceptional, start, Rational::zero(), Rational::zero())
                    .expect("finite restriction is canonical")
            }
            RepresentableSet::Cofinite(excluded) => {
                let start =
                    self.tail_start.max(excluded.iter().next_back().map_or(0, |t| t + 1));
                let mut exceptional = BTreeMap::new();
                for t in 0..start {
                    if set.contains(t) {
                        let v = self.value(t);
                        if !v.is_zero() {
                            exceptional.insert(t, v);
                        }
                    }
                }
                GeometricSequence::new(
                    exceptional,
                    start,
                    self.tail_coeff.clone(),
                    self.tail_ratio.clone(),
                )
                .expect("cofinite restriction keeps the tail")
            }
        }
    }

    /// Exact sum of the nonnegative series over `set`.
    ///
    /// Returns the closed-form value, `Infinite` for a divergent nonnegative
    /// series, and an error if some term on `set` is negative: signed sums
    /// must be split into positive and negative parts first.
    pub fn sum(&self, set: &RepresentableSet) -> Result<ExtendedRational> {
        match set {
            RepresentableSet::Finite(elements) => {
                let mut acc = Rational::zero();
                for &t in elements {
                    let v = self.value(t);
                    if v.is_negative() {
                        return Err(Error::NegativeTerm { index: t, value: format_rational(&v) });
                    }
                    acc += v;
                }
                Ok(ExtendedRational::Finite(acc))
            }
            RepresentableSet::Cofinite(_) => {
                let (head, tail_set) = set.split_at(self.tail_start);
                let mut acc = Rational::zero();
                for t in head {
                    let v = self.value(t);
                    if v.is_negative() {
                        return Err(Error::NegativeTerm { index: t, value: format_rational(&v) });
                    }
                    acc += v;
                }
                if self.tail_coeff.is_zero() {
                    return Ok(ExtendedRational::Finite(acc));
                }
                if self.tail_coeff.is_negative() {
                    let t = first_member_from(&tail_set, self.tail_start);
                    return Err(Error::NegativeTerm {
                        index: t,
                        value: format_rational(&self.value(t)),
                    });
                }
                if self.tail_ratio >= Rational::one() {
                    return Ok(ExtendedRational::Infinite);
                }
                Ok(ExtendedRational::Finite(acc + self.tail_sum_over(&tail_set)))
            }
        }
    }

    /// Exact signed sum over `set`; defined exactly when the series converges
    /// absolutely, which for a geometric tail means ratio below one (or a zero
    /// tail, or a finite set).
    pub fn sum_signed(&self, set: &RepresentableSet) -> Result<Rational> {
        match set {
            RepresentableSet::Finite(elements) => {
                Ok(elements.iter().map(|&t| self.value(t)).sum())
            }
            RepresentableSet::Cofinite(_) => {
                let (head, tail_set) = set.split_at(self.tail_start);
                let head_sum: Rational = head.into_iter().map(|t| self.value(t)).sum();
                if self.tail_coeff.is_zero() {
                    return Ok(head_sum);
                }
                if self.tail_ratio >= Rational::one() {
                    return Err(Error::DivergentSeries(format!(
                        "tail {} * {}^t does not converge",
                        format_rational(&self.tail_coeff),
                        format_rational(&self.tail_ratio)
                    )));
                }
                Ok(head_sum + self.tail_sum_over(&tail_set))
            }
        }
    }

    /// Supremum of the nonnegative sequence over `set` (zero over the empty
    /// set, matching sup of the empty family of measure values).
    pub fn sup(&self, set: &RepresentableSet) -> Result<ExtendedRational> {
        Ok(self.sup_argmax(set)?.0)
    }

    /// Supremum together with the first index attaining it, when attained.
    pub fn sup_argmax(&self, set: &RepresentableSet) -> Result<(ExtendedRational, Option<u64>)> {
        fn check(
            best: &mut Rational,
            argmax: &mut Option<u64>,
            t: u64,
            v: Rational,
        ) -> Result<()> {
            if v.is_negative() {
                return Err(Error::NegativeTerm { index: t, value: format_rational(&v) });
            }
            if v > *best || (argmax.is_none() && v == *best) {
                *best = v;
                *argmax = Some(t);
            }
            Ok(())
        }
        let mut best = Rational::zero();
        let mut argmax: Option<u64> = None;
        match set {
            RepresentableSet::Finite(elements) => {
                for &t in elements {
                    check(&mut best, &mut argmax, t, self.value(t))?;
                }
                Ok((ExtendedRational::Finite(best), argmax))
            }
            RepresentableSet::Cofinite(_) => {
                let (head, tail_set) = set.split_at(self.tail_start);
                for t in head {
                    check(&mut best, &mut argmax, t, self.value(t))?;
                }
                if self.tail_coeff.is_zero() {
                    return Ok((ExtendedRational::Finite(best), argmax));
                }
                let first = first_member_from(&tail_set, self.tail_start);
                if self.tail_coeff.is_negative() {
                    return Err(Error::NegativeTerm {
                        index: first,
                        value: format_rational(&self.value(first)),
                    });
                }
                if self.tail_ratio > Rational::one() {
                    return Ok((ExtendedRational::Infinite, None));
                }
                // Nonincreasing tail: the first member of the tail region wins.
                check(&mut best, &mut argmax, first, self.value(first))?;
                Ok((ExtendedRational::Finite(best), argmax))
            }
        }
    }

    /// Sum of the pure tail over a subset of `[tail_start, ∞)`, assuming
    /// ratio < 1. The set must be cofinite here.
    fn tail_sum_over(&self, tail_set: &RepresentableSet) -> Rational {
        let one = Rational::one();
        let geom_from = |t: u64| -> Rational {
            // sum_{k >= t} c r^k = c r^t / (1 - r)
            &self.tail_coeff * pow_u64(&self.tail_ratio, t).expect("desk-scale exponent")
                / (&one - &self.tail_ratio)
        };
        match tail_set {
            RepresentableSet::Cofinite(excluded) => {
                let mut total = geom_from(self.tail_start);
                for &t in excluded.range(self.tail_start..) {
                    total -= self.value(t);
                }
                total
            }
            RepresentableSet::Finite(_) => unreachable!("tail of a cofinite set is cofinite"),
        }
    }
}

fn first_member_from(set: &RepresentableSet, lo: u64) -> u64 {
    (lo..).find(|t| set.contains(*t)).expect("cofinite sets are unbounded")
}

impl fmt::Display for GeometricSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .exceptional
            .iter()
            .map(|(t, v)| format!("s({t})={}", format_rational(v)))
            .collect();
        if !self.tail_coeff.is_zero() {
            parts.push(format!(
                "t>={}: {}*{}^t",
                self.tail_start,
                format_rational(&self.tail_coeff),
                format_rational(&self.tail_ratio)
            ));
        }
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Wire form: exceptional values keyed by index, plus the tail descriptor.
/// Keys are strings so the format survives serde's internally tagged
/// buffering, which cannot rebuild integer map keys.
#[derive(Serialize, Deserialize)]
struct SequenceRepr {
    #[serde(default)]
    exceptional: BTreeMap<String, String>,
    tail: TailRepr,
}

#[derive(Serialize, Deserialize)]
struct TailRepr {
    start: u64,
    coeff: String,
    ratio: String,
}

impl Serialize for GeometricSequence {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SequenceRepr {
            exceptional: self
                .exceptional
                .iter()
                .map(|(t, v)| (t.to_string(), format_rational(v)))
                .collect(),
            tail: TailRepr {
                start: self.tail_start,
                coeff: format_rational(&self.tail_coeff),
                ratio: format_rational(&self.tail_ratio),
            },
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GeometricSequence {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SequenceRepr::deserialize(deserializer)?;
        let mut exceptional = BTreeMap::new();
        for (key, text) in repr.exceptional {
            let t: u64 = key
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid index {key:?}")))?;
            exceptional.insert(t, crate::rational::parse_rational(&text).map_err(D::Error::custom)?);
        }
        GeometricSequence::new(
            exceptional,
            repr.tail.start,
            crate::rational::parse_rational(&repr.tail.coeff).map_err(D::Error::custom)?,
            crate::rational::parse_rational(&repr.tail.ratio).map_err(D::Error::custom)?,
        )
        .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, rational};

    fn geo(c: (i64, i64), r: (i64, i64)) -> GeometricSequence {
        GeometricSequence::geometric(rational(c.0, c.1), rational(r.0, r.1)).unwrap()
    }

    #[test]
    fn values_match_the_defining_formula() {
        let s = GeometricSequence::new(
            BTreeMap::from([(0, integer(5)), (2, rational(-1, 3))]),
            3,
            integer(2),
            rational(1, 2),
        )
        .unwrap();
        assert_eq!(s.value(0), integer(5));
        assert_eq!(s.value(1), integer(0));
        assert_eq!(s.value(2), rational(-1, 3));
        assert_eq!(s.value(3), rational(2, 8));
        assert_eq!(s.value(6), rational(2, 64));
    }

    #[test]
    fn canonical_form_makes_equality_pointwise() {
        // Boundary entry reproduced by the tail formula gets absorbed.
        let a = GeometricSequence::new(BTreeMap::from([(0, integer(1))]), 1, integer(1), rational(1, 2))
            .unwrap();
        let b = geo((1, 1), (1, 2));
        assert_eq!(a, b);
        // Ratio-zero tails have a unique representation.
        let c = GeometricSequence::new(BTreeMap::new(), 1, integer(7), integer(0)).unwrap();
        assert_eq!(c, GeometricSequence::zero());
        let d = GeometricSequence::new(BTreeMap::new(), 0, integer(7), integer(0)).unwrap();
        assert_eq!(d, GeometricSequence::delta(0, integer(7)));
    }

    #[test]
    fn geometric_series_closed_form() {
        // Cross-checked against partial sums below.
        let s = geo((1, 1), (1, 2));
        assert_eq!(s.sum(&RepresentableSet::all()).unwrap(), ExtendedRational::from_int(2));
        let mut partial = Rational::zero();
        for t in 0..64 {
            partial += s.value(t);
            assert!(partial < integer(2));
        }
        assert!(integer(2) - partial < rational(1, 1_000_000_000));
    }

    #[test]
    fn zero_and_divergent_sums() {
        assert_eq!(
            GeometricSequence::zero().sum(&RepresentableSet::all()).unwrap(),
            ExtendedRational::zero()
        );
        let ones = GeometricSequence::constant(integer(1));
        assert_eq!(ones.sum(&RepresentableSet::all()).unwrap(), ExtendedRational::Infinite);
        assert_eq!(
            ones.sum(&RepresentableSet::range(0, 5)).unwrap(),
            ExtendedRational::from_int(5)
        );
    }

    #[test]
    fn sums_respect_exclusions() {
        let s = geo((1, 1), (1, 2));
        // Drop t=0 (value 1) and t=2 (value 1/4) from the total of 2.
        let set = RepresentableSet::cofinite([0, 2]);
        assert_eq!(
            s.sum(&set).unwrap(),
            ExtendedRational::Finite(integer(2) - integer(1) - rational(1, 4))
        );
    }

    #[test]
    fn negative_terms_are_rejected() {
        let s = GeometricSequence::delta(3, integer(-1));
        assert!(matches!(
            s.sum(&RepresentableSet::all()),
            Err(Error::NegativeTerm { index: 3, .. })
        ));
        // Negative values outside the set do not matter.
        assert_eq!(
            s.sum(&RepresentableSet::finite([0, 1])).unwrap(),
            ExtendedRational::zero()
        );
    }

    #[test]
    fn multiplication_is_pointwise_with_product_ratio() {
        let a = geo((1, 1), (1, 2));
        let b = geo((1, 1), (1, 3));
        let p = a.mul(&b);
        assert_eq!(p, geo((1, 1), (1, 6)));
        for t in 0..=10 {
            assert_eq!(p.value(t), a.value(t) * b.value(t));
        }
        let identity = GeometricSequence::constant(integer(1));
        assert_eq!(identity.mul(&b), b);
        let spike = GeometricSequence::delta(3, integer(5));
        let double = GeometricSequence::constant(integer(2));
        assert_eq!(spike.mul(&double), GeometricSequence::delta(3, integer(10)));
        for t in 0..=10 {
            assert_eq!(spike.mul(&double).value(t), spike.value(t) * double.value(t));
        }
    }

    #[test]
    fn addition_requires_compatible_tails() {
        let a = geo((1, 1), (1, 2));
        let b = geo((3, 1), (1, 2));
        let sum = a.try_add(&b).unwrap();
        for t in 0..=8 {
            assert_eq!(sum.value(t), a.value(t) + b.value(t));
        }
        let c = geo((1, 1), (1, 3));
        assert!(matches!(a.try_add(&c), Err(Error::TailRatioMismatch { .. })));
        // A zero tail is compatible with anything.
        let spike = GeometricSequence::delta(5, integer(4));
        let mixed = c.try_add(&spike).unwrap();
        assert_eq!(mixed.value(5), c.value(5) + integer(4));
        // Cancellation collapses to the zero sequence.
        assert_eq!(a.try_add(&a.scale(&integer(-1))).unwrap(), GeometricSequence::zero());
    }

    #[test]
    fn restriction_truncates_or_keeps_the_tail() {
        let s = geo((1, 1), (1, 2));
        let finite = s.restrict(&RepresentableSet::finite([1, 3]));
        assert!(finite.has_zero_tail());
        assert_eq!(finite.value(1), rational(1, 2));
        assert_eq!(finite.value(2), integer(0));
        let cofinite = s.restrict(&RepresentableSet::cofinite([0, 4]));
        assert_eq!(cofinite.value(0), integer(0));
        assert_eq!(cofinite.value(4), integer(0));
        assert_eq!(cofinite.value(5), rational(1, 32));
        assert!(!cofinite.has_zero_tail());
    }

    #[test]
    fn signed_sums_and_divergence() {
        let s = geo((-1, 1), (1, 2));
        assert_eq!(s.sum_signed(&RepresentableSet::all()).unwrap(), integer(-2));
        let alt = GeometricSequence::constant(integer(-1));
        assert!(alt.sum_signed(&RepresentableSet::all()).is_err());
        assert_eq!(alt.sum_signed(&RepresentableSet::range(0, 3)).unwrap(), integer(-3));
    }

    #[test]
    fn suprema_over_sets() {
        let s = GeometricSequence::new(
            BTreeMap::from([(1, integer(3))]),
            2,
            integer(2),
            rational(1, 2),
        )
        .unwrap();
        assert_eq!(s.sup(&RepresentableSet::all()).unwrap(), ExtendedRational::from_int(3));
        assert_eq!(
            s.sup(&RepresentableSet::cofinite([0, 1])).unwrap(),
            ExtendedRational::Finite(rational(1, 2))
        );
        let growing = geo((1, 1), (2, 1));
        assert_eq!(growing.sup(&RepresentableSet::all()).unwrap(), ExtendedRational::Infinite);
        assert_eq!(
            growing.sup(&RepresentableSet::finite([0, 3])).unwrap(),
            ExtendedRational::from_int(8)
        );
        assert_eq!(
            GeometricSequence::zero().sup(&RepresentableSet::empty()).unwrap(),
            ExtendedRational::zero()
        );
    }

    #[test]
    fn support_is_representable() {
        let s = GeometricSequence::new(
            BTreeMap::from([(0, integer(2))]),
            3,
            integer(1),
            rational(1, 2),
        )
        .unwrap();
        assert_eq!(s.support(), RepresentableSet::cofinite([1, 2]));
        let spike = GeometricSequence::delta(4, integer(-1));
        assert_eq!(spike.support(), RepresentableSet::finite([4]));
    }

    #[test]
    fn serialization_shape() {
        let s = GeometricSequence::new(
            BTreeMap::from([(0, rational(1, 2))]),
            2,
            integer(1),
            rational(1, 3),
        )
        .unwrap();
        let json = serde_json::to_value(&s).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "exceptional": {"0": "1/2"},
                "tail": {"start": 2, "coeff": "1", "ratio": "1/3"}
            })
        );
        let back: GeometricSequence = serde_json::from_value(json).unwrap();
        assert_eq!(back, s);
    }
}
