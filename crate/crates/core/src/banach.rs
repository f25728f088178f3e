//! Target spaces: finite-dimensional real spaces with the 1, 2 or sup norm,
//! and the diagonal family inside c0 with l1 functionals.
//!
//! The central kernel is [`dual_ball_abs_max`]: the supremum over the dual
//! unit ball of `sum_i c_i * |<v_i, x*>|` with nonnegative coefficients. The
//! map `x* -> sum c_i |<v_i, x*>|` is convex, so the supremum over the ball is
//! attained at an extreme point, and on the predual side this collapses to a
//! maximum of `|| sum_i e_i c_i v_i ||` over sign patterns `e in {+1,-1}^m`.
//! Flipping every sign leaves the value unchanged, so only patterns with a
//! leading plus are enumerated.
//!
//! Euclidean norms are kept exact: a norm is either a rational or the square
//! root of a rational carried symbolically, and comparisons go through the
//! squares, which are always rational.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extended::ExtendedRational;
use crate::rational::{format_rational, sqrt_exact, to_f64, Rational};
use crate::sequence::GeometricSequence;
use crate::sets::RepresentableSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NormExponent {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
    #[serde(rename = "inf")]
    Infinity,
}

impl NormExponent {
    pub fn dual(self) -> NormExponent {
        match self {
            NormExponent::One => NormExponent::Infinity,
            NormExponent::Two => NormExponent::Two,
            NormExponent::Infinity => NormExponent::One,
        }
    }
}

impl fmt::Display for NormExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormExponent::One => f.write_str("1"),
            NormExponent::Two => f.write_str("2"),
            NormExponent::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteDimSpace {
    pub dim: usize,
    pub p: NormExponent,
}

impl FiniteDimSpace {
    pub fn new(dim: usize, p: NormExponent) -> Self {
        assert!(dim >= 1, "spaces have dimension at least one");
        FiniteDimSpace { dim, p }
    }

    pub fn dual(self) -> FiniteDimSpace {
        FiniteDimSpace { dim: self.dim, p: self.p.dual() }
    }
}

/// An exact norm value: a rational, or the square root of a rational that is
/// not a perfect square. Comparisons are exact through the squares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormValue {
    Rational(Rational),
    Sqrt(Rational),
}

impl NormValue {
    pub fn zero() -> Self {
        NormValue::Rational(Rational::zero())
    }

    /// Builds from a squared value, collapsing to rational when possible.
    pub fn from_squared(squared: Rational) -> Self {
        debug_assert!(!squared.is_negative());
        match sqrt_exact(&squared) {
            Some(root) => NormValue::Rational(root),
            None => NormValue::Sqrt(squared),
        }
    }

    pub fn squared(&self) -> Rational {
        match self {
            NormValue::Rational(r) => r * r,
            NormValue::Sqrt(q) => q.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, NormValue::Rational(r) if r.is_zero())
    }

    /// Scale by a scalar (its absolute value is used; norms stay nonnegative).
    pub fn scale(&self, c: &Rational) -> NormValue {
        match self {
            NormValue::Rational(r) => NormValue::Rational(r * c.abs()),
            NormValue::Sqrt(q) => NormValue::from_squared(q * c * c),
        }
    }

    /// Exact addition where representable: rational plus rational always, and
    /// square roots whose product under the root is a perfect square, which
    /// covers all rational multiples of one common root.
    pub fn try_add(&self, other: &NormValue) -> Result<NormValue> {
        use NormValue::*;
        match (self, other) {
            (Rational(a), Rational(b)) => Ok(Rational(a + b)),
            (Rational(a), Sqrt(q)) | (Sqrt(q), Rational(a)) => {
                if a.is_zero() {
                    Ok(Sqrt(q.clone()))
                } else {
                    Err(Error::IrrationalNorm { squared: format_rational(q) })
                }
            }
            (Sqrt(a), Sqrt(b)) => match sqrt_exact(&(a * b)) {
                Some(cross) => Ok(NormValue::from_squared(a + b + cross.clone() + cross)),
                None => Err(Error::IrrationalNorm { squared: format_rational(&(a * b)) }),
            },
        }
    }

    pub fn to_extended(&self) -> Result<ExtendedRational> {
        match self {
            NormValue::Rational(r) => Ok(ExtendedRational::Finite(r.clone())),
            NormValue::Sqrt(q) => Err(Error::IrrationalNorm { squared: format_rational(q) }),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            NormValue::Rational(r) => to_f64(r),
            NormValue::Sqrt(q) => to_f64(q).sqrt(),
        }
    }
}

impl PartialOrd for NormValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NormValue {
    fn cmp(&self, other: &Self) -> Ordering {
        // Both sides are nonnegative, so comparing squares is faithful.
        self.squared().cmp(&other.squared())
    }
}

impl fmt::Display for NormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormValue::Rational(r) => f.write_str(&format_rational(r)),
            NormValue::Sqrt(q) => write!(f, "sqrt({})", format_rational(q)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDimVector {
    space: FiniteDimSpace,
    coords: Vec<Rational>,
}

impl FiniteDimVector {
    pub fn new(space: FiniteDimSpace, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != space.dim {
            return Err(Error::DimensionMismatch { left: space.dim, right: coords.len() });
        }
        Ok(FiniteDimVector { space, coords })
    }

    pub fn zero(space: FiniteDimSpace) -> Self {
        FiniteDimVector { space, coords: vec![Rational::zero(); space.dim] }
    }

    pub fn basis(space: FiniteDimSpace, i: usize) -> Self {
        let mut v = FiniteDimVector::zero(space);
        v.coords[i] = Rational::one();
        v
    }

    pub fn space(&self) -> FiniteDimSpace {
        self.space
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::MixedSpace);
        }
        Ok(FiniteDimVector {
            space: self.space,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FiniteDimVector { space: self.space, coords: self.coords.iter().map(|x| c * x).collect() }
    }

    /// The p-norm, exact. For the euclidean exponent the result may be the
    /// symbolic square root of the (always rational) squared norm.
    pub fn norm(&self) -> NormValue {
        match self.space.p {
            NormExponent::One => {
                NormValue::Rational(self.coords.iter().map(|x| x.abs()).sum())
            }
            NormExponent::Infinity => NormValue::Rational(
                self.coords.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero),
            ),
            NormExponent::Two => {
                NormValue::from_squared(self.coords.iter().map(|x| x * x).sum())
            }
        }
    }

    /// Duality pairing `<self, xstar>`; the functional must carry the dual
    /// exponent on the same dimension.
    pub fn pairing(&self, xstar: &FiniteDimVector) -> Result<Rational> {
        if xstar.space != self.space.dual() {
            if xstar.space.dim != self.space.dim {
                return Err(Error::DimensionMismatch {
                    left: self.space.dim,
                    right: xstar.space.dim,
                });
            }
            return Err(Error::DualSpaceMismatch);
        }
        Ok(self.coords.iter().zip(&xstar.coords).map(|(a, b)| a * b).sum())
    }

    /// Is `other` a rational multiple of `self` (or either zero)?
    pub fn is_parallel_to(&self, other: &Self) -> bool {
        if self.space != other.space {
            return false;
        }
        if self.is_zero() || other.is_zero() {
            return true;
        }
        let lead = match self.coords.iter().position(|c| !c.is_zero()) {
            Some(i) => i,
            None => return true,
        };
        if other.coords[lead].is_zero() {
            return false;
        }
        let lambda = &other.coords[lead] / &self.coords[lead];
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| b == &(a * &lambda))
    }

    /// A norm-one functional attaining `<v, x*> = ||v||`, when one with
    /// rational coordinates exists. For the sup norm this is a signed basis
    /// vector, for the 1-norm a sign pattern, and for the euclidean norm the
    /// normalized vector whenever the norm itself is rational.
    pub fn norming_functional(&self) -> Option<FiniteDimVector> {
        if self.is_zero() {
            return None;
        }
        let dual = self.space.dual();
        match self.space.p {
            NormExponent::Infinity => {
                let norm = self.norm().squared();
                let i = self
                    .coords
                    .iter()
                    .position(|c| c * c == norm)
                    .expect("some coordinate attains the sup norm");
                let mut f = FiniteDimVector::zero(dual);
                f.coords[i] = if self.coords[i].is_negative() {
                    -Rational::one()
                } else {
                    Rational::one()
                };
                Some(f)
            }
            NormExponent::One => Some(FiniteDimVector {
                space: dual,
                coords: self
                    .coords
                    .iter()
                    .map(|c| {
                        if c.is_negative() {
                            -Rational::one()
                        } else {
                            Rational::one()
                        }
                    })
                    .collect(),
            }),
            NormExponent::Two => match self.norm() {
                NormValue::Rational(n) => Some(FiniteDimVector {
                    space: dual,
                    coords: self.coords.iter().map(|c| c / &n).collect(),
                }),
                NormValue::Sqrt(_) => None,
            },
        }
    }
}

impl fmt::Display for FiniteDimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "({})", body.join(", "))
    }
}

/// A vector of the diagonal c0 family: entry `t` is `entries(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C0DiagonalVector {
    entries: GeometricSequence,
}

impl C0DiagonalVector {
    pub fn new(entries: GeometricSequence) -> Self {
        C0DiagonalVector { entries }
    }

    pub fn entries(&self) -> &GeometricSequence {
        &self.entries
    }

    pub fn entry(&self, t: u64) -> Rational {
        self.entries.value(t)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_zero()
    }

    /// True when the entries tend to zero, i.e. the vector lies in c0 rather
    /// than merely in some bounded or unbounded sequence space.
    pub fn in_c0(&self) -> bool {
        self.entries.vanishes_at_infinity()
    }

    pub fn sup_norm(&self) -> ExtendedRational {
        self.entries
            .abs()
            .sup(&RepresentableSet::all())
            .expect("absolute values are nonnegative")
    }

    /// Pairing against an l1 functional given by its entry sequence. Errors if
    /// the functional is not absolutely summable or the pairing diverges.
    pub fn pairing(&self, xstar: &GeometricSequence) -> Result<Rational> {
        let l1 = xstar.abs().sum(&RepresentableSet::all())?;
        if !l1.is_finite() {
            return Err(Error::NotL1Dual(l1.to_string()));
        }
        self.entries.mul(xstar).sum_signed(&RepresentableSet::all())
    }
}

/// Witness for the dual-ball maximum: the attaining sign pattern over the
/// (collapsed) terms, the signed combination it produces, and a rational
/// norming functional when one exists.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualMaxWitness {
    pub signs: Vec<i8>,
    #[serde(serialize_with = "serialize_coords")]
    pub combination: Vec<Rational>,
    #[serde(serialize_with = "serialize_opt_coords")]
    pub functional: Option<Vec<Rational>>,
}

fn serialize_coords<S: serde::Serializer>(
    coords: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(coords.len()))?;
    for c in coords {
        seq.serialize_element(&format_rational(c))?;
    }
    seq.end()
}

fn serialize_opt_coords<S: serde::Serializer>(
    coords: &Option<Vec<Rational>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match coords {
        Some(c) => serialize_coords(c, s),
        None => s.serialize_none(),
    }
}

/// Outcome of the dual-ball maximization: an exact norm value or infinity.
#[derive(Debug, Clone, PartialEq)]
pub enum DualMaxValue {
    Finite(NormValue),
    Infinite,
}

impl DualMaxValue {
    pub fn to_extended(&self) -> Result<ExtendedRational> {
        match self {
            DualMaxValue::Finite(n) => n.to_extended(),
            DualMaxValue::Infinite => Ok(ExtendedRational::Infinite),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, DualMaxValue::Finite(n) if n.is_zero())
    }

    pub fn to_f64_lossy(&self) -> f64 {
        match self {
            DualMaxValue::Finite(n) => n.to_f64(),
            DualMaxValue::Infinite => f64::INFINITY,
        }
    }
}

/// Enumeration cap for distinct sign-pattern terms. Geometric tails must be
/// collapsed into a single term before entry, which keeps real inputs far
/// below this bound.
pub const SIGN_ENUMERATION_CAP: usize = 20;

/// `sup { sum_i c_i |<v_i, x*>| : x* in the dual unit ball }`, exact.
///
/// Terms with an infinite coefficient force the value to infinity unless the
/// paired vector vanishes. Returns the first attaining sign pattern in
/// lexicographic order (plus before minus, leading sign fixed to plus).
pub fn dual_ball_abs_max(
    terms: &[(ExtendedRational, FiniteDimVector)],
) -> Result<(DualMaxValue, Option<DualMaxWitness>)> {
    let mut space: Option<FiniteDimSpace> = None;
    for (_, v) in terms {
        match space {
            None => space = Some(v.space()),
            Some(s) if s == v.space() => {}
            Some(_) => return Err(Error::MixedSpace),
        }
    }
    let mut finite: Vec<(Rational, &FiniteDimVector)> = Vec::new();
    for (c, v) in terms {
        match c {
            ExtendedRational::Infinite => {
                if !v.is_zero() {
                    return Ok((DualMaxValue::Infinite, None));
                }
            }
            ExtendedRational::Finite(c) => {
                assert!(!c.is_negative(), "dual maximization requires nonnegative coefficients");
                if !c.is_zero() && !v.is_zero() {
                    finite.push((c.clone(), v));
                }
            }
        }
    }
    if finite.is_empty() {
        return Ok((DualMaxValue::Finite(NormValue::zero()), None));
    }
    if finite.len() > SIGN_ENUMERATION_CAP {
        return Err(Error::TermCapExceeded { cap: SIGN_ENUMERATION_CAP, got: finite.len() });
    }
    let m = finite.len();
    let space = space.expect("nonempty term list has a space");
    let mut best: Option<(NormValue, Vec<i8>, FiniteDimVector)> = None;
    for mask in 0u64..(1u64 << (m - 1)) {
        let mut signs = Vec::with_capacity(m);
        signs.push(1i8);
        // The mask bits read from the high end so that patterns appear in
        // lexicographic order with plus preceding minus.
        for j in 0..(m - 1) {
            let bit = (mask >> (m - 2 - j)) & 1;
            signs.push(if bit == 0 { 1 } else { -1 });
        }
        let mut combo = FiniteDimVector::zero(space);
        for (i, (c, v)) in finite.iter().enumerate() {
            let signed = if signs[i] > 0 { c.clone() } else { -c.clone() };
            combo = combo.add(&v.scale(&signed)).expect("same space by validation");
        }
        let norm = combo.norm();
        let better = match &best {
            None => true,
            Some((current, _, _)) => norm > *current,
        };
        if better {
            best = Some((norm, signs, combo));
        }
    }
    let (norm, signs, combo) = best.expect("at least one sign pattern");
    let functional = combo.norming_functional().map(|f| f.coords().to_vec());
    let witness = DualMaxWitness { signs, combination: combo.coords().to_vec(), functional };
    Ok((DualMaxValue::Finite(norm), Some(witness)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, rational};

    fn vec2(p: NormExponent, a: (i64, i64), b: (i64, i64)) -> FiniteDimVector {
        FiniteDimVector::new(FiniteDimSpace::new(2, p), vec![rational(a.0, a.1), rational(b.0, b.1)])
            .unwrap()
    }

    #[test]
    fn pythagorean_euclidean_norm_is_exact() {
        let v = vec2(NormExponent::Two, (3, 1), (4, 1));
        assert_eq!(v.norm(), NormValue::Rational(integer(5)));
        let w = vec2(NormExponent::Two, (1, 1), (1, 1));
        assert_eq!(w.norm(), NormValue::Sqrt(integer(2)));
        assert!(w.norm() < NormValue::Rational(rational(3, 2)));
        assert!(w.norm() > NormValue::Rational(integer(1)));
    }

    #[test]
    fn one_and_sup_norms() {
        let v = vec2(NormExponent::One, (1, 1), (-2, 1));
        assert_eq!(v.norm(), NormValue::Rational(integer(3)));
        let w = vec2(NormExponent::Infinity, (1, 1), (-2, 1));
        assert_eq!(w.norm(), NormValue::Rational(integer(2)));
        let z = FiniteDimVector::zero(FiniteDimSpace::new(3, NormExponent::Two));
        assert!(z.norm().is_zero());
    }

    #[test]
    fn pairings() {
        let v = vec2(NormExponent::Infinity, (1, 1), (0, 1));
        let xstar = vec2(NormExponent::One, (0, 1), (1, 1));
        assert_eq!(v.pairing(&xstar).unwrap(), integer(0));
        let v = vec2(NormExponent::Infinity, (1, 1), (2, 1));
        let xstar = vec2(NormExponent::One, (3, 1), (-1, 1));
        assert_eq!(v.pairing(&xstar).unwrap(), integer(1));
        let zero_dual = FiniteDimVector::zero(FiniteDimSpace::new(2, NormExponent::One));
        assert_eq!(v.pairing(&zero_dual).unwrap(), integer(0));
        let wrong = FiniteDimVector::zero(FiniteDimSpace::new(3, NormExponent::One));
        assert!(v.pairing(&wrong).is_err());
        let not_dual = vec2(NormExponent::Infinity, (1, 1), (1, 1));
        assert!(matches!(v.pairing(&not_dual), Err(Error::DualSpaceMismatch)));
    }

    #[test]
    fn norm_value_addition_rules() {
        let a = NormValue::Rational(rational(1, 2));
        let b = NormValue::Rational(rational(1, 3));
        assert_eq!(a.try_add(&b).unwrap(), NormValue::Rational(rational(5, 6)));
        let s2 = NormValue::Sqrt(integer(2));
        let s8 = NormValue::Sqrt(integer(8));
        // sqrt(2) + sqrt(8) = 3 sqrt(2) = sqrt(18)
        assert_eq!(s2.try_add(&s8).unwrap(), NormValue::Sqrt(integer(18)));
        let s3 = NormValue::Sqrt(integer(3));
        assert!(s2.try_add(&s3).is_err());
        assert_eq!(NormValue::zero().try_add(&s2).unwrap(), s2);
        assert_eq!(s2.scale(&integer(-3)), NormValue::Sqrt(integer(18)));
    }

    #[test]
    fn dual_max_matches_hand_enumeration() {
        // sup over the l1 ball of |x*_0| + 2 |x*_1| is 2, at x* = (0, 1).
        let space = FiniteDimSpace::new(2, NormExponent::Infinity);
        let terms = vec![
            (ExtendedRational::from_int(1), FiniteDimVector::basis(space, 0)),
            (ExtendedRational::from_int(2), FiniteDimVector::basis(space, 1)),
        ];
        let (value, witness) = dual_ball_abs_max(&terms).unwrap();
        assert_eq!(value.to_extended().unwrap(), ExtendedRational::from_int(2));
        let witness = witness.unwrap();
        assert_eq!(witness.signs, vec![1, 1]);
        assert_eq!(witness.functional, Some(vec![integer(0), integer(1)]));

        // Same data in the 1-norm: max over sign patterns of ||(±1, ±2)||_1 = 3.
        let space = FiniteDimSpace::new(2, NormExponent::One);
        let terms = vec![
            (ExtendedRational::from_int(1), FiniteDimVector::basis(space, 0)),
            (ExtendedRational::from_int(2), FiniteDimVector::basis(space, 1)),
        ];
        let (value, _) = dual_ball_abs_max(&terms).unwrap();
        assert_eq!(value.to_extended().unwrap(), ExtendedRational::from_int(3));
    }

    #[test]
    fn dual_max_rank_one_collapse() {
        let v = vec2(NormExponent::Two, (3, 1), (4, 1));
        let terms = vec![(ExtendedRational::Finite(rational(7, 2)), v)];
        let (value, _) = dual_ball_abs_max(&terms).unwrap();
        assert_eq!(value.to_extended().unwrap(), ExtendedRational::Finite(rational(35, 2)));
    }

    #[test]
    fn dual_max_edge_cases() {
        assert_eq!(
            dual_ball_abs_max(&[]).unwrap().0,
            DualMaxValue::Finite(NormValue::zero())
        );
        let space = FiniteDimSpace::new(2, NormExponent::One);
        let inf_term =
            vec![(ExtendedRational::Infinite, FiniteDimVector::basis(space, 0))];
        assert_eq!(dual_ball_abs_max(&inf_term).unwrap().0, DualMaxValue::Infinite);
        let inf_zero = vec![(ExtendedRational::Infinite, FiniteDimVector::zero(space))];
        assert!(dual_ball_abs_max(&inf_zero).unwrap().0.is_zero());
        let mixed = vec![
            (ExtendedRational::from_int(1), FiniteDimVector::basis(space, 0)),
            (
                ExtendedRational::from_int(1),
                FiniteDimVector::basis(FiniteDimSpace::new(2, NormExponent::Two), 0),
            ),
        ];
        assert!(matches!(dual_ball_abs_max(&mixed), Err(Error::MixedSpace)));
    }

    #[test]
    fn term_cap_is_enforced() {
        let space = FiniteDimSpace::new(2, NormExponent::One);
        let terms: Vec<(ExtendedRational, FiniteDimVector)> = (0..21)
            .map(|i| {
                let coords = vec![integer(1), integer(i)];
                (
                    ExtendedRational::from_int(1),
                    FiniteDimVector::new(space, coords).unwrap(),
                )
            })
            .collect();
        assert!(matches!(
            dual_ball_abs_max(&terms),
            Err(Error::TermCapExceeded { cap: 20, got: 21 })
        ));
        assert!(dual_ball_abs_max(&terms[..8]).is_ok());
    }

    #[test]
    fn parallel_detection() {
        let v = vec2(NormExponent::Two, (2, 1), (-4, 1));
        let w = vec2(NormExponent::Two, (-1, 1), (2, 1));
        assert!(v.is_parallel_to(&w));
        let u = vec2(NormExponent::Two, (1, 1), (1, 1));
        assert!(!v.is_parallel_to(&u));
        assert!(v.is_parallel_to(&FiniteDimVector::zero(v.space())));
    }

    #[test]
    fn c0_vectors() {
        let geo = GeometricSequence::geometric(integer(1), rational(1, 2)).unwrap();
        let v = C0DiagonalVector::new(geo.clone());
        assert!(v.in_c0());
        assert_eq!(v.sup_norm(), ExtendedRational::from_int(1));
        let ones = C0DiagonalVector::new(GeometricSequence::constant(integer(1)));
        assert!(!ones.in_c0());
        assert_eq!(ones.sup_norm(), ExtendedRational::from_int(1));
        // <(2^-t), e_3> = 1/8
        let e3 = GeometricSequence::delta(3, integer(1));
        assert_eq!(v.pairing(&e3).unwrap(), rational(1, 8));
        // Pairing against a non-l1 functional is rejected.
        assert!(v.pairing(&GeometricSequence::constant(integer(1))).is_err());
    }
}
