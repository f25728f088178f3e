//! Rationals extended with a single point at +infinity.
//!
//! This is the value type of measures, norms, variations and semivariations.
//! Arithmetic follows the measure-theoretic conventions: `a + inf = inf`,
//! `c * inf = inf` for `c > 0`, and `0 * inf = 0`. There is no negative
//! infinity; the quantities carried here are nonnegative whenever infinity can
//! occur, and multiplying infinity by a negative scalar is a logic error.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_traits::{Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::rational::{format_rational, parse_rational, to_f64, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtendedRational {
    Finite(Rational),
    Infinite,
}

impl ExtendedRational {
    pub fn zero() -> Self {
        ExtendedRational::Finite(Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        ExtendedRational::Finite(crate::rational::integer(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedRational::Finite(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtendedRational::Finite(r) if r.is_zero())
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtendedRational::Finite(r) => Some(r),
            ExtendedRational::Infinite => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExtendedRational::Finite(r) => to_f64(r),
            ExtendedRational::Infinite => f64::INFINITY,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "inf" {
            Ok(ExtendedRational::Infinite)
        } else {
            Ok(ExtendedRational::Finite(parse_rational(t)?))
        }
    }

    /// Multiplication by a scalar that may be negative; only legal on finite
    /// values or with a nonnegative scalar, since -inf is not representable.
    pub fn scale(&self, c: &Rational) -> ExtendedRational {
        match self {
            ExtendedRational::Finite(r) => ExtendedRational::Finite(c * r),
            ExtendedRational::Infinite => {
                if c.is_zero() {
                    ExtendedRational::zero()
                } else {
                    assert!(c.is_positive(), "cannot scale infinity by a negative rational");
                    ExtendedRational::Infinite
                }
            }
        }
    }
}

impl From<Rational> for ExtendedRational {
    fn from(value: Rational) -> Self {
        ExtendedRational::Finite(value)
    }
}

impl Add for ExtendedRational {
    type Output = ExtendedRational;
    fn add(self, rhs: ExtendedRational) -> ExtendedRational {
        match (self, rhs) {
            (ExtendedRational::Finite(a), ExtendedRational::Finite(b)) => {
                ExtendedRational::Finite(a + b)
            }
            _ => ExtendedRational::Infinite,
        }
    }
}

impl AddAssign for ExtendedRational {
    fn add_assign(&mut self, rhs: ExtendedRational) {
        let current = std::mem::replace(self, ExtendedRational::Infinite);
        *self = current + rhs;
    }
}

impl Mul for ExtendedRational {
    type Output = ExtendedRational;
    fn mul(self, rhs: ExtendedRational) -> ExtendedRational {
        use ExtendedRational::*;
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a * b),
            (Finite(c), Infinite) | (Infinite, Finite(c)) => {
                if c.is_zero() {
                    ExtendedRational::zero()
                } else {
                    assert!(c.is_positive(), "cannot multiply infinity by a negative rational");
                    Infinite
                }
            }
            (Infinite, Infinite) => Infinite,
        }
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedRational::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Finite(r) => f.write_str(&format_rational(r)),
            ExtendedRational::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExtendedRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        ExtendedRational::parse(&text).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, rational};

    #[test]
    fn conventions() {
        let inf = ExtendedRational::Infinite;
        let two = ExtendedRational::from_int(2);
        assert_eq!(two.clone() + inf.clone(), ExtendedRational::Infinite);
        assert_eq!(inf.clone() * ExtendedRational::zero(), ExtendedRational::zero());
        assert_eq!(inf.clone() * two, ExtendedRational::Infinite);
        assert_eq!(inf.scale(&integer(0)), ExtendedRational::zero());
    }

    #[test]
    fn infinity_dominates_the_order() {
        let inf = ExtendedRational::Infinite;
        let big = ExtendedRational::Finite(rational(1_000_000_007, 1));
        assert!(big < inf);
        assert!(inf == ExtendedRational::Infinite);
        assert!(ExtendedRational::from_int(-3) < ExtendedRational::zero());
    }

    #[test]
    #[should_panic(expected = "negative rational")]
    fn negative_times_infinity_is_rejected() {
        let _ = ExtendedRational::Infinite.scale(&integer(-1));
    }

    #[test]
    fn string_round_trip() {
        for text in ["inf", "3/4", "-5"] {
            assert_eq!(ExtendedRational::parse(text).unwrap().to_string(), text);
        }
        let json = serde_json::to_string(&ExtendedRational::Infinite).unwrap();
        assert_eq!(json, "\"inf\"");
        let back: ExtendedRational = serde_json::from_str("\"7/2\"").unwrap();
        assert_eq!(back, ExtendedRational::Finite(rational(7, 2)));
    }
}
