//! Arbitrary-precision rationals and their canonical string form.
//!
//! Every scalar in the library is a `BigRational` in lowest terms with a
//! positive denominator. The wire form is `"p"` for integers, `"p/q"`
//! otherwise, and `"inf"` for the extended point at infinity (handled by
//! [`crate::extended::ExtendedRational`]).

use num_bigint::BigInt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(text.to_string());
    let mut parts = text.splitn(2, '/');
    let numer: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(Rational::from_integer(numer)),
        Some(d) => {
            let denom: BigInt = d.trim().parse().map_err(|_| bad())?;
            if denom.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Exact integer power. Exponents are capped; every quantity in this library
/// lives at desk scale and a runaway exponent indicates a logic error upstream.
pub fn pow_u64(base: &Rational, exp: u64) -> Result<Rational> {
    const CAP: u64 = 100_000;
    if exp > CAP {
        return Err(Error::ExponentOverflow(exp));
    }
    if exp == 0 {
        return Ok(Rational::one());
    }
    let mut acc = Rational::one();
    let mut sq = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    Ok(acc)
}

/// The exact square root of a nonnegative rational, when it is rational.
pub fn sqrt_exact(value: &Rational) -> Option<Rational> {
    if value.is_negative() {
        return None;
    }
    if value.is_zero() {
        return Some(Rational::zero());
    }
    let num_root = value.numer().sqrt();
    let den_root = value.denom().sqrt();
    if &(&num_root * &num_root) == value.numer() && &(&den_root * &den_root) == value.denom() {
        Some(Rational::new(num_root, den_root))
    } else {
        None
    }
}

pub fn to_f64(value: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(value).unwrap_or(f64::NAN)
}
