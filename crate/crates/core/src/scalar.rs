//! Exact rational scalars.

use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

pub fn int(value: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(value))
}

/// `num / den`. Panics if `den` is zero.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p/q"` or `"p"`. Whitespace around the parts is ignored.
pub fn parse(text: &str) -> Option<Scalar> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num = BigInt::from_str(num.trim()).ok()?;
            let den = BigInt::from_str(den.trim()).ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Scalar::new(num, den))
        }
        None => BigInt::from_str(text).ok().map(Scalar::from_integer),
    }
}

/// Canonical `"p/q"` rendering (denominator always present).
pub fn to_fraction_string(value: &Scalar) -> String {
    alloc::format!("{}/{}", value.numer(), value.denom())
}

/// Scales a nonzero vector to a primitive integer vector (same direction).
pub fn primitive_integer_vector(values: &[Scalar]) -> Vec<BigInt> {
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| (v * Scalar::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if gcd.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &gcd).collect()
}

/// Height of a rational: max of |numerator| and denominator.
pub fn height(value: &Scalar) -> BigInt {
    let n = value.numer().abs();
    let d = value.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}
