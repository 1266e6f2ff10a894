//! Exact scalar types.
//!
//! Every predicate in this crate (equal value, zero distance, contact) is
//! decided by exact comparison, so the scalar must be an exact ordered field.
//! Floating point types deliberately do not implement [`Scalar`].

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed, Zero};

use crate::error::{Error, Result};

/// An exact ordered field usable as a coordinate or series ordinal.
pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + Num + Signed + Send + Sync + 'static
{
    /// Lossless widening to an arbitrary-precision rational.
    fn to_big(&self) -> BigRational;

    /// Narrowing from an arbitrary-precision rational; `None` when the value
    /// does not fit.
    fn from_big(value: &BigRational) -> Option<Self>;

    fn from_i64(value: i64) -> Self {
        Self::from_big(&BigRational::from_integer(BigInt::from(value)))
            .expect("every exact scalar holds small integers")
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }

    /// Midpoint of `a` and `b`.
    fn midpoint(a: &Self, b: &Self) -> Self {
        (a.clone() + b.clone()) / Self::two()
    }
}

macro_rules! fixed_ratio_scalar {
    ($($int:ty),*) => {$(
        impl Scalar for Ratio<$int> {
            fn to_big(&self) -> BigRational {
                BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }

            fn from_big(value: &BigRational) -> Option<Self> {
                let numer = <$int>::try_from(value.numer()).ok()?;
                let denom = <$int>::try_from(value.denom()).ok()?;
                Some(Ratio::new(numer, denom))
            }
        }
    )*};
}

fixed_ratio_scalar!(i32, i64, i128);

impl Scalar for BigRational {
    fn to_big(&self) -> BigRational {
        self.clone()
    }

    fn from_big(value: &BigRational) -> Option<Self> {
        Some(value.clone())
    }
}

/// Parses `"num/den"` or a bare integer `"num"` into lowest terms.
pub fn parse_rational<S: Scalar>(text: &str) -> Result<S> {
    let invalid = || Error::InvalidRational(text.to_string());
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed != text {
        return Err(invalid());
    }
    let (numer, denom) = match trimmed.split_once('/') {
        Some((n, d)) => (n, d),
        None => (trimmed, "1"),
    };
    let numer = BigInt::from_str(numer).map_err(|_| invalid())?;
    // A sign on the denominator is not canonical input.
    if denom.starts_with(['+', '-']) {
        return Err(invalid());
    }
    let denom = BigInt::from_str(denom).map_err(|_| invalid())?;
    if denom.is_zero() {
        return Err(invalid());
    }
    S::from_big(&BigRational::new(numer, denom)).ok_or_else(invalid)
}

/// Canonical text form: always `"num/den"` in lowest terms with a positive
/// denominator, so `3` is written `"3/1"`.
pub fn format_rational<S: Scalar>(value: &S) -> String {
    let big = value.to_big();
    format!("{}/{}", big.numer(), big.denom())
}

/// Decimal expansion of `sqrt(value)` truncated to `digits` places.
///
/// Display only; never feed the result back into a predicate.
pub fn sqrt_decimal<S: Scalar>(value: &S, digits: u32) -> String {
    let big = value.to_big();
    assert!(!big.is_negative(), "square root of a negative rational");
    let scale = BigInt::from(10u32).pow(digits);
    // floor(sqrt(floor(x))) == floor(sqrt(x)) for x >= 0
    let scaled = (big.numer() * &scale * &scale) / big.denom();
    let root = scaled.sqrt();
    if digits == 0 {
        return root.to_string();
    }
    let int_part = &root / &scale;
    let frac_part = &root % &scale;
    format!(
        "{}.{:0>width$}",
        int_part,
        frac_part.to_string(),
        width = digits as usize
    )
}
