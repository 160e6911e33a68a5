//! Scalar abstraction over the two arithmetic layers.
//!
//! Every geometric formula in this crate is written once, generically, and
//! instantiated at `f64` (fast, approximate) and at [`Rat`] (exact). The
//! quadratic extension [`crate::quad::Quad`] also implements [`Scalar`] so
//! that bounds involving sqrt 2 can be evaluated and compared exactly.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Minimal field-with-order interface needed by the geometry.
///
/// `PartialOrd` rather than `Ord` because `f64` is a model; callers are
/// expected to keep values finite (see [`Scalar::is_finite_scalar`]).
pub trait Scalar:
    Clone
    + std::fmt::Debug
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_int(n: i64) -> Self;

    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Lossy view for reporting. Exact layers keep their own representation.
    fn to_f64_approx(&self) -> f64;

    fn is_finite_scalar(&self) -> bool {
        true
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn to_f64_approx(&self) -> f64 {
        *self
    }

    fn is_finite_scalar(&self) -> bool {
        self.is_finite()
    }
}

impl Scalar for Rat {
    fn from_int(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn to_f64_approx(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Maximum of two scalars. With `f64` inputs the caller must keep NaN out.
pub fn scalar_max<T: Scalar>(a: T, b: T) -> T {
    if b > a {
        b
    } else {
        a
    }
}

/// Minimum of two scalars.
pub fn scalar_min<T: Scalar>(a: T, b: T) -> T {
    if b < a {
        b
    } else {
        a
    }
}

/// `n/d` as an exact rational. Panics if `d == 0`; intended for literals.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "rational literal with zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"7"`, `"-3/4"`, or a plain decimal like `"2.25"` into an exact
/// rational. Decimals are read as decimal fractions, not as nearest floats.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::ParseNumber(s.to_string()));
    }
    let bad = || Error::ParseNumber(s.to_string());

    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rat::new(n, d));
    }

    if let Some((int_part, frac_part)) = t.split_once('.') {
        let negative = int_part.trim_start().starts_with('-');
        let int_part = if int_part == "-" || int_part.is_empty() {
            "0"
        } else {
            int_part
        };
        let int: BigInt = int_part.parse().map_err(|_| bad())?;
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let frac: BigInt = frac_part.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let unsigned = Rat::from_integer(int.clone().abs()) + Rat::new(frac, scale);
        let signed = if negative || int.is_negative() {
            -unsigned
        } else {
            unsigned
        };
        return Ok(signed);
    }

    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Rat::from_integer(n))
}

/// Renders a rational as `"n"` or `"n/d"`.
pub fn rational_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_integer_and_fraction_forms() {
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational(" 56/3 ").unwrap(), rat(56, 3));
        assert_eq!(parse_rational("146/-3").unwrap(), rat(-146, 3));
    }

    #[test]
    fn parse_decimals_exactly() {
        assert_eq!(parse_rational("2.25").unwrap(), rat(9, 4));
        assert_eq!(parse_rational("-0.1").unwrap(), rat(-1, 10));
        assert_eq!(parse_rational("-.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("40.").is_err(), true);
    }

    #[test]
    fn parse_rejects_junk() {
        for bad in ["", "x", "1/0", "1.2.3", "2e3", "1 2"] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(rational_string(&rat(56, 3)), "56/3");
        assert_eq!(rational_string(&rat_int(-7)), "-7");
        assert_eq!(rational_string(&rat(6, 3)), "2");
    }

    #[test]
    fn generic_abs_and_extrema() {
        assert_eq!(Scalar::abs(&-2.5f64), 2.5);
        assert_eq!(Scalar::abs(&rat(-7, 2)), rat(7, 2));
        assert_eq!(scalar_max(rat_int(3), rat_int(5)), rat_int(5));
        assert_eq!(scalar_min(-1.0f64, 2.0), -1.0);
    }

    #[test]
    fn exact_layer_to_f64() {
        assert_eq!(rat(3, 2).to_f64_approx(), 1.5);
        assert!((rat(146, 3).to_f64_approx() - 48.666666666666664).abs() == 0.0);
    }
}
