//! Exact arithmetic in the quadratic field Q[sqrt 2].
//!
//! Several of the per-case weight infima are of the form `a + b*sqrt(2)`
//! with rational `a, b`, and so are the triangle parameters attaining them.
//! Representing these as pairs keeps every comparison exact: a number
//! `a + b*sqrt(2)` has a well-defined sign computable from `a`, `b`, and the
//! single fact `sqrt(2)^2 = 2`, with no rounding anywhere.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::{rat, rat_int, rational_string, Rat, Scalar};

/// `rational + surd * sqrt(2)`. The representation is canonical: two values
/// are equal as reals iff both components match, since sqrt 2 is irrational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quad {
    pub rational: Rat,
    pub surd: Rat,
}

impl Quad {
    pub fn new(rational: Rat, surd: Rat) -> Self {
        Quad { rational, surd }
    }

    pub fn from_rat(rational: Rat) -> Self {
        Quad {
            rational,
            surd: Rat::zero(),
        }
    }

    /// Convenience literal: `(a + b*sqrt(2)) / d`.
    pub fn literal(a: i64, b: i64, d: i64) -> Self {
        Quad {
            rational: rat(a, d),
            surd: rat(b, d),
        }
    }

    pub fn sqrt2() -> Self {
        Quad {
            rational: Rat::zero(),
            surd: Rat::one(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    /// Sign of the real value: -1, 0, or +1.
    ///
    /// Mixed-sign components reduce to comparing `rational^2` with
    /// `2 * surd^2`; equality there would force sqrt 2 rational, so it only
    /// arises when both components are zero.
    pub fn sign(&self) -> i8 {
        let a = &self.rational;
        let b = &self.surd;
        match (a.is_zero(), b.is_zero()) {
            (true, true) => return 0,
            (false, true) => return if a.is_positive() { 1 } else { -1 },
            (true, false) => return if b.is_positive() { 1 } else { -1 },
            _ => {}
        }
        if a.is_positive() && b.is_positive() {
            return 1;
        }
        if a.is_negative() && b.is_negative() {
            return -1;
        }
        let a2 = a * a;
        let b2 = (b * b) * rat_int(2);
        match (a.is_positive(), a2.cmp(&b2)) {
            (true, Ordering::Greater) | (false, Ordering::Less) => 1,
            (true, Ordering::Less) | (false, Ordering::Greater) => -1,
            (_, Ordering::Equal) => 0,
        }
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            return write!(f, "{}", rational_string(&self.rational));
        }
        let surd_abs = Signed::abs(&self.surd);
        let surd_part = if surd_abs.is_one() {
            "sqrt(2)".to_string()
        } else {
            format!("{}*sqrt(2)", rational_string(&surd_abs))
        };
        if self.rational.is_zero() {
            if self.surd.is_negative() {
                write!(f, "-{surd_part}")
            } else {
                write!(f, "{surd_part}")
            }
        } else {
            let op = if self.surd.is_negative() { '-' } else { '+' };
            write!(f, "{}{op}{surd_part}", rational_string(&self.rational))
        }
    }
}

impl Add for Quad {
    type Output = Quad;
    fn add(self, rhs: Quad) -> Quad {
        Quad {
            rational: self.rational + rhs.rational,
            surd: self.surd + rhs.surd,
        }
    }
}

impl Sub for Quad {
    type Output = Quad;
    fn sub(self, rhs: Quad) -> Quad {
        Quad {
            rational: self.rational - rhs.rational,
            surd: self.surd - rhs.surd,
        }
    }
}

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad {
            rational: -self.rational,
            surd: -self.surd,
        }
    }
}

impl Mul for Quad {
    type Output = Quad;
    fn mul(self, rhs: Quad) -> Quad {
        // (a + b s)(c + d s) = ac + 2bd + (ad + bc) s, with s^2 = 2.
        let a = &self.rational;
        let b = &self.surd;
        let c = &rhs.rational;
        let d = &rhs.surd;
        Quad {
            rational: a * c + rat_int(2) * (b * d),
            surd: a * d + b * c,
        }
    }
}

impl Div for Quad {
    type Output = Quad;
    fn div(self, rhs: Quad) -> Quad {
        // Multiply by the conjugate; the norm c^2 - 2 d^2 vanishes only at 0.
        let c = &rhs.rational;
        let d = &rhs.surd;
        let norm = c * c - rat_int(2) * (d * d);
        assert!(!norm.is_zero(), "division by zero in Q[sqrt 2]");
        let conj = Quad {
            rational: rhs.rational.clone(),
            surd: -rhs.surd.clone(),
        };
        let num = self * conj;
        Quad {
            rational: num.rational / norm.clone(),
            surd: num.surd / norm,
        }
    }
}

impl Zero for Quad {
    fn zero() -> Self {
        Quad::from_rat(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }
}

impl One for Quad {
    fn one() -> Self {
        Quad::from_rat(Rat::one())
    }
}

impl PartialOrd for Quad {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = self.clone() - other.clone();
        Some(match diff.sign() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        })
    }
}

impl Scalar for Quad {
    fn from_int(n: i64) -> Self {
        Quad::from_rat(rat_int(n))
    }

    fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn to_f64_approx(&self) -> f64 {
        self.rational.to_f64_approx() + self.surd.to_f64_approx() * std::f64::consts::SQRT_2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, d: i64) -> Quad {
        Quad::literal(a, b, d)
    }

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(Quad::sqrt2() * Quad::sqrt2(), Quad::from_int(2));
    }

    #[test]
    fn field_arithmetic() {
        let x = q(3, 2, 1); // 3 + 2 sqrt 2
        let y = q(1, -1, 1); // 1 - sqrt 2
        assert_eq!(x.clone() * y.clone(), q(-1, -1, 1));
        assert_eq!(x.clone() / x.clone(), Quad::one());
        let z = x.clone() / y.clone();
        assert_eq!(z * y, x);
        assert_eq!(Quad::one() / q(1, 1, 1), q(-1, 1, 1)); // 1/(1+s) = s-1
    }

    #[test]
    fn sign_handles_mixed_components() {
        assert_eq!(q(3, -2, 1).sign(), 1); // 3 > 2 sqrt 2 ~ 2.83
        assert_eq!(q(-3, 2, 1).sign(), -1);
        assert_eq!(q(-7, 5, 1).sign(), 1); // 5 sqrt 2 ~ 7.07
        assert_eq!(q(7, -5, 1).sign(), -1);
        assert_eq!(Quad::zero().sign(), 0);
        assert_eq!(q(0, -1, 3).sign(), -1);
    }

    #[test]
    fn ordering_matches_real_values() {
        let vals = [q(3, 2, 1), q(2, 1, 1), q(3, 2, 2), q(3, 0, 2), q(0, 1, 1)];
        for x in &vals {
            for y in &vals {
                let exact = x.partial_cmp(y).unwrap();
                let float = x.to_f64_approx().partial_cmp(&y.to_f64_approx()).unwrap();
                assert_eq!(exact, float, "{x} vs {y}");
            }
        }
    }

    #[test]
    fn display_formats() {
        assert_eq!(q(3, 2, 1).to_string(), "3+2*sqrt(2)");
        assert_eq!(q(3, 2, 2).to_string(), "3/2+sqrt(2)");
        assert_eq!(q(3, 0, 2).to_string(), "3/2");
        assert_eq!(q(0, -1, 1).to_string(), "-sqrt(2)");
        assert_eq!(q(1, -3, 1).to_string(), "1-3*sqrt(2)");
    }

    #[test]
    fn scalar_abs_uses_real_sign() {
        let x = q(1, -1, 1); // 1 - sqrt 2 < 0
        assert_eq!(Scalar::abs(&x), q(-1, 1, 1));
        assert_eq!(Scalar::abs(&q(3, -2, 1)), q(3, -2, 1));
    }
}
