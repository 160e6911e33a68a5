//! Distances in the taxicab plane.
//!
//! The taxicab distance between points is `|dx| + |dy|`. The distance from a
//! point to a line `ax + by + c = 0` is `|a x + b y + c| / max(|a|, |b|)`:
//! the infimum over the line is attained by moving parallel to whichever
//! axis the line crosses more steeply. Both formulas are exact over the
//! rationals, which is what the verification layer relies on.

use serde::Serialize;

use crate::scalar::{scalar_max, Scalar};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }
}

impl<T: Scalar> Point<T> {
    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Point<U> {
        Point {
            x: f(&self.x),
            y: f(&self.y),
        }
    }
}

/// A line `a x + b y + c = 0`. Valid iff `a` and `b` are not both zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LineCoeffs<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Scalar> LineCoeffs<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        LineCoeffs { a, b, c }
    }

    pub fn is_valid(&self) -> bool {
        !(self.a.is_zero() && self.b.is_zero())
    }

    /// Signed evaluation `a x + b y + c` at a point.
    pub fn eval(&self, m: &Point<T>) -> T {
        self.a.clone() * m.x.clone() + self.b.clone() * m.y.clone() + self.c.clone()
    }
}

/// Taxicab (L1) distance between two points.
pub fn taxicab_distance<T: Scalar>(a: &Point<T>, b: &Point<T>) -> T {
    (a.x.clone() - b.x.clone()).abs() + (a.y.clone() - b.y.clone()).abs()
}

/// Minkowski distance of order `k >= 1`: `(|dx|^k + |dy|^k)^(1/k)`.
///
/// The larger coordinate difference is factored out before exponentiation so
/// that extreme magnitudes stay stable. `k = 1` recovers the taxicab metric
/// exactly; orders below 1 violate the triangle inequality and are rejected.
pub fn minkowski_distance(a: &Point<f64>, b: &Point<f64>, k: f64) -> Result<f64> {
    if !(k >= 1.0) {
        return Err(Error::InvalidOrder(k));
    }
    let dx = (a.x - b.x).abs();
    let dy = (a.y - b.y).abs();
    if k == 1.0 {
        return Ok(dx + dy);
    }
    if !k.is_finite() {
        return Ok(dx.max(dy));
    }
    let m = dx.max(dy);
    if m == 0.0 {
        return Ok(0.0);
    }
    Ok(m * ((dx / m).powf(k) + (dy / m).powf(k)).powf(k.recip()))
}

/// Taxicab distance from a point to a line.
pub fn taxicab_point_line_distance<T: Scalar>(m: &Point<T>, l: &LineCoeffs<T>) -> Result<T> {
    if !l.is_valid() {
        return Err(Error::InvalidLine);
    }
    let num = l.eval(m).abs();
    let den = scalar_max(l.a.abs(), l.b.abs());
    Ok(num / den)
}

/// Coefficients of the line through two distinct points.
///
/// Returns `(dy, -dx, dx * ay - dy * ax)`; any nonzero scaling of the result
/// names the same line, and the point-line distance is invariant under that
/// scaling.
pub fn line_through<T: Scalar>(a: &Point<T>, b: &Point<T>) -> Result<LineCoeffs<T>> {
    if a == b {
        return Err(Error::CoincidentPoints);
    }
    let dx = b.x.clone() - a.x.clone();
    let dy = b.y.clone() - a.y.clone();
    Ok(LineCoeffs {
        a: dy.clone(),
        b: -dx.clone(),
        c: dx * a.y.clone() - dy * a.x.clone(),
    })
}

/// Signed taxicab margin of `m` relative to the line `l`, positive on the
/// side containing `toward`. `toward` must not lie on the line.
pub fn signed_margin_toward<T: Scalar>(
    l: &LineCoeffs<T>,
    toward: &Point<T>,
    m: &Point<T>,
) -> Result<T> {
    if !l.is_valid() {
        return Err(Error::InvalidLine);
    }
    let side = l.eval(toward);
    if side.is_zero() {
        return Err(Error::DegenerateTriangle);
    }
    let raw = l.eval(m);
    let den = scalar_max(l.a.abs(), l.b.abs());
    let signed = if side > T::zero() { raw } else { -raw };
    Ok(signed / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int, Rat};
    use num_traits::Zero;

    fn pt(x: f64, y: f64) -> Point<f64> {
        Point::new(x, y)
    }

    fn rpt(x: Rat, y: Rat) -> Point<Rat> {
        Point::new(x, y)
    }

    #[test]
    fn taxicab_examples() {
        assert_eq!(taxicab_distance(&pt(0.0, 2.0), &pt(0.0, 30.0)), 28.0);
        assert_eq!(taxicab_distance(&pt(0.0, 2.0), &pt(-20.0, 0.0)), 22.0);
        assert_eq!(taxicab_distance(&pt(1.5, -2.0), &pt(1.5, -2.0)), 0.0);
        let exact = taxicab_distance(
            &rpt(rat_int(0), rat_int(2)),
            &rpt(rat_int(40), rat_int(0)),
        );
        assert_eq!(exact, rat_int(42));
    }

    #[test]
    fn minkowski_examples() {
        let a = pt(0.0, 0.0);
        assert_eq!(minkowski_distance(&a, &pt(3.0, 4.0), 1.0).unwrap(), 7.0);
        assert_eq!(minkowski_distance(&a, &pt(3.0, 4.0), 2.0).unwrap(), 5.0);
        // Order 4 on the unit diagonal: (1 + 1)^(1/4).
        let d = minkowski_distance(&a, &pt(1.0, 1.0), 4.0).unwrap();
        assert!((d - 1.189207115002721).abs() < 1e-15);
        assert!(matches!(
            minkowski_distance(&a, &pt(1.0, 1.0), 0.5),
            Err(Error::InvalidOrder(_))
        ));
        assert!(matches!(
            minkowski_distance(&a, &pt(1.0, 1.0), f64::NAN),
            Err(Error::InvalidOrder(_))
        ));
        assert_eq!(
            minkowski_distance(&a, &pt(3.0, -4.0), f64::INFINITY).unwrap(),
            4.0
        );
    }

    #[test]
    fn minkowski_handles_extreme_magnitudes() {
        let d = minkowski_distance(&pt(0.0, 0.0), &pt(1e200, 1e200), 2.0).unwrap();
        assert!((d - 1e200 * std::f64::consts::SQRT_2).abs() < 1e186);
    }

    #[test]
    fn point_line_examples() {
        // Line through B(-20, 0) and C(40, 0) is y = 0.
        let bc = LineCoeffs::new(rat_int(0), rat_int(1), rat_int(0));
        let m = rpt(rat_int(0), rat_int(2));
        assert_eq!(taxicab_point_line_distance(&m, &bc).unwrap(), rat_int(2));

        // Line through A(0, 30) and C(40, 0): -30 x - 40 y + 1200 = 0.
        let ac = LineCoeffs::new(rat_int(-30), rat_int(-40), rat_int(1200));
        assert_eq!(taxicab_point_line_distance(&m, &ac).unwrap(), rat_int(28));

        // Line through A(0, 30) and B(-20, 0): 3 x - 2 y + 60 = 0.
        let ab = LineCoeffs::new(rat_int(3), rat_int(-2), rat_int(60));
        assert_eq!(taxicab_point_line_distance(&m, &ab).unwrap(), rat(56, 3));

        // A point on the line is at distance zero.
        let on = rpt(rat_int(40), rat_int(0));
        assert_eq!(taxicab_point_line_distance(&on, &ac).unwrap(), rat_int(0));

        let degenerate = LineCoeffs::new(rat_int(0), rat_int(0), rat_int(5));
        assert_eq!(
            taxicab_point_line_distance(&m, &degenerate),
            Err(Error::InvalidLine)
        );
    }

    #[test]
    fn line_through_examples() {
        let a = rpt(rat_int(0), rat_int(30));
        let c = rpt(rat_int(40), rat_int(0));
        let l = line_through(&a, &c).unwrap();
        assert_eq!(l, LineCoeffs::new(rat_int(-30), rat_int(-40), rat_int(1200)));
        assert!(l.eval(&a).is_zero());
        assert!(l.eval(&c).is_zero());
        assert_eq!(
            line_through(&a, &a.clone()),
            Err(Error::CoincidentPoints)
        );
    }

    #[test]
    fn point_line_distance_is_scale_invariant() {
        let m = rpt(rat(7, 3), rat(-1, 2));
        let l = LineCoeffs::new(rat_int(-30), rat_int(-40), rat_int(1200));
        let scaled = LineCoeffs::new(
            l.a.clone() * rat(-7, 5),
            l.b.clone() * rat(-7, 5),
            l.c.clone() * rat(-7, 5),
        );
        assert_eq!(
            taxicab_point_line_distance(&m, &l).unwrap(),
            taxicab_point_line_distance(&m, &scaled).unwrap()
        );
    }

    #[test]
    fn signed_margin_orientation() {
        let base = line_through(&rpt(rat_int(0), rat_int(0)), &rpt(rat_int(4), rat_int(0))).unwrap();
        let up = rpt(rat_int(0), rat_int(3));
        let m = rpt(rat_int(1), rat_int(1));
        assert_eq!(signed_margin_toward(&base, &up, &m).unwrap(), rat_int(1));
        let below = rpt(rat_int(1), rat_int(-2));
        assert_eq!(
            signed_margin_toward(&base, &up, &below).unwrap(),
            rat_int(-2)
        );
        let on_line = rpt(rat_int(2), rat_int(0));
        assert_eq!(
            signed_margin_toward(&base, &on_line, &m),
            Err(Error::DegenerateTriangle)
        );
    }
}
