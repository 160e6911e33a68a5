//! The canonical triangle and its case analysis.
//!
//! Up to taxicab isometry (translations, axis reflections), a triangle with
//! a horizontal side can be placed with vertices `A(0, r)`, `B(p, 0)`,
//! `C(q, 0)` where `p < q` and `r > 0`. Two positional types matter for the
//! analysis, each split into three subcases by where `r` falls relative to
//! `|p|` and `q`:
//!
//! * type 1: `0 <= p < q` (both base vertices on one side of the altitude
//!   foot), subcases `r <= p`, `p < r <= q`, `r > q`;
//! * type 2: `p < 0 < q` with `-p <= q`, subcases `r <= -p`,
//!   `-p < r <= q`, `r > q`.
//!
//! Configurations with `q <= 0` or `-p > q` are mirror images of the above
//! under `x -> -x` and are not analyzed separately; classification rejects
//! them rather than silently reflecting.

use serde::Serialize;

use crate::metric::{
    line_through, signed_margin_toward, taxicab_distance, taxicab_point_line_distance, LineCoeffs,
    Point,
};
use crate::scalar::Scalar;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleType {
    Type1,
    Type2,
}

/// Subcase by the height band: `A` is the low band (`r` below both reference
/// abscissas), `B` the middle band, `C` the tall band (`r > q`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subcase {
    A,
    B,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CaseTag {
    pub triangle_type: TriangleType,
    pub subcase: Subcase,
}

impl CaseTag {
    pub fn new(triangle_type: TriangleType, subcase: Subcase) -> Self {
        CaseTag {
            triangle_type,
            subcase,
        }
    }

    pub fn all() -> [CaseTag; 6] {
        use Subcase::*;
        use TriangleType::*;
        [
            CaseTag::new(Type1, A),
            CaseTag::new(Type1, B),
            CaseTag::new(Type1, C),
            CaseTag::new(Type2, A),
            CaseTag::new(Type2, B),
            CaseTag::new(Type2, C),
        ]
    }
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let t = match self.triangle_type {
            TriangleType::Type1 => '1',
            TriangleType::Type2 => '2',
        };
        let s = match self.subcase {
            Subcase::A => 'a',
            Subcase::B => 'b',
            Subcase::C => 'c',
        };
        write!(f, "{t}{s}")
    }
}

impl Serialize for CaseTag {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Distances indexed by vertex (`a` belongs to vertex `A`, etc.; for edges,
/// `a` is the distance to the line of the side opposite `A`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceTriple<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Scalar> DistanceTriple<T> {
    pub fn sum(&self) -> T {
        self.a.clone() + self.b.clone() + self.c.clone()
    }
}

/// Canonical triangle `A(0, r)`, `B(p, 0)`, `C(q, 0)` with `p < q`, `r > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalTriangle<T> {
    p: T,
    q: T,
    r: T,
}

impl<T: Scalar> CanonicalTriangle<T> {
    pub fn new(p: T, q: T, r: T) -> Result<Self> {
        if !(p.is_finite_scalar() && q.is_finite_scalar() && r.is_finite_scalar()) {
            return Err(Error::NonFiniteCoordinate);
        }
        if !(p < q && r > T::zero()) {
            return Err(Error::InvalidTriangle);
        }
        Ok(CanonicalTriangle { p, q, r })
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    pub fn r(&self) -> &T {
        &self.r
    }

    pub fn vertex_a(&self) -> Point<T> {
        Point::new(T::zero(), self.r.clone())
    }

    pub fn vertex_b(&self) -> Point<T> {
        Point::new(self.p.clone(), T::zero())
    }

    pub fn vertex_c(&self) -> Point<T> {
        Point::new(self.q.clone(), T::zero())
    }

    pub fn vertices(&self) -> [Point<T>; 3] {
        [self.vertex_a(), self.vertex_b(), self.vertex_c()]
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Result<CanonicalTriangle<U>> {
        CanonicalTriangle::new(f(&self.p), f(&self.q), f(&self.r))
    }

    /// Largest pairwise taxicab distance between vertices.
    pub fn diameter(&self) -> T {
        let [a, b, c] = self.vertices();
        let ab = taxicab_distance(&a, &b);
        let ac = taxicab_distance(&a, &c);
        let bc = taxicab_distance(&b, &c);
        crate::scalar::scalar_max(ab, crate::scalar::scalar_max(ac, bc))
    }

    /// Side lines opposite `A`, `B`, `C`, paired with the opposite vertex.
    pub fn edge_lines(&self) -> [(LineCoeffs<T>, Point<T>); 3] {
        let a = self.vertex_a();
        let b = self.vertex_b();
        let c = self.vertex_c();
        let bc = line_through(&b, &c).expect("p < q keeps B and C distinct");
        let ca = line_through(&c, &a).expect("r > 0 keeps C and A distinct");
        let ab = line_through(&a, &b).expect("r > 0 keeps A and B distinct");
        [(bc, a), (ca, b), (ab, c)]
    }

    /// Positional type and height band. Errors with [`Error::Unclassifiable`]
    /// on mirror configurations (`q <= 0` or `-p > q`).
    ///
    /// On the type-2 boundary `r = -p` the subcase-a and subcase-b parameter
    /// chains both hold as written; the first match (subcase a) is returned.
    /// Every derived quantity agrees across that seam, so the choice does not
    /// affect values, only labels.
    pub fn classify(&self) -> Result<CaseTag> {
        use Subcase::*;
        use TriangleType::*;
        let zero = T::zero();
        if self.p >= zero {
            // Type 1; the r <= p band requires p > 0 to be nonempty.
            let sub = if self.r <= self.p {
                A
            } else if self.r <= self.q {
                B
            } else {
                C
            };
            return Ok(CaseTag::new(Type1, sub));
        }
        if self.q <= zero || -self.p.clone() > self.q {
            return Err(Error::Unclassifiable);
        }
        let minus_p = -self.p.clone();
        let sub = if self.r <= minus_p {
            A
        } else if self.r <= self.q {
            B
        } else {
            C
        };
        Ok(CaseTag::new(Type2, sub))
    }

    /// Taxicab distances from `m` to the three vertices.
    pub fn vertex_distances(&self, m: &Point<T>) -> DistanceTriple<T> {
        DistanceTriple {
            a: taxicab_distance(m, &self.vertex_a()),
            b: taxicab_distance(m, &self.vertex_b()),
            c: taxicab_distance(m, &self.vertex_c()),
        }
    }

    /// Taxicab distances from `m` to the three side lines.
    pub fn edge_distances(&self, m: &Point<T>) -> DistanceTriple<T> {
        let [(bc, _), (ca, _), (ab, _)] = self.edge_lines();
        DistanceTriple {
            a: taxicab_point_line_distance(m, &bc).expect("side lines are valid"),
            b: taxicab_point_line_distance(m, &ca).expect("side lines are valid"),
            c: taxicab_point_line_distance(m, &ab).expect("side lines are valid"),
        }
    }

    /// Smallest signed taxicab margin of `m` over the three sides; positive
    /// iff `m` is strictly interior.
    pub fn interior_margin(&self, m: &Point<T>) -> T {
        let [e0, e1, e2] = self.edge_lines();
        let mut worst: Option<T> = None;
        for (line, opposite) in [e0, e1, e2] {
            let s = signed_margin_toward(&line, &opposite, m)
                .expect("canonical triangles are nondegenerate");
            worst = Some(match worst {
                None => s,
                Some(w) => crate::scalar::scalar_min(w, s),
            });
        }
        worst.expect("three edges")
    }

    /// Strict interiority with a safety margin: every signed side margin must
    /// be positive and at least `margin` (same units as distances).
    pub fn contains_interior(&self, m: &Point<T>, margin: &T) -> bool {
        let worst = self.interior_margin(m);
        worst > T::zero() && worst >= *margin
    }

    /// Ratio of vertex-distance sum to edge-distance sum at a strictly
    /// interior point.
    pub fn em_ratio(&self, m: &Point<T>) -> Result<T> {
        if !self.contains_interior(m, &T::zero()) {
            return Err(Error::ExteriorPoint);
        }
        let l = self.vertex_distances(m).sum();
        let r = self.edge_distances(m).sum();
        Ok(l / r)
    }

    /// The vertices at which piecewise-linear functionals over the triangle
    /// attain extrema: `A`, `B`, `C`, plus the split vertex. For type 1 that
    /// is `D = (p, r (q - p) / q)`, where the vertical line `x = p` meets the
    /// side `AC`; for type 2 it is the altitude foot `O = (0, 0)`.
    pub fn key_vertices(&self) -> Result<Vec<Point<T>>> {
        let tag = self.classify()?;
        let mut vs = self.vertices().to_vec();
        match tag.triangle_type {
            TriangleType::Type1 => {
                let d_y = self.r.clone() * (self.q.clone() - self.p.clone()) / self.q.clone();
                vs.push(Point::new(self.p.clone(), d_y));
            }
            TriangleType::Type2 => {
                vs.push(Point::new(T::zero(), T::zero()));
            }
        }
        Ok(vs)
    }
}

/// Whether the parameter chain of `tag` holds for `(p, q, r)`, boundaries
/// included. Unlike [`CanonicalTriangle::classify`], which resolves overlap
/// by first match, this reports raw chain membership; on the type-2 seam
/// `r = -p` both the subcase-a and subcase-b chains hold.
pub fn chain_holds<T: Scalar>(tag: CaseTag, t: &CanonicalTriangle<T>) -> bool {
    let zero = T::zero();
    let p = t.p().clone();
    let q = t.q().clone();
    let r = t.r().clone();
    match tag.triangle_type {
        TriangleType::Type1 => {
            if p < zero {
                return false;
            }
            match tag.subcase {
                Subcase::A => p > zero && r <= p,
                Subcase::B => p < r && r <= q,
                Subcase::C => r > q,
            }
        }
        TriangleType::Type2 => {
            if !(p < zero && zero < q && -p.clone() <= q) {
                return false;
            }
            match tag.subcase {
                Subcase::A => r <= -p,
                Subcase::B => -p <= r && r <= q,
                Subcase::C => r > q,
            }
        }
    }
}
