//! Per-case weight bounds and their infima.
//!
//! On each branch the margin form is linear, so over a subtriangle it is
//! minimized at a vertex. Requiring the form to be nonnegative at a key
//! vertex (the triangle corners plus the split vertex) yields, for each
//! (case, vertex) pair, an upper bound `w <= omega(p, q, r)`; the inequality
//! holds on the whole triangle iff it holds at `w = min omega` over the key
//! vertices. The infimum of each omega over its chain region is an explicit
//! constant, rational or in Q[sqrt 2]; whether it is attained decides
//! whether the bound is sharp with equality or only in the limit.

use serde::Serialize;

use crate::metric::Point;
use crate::quad::Quad;
use crate::reduction::{coefficients_for, Branch};
use crate::report::ExactValue;
use crate::sampling::RationalSampler;
use crate::scalar::{rat, rat_int, Rat, Scalar};
use crate::triangle::{chain_holds, CanonicalTriangle, CaseTag, Subcase, TriangleType};
use crate::{Error, Result};

/// Key vertex of the piecewise-linear analysis. `D` is the split vertex on
/// the slanted side for type 1; `O` is the altitude foot (origin) for type 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexRole {
    A,
    B,
    C,
    D,
    O,
}

impl std::fmt::Display for VertexRole {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            VertexRole::A => "A",
            VertexRole::B => "B",
            VertexRole::C => "C",
            VertexRole::D => "D",
            VertexRole::O => "O",
        };
        write!(f, "{s}")
    }
}

impl Serialize for VertexRole {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Whether the infimum is attained by admissible parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Attainment {
    Closed,
    Open,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundResult {
    pub infimum: Quad,
    pub attainment: Attainment,
}

impl BoundResult {
    pub fn infimum_f64(&self) -> f64 {
        self.infimum.to_f64_approx()
    }
}

/// The key vertices analyzed for each triangle type.
pub fn roles_for(ty: TriangleType) -> [VertexRole; 4] {
    match ty {
        TriangleType::Type1 => [VertexRole::A, VertexRole::B, VertexRole::C, VertexRole::D],
        TriangleType::Type2 => [VertexRole::A, VertexRole::B, VertexRole::C, VertexRole::O],
    }
}

/// All 24 analyzed (case, vertex) pairs.
pub fn covered_rows() -> Vec<(CaseTag, VertexRole)> {
    let mut rows = Vec::with_capacity(24);
    for tag in CaseTag::all() {
        for role in roles_for(tag.triangle_type) {
            rows.push((tag, role));
        }
    }
    rows
}

fn uncovered(tag: CaseTag, vertex: VertexRole) -> Error {
    Error::UncoveredCombination(format!("case {tag}, vertex {vertex}"))
}

/// Coordinates of a key vertex.
pub fn key_point<T: Scalar>(
    tag: CaseTag,
    vertex: VertexRole,
    t: &CanonicalTriangle<T>,
) -> Result<Point<T>> {
    match (tag.triangle_type, vertex) {
        (_, VertexRole::A) => Ok(Point::new(T::zero(), t.r().clone())),
        (_, VertexRole::B) => Ok(Point::new(t.p().clone(), T::zero())),
        (_, VertexRole::C) => Ok(Point::new(t.q().clone(), T::zero())),
        (TriangleType::Type1, VertexRole::D) => Ok(Point::new(
            t.p().clone(),
            t.r().clone() * (t.q().clone() - t.p().clone()) / t.q().clone(),
        )),
        (TriangleType::Type2, VertexRole::O) => Ok(Point::new(T::zero(), T::zero())),
        _ => Err(uncovered(tag, vertex)),
    }
}

/// Which branch's form governs each key vertex. `A` sits at `x = 0`: left of
/// the split for type 1 (the `p = 0` seam is value-equivalent), on it for
/// type 2. `B` sits at `x = p`: on the split for type 1, left of it for
/// type 2. `C`, `D`, `O` take the right branch.
pub fn statement_branch(ty: TriangleType, vertex: VertexRole) -> Result<Branch> {
    match (ty, vertex) {
        (TriangleType::Type1, VertexRole::A) => Ok(Branch::Left),
        (TriangleType::Type2, VertexRole::A) => Ok(Branch::Right),
        (TriangleType::Type1, VertexRole::B) => Ok(Branch::Right),
        (TriangleType::Type2, VertexRole::B) => Ok(Branch::Left),
        (_, VertexRole::C) => Ok(Branch::Right),
        (TriangleType::Type1, VertexRole::D) => Ok(Branch::Right),
        (TriangleType::Type2, VertexRole::O) => Ok(Branch::Right),
        (ty, v) => Err(Error::UncoveredCombination(format!(
            "type {}, vertex {v}",
            match ty {
                TriangleType::Type1 => 1,
                TriangleType::Type2 => 2,
            }
        ))),
    }
}

/// Closed-form upper bound `omega(p, q, r)` for the weight, from requiring
/// the branch form to be nonnegative at the given key vertex.
pub fn omega<T: Scalar>(tag: CaseTag, vertex: VertexRole, t: &CanonicalTriangle<T>) -> Result<T> {
    if !chain_holds(tag, t) {
        return Err(Error::OutsideChain);
    }
    let one = T::one();
    let two = T::from_int(2);
    let p = t.p().clone();
    let q = t.q().clone();
    let r = t.r().clone();
    use Subcase::*;
    use TriangleType::*;
    use VertexRole as V;
    let value = match (tag.triangle_type, tag.subcase, vertex) {
        (Type1, _, V::A) => two + (p + q) / r,
        (Type2, _, V::A) => two + (q - p) / r,
        (Type1, A | B, V::B) => {
            one + (q.clone() * q.clone() + p.clone() * r.clone()) / (r * (q - p))
        }
        (Type1, C, V::B) => one + (p.clone() + r) / (q - p),
        (Type2, A | B, V::B) => {
            (q.clone() / r.clone()) * (one + (r - p.clone()) / (q - p))
        }
        (Type2, C, V::B) => one + (r - p.clone()) / (q - p),
        (Type1, A, V::C) => (p.clone() / r.clone()) * (one + (q.clone() + r) / (q - p)),
        (Type1, B | C, V::C) => one + (q.clone() + r) / (q - p),
        (Type2, A, V::C) => (-p.clone() / r.clone()) * (one + (q.clone() + r) / (q - p)),
        (Type2, B | C, V::C) => one + (q.clone() + r) / (q - p),
        (Type1, A, V::D) => {
            one + (q.clone() * q.clone() + p.clone() * r.clone()) / (two * r * (q - p))
        }
        (Type1, B | C, V::D) => {
            one.clone() + (q.clone() - p.clone()) / (r + p.clone()) + q.clone() / (q - p)
        }
        (Type2, A, V::O) => one / two.clone() + (q - p) / (two * r),
        (Type2, B, V::O) => one + q / (r - p),
        (Type2, C, V::O) => one + r / (q - p),
        _ => return Err(uncovered(tag, vertex)),
    };
    Ok(value)
}

/// ASCII rendering of the omega formula for a row.
pub fn omega_formula(tag: CaseTag, vertex: VertexRole) -> Result<&'static str> {
    use Subcase::*;
    use TriangleType::*;
    use VertexRole as V;
    Ok(match (tag.triangle_type, tag.subcase, vertex) {
        (Type1, _, V::A) => "2 + (p+q)/r",
        (Type2, _, V::A) => "2 + (q-p)/r",
        (Type1, A | B, V::B) => "1 + (q^2+p*r)/(r*(q-p))",
        (Type1, C, V::B) => "1 + (p+r)/(q-p)",
        (Type2, A | B, V::B) => "(q/r)*(1 + (r-p)/(q-p))",
        (Type2, C, V::B) => "1 + (r-p)/(q-p)",
        (Type1, A, V::C) => "(p/r)*(1 + (q+r)/(q-p))",
        (Type1, B | C, V::C) => "1 + (q+r)/(q-p)",
        (Type2, A, V::C) => "(-p/r)*(1 + (q+r)/(q-p))",
        (Type2, B | C, V::C) => "1 + (q+r)/(q-p)",
        (Type1, A, V::D) => "1 + (q^2+p*r)/(2*r*(q-p))",
        (Type1, B | C, V::D) => "1 + (q-p)/(r+p) + q/(q-p)",
        (Type2, A, V::O) => "1/2 + (q-p)/(2*r)",
        (Type2, B, V::O) => "1 + q/(r-p)",
        (Type2, C, V::O) => "1 + r/(q-p)",
        _ => return Err(uncovered(tag, vertex)),
    })
}

/// Recomputes the vertex bound from the branch form instead of the closed
/// formula: the form is affine in `w` with negative slope at every covered
/// key vertex, so its root is the bound. Agreement with [`omega`] is the
/// cross-check that the closed formulas were derived correctly.
pub fn vertex_bound_from_form<T: Scalar>(
    tag: CaseTag,
    vertex: VertexRole,
    t: &CanonicalTriangle<T>,
) -> Result<T> {
    let v = key_point(tag, vertex, t)?;
    let branch = statement_branch(tag.triangle_type, vertex)?;
    let f1 = coefficients_for(tag, t, &T::one(), branch)?.eval(&v);
    let f2 = coefficients_for(tag, t, &T::from_int(2), branch)?.eval(&v);
    let slope = f2 - f1.clone();
    if !(slope < T::zero()) {
        return Err(Error::DegenerateWeightCoefficient);
    }
    Ok(T::one() - f1 / slope)
}

/// Exact infimum of omega over the chain region, with attainment.
pub fn subcase_infimum(tag: CaseTag, vertex: VertexRole) -> Result<BoundResult> {
    use Attainment::*;
    use Subcase::*;
    use TriangleType::*;
    use VertexRole as V;
    let (infimum, attainment) = match (tag.triangle_type, tag.subcase, vertex) {
        (Type1, A, V::A) => (Quad::from_int(4), Open),
        (Type1, B, V::A) => (Quad::from_int(3), Closed),
        (Type1, C, V::A) => (Quad::from_int(2), Open),
        (Type2, A, V::A) => (Quad::from_int(4), Closed),
        (Type2, B, V::A) => (Quad::from_int(3), Open),
        (Type2, C, V::A) => (Quad::from_int(2), Open),

        (Type1, A, V::B) => (Quad::literal(3, 2, 1), Closed), // 3 + 2 sqrt 2
        (Type1, B, V::B) => (Quad::from_int(2), Closed),
        (Type1, C, V::B) => (Quad::from_int(2), Open),
        (Type2, A, V::B) => (Quad::from_int(2), Closed),
        (Type2, B, V::B) => (Quad::from_int(2), Closed),
        (Type2, C, V::B) => (Quad::from_int(2), Open),

        (Type1, A, V::C) => (Quad::from_int(2), Open),
        (Type1, B, V::C) => (Quad::from_int(2), Open),
        (Type1, C, V::C) => (Quad::from_int(3), Open),
        (Type2, A, V::C) => (Quad::from_int(2), Closed),
        (Type2, B, V::C) => (Quad::from_int(2), Closed),
        (Type2, C, V::C) => (Quad::from_int(2), Open),

        (Type1, A, V::D) => (Quad::literal(2, 1, 1), Closed), // 2 + sqrt 2
        (Type1, B, V::D) => (Quad::literal(3, 2, 2), Closed), // 3/2 + sqrt 2
        (Type1, C, V::D) => (Quad::from_int(2), Open),

        (Type2, A, V::O) => (Quad::literal(3, 0, 2), Closed),
        (Type2, B, V::O) => (Quad::literal(3, 0, 2), Closed),
        (Type2, C, V::O) => (Quad::literal(3, 0, 2), Open),

        _ => return Err(uncovered(tag, vertex)),
    };
    Ok(BoundResult {
        infimum,
        attainment,
    })
}

/// For closed rows, exact parameters attaining the infimum; `None` for open
/// rows. Witnesses on chain seams are valid for both adjacent tags.
pub fn attaining_triangle(
    tag: CaseTag,
    vertex: VertexRole,
) -> Result<Option<CanonicalTriangle<Quad>>> {
    use Subcase::*;
    use TriangleType::*;
    use VertexRole as V;
    let qi = Quad::from_int;
    let sqrt2 = Quad::sqrt2();
    let params: Option<(Quad, Quad, Quad)> = match (tag.triangle_type, tag.subcase, vertex) {
        (Type1, B, V::A) => Some((qi(0), qi(1), qi(1))),
        (Type2, A, V::A) => Some((qi(-1), qi(1), qi(1))),
        (Type1, A, V::B) => Some((qi(1), qi(1) + sqrt2, qi(1))),
        (Type1, B, V::B) => Some((qi(0), qi(1), qi(1))),
        (Type2, A, V::B) => Some((qi(-1), qi(1), qi(1))),
        (Type2, B, V::B) => Some((qi(-1), qi(2), qi(2))),
        (Type2, A, V::C) => Some((qi(-1), qi(1), qi(1))),
        (Type2, B, V::C) => Some((qi(-1), qi(2), qi(1))),
        (Type1, A, V::D) => Some((qi(1), qi(1) + sqrt2, qi(1))),
        (Type1, B, V::D) => Some((qi(3) - qi(2) * sqrt2, qi(1), qi(1))),
        (Type2, A, V::O) => Some((qi(-1), qi(1), qi(1))),
        (Type2, B, V::O) => Some((qi(-1), qi(1), qi(1))),
        _ => None,
    };
    // Consistency: a witness exists iff the row is closed.
    let closed = subcase_infimum(tag, vertex)?.attainment == Attainment::Closed;
    debug_assert_eq!(params.is_some(), closed, "row {tag}/{vertex}");
    match params {
        None => Ok(None),
        Some((p, q, r)) => Ok(Some(
            CanonicalTriangle::new(p, q, r).expect("witnesses are valid triangles"),
        )),
    }
}

/// Numerator/denominator pairs of the continued-fraction convergents of
/// sqrt 2: 1, 3/2, 7/5, 17/12, ... Convergence is geometric.
fn sqrt2_convergent(index: u64) -> Rat {
    let mut num = rat_int(1);
    let mut den = rat_int(1);
    for _ in 0..index.min(30) {
        let next_num = num.clone() + rat_int(2) * den.clone();
        let next_den = num + den;
        num = next_num;
        den = next_den;
    }
    num / den
}

/// Rational parameter family indexed by `n >= 2` whose omega values descend
/// to the row's infimum: the gap is O(1/n) for rational infima and
/// quadratically small in the sqrt 2 convergent for the irrational ones.
pub fn sharpness_triangle(
    tag: CaseTag,
    vertex: VertexRole,
    n: u64,
) -> Result<CanonicalTriangle<Rat>> {
    use Subcase::*;
    use TriangleType::*;
    use VertexRole as V;
    let n = n.max(2) as i64;
    let inv = rat(1, n);
    let one = rat_int(1);
    let (p, q, r) = match (tag.triangle_type, tag.subcase, vertex) {
        (Type1, A, V::A) => (one.clone(), one.clone() + inv, one.clone()),
        (Type1, B, V::A) => (inv, one.clone(), one.clone()),
        (Type1, C, V::A) => (rat_int(0), one, rat_int(n)),
        (Type2, A, V::A) => (rat_int(-1), one.clone() + inv, one),
        (Type2, B, V::A) => (-inv, one.clone(), one),
        (Type2, C, V::A) => (rat_int(-1), one, rat_int(n)),

        (Type1, A, V::B) => (one.clone(), one + sqrt2_convergent(n as u64), rat_int(1)),
        (Type1, B, V::B) => (inv, one.clone(), one),
        (Type1, C, V::B) => (rat_int(0), one.clone(), one + inv),
        (Type2, A, V::B) => (rat_int(-1), one.clone() + inv, one),
        (Type2, B, V::B) => (rat_int(-1), rat_int(2) + inv, rat_int(2)),
        (Type2, C, V::B) => (rat_int(-1), one.clone(), one + inv),

        (Type1, A, V::C) => (one.clone(), rat_int(n), one),
        (Type1, B, V::C) => (rat_int(0), rat_int(n), one),
        (Type1, C, V::C) => (rat_int(0), one.clone(), one + inv),
        (Type2, A, V::C) => (rat_int(-1), rat_int(n), one),
        (Type2, B, V::C) => (rat_int(-1), rat_int(n), one),
        (Type2, C, V::C) => (rat_int(-1), one.clone(), one + inv),

        (Type1, A, V::D) => (one.clone(), one + sqrt2_convergent(n as u64), rat_int(1)),
        (Type1, B, V::D) => (
            rat_int(3) - rat_int(2) * sqrt2_convergent(n as u64),
            one.clone(),
            one,
        ),
        (Type1, C, V::D) => (rat_int(0), one, rat_int(n)),

        (Type2, A, V::O) => (rat_int(-1), one.clone() + inv, one),
        (Type2, B, V::O) => (rat_int(-1), one.clone() + inv.clone(), one + inv),
        (Type2, C, V::O) => (rat_int(-1), one.clone(), one + inv),

        _ => return Err(uncovered(tag, vertex)),
    };
    let t = CanonicalTriangle::new(p, q, r).expect("family members are valid triangles");
    debug_assert!(chain_holds(tag, &t), "family for {tag}/{vertex} left its chain");
    Ok(t)
}

/// Largest weight for which the inequality holds on all interior points of
/// this triangle: the minimum of the key-vertex bounds.
pub fn admissible_weight<T: Scalar>(t: &CanonicalTriangle<T>) -> Result<T> {
    let tag = t.classify()?;
    let mut best: Option<T> = None;
    for role in roles_for(tag.triangle_type) {
        let w = omega(tag, role, t)?;
        best = Some(match best {
            None => w,
            Some(b) => crate::scalar::scalar_min(b, w),
        });
    }
    Ok(best.expect("four key vertices"))
}

/// The global weight bound over all analyzed cases: 3/2.
pub fn global_bound<T: Scalar>() -> T {
    T::from_int(3) / T::from_int(2)
}

/// One row of the bounds table with sampling evidence attached.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsRow {
    pub case: CaseTag,
    pub vertex: VertexRole,
    pub formula: &'static str,
    pub infimum_exact: String,
    pub infimum_approx: f64,
    pub attainment: Attainment,
    pub samples: usize,
    pub sampled_min: Option<ExactValue>,
    /// Every sampled omega was >= the stated infimum (exact comparison).
    pub sound: bool,
    /// Gap between the sampled minimum and the infimum, if sampled.
    pub gap: Option<f64>,
}

/// Builds the 24-row table, sampling each chain region and comparing omega
/// values against the stated infimum in exact arithmetic.
pub fn bounds_rows(samples_per_row: usize, seed: u64) -> Vec<BoundsRow> {
    let mut sampler = RationalSampler::new(seed);
    covered_rows()
        .into_iter()
        .map(|(tag, vertex)| {
            let bound = subcase_infimum(tag, vertex).expect("covered row");
            let formula = omega_formula(tag, vertex).expect("covered row");
            let mut sampled_min: Option<Rat> = None;
            let mut sound = true;
            for _ in 0..samples_per_row {
                let t = sampler.triangle_in_chain(tag);
                let val = omega(tag, vertex, &t).expect("in-chain sample");
                let as_quad = Quad::from_rat(val.clone());
                if as_quad < bound.infimum {
                    sound = false;
                }
                sampled_min = Some(match sampled_min {
                    None => val,
                    Some(m) => crate::scalar::scalar_min(m, val),
                });
            }
            let sampled = sampled_min.as_ref().map(ExactValue::from_rat);
            let gap = sampled
                .as_ref()
                .map(|s| s.approx - bound.infimum.to_f64_approx());
            BoundsRow {
                case: tag,
                vertex,
                formula,
                infimum_exact: bound.infimum.to_string(),
                infimum_approx: bound.infimum_f64(),
                attainment: bound.attainment,
                samples: samples_per_row,
                sampled_min: sampled,
                sound,
                gap,
            }
        })
        .collect()
}
