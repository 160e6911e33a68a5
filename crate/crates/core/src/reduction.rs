//! Piecewise-linear reduction of the weighted inequality.
//!
//! For a canonical triangle and weight `w > 0`, the margin
//! `(R_A + R_B + R_C) - w (r_a + r_b + r_c)` is piecewise linear in the
//! interior point `(x, y)`: the absolute values resolve to fixed signs on
//! each side of a vertical split line (`x = p` for type 1, `x = 0` for
//! type 2). On each side the margin equals a linear form
//! `alpha x + beta y + gamma` divided by a positive constant that clears the
//! denominators of the two slanted side distances. The twelve coefficient
//! triples (type x subcase x branch) are transcribed verbatim; the
//! equivalence with the direct margin is what the verification harness
//! checks sample by sample.

use serde::Serialize;

use crate::metric::Point;
use crate::sampling::RationalSampler;
use crate::scalar::{rational_string, scalar_max, Rat, Scalar};
use crate::triangle::{chain_holds, CanonicalTriangle, CaseTag, Subcase, TriangleType};
use crate::{Error, Result};

/// Side of the split line: `Left` is `x < x_split`, `Right` is `x >= x_split`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Left,
    Right,
}

impl Branch {
    pub fn both() -> [Branch; 2] {
        [Branch::Left, Branch::Right]
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Branch::Left => write!(f, "left"),
            Branch::Right => write!(f, "right"),
        }
    }
}

impl Serialize for Branch {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// One linear form `alpha x + beta y + gamma` valid on one branch.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearForm<T> {
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
    pub case: CaseTag,
    pub branch: Branch,
}

impl<T: Scalar> LinearForm<T> {
    pub fn eval(&self, m: &Point<T>) -> T {
        self.alpha.clone() * m.x.clone() + self.beta.clone() * m.y.clone() + self.gamma.clone()
    }
}

/// Abscissa of the split line: `p` for type 1, `0` for type 2.
pub fn split_abscissa<T: Scalar>(t: &CanonicalTriangle<T>) -> Result<T> {
    Ok(match t.classify()?.triangle_type {
        TriangleType::Type1 => t.p().clone(),
        TriangleType::Type2 => T::zero(),
    })
}

/// Branch containing abscissa `x`; the split line itself belongs to `Right`.
pub fn branch_of<T: Scalar>(t: &CanonicalTriangle<T>, x: &T) -> Result<Branch> {
    let split = split_abscissa(t)?;
    Ok(if *x < split { Branch::Left } else { Branch::Right })
}

/// Coefficients for the given case tag without reclassifying. The tag must
/// admit the parameters ([`chain_holds`]); on chain seams this allows either
/// adjacent tag, and the resulting forms agree there.
pub fn coefficients_for<T: Scalar>(
    tag: CaseTag,
    t: &CanonicalTriangle<T>,
    w: &T,
    branch: Branch,
) -> Result<LinearForm<T>> {
    if !(*w > T::zero()) {
        return Err(Error::InvalidWeight);
    }
    if !chain_holds(tag, t) {
        return Err(Error::OutsideChain);
    }
    let one = T::one();
    let two = T::from_int(2);
    let p = t.p().clone();
    let q = t.q().clone();
    let r = t.r().clone();
    let w = w.clone();
    use Branch::*;
    use Subcase::*;
    use TriangleType::*;
    let (alpha, beta, gamma) = match (tag.triangle_type, tag.subcase, branch) {
        (Type1, A, Left) => (
            (p.clone() - q.clone()) * w.clone() * r.clone() - p.clone() * q.clone(),
            -(p.clone() * q.clone() * (w.clone() - one)),
            p.clone() * q.clone() * (p.clone() + q.clone() + r.clone()),
        ),
        (Type1, A, Right) => (
            (p.clone() - q.clone()) * w.clone() * r.clone() + p.clone() * q.clone(),
            -(p.clone() * q.clone() * (w.clone() - one)),
            p.clone() * q.clone() * (-p.clone() + q.clone() + r.clone()),
        ),
        (Type1, B, Left) => (
            r.clone() * (w.clone() * (r.clone() - q.clone()) - q.clone()),
            q.clone() * (r.clone() - p.clone() * w.clone()),
            q.clone()
                * r.clone()
                * (w.clone() * (p.clone() - r.clone()) + p.clone() + q.clone() + r.clone()),
        ),
        (Type1, B, Right) => (
            r.clone() * (w.clone() * (r.clone() - q.clone()) + q.clone()),
            q.clone() * (r.clone() - p.clone() * w.clone()),
            q.clone()
                * r.clone()
                * (w.clone() * (p.clone() - r.clone()) - p.clone() + q.clone() + r.clone()),
        ),
        (Type1, C, Left) => (
            -r.clone(),
            w.clone() * (q.clone() - p.clone() - r.clone()) + r.clone(),
            r.clone() * (w.clone() * (p.clone() - q.clone()) + p.clone() + q.clone() + r.clone()),
        ),
        (Type1, C, Right) => (
            r.clone(),
            w.clone() * (q.clone() - p.clone() - r.clone()) + r.clone(),
            r.clone() * (w.clone() * (p.clone() - q.clone()) - p.clone() + q.clone() + r.clone()),
        ),
        (Type2, A, Left) => (
            p.clone() * q.clone() - (p.clone() + q.clone()) * w.clone() * r.clone(),
            -(p.clone() * q.clone() * (w.clone() + one)),
            p.clone()
                * q.clone()
                * (two * r.clone() * w.clone() + p.clone() - q.clone() - r.clone()),
        ),
        (Type2, A, Right) => (
            -(p.clone() * q.clone()) - (p.clone() + q.clone()) * w.clone() * r.clone(),
            -(p.clone() * q.clone() * (w.clone() + one)),
            p.clone()
                * q.clone()
                * (two * r.clone() * w.clone() + p.clone() - q.clone() - r.clone()),
        ),
        (Type2, B, Left) => (
            r.clone() * (w.clone() * (r.clone() - q.clone()) - q.clone()),
            q.clone() * (r.clone() - p.clone() * w.clone()),
            q.clone()
                * r.clone()
                * (w.clone() * (p.clone() - r.clone()) - p.clone() + q.clone() + r.clone()),
        ),
        (Type2, B, Right) => (
            r.clone() * (w.clone() * (r.clone() - q.clone()) + q.clone()),
            q.clone() * (r.clone() - p.clone() * w.clone()),
            q.clone()
                * r.clone()
                * (w.clone() * (p.clone() - r.clone()) - p.clone() + q.clone() + r.clone()),
        ),
        (Type2, C, Left) => (
            -r.clone(),
            w.clone() * (q.clone() - p.clone() - r.clone()) + r.clone(),
            r.clone() * (w.clone() * (p.clone() - q.clone()) - p.clone() + q.clone() + r.clone()),
        ),
        (Type2, C, Right) => (
            r.clone(),
            w.clone() * (q.clone() - p.clone() - r.clone()) + r.clone(),
            r.clone() * (w.clone() * (p.clone() - q.clone()) - p.clone() + q.clone() + r.clone()),
        ),
    };
    Ok(LinearForm {
        alpha,
        beta,
        gamma,
        case: tag,
        branch,
    })
}

/// Coefficients for the triangle's own classification.
pub fn coefficients<T: Scalar>(
    t: &CanonicalTriangle<T>,
    w: &T,
    branch: Branch,
) -> Result<LinearForm<T>> {
    coefficients_for(t.classify()?, t, w, branch)
}

/// The margin `(R_A + R_B + R_C) - w (r_a + r_b + r_c)` computed directly
/// from the distance definitions, with the side lines written out:
/// `r x + q y - q r = 0` for the side through `A` and `C`, and
/// `r x + p y - p r = 0` for the side through `A` and `B`.
///
/// Total for any `p < q`, `r > 0` and any `(x, y)`; no case analysis.
pub fn direct_margin<T: Scalar>(t: &CanonicalTriangle<T>, w: &T, m: &Point<T>) -> T {
    let p = t.p().clone();
    let q = t.q().clone();
    let r = t.r().clone();
    let x = m.x.clone();
    let y = m.y.clone();

    let lhs = x.abs()
        + (y.clone() - r.clone()).abs()
        + (x.clone() - p.clone()).abs()
        + (x.clone() - q.clone()).abs()
        + y.abs()
        + y.abs();

    let ac = (q.clone() * r.clone() - r.clone() * x.clone() - q.clone() * y.clone()).abs()
        / scalar_max(r.abs(), q.abs());
    let ab = (p.clone() * r.clone() - r.clone() * x.clone() - p.clone() * y.clone()).abs()
        / scalar_max(r.abs(), p.abs());
    let rhs = w.clone() * (y.abs() + ac + ab);

    lhs - rhs
}

/// The positive constant relating the table form to the direct margin:
/// `|p| q` for subcase a, `q r` for subcase b, `r` for subcase c. In
/// subcases a and b it clears both slanted-side denominators; in subcase c
/// both denominators equal `r`, so a single factor clears them.
pub fn scale_factor<T: Scalar>(t: &CanonicalTriangle<T>) -> Result<T> {
    let tag = t.classify()?;
    Ok(match tag.subcase {
        Subcase::A => t.p().abs() * t.q().clone(),
        Subcase::B => t.q().clone() * t.r().clone(),
        Subcase::C => t.r().clone(),
    })
}

/// Table-form margin at a strictly interior point: picks the branch of `m`
/// and evaluates its linear form. Equals `scale_factor * direct_margin`.
pub fn reduced_margin<T: Scalar>(t: &CanonicalTriangle<T>, w: &T, m: &Point<T>) -> Result<T> {
    if !t.contains_interior(m, &T::zero()) {
        return Err(Error::ExteriorPoint);
    }
    let branch = branch_of(t, &m.x)?;
    Ok(coefficients(t, w, branch)?.eval(m))
}

/// Testing hook for the verification harness: shifts one cell's constant
/// term so that a deliberately wrong table is reported as such.
#[derive(Debug, Clone)]
pub struct Perturbation {
    pub case: CaseTag,
    pub branch: Branch,
    pub gamma_shift: Rat,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellWitness {
    pub p: String,
    pub q: String,
    pub r: String,
    pub w: String,
    pub x: String,
    pub y: String,
    pub reduced: String,
    pub scaled_direct: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellCheck {
    pub case: CaseTag,
    pub branch: Branch,
    pub samples: usize,
    pub mismatches: usize,
    pub first_mismatch: Option<CellWitness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableVerifyReport {
    pub samples_per_cell: usize,
    pub seed: u64,
    pub cells: Vec<CellCheck>,
    pub all_match: bool,
}

/// Checks `form(x, y) == scale_factor * direct_margin` in exact rational
/// arithmetic on random in-chain samples for every (case, branch) cell.
/// Samples include chain boundaries and points on the split line.
pub fn verify_tables(
    samples_per_cell: usize,
    seed: u64,
    perturbation: Option<&Perturbation>,
) -> TableVerifyReport {
    let mut cells = Vec::new();
    let mut sampler = RationalSampler::new(seed);
    for tag in CaseTag::all() {
        for branch in Branch::both() {
            let mut mismatches = 0usize;
            let mut first_mismatch = None;
            for _ in 0..samples_per_cell {
                let (t, m) = sampler.cell_sample(tag, branch);
                let w = sampler.weight();
                let mut form = coefficients_for(tag, &t, &w, branch)
                    .expect("sampled parameters satisfy the chain");
                if let Some(pert) = perturbation {
                    if pert.case == tag && pert.branch == branch {
                        form.gamma = form.gamma.clone() + pert.gamma_shift.clone();
                    }
                }
                let reduced = form.eval(&m);
                let scaled = scale_factor(&t).expect("sampled triangles classify")
                    * direct_margin(&t, &w, &m);
                if reduced != scaled {
                    mismatches += 1;
                    if first_mismatch.is_none() {
                        first_mismatch = Some(CellWitness {
                            p: rational_string(t.p()),
                            q: rational_string(t.q()),
                            r: rational_string(t.r()),
                            w: rational_string(&w),
                            x: rational_string(&m.x),
                            y: rational_string(&m.y),
                            reduced: rational_string(&reduced),
                            scaled_direct: rational_string(&scaled),
                        });
                    }
                }
            }
            cells.push(CellCheck {
                case: tag,
                branch,
                samples: samples_per_cell,
                mismatches,
                first_mismatch,
            });
        }
    }
    let all_match = cells.iter().all(|c| c.mismatches == 0);
    TableVerifyReport {
        samples_per_cell,
        seed,
        cells,
        all_match,
    }
}
