//! Geometry of the taxicab (L1) plane, centered on weighted Erdos-Mordell
//! inequalities: for an interior point of a triangle, the sum of taxicab
//! distances to the vertices versus `w` times the sum of taxicab distances
//! to the edge lines.
//!
//! The crate keeps two arithmetic layers side by side. Everything structural
//! (distances, case analysis, the piecewise-linear reduction, the per-case
//! weight bounds) is generic over [`scalar::Scalar`] and runs exactly on
//! `BigRational` (and on the quadratic field Q[sqrt 2] where the sharp
//! constants live). The numerical explorer runs the same formulas on `f64`
//! for breadth, and rechecks anything surprising in exact arithmetic before
//! believing it.

pub mod bounds;
pub mod error;
pub mod explorer;
pub mod metric;
pub mod quad;
pub mod reduction;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod triangle;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
