//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid line: coefficients a and b are both zero")]
    InvalidLine,

    #[error("coincident points do not determine a line")]
    CoincidentPoints,

    #[error("metric order must satisfy k >= 1, got {0}")]
    InvalidOrder(f64),

    #[error("invalid triangle parameters: require p < q and r > 0")]
    InvalidTriangle,

    #[error("triangle parameters fall outside the analyzed cases (require q > 0 and |p| <= q)")]
    Unclassifiable,

    #[error("point is not strictly interior to the triangle")]
    ExteriorPoint,

    #[error("weight must be positive")]
    InvalidWeight,

    #[error("no bound is derived for this case and vertex: {0}")]
    UncoveredCombination(String),

    #[error("triangle parameters do not satisfy the subcase chain")]
    OutsideChain,

    #[error("reproduction check failed: {0}")]
    ReproductionMismatch(String),

    #[error("weight coefficient of the vertex form is not negative; no finite bound")]
    DegenerateWeightCoefficient,

    #[error("degenerate triangle: vertices are collinear")]
    DegenerateTriangle,

    #[error("search grid is empty: margin too large for this resolution")]
    EmptyGrid,

    #[error("coordinates must be finite")]
    NonFiniteCoordinate,

    #[error("cannot parse number: {0}")]
    ParseNumber(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
