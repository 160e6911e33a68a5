//! Numerical exploration: worst-case ratio searches over grids of interior
//! points, exact-arithmetic rechecks of any float-level violation, and the
//! reference configuration that separates weight 2 from weight 3/2.
//!
//! Float passes here are deterministic by construction: inputs are normalized
//! so the first vertex sits at the origin before any arithmetic happens, and
//! every loop runs in a fixed order with no parallelism.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::metric::{
    signed_margin_toward, taxicab_distance, taxicab_point_line_distance, LineCoeffs, Point,
};
use crate::reduction::direct_margin;
use crate::report::ExactValue;
use crate::scalar::{rat, rat_int, scalar_max, scalar_min, Rat, Scalar};
use crate::triangle::{CanonicalTriangle, DistanceTriple};
use crate::{Error, Result};

/// A triangle given by three vertices anywhere in the plane, in any
/// orientation. Unlike [`CanonicalTriangle`] this makes no normal-form
/// assumptions, so it can represent rotated and reflected configurations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneralTriangle<T: Scalar> {
    vertices: [Point<T>; 3],
}

impl<T: Scalar> GeneralTriangle<T> {
    pub fn new(a: Point<T>, b: Point<T>, c: Point<T>) -> Result<Self> {
        for v in [&a, &b, &c] {
            if !v.x.is_finite_scalar() || !v.y.is_finite_scalar() {
                return Err(Error::NonFiniteCoordinate);
            }
        }
        let ab_x = b.x.clone() - a.x.clone();
        let ab_y = b.y.clone() - a.y.clone();
        let ac_x = c.x.clone() - a.x.clone();
        let ac_y = c.y.clone() - a.y.clone();
        let cross = ab_x * ac_y - ab_y * ac_x;
        if cross == T::zero() {
            return Err(Error::InvalidTriangle);
        }
        Ok(GeneralTriangle {
            vertices: [a, b, c],
        })
    }

    pub fn vertices(&self) -> &[Point<T>; 3] {
        &self.vertices
    }

    /// Edge lines paired with the opposite vertex: (BC, A), (CA, B), (AB, C).
    pub fn edge_lines(&self) -> [(LineCoeffs<T>, &Point<T>); 3] {
        let [a, b, c] = &self.vertices;
        let bc = crate::metric::line_through(b, c).expect("distinct vertices");
        let ca = crate::metric::line_through(c, a).expect("distinct vertices");
        let ab = crate::metric::line_through(a, b).expect("distinct vertices");
        [(bc, a), (ca, b), (ab, c)]
    }

    pub fn vertex_distances(&self, m: &Point<T>) -> DistanceTriple<T> {
        let [a, b, c] = &self.vertices;
        DistanceTriple {
            a: taxicab_distance(m, a),
            b: taxicab_distance(m, b),
            c: taxicab_distance(m, c),
        }
    }

    pub fn edge_distances(&self, m: &Point<T>) -> DistanceTriple<T> {
        let [(bc, _), (ca, _), (ab, _)] = self.edge_lines();
        DistanceTriple {
            a: taxicab_point_line_distance(m, &bc).expect("valid edge line"),
            b: taxicab_point_line_distance(m, &ca).expect("valid edge line"),
            c: taxicab_point_line_distance(m, &ab).expect("valid edge line"),
        }
    }

    /// Smallest signed edge margin; positive exactly for interior points.
    pub fn interior_margin(&self, m: &Point<T>) -> T {
        let mut worst: Option<T> = None;
        for (line, toward) in self.edge_lines() {
            let s = signed_margin_toward(&line, toward, m).expect("nondegenerate triangle");
            worst = Some(match worst {
                None => s,
                Some(w) => scalar_min(w, s),
            });
        }
        worst.expect("three edges")
    }

    pub fn contains_interior(&self, m: &Point<T>, margin: &T) -> bool {
        let worst = self.interior_margin(m);
        worst > T::zero() && worst >= *margin
    }

    /// (R_A + R_B + R_C) / (r_a + r_b + r_c) for a strictly interior point.
    pub fn em_ratio(&self, m: &Point<T>) -> Result<T> {
        if !(self.interior_margin(m) > T::zero()) {
            return Err(Error::ExteriorPoint);
        }
        let rv = self.vertex_distances(m);
        let re = self.edge_distances(m);
        Ok(rv.sum() / re.sum())
    }

    pub fn diameter(&self) -> T {
        let [a, b, c] = &self.vertices;
        let ab = taxicab_distance(a, b);
        let bc = taxicab_distance(b, c);
        let ca = taxicab_distance(c, a);
        scalar_max(ab, scalar_max(bc, ca))
    }

    pub fn translate(&self, dx: T, dy: T) -> Self {
        let mv = |v: &Point<T>| Point {
            x: v.x.clone() + dx.clone(),
            y: v.y.clone() + dy.clone(),
        };
        GeneralTriangle {
            vertices: [
                mv(&self.vertices[0]),
                mv(&self.vertices[1]),
                mv(&self.vertices[2]),
            ],
        }
    }

    pub fn reflect_x(&self) -> Self {
        let mv = |v: &Point<T>| Point {
            x: -v.x.clone(),
            y: v.y.clone(),
        };
        GeneralTriangle {
            vertices: [
                mv(&self.vertices[0]),
                mv(&self.vertices[1]),
                mv(&self.vertices[2]),
            ],
        }
    }

    pub fn reflect_y(&self) -> Self {
        let mv = |v: &Point<T>| Point {
            x: v.x.clone(),
            y: -v.y.clone(),
        };
        GeneralTriangle {
            vertices: [
                mv(&self.vertices[0]),
                mv(&self.vertices[1]),
                mv(&self.vertices[2]),
            ],
        }
    }

    pub fn from_canonical(t: &CanonicalTriangle<T>) -> Self {
        let [a, b, c] = t.vertices();
        GeneralTriangle {
            vertices: [a, b, c],
        }
    }
}

impl GeneralTriangle<f64> {
    /// Lifts the float vertices into exact rationals (every finite f64 is a
    /// dyadic rational, so this is lossless).
    pub fn to_exact(&self) -> Result<GeneralTriangle<Rat>> {
        let lift = |v: &Point<f64>| -> Result<Point<Rat>> {
            let x = Rat::from_float(v.x).ok_or(Error::NonFiniteCoordinate)?;
            let y = Rat::from_float(v.y).ok_or(Error::NonFiniteCoordinate)?;
            Ok(Point { x, y })
        };
        let [a, b, c] = &self.vertices;
        GeneralTriangle::new(lift(a)?, lift(b)?, lift(c)?)
    }
}

/// Result of a worst-ratio search over one triangle.
#[derive(Debug, Clone, Serialize)]
pub struct RatioReport {
    pub worst_ratio: f64,
    /// Location of the minimizer in the original coordinates.
    pub argmin: Point<f64>,
    /// The same location relative to the first vertex. This offset is what
    /// the invariance tests compare, because it is unaffected by translation.
    pub argmin_offset: Point<f64>,
    pub grid_resolution: u32,
    pub margin: f64,
    pub tolerance: f64,
    pub grid_points: usize,
    pub conjecture_satisfied: bool,
}

/// Minimizes the distance-sum ratio over interior points of `g`.
///
/// The search works in coordinates shifted so the first vertex is the origin
/// (subtracting a shared vertex is exact for dyadic inputs, which makes the
/// whole computation translation-invariant bit for bit). It scans the
/// barycentric grid i+j+k = resolution with i,j,k >= 1, keeps points whose
/// interior margin exceeds `margin_abs`, then refines the best grid point by
/// coordinate pattern search with step halving.
pub fn worst_ratio_general(
    g: &GeneralTriangle<f64>,
    resolution: u32,
    margin_abs: f64,
    tolerance: f64,
) -> Result<RatioReport> {
    if !(margin_abs >= 0.0) || !(tolerance >= 0.0) {
        return Err(Error::InvalidConfig(
            "margin and tolerance must be nonnegative".into(),
        ));
    }
    let origin = g.vertices[0].clone();
    let shifted = g.translate(-origin.x, -origin.y);
    let [_, b, c] = shifted.vertices().clone();

    let n = resolution as i64;
    let nf = resolution as f64;
    let mut best: Option<(Point<f64>, f64)> = None;
    let mut kept = 0usize;
    for j in 1..n {
        for k in 1..(n - j) {
            // i = n - j - k >= 1 weights the origin vertex, contributing 0.
            let p = Point {
                x: (j as f64 * b.x + k as f64 * c.x) / nf,
                y: (j as f64 * b.y + k as f64 * c.y) / nf,
            };
            if !(shifted.interior_margin(&p) > margin_abs) {
                continue;
            }
            kept += 1;
            let ratio = shifted.em_ratio(&p).expect("margin-filtered point");
            match &best {
                Some((_, r)) if *r <= ratio => {}
                _ => best = Some((p, ratio)),
            }
        }
    }
    let (mut arg, mut worst) = best.ok_or(Error::EmptyGrid)?;

    let diameter = shifted.diameter();
    let mut step = diameter / nf;
    let floor = diameter * 1e-10;
    let mut guard = 0u32;
    while step > floor && guard < 10_000 {
        guard += 1;
        let mut moved = false;
        let mut cand = (arg.clone(), worst);
        for (dx, dy) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
            let p = Point {
                x: arg.x + dx,
                y: arg.y + dy,
            };
            if !(shifted.interior_margin(&p) > margin_abs) {
                continue;
            }
            let ratio = shifted.em_ratio(&p).expect("margin-filtered point");
            if ratio < cand.1 {
                cand = (p, ratio);
                moved = true;
            }
        }
        if moved {
            arg = cand.0;
            worst = cand.1;
        } else {
            step *= 0.5;
        }
    }

    Ok(RatioReport {
        worst_ratio: worst,
        argmin: Point {
            x: arg.x + origin.x,
            y: arg.y + origin.y,
        },
        argmin_offset: arg,
        grid_resolution: resolution,
        margin: margin_abs,
        tolerance,
        grid_points: kept,
        conjecture_satisfied: worst >= 1.5 - tolerance,
    })
}

pub fn worst_ratio_canonical(
    t: &CanonicalTriangle<f64>,
    resolution: u32,
    margin_abs: f64,
    tolerance: f64,
) -> Result<RatioReport> {
    worst_ratio_general(
        &GeneralTriangle::from_canonical(t),
        resolution,
        margin_abs,
        tolerance,
    )
}

/// Recomputes the ratio at `m` in exact arithmetic.
pub fn exact_ratio_at(g: &GeneralTriangle<f64>, m: &Point<f64>) -> Result<Rat> {
    let exact = g.to_exact()?;
    let mx = Rat::from_float(m.x).ok_or(Error::NonFiniteCoordinate)?;
    let my = Rat::from_float(m.y).ok_or(Error::NonFiniteCoordinate)?;
    exact.em_ratio(&Point { x: mx, y: my })
}

/// The reference configuration: triangle (p, q, r) = (-20, 40, 30) with the
/// interior point (0, 2). Weight 2 fails here while weight 3/2 holds with
/// room to spare. Every quantity is recomputed exactly and cross-checked
/// against its known value; any drift is an error, not a report.
#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleReport {
    pub triangle: [ExactValue; 3],
    pub point: [ExactValue; 2],
    #[serde(rename = "R_A")]
    pub vertex_a: ExactValue,
    #[serde(rename = "R_B")]
    pub vertex_b: ExactValue,
    #[serde(rename = "R_C")]
    pub vertex_c: ExactValue,
    #[serde(rename = "r_a")]
    pub edge_a: ExactValue,
    #[serde(rename = "r_b")]
    pub edge_b: ExactValue,
    #[serde(rename = "r_c")]
    pub edge_c: ExactValue,
    #[serde(rename = "L")]
    pub lhs: ExactValue,
    #[serde(rename = "R")]
    pub rhs: ExactValue,
    pub ratio: ExactValue,
    pub deficit_w2: ExactValue,
    pub margin_w32: ExactValue,
    pub violates_w2: bool,
    pub satisfies_w32: bool,
}

pub fn reproduce_counterexample() -> Result<CounterexampleReport> {
    let t = CanonicalTriangle::new(rat_int(-20), rat_int(40), rat_int(30))?;
    let m = Point {
        x: rat_int(0),
        y: rat_int(2),
    };
    let rv = t.vertex_distances(&m);
    let re = t.edge_distances(&m);
    let lhs = rv.sum();
    let rhs = re.sum();
    let ratio = lhs.clone() / rhs.clone();
    let deficit = rat_int(2) * rhs.clone() - lhs.clone();
    let margin = lhs.clone() - rat(3, 2) * rhs.clone();

    let expectations: [(&str, &Rat, Rat); 10] = [
        ("R_A", &rv.a, rat_int(28)),
        ("R_B", &rv.b, rat_int(22)),
        ("R_C", &rv.c, rat_int(42)),
        ("r_a", &re.a, rat_int(2)),
        ("r_b", &re.b, rat_int(28)),
        ("r_c", &re.c, rat(56, 3)),
        ("L", &lhs, rat_int(92)),
        ("R", &rhs, rat(146, 3)),
        ("deficit_w2", &deficit, rat(16, 3)),
        ("margin_w32", &margin, rat_int(19)),
    ];
    for (name, got, want) in &expectations {
        if *got != want {
            return Err(Error::ReproductionMismatch(format!(
                "{name}: computed {got}, expected {want}"
            )));
        }
    }
    if ratio != rat(138, 73) {
        return Err(Error::ReproductionMismatch(format!(
            "ratio: computed {ratio}, expected 138/73"
        )));
    }

    Ok(CounterexampleReport {
        triangle: [
            ExactValue::from_rat(&rat_int(-20)),
            ExactValue::from_rat(&rat_int(40)),
            ExactValue::from_rat(&rat_int(30)),
        ],
        point: [
            ExactValue::from_rat(&rat_int(0)),
            ExactValue::from_rat(&rat_int(2)),
        ],
        vertex_a: ExactValue::from_rat(&rv.a),
        vertex_b: ExactValue::from_rat(&rv.b),
        vertex_c: ExactValue::from_rat(&rv.c),
        edge_a: ExactValue::from_rat(&re.a),
        edge_b: ExactValue::from_rat(&re.b),
        edge_c: ExactValue::from_rat(&re.c),
        lhs: ExactValue::from_rat(&lhs),
        rhs: ExactValue::from_rat(&rhs),
        ratio: ExactValue::from_rat(&ratio),
        deficit_w2: ExactValue::from_rat(&deficit),
        margin_w32: ExactValue::from_rat(&margin),
        violates_w2: deficit > rat_int(0),
        satisfies_w32: margin >= rat_int(0),
    })
}

/// Summary of a sweep over an integer lattice of normal-form triangles.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub extent: i64,
    pub resolution: u32,
    pub margin_rel: f64,
    pub tolerance: f64,
    pub triangle_count: usize,
    pub min_ratio: f64,
    pub min_ratio_triangle: [ExactValue; 3],
    pub float_violations: usize,
    pub exact_checked: bool,
    pub exact_grid_points: usize,
    pub exact_violations: usize,
    pub conjecture_satisfied: bool,
}

/// Sweeps every lattice triangle (p, q, r) with apex height and base offsets
/// bounded by `extent`: p from 0 to extent-1 and q - p from 1 to extent for
/// the nonnegative-offset family, p from -extent to -1 and q from 1 to extent
/// for the straddling family, r from 1 to extent throughout.
///
/// For each triangle the float worst-ratio search runs at `resolution`. When
/// `exact` is set, the weight-3/2 margin is additionally evaluated in exact
/// rational arithmetic at every interior barycentric grid point, so a pass is
/// a proof that the bound holds on that finite point set, not a float claim.
pub fn canonical_grid_sweep(
    extent: i64,
    resolution: u32,
    margin_rel: f64,
    tolerance: f64,
    exact: bool,
) -> Result<SweepReport> {
    if extent < 1 {
        return Err(Error::InvalidConfig("extent must be at least 1".into()));
    }
    let mut lattice: Vec<(i64, i64, i64)> = Vec::new();
    for p in 0..extent {
        for dq in 1..=extent {
            for r in 1..=extent {
                lattice.push((p, p + dq, r));
            }
        }
    }
    for p in -extent..=-1 {
        for q in 1..=extent {
            for r in 1..=extent {
                lattice.push((p, q, r));
            }
        }
    }

    let w32 = rat(3, 2);
    let n = resolution as i64;
    let mut min_ratio = f64::INFINITY;
    let mut min_triple = (0i64, 0i64, 0i64);
    let mut float_violations = 0usize;
    let mut exact_points = 0usize;
    let mut exact_violations = 0usize;

    for &(p, q, r) in &lattice {
        let tf = CanonicalTriangle::new(p as f64, q as f64, r as f64)?;
        let margin_abs = margin_rel * tf.diameter();
        let report = worst_ratio_canonical(&tf, resolution, margin_abs, tolerance)?;
        if report.worst_ratio < min_ratio {
            min_ratio = report.worst_ratio;
            min_triple = (p, q, r);
        }
        if report.worst_ratio < 1.5 - tolerance {
            // Only an exact recheck can turn a float dip into a violation.
            let g = GeneralTriangle::from_canonical(&tf);
            match exact_ratio_at(&g, &report.argmin) {
                Ok(exact_ratio) if exact_ratio < w32 => float_violations += 1,
                _ => {}
            }
        }

        if exact {
            let tr = CanonicalTriangle::new(rat_int(p), rat_int(q), rat_int(r))?;
            let [a, b, c] = tr.vertices();
            for j in 1..n {
                for k in 1..(n - j) {
                    let i = n - j - k;
                    let m = Point {
                        x: (rat_int(i) * a.x.clone()
                            + rat_int(j) * b.x.clone()
                            + rat_int(k) * c.x.clone())
                            / rat_int(n),
                        y: (rat_int(i) * a.y.clone()
                            + rat_int(j) * b.y.clone()
                            + rat_int(k) * c.y.clone())
                            / rat_int(n),
                    };
                    exact_points += 1;
                    if direct_margin(&tr, &w32, &m) < rat_int(0) {
                        exact_violations += 1;
                    }
                }
            }
        }
    }

    let conjecture_satisfied =
        min_ratio >= 1.5 - tolerance && float_violations == 0 && exact_violations == 0;
    Ok(SweepReport {
        extent,
        resolution,
        margin_rel,
        tolerance,
        triangle_count: lattice.len(),
        min_ratio,
        min_ratio_triangle: [
            ExactValue::from_rat(&rat_int(min_triple.0)),
            ExactValue::from_rat(&rat_int(min_triple.1)),
            ExactValue::from_rat(&rat_int(min_triple.2)),
        ],
        float_violations,
        exact_checked: exact,
        exact_grid_points: exact_points,
        exact_violations,
        conjecture_satisfied,
    })
}

/// Parameters for the randomized general-position search.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchConfig {
    pub coord_min: f64,
    pub coord_max: f64,
    /// Upper bound for the random rotation applied about the centroid.
    /// The taxicab metric is not rotation-invariant, so rotations genuinely
    /// enlarge the space being explored.
    pub max_rotation: f64,
    pub resolution: u32,
    pub margin_rel: f64,
    pub tolerance: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            coord_min: -50.0,
            coord_max: 50.0,
            max_rotation: std::f64::consts::FRAC_PI_2,
            resolution: 400,
            margin_rel: 1e-6,
            tolerance: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleRow {
    pub index: usize,
    pub vertices: [Point<f64>; 3],
    pub worst_ratio: f64,
    pub argmin: Point<f64>,
}

/// A below-3/2 ratio confirmed by exact arithmetic. Finding one of these
/// would refute the conjecture; none are expected.
#[derive(Debug, Clone, Serialize)]
pub struct SearchFailure {
    pub index: usize,
    pub vertices: [Point<f64>; 3],
    pub worst_ratio: f64,
    pub exact_ratio: ExactValue,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub seed: u64,
    pub samples: usize,
    pub config: SearchConfig,
    pub min_ratio_seen: f64,
    pub min_ratio_index: Option<usize>,
    pub failures: Vec<SearchFailure>,
    pub rows: Vec<SampleRow>,
}

/// Draws `n` random triangles (uniform vertices, then a random rotation about
/// the centroid) and runs the worst-ratio search on each. Sampling is
/// sequential from a single seeded stream, so a (seed, n, config) triple
/// always produces the identical report.
pub fn random_search(seed: u64, n: usize, config: &SearchConfig) -> Result<SearchReport> {
    if !(config.coord_min < config.coord_max) {
        return Err(Error::InvalidConfig("coord_min must be below coord_max".into()));
    }
    if config.resolution < 3 {
        return Err(Error::InvalidConfig("resolution must be at least 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = config.coord_max - config.coord_min;
    let w32 = rat(3, 2);

    let mut rows = Vec::with_capacity(n);
    let mut failures = Vec::new();
    let mut min_ratio_seen = f64::INFINITY;
    let mut min_ratio_index = None;

    for index in 0..n {
        let mut attempts = 0;
        let report;
        let tri;
        loop {
            attempts += 1;
            if attempts > 1000 {
                return Err(Error::InvalidConfig(
                    "could not sample a usable triangle; widen the coordinate range".into(),
                ));
            }
            let mut coords = [0.0f64; 6];
            for c in coords.iter_mut() {
                *c = config.coord_min + span * rng.gen::<f64>();
            }
            let theta = config.max_rotation * rng.gen::<f64>();
            let pts = rotate_about_centroid(&coords, theta);

            let cross = (pts[1].x - pts[0].x) * (pts[2].y - pts[0].y)
                - (pts[1].y - pts[0].y) * (pts[2].x - pts[0].x);
            if cross.abs() < 1e-6 * span * span {
                continue;
            }
            let [a, b, c] = pts;
            let g = match GeneralTriangle::new(a, b, c) {
                Ok(g) => g,
                Err(_) => continue,
            };
            let margin_abs = config.margin_rel * g.diameter();
            match worst_ratio_general(&g, config.resolution, margin_abs, config.tolerance) {
                Ok(r) => {
                    report = r;
                    tri = g;
                    break;
                }
                Err(Error::EmptyGrid) => continue,
                Err(e) => return Err(e),
            }
        }

        if report.worst_ratio < min_ratio_seen {
            min_ratio_seen = report.worst_ratio;
            min_ratio_index = Some(index);
        }
        if report.worst_ratio < 1.5 - config.tolerance {
            if let Ok(exact) = exact_ratio_at(&tri, &report.argmin) {
                if exact < w32 {
                    failures.push(SearchFailure {
                        index,
                        vertices: tri.vertices().clone(),
                        worst_ratio: report.worst_ratio,
                        exact_ratio: ExactValue::from_rat(&exact),
                    });
                }
            }
        }
        rows.push(SampleRow {
            index,
            vertices: tri.vertices().clone(),
            worst_ratio: report.worst_ratio,
            argmin: report.argmin,
        });
    }

    Ok(SearchReport {
        seed,
        samples: n,
        config: config.clone(),
        min_ratio_seen,
        min_ratio_index,
        failures,
        rows,
    })
}

fn rotate_about_centroid(coords: &[f64; 6], theta: f64) -> [Point<f64>; 3] {
    let cx = (coords[0] + coords[2] + coords[4]) / 3.0;
    let cy = (coords[1] + coords[3] + coords[5]) / 3.0;
    let (sin, cos) = theta.sin_cos();
    let rot = |x: f64, y: f64| Point {
        x: cx + (x - cx) * cos - (y - cy) * sin,
        y: cy + (x - cx) * sin + (y - cy) * cos,
    };
    [
        rot(coords[0], coords[1]),
        rot(coords[2], coords[3]),
        rot(coords[4], coords[5]),
    ]
}
