//! Command-line frontend for the taxicab-plane weighted distance-sum
//! toolkit. Subcommands reproduce the reference weight-2 counterexample,
//! verify the piecewise-linear reduction tables, print the per-case weight
//! bound catalog, evaluate the ratio at a chosen point, and run grid or
//! randomized searches for conjecture violations.
//!
//! Exit codes: 0 success, 1 a mathematical claim failed to verify (or a
//! confirmed violation was found), 2 usage or input errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use taxi_em_core::bounds::{bounds_rows, Attainment, BoundsRow};
use taxi_em_core::explorer::{
    canonical_grid_sweep, random_search, reproduce_counterexample, CounterexampleReport,
    GeneralTriangle, SearchConfig, SearchReport, SweepReport,
};
use taxi_em_core::metric::Point;
use taxi_em_core::reduction::verify_tables;
use taxi_em_core::report::{canonical_json, float_field, CsvTable, ExactValue};
use taxi_em_core::scalar::{parse_rational, rat, rat_int, Rat};
use taxi_em_core::triangle::{CanonicalTriangle, DistanceTriple};
use taxi_em_core::Error;

#[derive(Parser)]
#[command(
    name = "taxi-em",
    version,
    about = "Weighted Erdos-Mordell inequalities in the taxicab plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for every randomized component (overrides TAXI_EM_SEED).
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Barycentric grid resolution (overrides TAXI_EM_RESOLUTION).
    #[arg(long, global = true)]
    resolution: Option<u32>,

    /// Float comparison tolerance (overrides TAXI_EM_TOLERANCE).
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    /// Interior margin as a fraction of the triangle diameter.
    #[arg(long, global = true)]
    margin: Option<f64>,

    /// key=value configuration file (lowest precedence after defaults).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce the reference configuration where weight 2 fails.
    Counterexample,
    /// Re-derive the reduction tables from direct distance sums on random
    /// exact samples.
    VerifyTables {
        /// Exact samples per (case, branch) cell.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Print the 24-row catalog of per-vertex weight infima.
    Bounds {
        /// Emit every row (the default when no filter is given).
        #[arg(long, conflicts_with = "filter")]
        all: bool,
        /// Restrict rows: "all", a case like "2a", or case:vertex like "1a:B".
        #[arg(long)]
        filter: Option<String>,
        /// Sampled omega values per row used for the soundness check.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Evaluate the distance-sum ratio at a point of a given triangle.
    Ratio {
        /// Either p q r (normal form) or ax ay bx by cx cy (vertices),
        /// as exact rationals like -20, 3/4, or 0.25.
        #[arg(long, num_args = 3..=6, allow_negative_numbers = true, required = true)]
        triangle: Vec<String>,
        /// Point coordinates x y, exact rationals.
        #[arg(long, num_args = 2, allow_negative_numbers = true, required = true)]
        point: Vec<String>,
    },
    /// Search for ratios below 3/2.
    Search {
        #[arg(long, value_enum, default_value_t = SearchMode::GeneralRandom)]
        mode: SearchMode,
        /// Random triangles to draw (general-random mode).
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Lower coordinate bound for random vertices.
        #[arg(long, default_value_t = -50.0, allow_negative_numbers = true)]
        coord_min: f64,
        /// Upper coordinate bound for random vertices.
        #[arg(long, default_value_t = 50.0)]
        coord_max: f64,
        /// Disable the random rotation (axis-aligned triangles only).
        #[arg(long)]
        no_rotate: bool,
        /// Lattice extent for canonical-grid mode.
        #[arg(long, default_value_t = 8)]
        extent: i64,
        /// Also check the weight-3/2 margin in exact arithmetic at every
        /// grid point (canonical-grid mode).
        #[arg(long)]
        exact_grid: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchMode {
    CanonicalGrid,
    GeneralRandom,
}

#[derive(Debug, Clone, Copy)]
struct Settings {
    seed: u64,
    resolution: u32,
    tolerance: f64,
    margin_rel: f64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            seed: 0,
            resolution: 400,
            tolerance: 1e-9,
            margin_rel: 1e-6,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let settings = resolve_settings(&cli)?;
    match &cli.command {
        Command::Counterexample => cmd_counterexample(cli.format),
        Command::VerifyTables { samples } => cmd_verify_tables(cli.format, *samples, &settings),
        Command::Bounds { all: _, filter, samples } => {
            cmd_bounds(cli.format, filter.as_deref(), *samples, &settings)
        }
        Command::Ratio { triangle, point } => cmd_ratio(cli.format, triangle, point),
        Command::Search {
            mode,
            count,
            coord_min,
            coord_max,
            no_rotate,
            extent,
            exact_grid,
        } => match mode {
            SearchMode::GeneralRandom => cmd_search_random(
                cli.format,
                *count,
                *coord_min,
                *coord_max,
                *no_rotate,
                &settings,
            ),
            SearchMode::CanonicalGrid => {
                cmd_search_grid(cli.format, *extent, *exact_grid, &settings)
            }
        },
    }
}

/// Defaults, then config file, then environment, then flags.
fn resolve_settings(cli: &Cli) -> anyhow::Result<Settings> {
    let mut s = Settings::default();
    if let Some(path) = &cli.config {
        apply_config_file(&mut s, path)?;
    }
    apply_env(&mut s)?;
    if let Some(seed) = cli.seed {
        s.seed = seed;
    }
    if let Some(resolution) = cli.resolution {
        s.resolution = resolution;
    }
    if let Some(tolerance) = cli.tolerance {
        s.tolerance = tolerance;
    }
    if let Some(margin) = cli.margin {
        s.margin_rel = margin;
    }
    if s.resolution < 3 {
        bail!("resolution must be at least 3");
    }
    if !(s.tolerance >= 0.0) || !(s.margin_rel >= 0.0) {
        bail!("tolerance and margin must be nonnegative");
    }
    Ok(s)
}

fn apply_config_file(s: &mut Settings, path: &Path) -> anyhow::Result<()> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("{}:{}: expected key=value", path.display(), lineno + 1))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "seed" => s.seed = value.parse().context("config seed")?,
            "resolution" => s.resolution = value.parse().context("config resolution")?,
            "tolerance" => s.tolerance = value.parse().context("config tolerance")?,
            "margin" => s.margin_rel = value.parse().context("config margin")?,
            other => bail!("{}:{}: unknown key {other:?}", path.display(), lineno + 1),
        }
    }
    Ok(())
}

fn apply_env(s: &mut Settings) -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("TAXI_EM_SEED") {
        s.seed = v.parse().context("TAXI_EM_SEED")?;
    }
    if let Ok(v) = std::env::var("TAXI_EM_RESOLUTION") {
        s.resolution = v.parse().context("TAXI_EM_RESOLUTION")?;
    }
    if let Ok(v) = std::env::var("TAXI_EM_TOLERANCE") {
        s.tolerance = v.parse().context("TAXI_EM_TOLERANCE")?;
    }
    Ok(())
}

fn cmd_counterexample(format: Format) -> anyhow::Result<bool> {
    let report = match reproduce_counterexample() {
        Ok(r) => r,
        Err(Error::ReproductionMismatch(what)) => {
            eprintln!("reproduction mismatch: {what}");
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    match format {
        Format::Json => println!("{}", canonical_json(&report)?),
        Format::Csv => print!("{}", counterexample_csv(&report)),
        Format::Text => print!("{}", counterexample_text(&report)),
    }
    Ok(report.violates_w2 && report.satisfies_w32)
}

fn counterexample_text(r: &CounterexampleReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "triangle: p = {}, q = {}, r = {}; interior point ({}, {})",
        r.triangle[0].exact, r.triangle[1].exact, r.triangle[2].exact, r.point[0].exact, r.point[1].exact
    );
    let _ = writeln!(
        out,
        "vertex distances: R_A = {}, R_B = {}, R_C = {}; L = {}",
        r.vertex_a.exact, r.vertex_b.exact, r.vertex_c.exact, r.lhs.exact
    );
    let _ = writeln!(
        out,
        "edge distances:   r_a = {}, r_b = {}, r_c = {}; R = {}",
        r.edge_a.exact, r.edge_b.exact, r.edge_c.exact, r.rhs.exact
    );
    let _ = writeln!(
        out,
        "ratio L/R = {} (~{:.6})",
        r.ratio.exact, r.ratio.approx
    );
    let _ = writeln!(
        out,
        "weight 2:   {} (2R - L = {})",
        if r.violates_w2 { "VIOLATED" } else { "holds" },
        r.deficit_w2.exact
    );
    let _ = writeln!(
        out,
        "weight 3/2: {} (L - (3/2)R = {})",
        if r.satisfies_w32 { "holds" } else { "VIOLATED" },
        r.margin_w32.exact
    );
    out
}

fn counterexample_csv(r: &CounterexampleReport) -> String {
    let mut t = CsvTable::new(&["quantity", "exact", "approx"]);
    let mut push = |name: &str, v: &ExactValue| {
        t.push([name.to_string(), v.exact.clone(), float_field(v.approx)]);
    };
    push("p", &r.triangle[0]);
    push("q", &r.triangle[1]);
    push("r", &r.triangle[2]);
    push("point_x", &r.point[0]);
    push("point_y", &r.point[1]);
    push("R_A", &r.vertex_a);
    push("R_B", &r.vertex_b);
    push("R_C", &r.vertex_c);
    push("r_a", &r.edge_a);
    push("r_b", &r.edge_b);
    push("r_c", &r.edge_c);
    push("L", &r.lhs);
    push("R", &r.rhs);
    push("ratio", &r.ratio);
    push("deficit_w2", &r.deficit_w2);
    push("margin_w32", &r.margin_w32);
    t.push([
        "violates_w2".to_string(),
        r.violates_w2.to_string(),
        if r.violates_w2 { "1" } else { "0" }.to_string(),
    ]);
    t.push([
        "satisfies_w32".to_string(),
        r.satisfies_w32.to_string(),
        if r.satisfies_w32 { "1" } else { "0" }.to_string(),
    ]);
    t.finish()
}

fn cmd_verify_tables(format: Format, samples: usize, settings: &Settings) -> anyhow::Result<bool> {
    if samples == 0 {
        bail!("--samples must be positive");
    }
    let report = verify_tables(samples, settings.seed, None);
    match format {
        Format::Json => println!("{}", canonical_json(&report)?),
        Format::Csv => {
            let mut t = CsvTable::new(&["case", "branch", "samples", "mismatches"]);
            for cell in &report.cells {
                t.push([
                    cell.case.to_string(),
                    cell.branch.to_string(),
                    cell.samples.to_string(),
                    cell.mismatches.to_string(),
                ]);
            }
            print!("{}", t.finish());
        }
        Format::Text => {
            for cell in &report.cells {
                println!(
                    "case {} {} branch: {} samples, {} mismatches{}",
                    cell.case,
                    cell.branch,
                    cell.samples,
                    cell.mismatches,
                    match &cell.first_mismatch {
                        Some(w) => format!(" (first at p={}, q={}, r={})", w.p, w.q, w.r),
                        None => String::new(),
                    }
                );
            }
            println!(
                "{}: 12 cells x {} exact samples",
                if report.all_match { "ALL MATCH" } else { "MISMATCH" },
                report.samples_per_cell
            );
        }
    }
    Ok(report.all_match)
}

fn cmd_bounds(
    format: Format,
    filter: Option<&str>,
    samples: usize,
    settings: &Settings,
) -> anyhow::Result<bool> {
    let (case_filter, vertex_filter) = match filter {
        None | Some("all") => (None, None),
        Some(f) => {
            let (case, vertex) = match f.split_once(':') {
                Some((c, v)) => (c, Some(v.to_ascii_uppercase())),
                None => (f, None),
            };
            if !matches!(case, "1a" | "1b" | "1c" | "2a" | "2b" | "2c") {
                bail!("--filter case must be one of 1a, 1b, 1c, 2a, 2b, 2c (got {f:?})");
            }
            if let Some(v) = &vertex_filter_check(&vertex) {
                bail!("--filter vertex must be one of A, B, C, D, O (got {v:?})");
            }
            (Some(case.to_string()), vertex)
        }
    };
    let rows: Vec<BoundsRow> = bounds_rows(samples, settings.seed)
        .into_iter()
        .filter(|row| {
            case_filter.as_deref().map_or(true, |f| row.case.to_string() == f)
                && vertex_filter
                    .as_deref()
                    .map_or(true, |v| row.vertex.to_string() == v)
        })
        .collect();
    if rows.is_empty() {
        bail!("filter matched no rows");
    }
    let sound = rows.iter().all(|r| r.sound);
    match format {
        Format::Json => println!("{}", canonical_json(&rows)?),
        Format::Csv => {
            let mut t = CsvTable::new(&[
                "case",
                "vertex",
                "formula",
                "infimum_exact",
                "infimum_approx",
                "attainment",
                "samples",
                "sampled_min_exact",
                "sampled_min_approx",
                "gap",
                "sound",
            ]);
            for row in &rows {
                t.push([
                    row.case.to_string(),
                    row.vertex.to_string(),
                    row.formula.to_string(),
                    row.infimum_exact.clone(),
                    float_field(row.infimum_approx),
                    attainment_str(row.attainment).to_string(),
                    row.samples.to_string(),
                    row.sampled_min.as_ref().map(|v| v.exact.clone()).unwrap_or_default(),
                    row.sampled_min
                        .as_ref()
                        .map(|v| float_field(v.approx))
                        .unwrap_or_default(),
                    row.gap.map(float_field).unwrap_or_default(),
                    row.sound.to_string(),
                ]);
            }
            print!("{}", t.finish());
        }
        Format::Text => {
            for row in &rows {
                let sampled = match (&row.sampled_min, row.gap) {
                    (Some(v), Some(g)) => {
                        format!("; sampled min {} (gap {:.2e}, {} samples)", v.exact, g, row.samples)
                    }
                    _ => String::new(),
                };
                println!(
                    "case {} vertex {}: omega = {}; infimum {} (~{:.6}), {}{}{}",
                    row.case,
                    row.vertex,
                    row.formula,
                    row.infimum_exact,
                    row.infimum_approx,
                    attainment_str(row.attainment),
                    sampled,
                    if row.sound { "" } else { " [UNSOUND]" },
                );
            }
            println!(
                "{} rows; all sampled omega values {} their stated infima",
                rows.len(),
                if sound { "respect" } else { "VIOLATE" }
            );
        }
    }
    Ok(sound)
}

fn vertex_filter_check(vertex: &Option<String>) -> Option<String> {
    match vertex {
        Some(v) if !matches!(v.as_str(), "A" | "B" | "C" | "D" | "O") => Some(v.clone()),
        _ => None,
    }
}

fn attainment_str(a: Attainment) -> &'static str {
    match a {
        Attainment::Closed => "closed",
        Attainment::Open => "open",
    }
}

enum RatioSubject {
    Canonical(CanonicalTriangle<Rat>),
    General(GeneralTriangle<Rat>),
}

#[derive(serde::Serialize)]
struct RatioOutput {
    triangle: Vec<ExactValue>,
    point: [ExactValue; 2],
    #[serde(rename = "R_A")]
    vertex_a: ExactValue,
    #[serde(rename = "R_B")]
    vertex_b: ExactValue,
    #[serde(rename = "R_C")]
    vertex_c: ExactValue,
    #[serde(rename = "r_a")]
    edge_a: ExactValue,
    #[serde(rename = "r_b")]
    edge_b: ExactValue,
    #[serde(rename = "r_c")]
    edge_c: ExactValue,
    #[serde(rename = "L")]
    lhs: ExactValue,
    #[serde(rename = "R")]
    rhs: ExactValue,
    ratio: ExactValue,
    margin_w32: ExactValue,
    margin_w2: ExactValue,
    satisfies_w32: bool,
    satisfies_w2: bool,
}

fn cmd_ratio(format: Format, triangle: &[String], point: &[String]) -> anyhow::Result<bool> {
    let coords: Vec<Rat> = triangle
        .iter()
        .map(|s| parse_rational(s).map_err(|e| anyhow!("--triangle {s:?}: {e}")))
        .collect::<anyhow::Result<_>>()?;
    let subject = match coords.len() {
        3 => RatioSubject::Canonical(
            CanonicalTriangle::new(coords[0].clone(), coords[1].clone(), coords[2].clone())
                .map_err(|e| anyhow!("invalid triangle: {e}"))?,
        ),
        6 => RatioSubject::General(
            GeneralTriangle::new(
                Point::new(coords[0].clone(), coords[1].clone()),
                Point::new(coords[2].clone(), coords[3].clone()),
                Point::new(coords[4].clone(), coords[5].clone()),
            )
            .map_err(|e| anyhow!("invalid triangle: {e}"))?,
        ),
        n => bail!("--triangle takes 3 values (p q r) or 6 (vertex coordinates), got {n}"),
    };
    let m = Point::new(
        parse_rational(&point[0]).map_err(|e| anyhow!("--point {:?}: {e}", point[0]))?,
        parse_rational(&point[1]).map_err(|e| anyhow!("--point {:?}: {e}", point[1]))?,
    );

    let (margin, rv, re): (Rat, DistanceTriple<Rat>, DistanceTriple<Rat>) = match &subject {
        RatioSubject::Canonical(t) => (t.interior_margin(&m), t.vertex_distances(&m), t.edge_distances(&m)),
        RatioSubject::General(g) => (g.interior_margin(&m), g.vertex_distances(&m), g.edge_distances(&m)),
    };
    if !(margin > rat_int(0)) {
        bail!("point ({}, {}) is not strictly interior", point[0], point[1]);
    }
    let lhs = rv.sum();
    let rhs = re.sum();
    let ratio = lhs.clone() / rhs.clone();
    let margin_w32 = lhs.clone() - rat(3, 2) * rhs.clone();
    let margin_w2 = lhs.clone() - rat_int(2) * rhs.clone();
    let satisfies = margin_w32 >= rat_int(0);
    let satisfies_w2 = margin_w2 >= rat_int(0);

    let out = RatioOutput {
        triangle: coords.iter().map(ExactValue::from_rat).collect(),
        point: [ExactValue::from_rat(&m.x), ExactValue::from_rat(&m.y)],
        vertex_a: ExactValue::from_rat(&rv.a),
        vertex_b: ExactValue::from_rat(&rv.b),
        vertex_c: ExactValue::from_rat(&rv.c),
        edge_a: ExactValue::from_rat(&re.a),
        edge_b: ExactValue::from_rat(&re.b),
        edge_c: ExactValue::from_rat(&re.c),
        lhs: ExactValue::from_rat(&lhs),
        rhs: ExactValue::from_rat(&rhs),
        ratio: ExactValue::from_rat(&ratio),
        margin_w32: ExactValue::from_rat(&margin_w32),
        margin_w2: ExactValue::from_rat(&margin_w2),
        satisfies_w32: satisfies,
        satisfies_w2,
    };

    match format {
        Format::Json => println!("{}", canonical_json(&out)?),
        Format::Csv => {
            let mut t = CsvTable::new(&["quantity", "exact", "approx"]);
            let mut push = |name: &str, v: &ExactValue| {
                t.push([name.to_string(), v.exact.clone(), float_field(v.approx)]);
            };
            push("R_A", &out.vertex_a);
            push("R_B", &out.vertex_b);
            push("R_C", &out.vertex_c);
            push("r_a", &out.edge_a);
            push("r_b", &out.edge_b);
            push("r_c", &out.edge_c);
            push("L", &out.lhs);
            push("R", &out.rhs);
            push("ratio", &out.ratio);
            push("margin_w32", &out.margin_w32);
            push("margin_w2", &out.margin_w2);
            t.push([
                "satisfies_w32".to_string(),
                satisfies.to_string(),
                if satisfies { "1" } else { "0" }.to_string(),
            ]);
            t.push([
                "satisfies_w2".to_string(),
                satisfies_w2.to_string(),
                if satisfies_w2 { "1" } else { "0" }.to_string(),
            ]);
            print!("{}", t.finish());
        }
        Format::Text => {
            println!(
                "vertex distances: R_A = {}, R_B = {}, R_C = {}; L = {}",
                out.vertex_a.exact, out.vertex_b.exact, out.vertex_c.exact, out.lhs.exact
            );
            println!(
                "edge distances:   r_a = {}, r_b = {}, r_c = {}; R = {}",
                out.edge_a.exact, out.edge_b.exact, out.edge_c.exact, out.rhs.exact
            );
            println!("ratio L/R = {} (~{:.6})", out.ratio.exact, out.ratio.approx);
            println!(
                "weight 3/2: {} (L - (3/2)R = {})",
                if satisfies { "holds" } else { "VIOLATED" },
                out.margin_w32.exact
            );
            println!(
                "weight 2:   {} (L - 2R = {})",
                if satisfies_w2 { "holds" } else { "violated" },
                out.margin_w2.exact
            );
        }
    }
    Ok(satisfies)
}

fn cmd_search_random(
    format: Format,
    count: usize,
    coord_min: f64,
    coord_max: f64,
    no_rotate: bool,
    settings: &Settings,
) -> anyhow::Result<bool> {
    let config = SearchConfig {
        coord_min,
        coord_max,
        max_rotation: if no_rotate {
            0.0
        } else {
            SearchConfig::default().max_rotation
        },
        resolution: settings.resolution,
        margin_rel: settings.margin_rel,
        tolerance: settings.tolerance,
    };
    let report = random_search(settings.seed, count, &config)?;
    let clean = report.failures.is_empty();
    match format {
        Format::Json => println!("{}", canonical_json(&report)?),
        Format::Csv => print!("{}", search_csv(&report)),
        Format::Text => {
            println!(
                "random search: seed {}, {} triangles, resolution {}",
                report.seed, report.samples, report.config.resolution
            );
            match report.min_ratio_index {
                Some(i) => println!(
                    "minimum ratio {} at sample {}",
                    float_field(report.min_ratio_seen),
                    i
                ),
                None => println!("no samples drawn"),
            }
            println!("confirmed failures below 3/2: {}", report.failures.len());
            for f in &report.failures {
                println!(
                    "  sample {}: float {} exact {}",
                    f.index,
                    float_field(f.worst_ratio),
                    f.exact_ratio.exact
                );
            }
        }
    }
    Ok(clean)
}

fn search_csv(report: &SearchReport) -> String {
    let mut t = CsvTable::new(&[
        "seed",
        "index",
        "ax",
        "ay",
        "bx",
        "by",
        "cx",
        "cy",
        "worst_ratio",
        "argmin_x",
        "argmin_y",
    ]);
    for row in &report.rows {
        let [a, b, c] = &row.vertices;
        t.push([
            report.seed.to_string(),
            row.index.to_string(),
            float_field(a.x),
            float_field(a.y),
            float_field(b.x),
            float_field(b.y),
            float_field(c.x),
            float_field(c.y),
            float_field(row.worst_ratio),
            float_field(row.argmin.x),
            float_field(row.argmin.y),
        ]);
    }
    t.finish()
}

fn cmd_search_grid(
    format: Format,
    extent: i64,
    exact_grid: bool,
    settings: &Settings,
) -> anyhow::Result<bool> {
    let report = canonical_grid_sweep(
        extent,
        settings.resolution,
        settings.margin_rel,
        settings.tolerance,
        exact_grid,
    )?;
    let clean = report.float_violations == 0 && report.exact_violations == 0;
    match format {
        Format::Json => println!("{}", canonical_json(&report)?),
        Format::Csv => {
            let mut t = CsvTable::new(&[
                "extent",
                "resolution",
                "triangles",
                "min_ratio",
                "min_p",
                "min_q",
                "min_r",
                "float_violations",
                "exact_grid_points",
                "exact_violations",
            ]);
            t.push([
                report.extent.to_string(),
                report.resolution.to_string(),
                report.triangle_count.to_string(),
                float_field(report.min_ratio),
                report.min_ratio_triangle[0].exact.clone(),
                report.min_ratio_triangle[1].exact.clone(),
                report.min_ratio_triangle[2].exact.clone(),
                report.float_violations.to_string(),
                report.exact_grid_points.to_string(),
                report.exact_violations.to_string(),
            ]);
            print!("{}", t.finish());
        }
        Format::Text => print!("{}", sweep_text(&report)),
    }
    Ok(clean)
}

fn sweep_text(r: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "lattice sweep: extent {}, {} triangles, resolution {}",
        r.extent, r.triangle_count, r.resolution
    );
    let _ = writeln!(
        out,
        "minimum ratio {} at (p, q, r) = ({}, {}, {})",
        float_field(r.min_ratio),
        r.min_ratio_triangle[0].exact,
        r.min_ratio_triangle[1].exact,
        r.min_ratio_triangle[2].exact
    );
    let _ = writeln!(out, "confirmed float violations: {}", r.float_violations);
    if r.exact_checked {
        let _ = writeln!(
            out,
            "exact weight-3/2 margins checked at {} grid points: {} negative",
            r.exact_grid_points, r.exact_violations
        );
    }
    let _ = writeln!(
        out,
        "conjecture {} on this lattice",
        if r.conjecture_satisfied { "holds" } else { "FAILS" }
    );
    out
}
