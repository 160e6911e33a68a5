//! Cross-checks of the closed-form per-vertex bounds: agreement with the
//! linear forms, the vertex-minimum principle for the piecewise margin, and
//! consistency between exact admissible weights and the float ratio search.

use taxi_em_core::bounds::{
    admissible_weight, covered_rows, global_bound, key_point, omega, vertex_bound_from_form,
};
use taxi_em_core::explorer::worst_ratio_canonical;
use taxi_em_core::metric::Point;
use taxi_em_core::reduction::direct_margin;
use taxi_em_core::sampling::RationalSampler;
use taxi_em_core::scalar::{rat, rat_int, Rat, Scalar};
use taxi_em_core::triangle::{CanonicalTriangle, CaseTag};

#[test]
fn closed_forms_match_the_linear_forms() {
    let mut sampler = RationalSampler::new(0xB0);
    for (tag, vertex) in covered_rows() {
        for _ in 0..40 {
            let t = sampler.triangle_in_chain(tag);
            let direct = omega(tag, vertex, &t).unwrap();
            let from_form = vertex_bound_from_form(tag, vertex, &t).unwrap();
            assert_eq!(direct, from_form, "row {tag}/{vertex} at {t:?}");
        }
    }
}

#[test]
fn margin_minimum_sits_at_a_key_vertex() {
    let mut sampler = RationalSampler::new(0xB1);
    for tag in CaseTag::all() {
        for _ in 0..15 {
            let t = sampler.triangle_in_chain(tag);
            let w = sampler.weight();

            let key_min = t
                .key_vertices()
                .unwrap()
                .iter()
                .map(|v| direct_margin(&t, &w, v))
                .min()
                .unwrap();

            let [a, b, c] = t.vertices();
            let n = 10i64;
            let mut grid_min: Option<Rat> = None;
            for i in 0..=n {
                for j in 0..=(n - i) {
                    let k = n - i - j;
                    let m = Point::new(
                        (rat_int(i) * a.x.clone()
                            + rat_int(j) * b.x.clone()
                            + rat_int(k) * c.x.clone())
                            / rat_int(n),
                        (rat_int(i) * a.y.clone()
                            + rat_int(j) * b.y.clone()
                            + rat_int(k) * c.y.clone())
                            / rat_int(n),
                    );
                    let v = direct_margin(&t, &w, &m);
                    grid_min = Some(match grid_min {
                        None => v,
                        Some(g) => g.min(v),
                    });
                }
            }
            assert!(
                grid_min.unwrap() >= key_min,
                "grid beat the key vertices on {t:?} with w={w}"
            );
        }
    }
}

#[test]
fn admissible_weight_is_tight() {
    let mut sampler = RationalSampler::new(0xB2);
    let three_halves: Rat = global_bound();
    assert_eq!(three_halves, rat(3, 2));
    for tag in CaseTag::all() {
        for _ in 0..10 {
            let t = sampler.triangle_in_chain(tag);
            let w = admissible_weight(&t).unwrap();
            assert!(w >= rat(3, 2), "admissible weight below the global bound");

            // Nonnegative margin at the admissible weight, on every key
            // vertex and on a coarse interior grid.
            for v in t.key_vertices().unwrap() {
                assert!(direct_margin(&t, &w, &v) >= rat_int(0));
            }
            let [a, b, c] = t.vertices();
            for (i, j) in [(1i64, 1i64), (2, 1), (1, 2), (3, 3), (1, 5)] {
                let k = 8 - i - j;
                let m = Point::new(
                    (rat_int(i) * a.x.clone() + rat_int(j) * b.x.clone()
                        + rat_int(k) * c.x.clone())
                        / rat_int(8),
                    (rat_int(i) * a.y.clone() + rat_int(j) * b.y.clone()
                        + rat_int(k) * c.y.clone())
                        / rat_int(8),
                );
                assert!(direct_margin(&t, &w, &m) >= rat_int(0));
            }

            // Any enlargement is defeated at some key vertex.
            let above = w.clone() * rat(101, 100);
            let beaten = t
                .key_vertices()
                .unwrap()
                .iter()
                .any(|v| direct_margin(&t, &above, v) < rat_int(0));
            assert!(beaten, "weight {above} should fail on {t:?}");
        }
    }
}

#[test]
fn float_search_tracks_the_exact_admissible_weight() {
    let cases = [
        (-1.0, 1.0, 1.0, rat(3, 2)),
        (-20.0, 40.0, 30.0, rat(9, 5)),
        (2.0, 3.0, 1.0, rat(13, 2)),
        (0.0, 1.0, 2.0, rat(5, 2)),
        (-2.0, 3.0, 1.0, rat_int(3)),
    ];
    for (p, q, r, expect) in cases {
        let tf = CanonicalTriangle::new(p, q, r).unwrap();
        let exact = CanonicalTriangle::new(
            Rat::from_float(p).unwrap(),
            Rat::from_float(q).unwrap(),
            Rat::from_float(r).unwrap(),
        )
        .unwrap();
        assert_eq!(admissible_weight(&exact).unwrap(), expect);
        let report = worst_ratio_canonical(&tf, 300, 1e-9, 1e-9).unwrap();
        let target = expect.to_f64_approx();
        assert!(
            (report.worst_ratio - target).abs() < 2e-2,
            "triangle ({p},{q},{r}): search {} vs bound {target}",
            report.worst_ratio
        );
    }
}

#[test]
fn key_points_lie_on_the_triangle() {
    let mut sampler = RationalSampler::new(0xB3);
    for (tag, vertex) in covered_rows() {
        let t = sampler.triangle_in_chain(tag);
        let v = key_point(tag, vertex, &t).unwrap();
        // Every key point sits on the boundary, where the worst edge margin
        // is exactly zero.
        assert_eq!(t.interior_margin(&v), rat_int(0));
    }
}
