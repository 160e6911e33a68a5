//! Property tests for the distance functions: metric axioms in exact
//! arithmetic, invariances, and Minkowski-order monotonicity.

use proptest::prelude::*;

use taxi_em_core::metric::{
    minkowski_distance, taxicab_distance, taxicab_point_line_distance, LineCoeffs, Point,
};
use taxi_em_core::scalar::{rat, rat_int, Rat};

fn rational() -> impl Strategy<Value = Rat> {
    (-3000i64..3000, 1i64..200).prop_map(|(n, d)| rat(n, d))
}

fn rat_point() -> impl Strategy<Value = Point<Rat>> {
    (rational(), rational()).prop_map(|(x, y)| Point::new(x, y))
}

fn coord() -> impl Strategy<Value = f64> {
    // Dyadic multiples keep f64 arithmetic comparisons honest.
    (-4096i64..4096).prop_map(|n| n as f64 / 16.0)
}

proptest! {
    #[test]
    fn taxicab_is_symmetric_and_positive(a in rat_point(), b in rat_point()) {
        let d = taxicab_distance(&a, &b);
        prop_assert_eq!(d.clone(), taxicab_distance(&b, &a));
        prop_assert!(d >= rat_int(0));
        prop_assert_eq!(d == rat_int(0), a == b);
    }

    #[test]
    fn taxicab_triangle_inequality(a in rat_point(), b in rat_point(), c in rat_point()) {
        let ab = taxicab_distance(&a, &b);
        let bc = taxicab_distance(&b, &c);
        let ac = taxicab_distance(&a, &c);
        prop_assert!(ab + bc >= ac);
    }

    #[test]
    fn taxicab_is_translation_invariant(a in rat_point(), b in rat_point(), t in rat_point()) {
        let shift = |v: &Point<Rat>| Point::new(v.x.clone() + t.x.clone(), v.y.clone() + t.y.clone());
        prop_assert_eq!(taxicab_distance(&shift(&a), &shift(&b)), taxicab_distance(&a, &b));
    }

    #[test]
    fn taxicab_scales_homogeneously(a in rat_point(), b in rat_point(), n in -40i64..40, d in 1i64..20) {
        let lam = rat(n, d);
        let scale = |v: &Point<Rat>| Point::new(v.x.clone() * lam.clone(), v.y.clone() * lam.clone());
        let lhs = taxicab_distance(&scale(&a), &scale(&b));
        let abs = if lam < rat_int(0) { -lam.clone() } else { lam.clone() };
        prop_assert_eq!(lhs, abs * taxicab_distance(&a, &b));
    }

    #[test]
    fn minkowski_is_monotone_in_order(ax in coord(), ay in coord(), bx in coord(), by in coord()) {
        let a = Point::new(ax, ay);
        let b = Point::new(bx, by);
        let orders = [1.0, 1.5, 2.0, 3.0, 10.0];
        let mut prev = f64::INFINITY;
        for k in orders {
            let d = minkowski_distance(&a, &b, k).unwrap();
            prop_assert!(d <= prev + 1e-9 * (1.0 + prev.min(1e9)), "k={k}: {d} > {prev}");
            prev = d;
        }
    }

    #[test]
    fn minkowski_order_one_matches_taxicab(ax in coord(), ay in coord(), bx in coord(), by in coord()) {
        let a = Point::new(ax, ay);
        let b = Point::new(bx, by);
        let d1 = minkowski_distance(&a, &b, 1.0).unwrap();
        prop_assert_eq!(d1.to_bits(), taxicab_distance(&a, &b).to_bits());
    }

    #[test]
    fn minkowski_order_two_matches_euclidean(ax in coord(), ay in coord(), bx in coord(), by in coord()) {
        let a = Point::new(ax, ay);
        let b = Point::new(bx, by);
        let d2 = minkowski_distance(&a, &b, 2.0).unwrap();
        let eu = ((ax - bx).powi(2) + (ay - by).powi(2)).sqrt();
        prop_assert!((d2 - eu).abs() <= 1e-12 * (1.0 + eu));
    }

    #[test]
    fn point_line_distance_ignores_coefficient_scale(
        a in -50i64..50, b in -50i64..50, c in -200i64..200,
        n in 1i64..30, d in 1i64..30, sign in any::<bool>(),
        m in rat_point(),
    ) {
        prop_assume!(a != 0 || b != 0);
        let lam = if sign { rat(n, d) } else { -rat(n, d) };
        let line = LineCoeffs::new(rat_int(a), rat_int(b), rat_int(c));
        let scaled = LineCoeffs::new(
            line.a.clone() * lam.clone(),
            line.b.clone() * lam.clone(),
            line.c.clone() * lam.clone(),
        );
        prop_assert_eq!(
            taxicab_point_line_distance(&m, &line).unwrap(),
            taxicab_point_line_distance(&m, &scaled).unwrap()
        );
    }
}
