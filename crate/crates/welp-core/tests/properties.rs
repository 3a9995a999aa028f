//! Randomized invariant checks. Everything exact is asserted exactly; the
//! floating-point euclidean measure only ever appears behind a 1e-9 bound.

use proptest::prelude::*;
use std::ops::RangeInclusive;
use welp_core::{
    ang, area_edge, axiom_samples, check_ang_axioms, check_dang_axioms, dang, dang_lattice,
    parse_polygon, pick_report, polygon_to_json, random_closed_polygon, random_simple_polygon,
    secant_square_identity, secant_triangle_identity, turning_angles, welp, welp_edge, winding_ang,
    winding_dang, AngleTurns, IntegerPolygon, LatticeBox, LatticeVec, Polygon, Rat, Seed,
    SplitMix64, TheoremStatus, Vec2,
};

fn lattice_vec(range: RangeInclusive<i64>) -> impl Strategy<Value = LatticeVec> {
    (range.clone(), range).prop_map(|(x, y)| LatticeVec::new(x, y))
}

fn rat(numer: RangeInclusive<i64>, denom: RangeInclusive<i64>) -> impl Strategy<Value = Rat> {
    (numer, denom).prop_map(|(n, d)| Rat::new(n, d))
}

fn vec2(range: RangeInclusive<i64>) -> impl Strategy<Value = Vec2> {
    (rat(range.clone(), 1..=4), rat(range, 1..=4)).prop_map(|(x, y)| Vec2::new(x, y))
}

fn scaled(lambda: &Rat, v: &Vec2) -> Vec2 {
    Vec2::new(lambda * &v.x, lambda * &v.y)
}

proptest! {
    #[test]
    fn dang_is_antisymmetric(u in lattice_vec(-50..=50), v in lattice_vec(-50..=50)) {
        prop_assert_eq!(dang_lattice(v, u), -dang_lattice(u, v));
    }

    #[test]
    fn dang_is_symmetric_under_point_reflection(
        u in lattice_vec(-50..=50),
        v in lattice_vec(-50..=50),
    ) {
        prop_assert_eq!(dang_lattice(-u, -v), dang_lattice(u, v));
    }

    #[test]
    fn dang_ignores_positive_scaling(
        u in vec2(-9..=9),
        v in vec2(-9..=9),
        lambda in rat(1..=12, 1..=12),
    ) {
        let base = dang(&u, &v);
        prop_assert_eq!(dang(&scaled(&lambda, &u), &v), base.clone());
        prop_assert_eq!(dang(&u, &scaled(&lambda, &v)), base);
    }

    #[test]
    fn dang_values_are_quarter_turns(u in lattice_vec(-50..=50), v in lattice_vec(-50..=50)) {
        let turns = dang_lattice(u, v).into_turns();
        let quarters = [0i64, 1, -1, 2, -2].map(Rat::from_quarters);
        prop_assert!(quarters.contains(&turns), "dang = {turns}");
    }

    #[test]
    fn dang_lattice_path_agrees_with_rational_path(
        u in lattice_vec(-100..=100),
        v in lattice_vec(-100..=100),
    ) {
        prop_assert_eq!(dang_lattice(u, v), dang(&u.to_vec2(), &v.to_vec2()));
    }

    #[test]
    fn dang_axioms_hold_for_any_sample_seed(seed in any::<u64>()) {
        let samples = axiom_samples(Seed(seed), 60);
        prop_assert!(check_dang_axioms(&samples).all_pass());
        prop_assert!(check_ang_axioms(&samples, 1e-9).all_pass());
    }

    #[test]
    fn welp_edge_equals_area_edge(u in lattice_vec(-8..=8), v in lattice_vec(-8..=8)) {
        let b = LatticeBox::new(u.max_norm().max(v.max_norm()));
        prop_assert_eq!(
            welp_edge(u, v, &b).unwrap(),
            area_edge(&u.to_vec2(), &v.to_vec2())
        );
    }

    #[test]
    fn welp_edge_is_stable_under_box_growth(
        u in lattice_vec(-6..=6),
        v in lattice_vec(-6..=6),
        extra in 1i64..=3,
    ) {
        let r = u.max_norm().max(v.max_norm());
        let small = welp_edge(u, v, &LatticeBox::new(r)).unwrap();
        let grown = welp_edge(u, v, &LatticeBox::new(r + extra)).unwrap();
        prop_assert_eq!(small, grown);
    }

    #[test]
    fn closed_polygon_area_negates_under_reversal(
        points in proptest::collection::vec((-9i64..=9, -9i64..=9), 3..=10),
    ) {
        let p = IntegerPolygon::closed_from_points(&points).unwrap();
        prop_assert_eq!(p.reversed().area(), -p.area());
    }

    #[test]
    fn closed_polygon_area_is_translation_invariant(
        points in proptest::collection::vec((-9i64..=9, -9i64..=9), 3..=10),
        shift in lattice_vec(-20..=20),
    ) {
        let p = IntegerPolygon::closed_from_points(&points).unwrap();
        prop_assert_eq!(p.translated(shift).area(), p.area());
    }

    #[test]
    fn twice_the_area_of_a_lattice_polygon_is_integral(
        points in proptest::collection::vec((-9i64..=9, -9i64..=9), 3..=10),
    ) {
        let p = IntegerPolygon::closed_from_points(&points).unwrap();
        prop_assert!((p.area() * Rat::int(2)).is_integer());
    }

    #[test]
    fn area_equals_welp_for_arbitrary_closed_polygons(
        seed in any::<u64>(),
        k in 2usize..=8,
        r in 2i64..=5,
    ) {
        let p = random_closed_polygon(Seed(seed), k, r).unwrap();
        let b = LatticeBox::covering(&p);
        prop_assert_eq!(welp(&p, &b).unwrap(), p.area());
    }

    #[test]
    fn seeded_simple_polygons_satisfy_the_counting_identity(
        seed in any::<u64>(),
        k in 3usize..=9,
        r in 2i64..=5,
    ) {
        let p = random_simple_polygon(Seed(seed), k, r).unwrap();
        let report = pick_report(&p, None).unwrap();
        prop_assert!(report.lemma_holds);
        prop_assert_eq!(report.theorem, TheoremStatus::Holds);
    }

    #[test]
    fn simplicity_is_invariant_under_rigid_relabelings(
        seed in any::<u64>(),
        k in 3usize..=8,
        r in 2i64..=5,
        shift in lattice_vec(-10..=10),
        rotation in 0usize..8,
    ) {
        let p = random_simple_polygon(Seed(seed), k, r).unwrap().to_polygon();
        prop_assert!(p.is_simple().unwrap());
        prop_assert!(p.translated(&shift.to_vec2()).is_simple().unwrap());
        prop_assert!(p.reversed().is_simple().unwrap());
        let rotated = p.rotated(rotation % p.edge_count()).unwrap();
        prop_assert!(rotated.is_simple().unwrap());
        prop_assert_eq!(rotated.area(), p.area());
    }

    #[test]
    fn turning_profile_laws(
        seed in any::<u64>(),
        k in 3usize..=9,
        r in 2i64..=5,
    ) {
        let p = random_simple_polygon(Seed(seed), k, r).unwrap().to_polygon();
        let profile = turning_angles(&p).unwrap();
        let half = AngleTurns::from_quarters(2);
        for (a, b) in profile.alphas.iter().zip(&profile.betas) {
            prop_assert_eq!(a.clone() + b.clone(), half.clone());
        }
        prop_assert_eq!(profile.umlaufzahl.clone(), AngleTurns::from_quarters(4));
        let expected = AngleTurns::from_turns(Rat::new(k as i64, 2) - Rat::one());
        prop_assert_eq!(profile.beta_sum(), expected);
    }

    #[test]
    fn secant_identities_hold_on_seeded_simple_polygons(
        seed in any::<u64>(),
        k in 4usize..=9,
        r in 2i64..=5,
    ) {
        let p = random_simple_polygon(Seed(seed), k, r).unwrap().to_polygon();
        let n = p.edge_count();
        for i in 0..=n - 2 {
            prop_assert!(secant_triangle_identity(&p, i).unwrap(), "triangle at {}", i);
        }
        for i in 0..n {
            for j in i + 2..=n - 2 {
                prop_assert!(secant_square_identity(&p, i, j).unwrap(), "square at {},{}", i, j);
            }
        }
    }

    #[test]
    fn euclidean_and_discrete_windings_agree_off_curve(
        seed in any::<u64>(),
        k in 2usize..=7,
        r in 2i64..=4,
        qx in rat(-15..=15, 1..=3),
        qy in rat(-15..=15, 1..=3),
    ) {
        let p = random_closed_polygon(Seed(seed), k, r).unwrap().to_polygon();
        let q = Vec2::new(qx, qy);
        prop_assume!(!p.contains_on_boundary(&q));
        let exact = winding_dang(&p, &q).into_turns().to_f64();
        let approx = winding_ang(&p, &q).value();
        prop_assert!((exact - approx).abs() < 1e-9, "exact {exact} vs approx {approx}");
    }

    #[test]
    fn rat_strings_round_trip(n in any::<i64>(), d in 1i64..=1_000_000) {
        let r = Rat::new(n, d);
        prop_assert_eq!(r.to_string().parse::<Rat>().unwrap(), r.clone());
        let json = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rat>(&json).unwrap(), r);
    }

    #[test]
    fn polygon_documents_round_trip(
        coords in proptest::collection::vec((rat(-30..=30, 1..=6), rat(-30..=30, 1..=6)), 2..=8),
        close in any::<bool>(),
    ) {
        let mut vertices: Vec<Vec2> =
            coords.into_iter().map(|(x, y)| Vec2::new(x, y)).collect();
        if close {
            let first = vertices[0].clone();
            vertices.push(first);
        }
        let p = Polygon::new(vertices).unwrap();
        let doc = polygon_to_json(&p);
        prop_assert_eq!(parse_polygon(&doc).unwrap(), p);
    }

    #[test]
    fn rng_range_draws_stay_in_bounds(
        seed in any::<u64>(),
        lo in -1_000i64..=1_000,
        span in 0i64..=2_000,
    ) {
        let hi = lo + span;
        let mut rng = SplitMix64::new(Seed(seed));
        for _ in 0..32 {
            let x = rng.next_in_range(lo, hi);
            prop_assert!(x >= lo && x <= hi);
        }
    }

    #[test]
    fn ang_stays_within_half_turn(u in lattice_vec(-40..=40), v in lattice_vec(-40..=40)) {
        let a = ang(&u.to_vec2(), &v.to_vec2()).value();
        prop_assert!((-0.5..=0.5).contains(&a));
    }
}
