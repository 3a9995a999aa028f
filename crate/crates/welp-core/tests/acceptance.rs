//! Acceptance gate: one test per criterion, each printing a single
//! `criterion NN (...): PASS` line (run with `--nocapture` to see them all)
//! and enforcing its runtime budget. Every exact identity is asserted with
//! zero tolerance; floating-point cross-checks use the stated 1e-9 bound.
//!
//! The seeded populations are regenerated identically in each test that
//! shares them: 500 closed polygons (seeds 1000..1500), 300 simple polygons
//! (seeds 2000..2300).

use std::time::{Duration, Instant};
use welp_core::{
    axiom_samples, boundary_count_gcd, check_ang_axioms, check_dang_axioms, check_umlaufsatz,
    farey_sunburst, figure_eight, oblique_square, pick_report, random_closed_polygon,
    random_simple_polygon, rectangle, secant_square_identity, secant_triangle_identity,
    turning_angles, welp, welp_edge, winding_ang, winding_dang, AngleTurns, Classifier,
    IntegerPolygon, LatticeBox, LatticeVec, PointKind, Rat, Seed, SplitMix64, TheoremStatus, Vec2,
};

fn finish(number: u8, name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {number:02} ({name}): FAIL, took {elapsed:?}, budget {budget:?}"
    );
    println!("criterion {number:02} ({name}): PASS in {elapsed:?}");
}

fn closed_population() -> Vec<IntegerPolygon> {
    (0..500)
        .map(|i| {
            let k = 2 + (i % 9) as usize;
            let r = 2 + (i % 5) as i64;
            random_closed_polygon(Seed(1000 + i), k, r)
                .unwrap_or_else(|e| panic!("closed polygon seed {i}: {e}"))
        })
        .collect()
}

fn simple_population() -> Vec<IntegerPolygon> {
    (0..300)
        .map(|i| {
            let k = 3 + (i % 10) as usize;
            let r = 3 + (i % 6) as i64;
            random_simple_polygon(Seed(2000 + i), k, r)
                .unwrap_or_else(|e| panic!("simple polygon seed {i}: {e}"))
        })
        .collect()
}

#[test]
fn criterion_01_rectangle_counts() {
    let t = Instant::now();
    for a in 1..=8 {
        for b in 1..=8 {
            let r = rectangle(a, b).unwrap();
            let report = pick_report(&r, None).unwrap();
            assert_eq!(report.area, Rat::int(a * b), "area of {a}x{b}");
            assert_eq!(report.interior, Some(((a - 1) * (b - 1)) as u64), "I of {a}x{b}");
            assert_eq!(report.boundary, Some((2 * a + 2 * b) as u64), "J of {a}x{b}");
            assert!(report.lemma_holds, "lemma for {a}x{b}");
            assert_eq!(report.theorem, TheoremStatus::Holds, "theorem for {a}x{b}");
        }
    }
    finish(1, "rectangle counts", t, Duration::from_secs(1));
}

#[test]
fn criterion_02_oblique_square() {
    let t = Instant::now();
    let report = pick_report(&oblique_square(), None).unwrap();
    assert_eq!(report.area, Rat::int(18));
    assert_eq!(report.interior, Some(13));
    assert_eq!(report.boundary, Some(12));
    assert!(report.lemma_holds);
    assert_eq!(report.theorem, TheoremStatus::Holds);
    finish(2, "oblique square", t, Duration::from_millis(100));
}

#[test]
fn criterion_03_farey_sunburst() {
    let t = Instant::now();
    let f6 = farey_sunburst(6).unwrap();
    assert_eq!(f6.distinct_vertices().len(), 64, "vertex count");
    assert!(f6.is_simple().unwrap(), "simplicity");
    let report = pick_report(&f6, None).unwrap();
    assert_eq!(report.area, Rat::int(48));
    assert_eq!(report.interior, Some(1));
    assert_eq!(report.boundary, Some(96));
    assert_eq!(report.theorem, TheoremStatus::Holds);
    let profile = turning_angles(&f6.to_polygon()).unwrap();
    assert_eq!(profile.umlaufzahl, AngleTurns::from_turns(Rat::one()), "umlaufzahl");
    finish(3, "farey sunburst order 6", t, Duration::from_secs(1));
}

#[test]
fn criterion_04_welp_edge_equals_area_edge_exhaustively() {
    let t = Instant::now();
    let b = LatticeBox::new(4);
    let mut pairs = 0u32;
    for ux in -4..=4i64 {
        for uy in -4..=4i64 {
            for vx in -4..=4i64 {
                for vy in -4..=4i64 {
                    let u = LatticeVec::new(ux, uy);
                    let v = LatticeVec::new(vx, vy);
                    assert_eq!(
                        welp_edge(u, v, &b).unwrap(),
                        welp_core::area_edge(&u.to_vec2(), &v.to_vec2()),
                        "welp_edge != area_edge at u={u}, v={v}"
                    );
                    pairs += 1;
                }
            }
        }
    }
    assert_eq!(pairs, 6561);
    finish(4, "per-edge identity on 6561 pairs", t, Duration::from_secs(30));
}

#[test]
fn criterion_05_lemma_on_closed_polygons() {
    let t = Instant::now();
    let mut checked = 0u32;
    for p in closed_population() {
        let b = LatticeBox::covering(&p);
        assert_eq!(welp(&p, &b).unwrap(), p.area(), "lemma on {:?}", p.vertices());
        checked += 1;
    }
    let eight = figure_eight();
    assert_eq!(welp(&eight, &LatticeBox::covering(&eight)).unwrap(), eight.area());
    assert_eq!(checked, 500);
    finish(5, "area = welp on 500 closed polygons", t, Duration::from_secs(60));
}

#[test]
fn criterion_06_theorem_on_simple_polygons() {
    let t = Instant::now();
    let mut checked = 0u32;
    for p in simple_population() {
        let report = pick_report(&p, None).unwrap();
        assert!(report.lemma_holds);
        assert_eq!(report.theorem, TheoremStatus::Holds, "on {:?}", p.vertices());
        assert_eq!(
            report.boundary,
            Some(boundary_count_gcd(&p).unwrap()),
            "gcd double-check on {:?}",
            p.vertices()
        );
        checked += 1;
    }
    assert_eq!(checked, 300);
    finish(6, "counting identity on 300 simple polygons", t, Duration::from_secs(60));
}

#[test]
fn criterion_07_jordan_values() {
    let t = Instant::now();
    for p in simple_population() {
        let classifier = Classifier::new(&p).unwrap();
        let profile = turning_angles(&p.to_polygon()).unwrap();
        let b = LatticeBox::covering(&p);
        for q in b.points() {
            let class = classifier.classify(q).unwrap();
            match class.kind {
                PointKind::Exterior => assert_eq!(class.winding, Rat::zero()),
                PointKind::Interior => assert_eq!(class.winding, Rat::one()),
                PointKind::OnEdge(_) => assert_eq!(class.winding, Rat::half()),
                PointKind::AtVertex(i) => {
                    assert_eq!(
                        &class.winding,
                        profile.betas[i].turns(),
                        "vertex {i} of {:?}",
                        p.vertices()
                    );
                }
            }
        }
    }
    finish(7, "jordan values on 300 polygons", t, Duration::from_secs(60));
}

#[test]
fn criterion_08_turning_identities() {
    let t = Instant::now();
    let half = AngleTurns::from_quarters(2);
    for p in simple_population() {
        let rp = p.to_polygon();
        assert!(check_umlaufsatz(&rp).unwrap(), "umlaufsatz on {:?}", p.vertices());
        let profile = turning_angles(&rp).unwrap();
        let n = profile.len() as i64;
        assert_eq!(profile.umlaufzahl, AngleTurns::from_turns(Rat::one()));
        assert_eq!(profile.beta_sum(), AngleTurns::from_turns(Rat::new(n, 2) - Rat::one()));
        for (a, b) in profile.alphas.iter().zip(&profile.betas) {
            assert_eq!(a.clone() + b.clone(), half);
        }
        let n = rp.edge_count();
        for i in 0..=n - 2 {
            assert!(
                secant_triangle_identity(&rp, i).unwrap(),
                "triangle identity at {i} on {:?}",
                p.vertices()
            );
        }
        for i in 0..n {
            for j in i + 2..=n.saturating_sub(2) {
                assert!(
                    secant_square_identity(&rp, i, j).unwrap(),
                    "square identity at ({i}, {j}) on {:?}",
                    p.vertices()
                );
            }
        }
    }
    finish(8, "turning identities on 300 polygons", t, Duration::from_secs(60));
}

#[test]
fn criterion_09_angle_measure_axioms() {
    let t = Instant::now();
    let samples = axiom_samples(Seed(424242), 5000);
    assert_eq!(samples.len(), 5000);
    let dang_report = check_dang_axioms(&samples);
    assert!(dang_report.all_pass(), "discrete measure axioms: {dang_report:?}");
    let ang_report = check_ang_axioms(&samples, 1e-9);
    assert!(ang_report.all_pass(), "euclidean measure axioms: {ang_report:?}");
    finish(9, "measure axioms on 5000 samples", t, Duration::from_secs(60));
}

#[test]
fn criterion_10_euclidean_discrete_agreement() {
    let t = Instant::now();
    let mut rng = SplitMix64::new(Seed(777));
    let mut checked = 0u32;
    let mut polygon_index = 0u64;
    while checked < 1000 {
        let k = 2 + (polygon_index % 9) as usize;
        let r = 2 + (polygon_index % 5) as i64;
        let p = random_closed_polygon(Seed(3000 + polygon_index), k, r).unwrap().to_polygon();
        polygon_index += 1;
        let span = 3 * r;
        let mut taken = 0;
        while taken < 20 {
            let q = Vec2::new(
                Rat::new(rng.next_in_range(-span, span), rng.next_in_range(1, 4)),
                Rat::new(rng.next_in_range(-span, span), rng.next_in_range(1, 4)),
            );
            if p.contains_on_boundary(&q) {
                continue;
            }
            let exact = winding_dang(&p, &q).into_turns().to_f64();
            let approx = winding_ang(&p, &q).value();
            assert!(
                (exact - approx).abs() < 1e-9,
                "windings disagree at {q} on {:?}: {exact} vs {approx}",
                p.vertices()
            );
            taken += 1;
            checked += 1;
        }
    }
    assert_eq!(checked, 1000);
    finish(10, "winding agreement at 1000 points", t, Duration::from_secs(60));
}

#[test]
fn criterion_11_half_integrality() {
    let t = Instant::now();
    let mut checked = 0u32;
    for p in closed_population().into_iter().chain(simple_population()) {
        assert!(
            (p.area() * Rat::int(2)).is_integer(),
            "2 * area not integral on {:?}",
            p.vertices()
        );
        checked += 1;
    }
    assert_eq!(checked, 800);
    finish(11, "half-integrality of 800 areas", t, Duration::from_secs(60));
}
