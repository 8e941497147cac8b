mod common;

use common::*;
use num_complex::Complex64;
use proptest::prelude::*;
use sidigraph_core::charpoly::charpoly_exact;
use sidigraph_core::constructions::*;
use sidigraph_core::cycles::classify;
use sidigraph_core::fixtures::builtin_fixtures;
use sidigraph_core::search::{search_by_charpoly, SearchConstraints, SearchMode};
use sidigraph_core::spectra::{cospectral, energy, equienergetic, spectrum};
use sidigraph_core::{IntPolynomial, Sidigraph, Sign};

fn chord_specs(max_n: usize) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 4..=max_n {
        let kind = if n % 2 == 0 {
            FamilyKind::ChordEven
        } else {
            FamilyKind::ChordOdd
        };
        for j in FamilySpec::valid_chords(kind, n) {
            specs.push(FamilySpec { kind, n, j, k: 0 });
        }
    }
    specs
}

#[test]
fn chord_families_up_to_sixteen() {
    let specs = chord_specs(16);
    assert!(specs.len() > 40);
    for spec in specs {
        let (a, b) = family_chord(spec).unwrap();
        let (pa, pb) = family_chord_polynomials(spec).unwrap();
        let (qa, qb) = (charpoly_exact(&a).unwrap(), charpoly_exact(&b).unwrap());
        assert_eq!(qa, pa, "{spec:?}");
        assert_eq!(qb, pb, "{spec:?}");
        // phi_a(-z) against phi_b(z)
        match spec.kind {
            FamilyKind::ChordEven => assert_eq!(qa.reflect(), qb),
            _ => assert_eq!(qa.reflect(), qb.neg()),
        }
        assert!(a.is_strongly_connected() && b.is_strongly_connected());
        assert!(!classify(&a).unwrap().is_cycle_balanced);
        assert!(!classify(&b).unwrap().is_cycle_balanced);
        assert!(!cospectral(&a, &b).unwrap());
        assert!(equienergetic(&a, &b, 1e-9).unwrap());
    }
}

#[test]
fn chord_family_energy_value() {
    let (a, _) = family_chord(FamilySpec::chord_even(6, 3)).unwrap();
    // roots are the primitive 9th roots of unity
    let want: f64 = [1, 2, 4, 5, 7, 8]
        .iter()
        .map(|&k| (2.0 * std::f64::consts::PI * k as f64 / 9.0).cos().abs())
        .sum();
    assert!((energy(&a).unwrap() - want).abs() < 1e-12);
    assert!((want - 3.7587704831436333).abs() < 1e-12);
}

fn kronecker_sum(a: &Sidigraph, b: &Sidigraph) -> Vec<Vec<i8>> {
    let (n1, n2) = (a.order(), b.order());
    let n = n1 * n2;
    let mut m = vec![vec![0i8; n]; n];
    for r in 0..n {
        for c in 0..n {
            let (i, j) = (r / n2, r % n2);
            let (k, l) = (c / n2, c % n2);
            let mut v = 0;
            if j == l {
                v += a.entry(i, k);
            }
            if i == k {
                v += b.entry(j, l);
            }
            m[r][c] = v;
        }
    }
    m
}

#[test]
fn product_spectra() {
    let pos = signed_cycle(2, Sign::Positive).unwrap();
    let het = signed_cycle(2, Sign::Negative).unwrap();
    let sp = spectrum(&cartesian_product(&pos, &pos).unwrap()).unwrap();
    let re: Vec<f64> = sp.roots.iter().map(|z| z.re).collect();
    for (got, want) in re.iter().zip([-2.0, 0.0, 0.0, 2.0]) {
        assert!((got - want).abs() < 1e-9);
    }
    let sp = spectrum(&cartesian_product(&het, &pos).unwrap()).unwrap();
    let want = [(-1.0, -1.0), (-1.0, 1.0), (1.0, -1.0), (1.0, 1.0)];
    for (z, (re, im)) in sp.roots.iter().zip(want) {
        assert!((z - Complex64::new(re, im)).norm() < 1e-9, "{z}");
    }
}

#[test]
fn power_families_are_cospectral() {
    let fx = builtin_fixtures().unwrap();
    for (a, b) in [
        ("thm211_s1", "thm211_s2"),
        ("thm212_s1", "thm212_s3"),
        ("thm213_s2", "thm213_s3"),
    ] {
        let family = power_family(&fx[a], &fx[b], 2).unwrap();
        assert_eq!(family.len(), 2);
        let phi = charpoly_exact(&family[0]).unwrap();
        for s in &family {
            assert_eq!(s.order(), 16);
            assert_eq!(charpoly_exact(s).unwrap(), phi);
            assert!(s.is_strongly_connected());
            assert!(!s.is_symmetric());
            assert!(!classify(s).unwrap().is_cycle_balanced);
        }
    }
}

#[test]
fn search_recovers_fixture_families() {
    let target = IntPolynomial::from_leading_first(&[1, 0, -3, 2, 0]);
    let constraints = SearchConstraints {
        strongly_connected: true,
        non_cycle_balanced: true,
        ..Default::default()
    };
    let hits = search_by_charpoly(4, &target, constraints, SearchMode::default()).unwrap();
    let fx = builtin_fixtures().unwrap();
    assert!(hits.contains(&fx["thm211_s1"]));
    assert!(hits.contains(&fx["thm211_s2"]));
    let mut sorted = hits.clone();
    sorted.sort_by(|a, b| a.arcs().cmp(b.arcs()));
    assert_eq!(sorted, hits);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_adjacency_is_kronecker_sum(a in sidigraph(1..=4), b in sidigraph(1..=4)) {
        let prod = cartesian_product(&a, &b).unwrap();
        prop_assert_eq!(prod.adjacency_matrix(), kronecker_sum(&a, &b));
    }

    #[test]
    fn product_of_strong_graphs_is_strong(seed in any::<u64>(), n1 in 1usize..=8, n2 in 1usize..=8) {
        let mut r = rng(seed);
        let a = random_strong_digraph(&mut r, n1, 0.2);
        let a = random_signs(&mut r, &a);
        let b = random_strong_digraph(&mut r, n2, 0.2);
        let b = random_signs(&mut r, &b);
        prop_assert!(cartesian_product(&a, &b).unwrap().is_strongly_connected());
    }

    #[test]
    fn product_balance_iff_factors_balanced(a in sidigraph(1..=4), b in sidigraph(1..=4)) {
        let prod = cartesian_product(&a, &b).unwrap();
        prop_assume!(prod.order() <= 16);
        let both = classify(&a).unwrap().is_cycle_balanced && classify(&b).unwrap().is_cycle_balanced;
        prop_assert_eq!(classify(&prod).unwrap().is_cycle_balanced, both);
    }

    #[test]
    fn assigned_signs_land_in_class(seed in any::<u64>(), n in 2usize..=10) {
        let mut r = rng(seed);
        let d = random_bipartite_digraph(&mut r, n, 0.4);
        for target in [SignClass::Delta1, SignClass::Delta2] {
            if let Some(s) = assign_signs_for_class(&d, target).unwrap() {
                prop_assert_eq!(s.underlying_digraph(), d.clone());
                let c = classify(&s).unwrap();
                let member = match target {
                    SignClass::Delta1 => c.in_delta1,
                    SignClass::Delta2 => c.in_delta2,
                };
                prop_assert!(member);
            }
        }
    }
}
