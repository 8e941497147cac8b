mod common;

use common::*;
use num_complex::Complex64;
use proptest::prelude::*;
use sidigraph_core::charpoly::charpoly_exact;
use sidigraph_core::constructions::{assign_signs_for_class, SignClass};
use sidigraph_core::fixtures::builtin_fixtures;
use sidigraph_core::linear::{neg_invariance_equivalences, LinearOptions};
use sidigraph_core::roots::companion_eigenvalues;
use sidigraph_core::spectra::*;
use sidigraph_core::{IntPolynomial, Sidigraph};

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_leading_first(c)
}

/// Pairs each root in `a` with a distinct nearest root in `b`.
fn same_multiset(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|z| {
        let best = (0..b.len())
            .filter(|&i| !used[i])
            .min_by(|&i, &j| (b[i] - z).norm().total_cmp(&(b[j] - z).norm()));
        match best {
            Some(i) if (b[i] - z).norm() <= tol => {
                used[i] = true;
                true
            }
            _ => false,
        }
    })
}

#[test]
fn sparse_high_degree_residuals() {
    let mut c17 = vec![0i64; 18];
    for (k, v) in [(17, 1), (11, 3), (5, 1)] {
        c17[k] = v;
    }
    let mut d17 = c17.clone();
    d17[11] = 1;
    for c in [c17, d17] {
        let poly = IntPolynomial::from_ascending(&c);
        let sp = roots(&poly).unwrap();
        assert_eq!(sp.len(), 17);
        assert!(sp.max_residual() <= 1e-10, "{}", sp.max_residual());
        assert_eq!(sp.roots.iter().filter(|z| z.norm() == 0.0).count(), 5);
        let companion = companion_eigenvalues(&poly).unwrap();
        assert!(same_multiset(&sp.roots, &companion, 1e-6));
    }
}

#[test]
fn fixture_spectra() {
    let fx = builtin_fixtures().unwrap();
    let s2 = std::f64::consts::SQRT_2;
    let cases: [(&str, Vec<Complex64>, [bool; 3]); 3] = [
        (
            "thm211_s1",
            [-2.0, 0.0, 1.0, 1.0]
                .map(|x| Complex64::new(x, 0.0))
                .to_vec(),
            [true, true, true],
        ),
        (
            "thm212_s1",
            [-s2, -1.0, 1.0, s2]
                .map(|x| Complex64::new(x, 0.0))
                .to_vec(),
            [false, true, false],
        ),
        (
            "thm213_s1",
            vec![
                Complex64::new(-1.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(0.0, 1.0),
            ],
            [false, false, true],
        ),
    ];
    for (prefix, want, [integral, real, gaussian]) in cases {
        let family = &prefix[..6];
        for (name, s) in fx.iter().filter(|(k, _)| k.starts_with(family)) {
            let sp = spectrum(s).unwrap();
            assert!(
                same_multiset(&sp.roots, &want, 1e-8),
                "{name}: {:?}",
                sp.roots
            );
            let c = classify_spectrum(&sp, CLASS_TOL);
            assert_eq!(
                (c.integral, c.real, c.gaussian),
                (integral, real, gaussian),
                "{name}"
            );
        }
    }
    let names: Vec<&String> = fx.keys().collect();
    for a in &names {
        for b in &names {
            if a[..6] == b[..6] {
                assert!(cospectral(&fx[*a], &fx[*b]).unwrap());
            }
        }
    }
}

#[test]
fn strongly_quasi_cospectral_fixture_digraphs() {
    let fx = builtin_fixtures().unwrap();
    for family in ["thm211", "thm212"] {
        let d1 = fx[&format!("{family}_s1")].underlying_digraph();
        let d2 = fx[&format!("{family}_s2")].underlying_digraph();
        assert_eq!(charpoly_exact(&d1).unwrap(), p(&[1, 0, -3, -2, 0]));
        let w = quasi_cospectral_search(&d1, &d2, 1 << 20).unwrap().unwrap();
        assert!(w.strong && !w.strict);
        assert_eq!(charpoly_exact(&w.signing1).unwrap(), w.polynomial);
        assert_eq!(charpoly_exact(&w.signing2).unwrap(), w.polynomial);
        assert_eq!(w.signing1.underlying_digraph(), d1);
        assert_eq!(w.signing2.underlying_digraph(), d2);
    }
}

#[test]
fn strictly_quasi_cospectral_pair() {
    // the two underlying digraphs differ in spectrum, yet admit signings
    // sharing z^4 - 1
    let fx = builtin_fixtures().unwrap();
    let d1 = fx["thm213_s1"].underlying_digraph();
    let d2 = fx["thm213_s2"].underlying_digraph();
    assert!(!cospectral(&d1, &d2).unwrap());
    let w = quasi_cospectral_search(&d1, &d2, 1 << 20).unwrap().unwrap();
    assert!(w.strict && !w.strong);
    assert_eq!(w.polynomial, p(&[1, 0, 0, 0, -1]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn residuals_and_conjugate_symmetry(s in sidigraph(2..=9)) {
        let sp = spectrum(&s).unwrap();
        prop_assert_eq!(sp.len(), s.order());
        prop_assert!(sp.max_residual() <= 1e-10);
        let conj: Vec<Complex64> = sp.roots.iter().map(|z| z.conj()).collect();
        prop_assert!(same_multiset(&sp.roots, &conj, 1e-8));
        prop_assert!(sp.energy() >= 0.0);
    }

    #[test]
    fn negation_keeps_energy_when_spectrum_is_symmetric(s in sidigraph(2..=6)) {
        if neg_invariance_equivalences(&s, LinearOptions::default()).unwrap().spec_invariant {
            let e1 = energy(&s).unwrap();
            let e2 = energy(&s.negate()).unwrap();
            prop_assert!((e1 - e2).abs() < 1e-9);
        }
        // negation maps the spectrum to its negative in every case
        let e1 = energy(&s).unwrap();
        let e2 = energy(&s.negate()).unwrap();
        prop_assert!((e1 - e2).abs() < 1e-8);
    }

    #[test]
    fn rotation_between_alternating_classes(seed in any::<u64>(), n in 2usize..=10) {
        let mut r = rng(seed);
        let d = random_bipartite_digraph(&mut r, n, 0.45);
        let s1 = assign_signs_for_class(&d, SignClass::Delta1).unwrap();
        let s2 = assign_signs_for_class(&d, SignClass::Delta2).unwrap();
        if let (Some(s1), Some(s2)) = (s1, s2) {
            let r1 = spectrum(&s1).unwrap();
            let r2 = spectrum(&s2).unwrap();
            let rotated: Vec<Complex64> = r2.roots.iter().map(|z| z * Complex64::i()).collect();
            prop_assert!(same_multiset(&r1.roots, &rotated, 1e-6));
            let im2: f64 = r2.roots.iter().map(|z| z.im.abs()).sum();
            let im1: f64 = r1.roots.iter().map(|z| z.im.abs()).sum();
            prop_assert!((r1.energy() - im2).abs() < 1e-6);
            prop_assert!((r2.energy() - im1).abs() < 1e-6);
        }
    }

    #[test]
    fn strong_digraphs_bipartite_iff_symmetric_spectrum(seed in any::<u64>(), n in 1usize..=5) {
        let mut r = rng(seed);
        let d = random_strong_digraph(&mut r, n, 0.3);
        prop_assert!(d.is_strongly_connected());
        let report = neg_invariance_equivalences(&d, LinearOptions::default()).unwrap();
        prop_assert_eq!(d.is_bipartite(), report.odd_coeffs_zero);
        prop_assert_eq!(d.is_bipartite(), report.spec_invariant);
    }
}

#[test]
fn equienergetic_requires_distinct_polynomials() {
    let s = Sidigraph::empty(3).unwrap();
    assert!(!equienergetic(&s, &s, 1.0).unwrap());
}
