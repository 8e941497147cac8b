mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use sidigraph_core::charpoly::{charpoly_exact, charpoly_minors, MINORS_ORDER_LIMIT};
use sidigraph_core::cycles::{classify, enumerate_cycles, CycleOptions};
use sidigraph_core::linear::{
    enumerate_linear_subs, linear_census, neg_invariance_equivalences, LinearOptions,
};
use sidigraph_core::Sidigraph;

fn three_way(s: &Sidigraph) {
    let exact = charpoly_exact(s).unwrap();
    assert_eq!(
        charpoly_minors(s, MINORS_ORDER_LIMIT).unwrap(),
        exact,
        "{s:?}"
    );
    let census = linear_census(s, LinearOptions::default()).unwrap();
    assert_eq!(census.polynomial(), exact, "{s:?}");
    let n = s.order();
    for j in 1..=n {
        let t = &census.types[j];
        assert_eq!(BigInt::from(t.signed_total()), exact.coeff(n - j));
        assert_eq!(t.total(), census.count(j));
    }
}

#[test]
fn exhaustive_small_orders() {
    let mut seen = 0;
    for n in 1..=3 {
        for s in all_sidigraphs(n) {
            three_way(&s);
            let balanced = classify(&s).unwrap().is_cycle_balanced;
            let same =
                charpoly_exact(&s).unwrap() == charpoly_exact(&s.underlying_digraph()).unwrap();
            assert_eq!(balanced, same, "{s:?}");
            assert!(neg_invariance_equivalences(&s, LinearOptions::default())
                .unwrap()
                .consistent());
            seen += 1;
        }
    }
    assert_eq!(seen, 1 + 9 + 729);
}

#[test]
fn seeded_samples_up_to_eight() {
    let mut r = rng(11);
    for n in 4..=8 {
        for k in 0..60 {
            let density = 0.15 + 0.7 * (k as f64 / 60.0);
            three_way(&random_sidigraph(&mut r, n, density));
        }
    }
}

fn bipartite_census(s: &Sidigraph) {
    let n = s.order();
    let phi = charpoly_exact(s).unwrap();
    for j in (1..=n).step_by(2) {
        assert_eq!(phi.coeff(n - j), BigInt::from(0));
    }
    for j in (2..=n).step_by(2) {
        for l in enumerate_linear_subs(s, j, LinearOptions::default()).unwrap() {
            let twos = l.cycles.iter().filter(|c| c.len() % 4 == 2).count();
            assert_eq!(twos % 2, (j / 2) % 2, "order {j}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn three_methods_agree(s in sidigraph(4..=7)) {
        three_way(&s);
    }

    #[test]
    fn balance_matches_underlying_spectrum(s in sidigraph(2..=6)) {
        let balanced = classify(&s).unwrap().is_cycle_balanced;
        let same = charpoly_exact(&s).unwrap() == charpoly_exact(&s.underlying_digraph()).unwrap();
        prop_assert_eq!(balanced, same);
    }

    #[test]
    fn negation_report_is_consistent(s in sidigraph(2..=6)) {
        prop_assert!(neg_invariance_equivalences(&s, LinearOptions::default()).unwrap().consistent());
    }

    #[test]
    fn negate_and_underlying(s in sidigraph(1..=6)) {
        prop_assert_eq!(s.negate().negate(), s.clone());
        let u = s.underlying_digraph();
        prop_assert_eq!(u.underlying_digraph(), u);
    }

    #[test]
    fn stored_cycle_signs(s in sidigraph(2..=6)) {
        for c in enumerate_cycles(&s, CycleOptions::default()).unwrap() {
            let product = c.arcs().fold(1i8, |acc, (u, v)| acc * s.entry(u, v));
            prop_assert_eq!(c.sign.to_i8(), product);
        }
    }

    #[test]
    fn bipartite_graphs(seed in any::<u64>(), n in 2usize..=8) {
        let mut r = rng(seed);
        let d = random_bipartite_digraph(&mut r, n, 0.5);
        let s = random_signs(&mut r, &d);
        for c in enumerate_cycles(&s, CycleOptions::default()).unwrap() {
            prop_assert_eq!(c.len() % 2, 0);
        }
        bipartite_census(&s);
        // an even cycle has an even number of arcs, so negation keeps its sign
        prop_assert_eq!(classify(&s.negate()).unwrap(), classify(&s).unwrap());
    }
}

#[test]
fn negated_positive_digon() {
    let digon = Sidigraph::new(
        2,
        [
            sidigraph_core::Arc::positive(0, 1),
            sidigraph_core::Arc::positive(1, 0),
        ],
    )
    .unwrap();
    let c = classify(&digon.negate()).unwrap();
    assert!(c.in_delta1 && !c.in_delta2);
}
