#![allow(dead_code)]

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sidigraph_core::{Arc, Sidigraph, Sign};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Off-diagonal positions of an `n×n` matrix, row by row.
pub fn slots(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect()
}

/// Graph from one ternary digit per slot: 0 absent, 1 positive, 2 negative.
pub fn from_digits(n: usize, digits: &[u8]) -> Sidigraph {
    let arcs = slots(n)
        .into_iter()
        .zip(digits)
        .filter(|(_, &d)| d != 0)
        .map(|((u, v), &d)| {
            Arc::new(
                u,
                v,
                if d == 1 {
                    Sign::Positive
                } else {
                    Sign::Negative
                },
            )
        });
    Sidigraph::new(n, arcs).unwrap()
}

/// Every sidigraph of order `n`.
pub fn all_sidigraphs(n: usize) -> impl Iterator<Item = Sidigraph> {
    let m = n * (n - 1);
    (0..3u32.pow(m as u32)).map(move |mut code| {
        let digits: Vec<u8> = (0..m)
            .map(|_| {
                let d = (code % 3) as u8;
                code /= 3;
                d
            })
            .collect();
        from_digits(n, &digits)
    })
}

pub fn random_sidigraph(rng: &mut impl Rng, n: usize, density: f64) -> Sidigraph {
    let digits: Vec<u8> = slots(n)
        .iter()
        .map(|_| {
            if rng.random_bool(density) {
                rng.random_range(1..=2)
            } else {
                0
            }
        })
        .collect();
    from_digits(n, &digits)
}

pub fn random_signs(rng: &mut impl Rng, s: &Sidigraph) -> Sidigraph {
    let signs: Vec<Sign> = (0..s.arc_count())
        .map(|_| {
            if rng.random::<bool>() {
                Sign::Negative
            } else {
                Sign::Positive
            }
        })
        .collect();
    s.with_signs(&signs)
}

/// All-positive digraph with arcs only across a random bipartition.
pub fn random_bipartite_digraph(rng: &mut impl Rng, n: usize, density: f64) -> Sidigraph {
    let side: Vec<bool> = (0..n).map(|_| rng.random::<bool>()).collect();
    let arcs = slots(n)
        .into_iter()
        .filter(|&(u, v)| side[u] != side[v] && rng.random_bool(density))
        .map(|(u, v)| Arc::positive(u, v));
    Sidigraph::new(n, arcs).unwrap()
}

/// All-positive strongly connected digraph: a Hamiltonian cycle through a
/// random vertex order plus random extra arcs.
pub fn random_strong_digraph(rng: &mut impl Rng, n: usize, density: f64) -> Sidigraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut present = vec![false; n * n];
    if n > 1 {
        for i in 0..n {
            present[order[i] * n + order[(i + 1) % n]] = true;
        }
    }
    for (u, v) in slots(n) {
        if rng.random_bool(density) {
            present[u * n + v] = true;
        }
    }
    let arcs = slots(n)
        .into_iter()
        .filter(|&(u, v)| present[u * n + v])
        .map(|(u, v)| Arc::positive(u, v));
    Sidigraph::new(n, arcs).unwrap()
}

/// Proptest strategy over sidigraphs with order in `orders`.
pub fn sidigraph(orders: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Sidigraph> {
    orders.prop_flat_map(|n| {
        prop::collection::vec(0u8..3, n * (n - 1)).prop_map(move |d| from_digits(n, &d))
    })
}
