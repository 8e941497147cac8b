//! Search for sidigraphs with a prescribed characteristic polynomial.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::charpoly::charpoly_dense;
use crate::cycles::classify;
use crate::error::{Error, Result};
use crate::graph::{Arc, Sidigraph, Sign};
use crate::poly::IntPolynomial;

/// Largest order searched exhaustively.
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 5;
/// Default number of candidate graphs an exhaustive search may visit.
pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

/// Structural filters applied to polynomial matches.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchConstraints {
    pub strongly_connected: bool,
    pub non_cycle_balanced: bool,
    pub bipartite: bool,
    pub max_arcs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Every arc assignment with at most `max_arcs` arcs, failing up front if
    /// there are more than `budget` of them.
    Exhaustive { budget: u64 },
    /// `samples` random graphs from a seeded generator, stopping after
    /// `wanted` distinct matches. Finding none is an error.
    Random {
        samples: u64,
        seed: u64,
        wanted: usize,
    },
}

impl Default for SearchMode {
    fn default() -> Self {
        SearchMode::Exhaustive {
            budget: DEFAULT_SEARCH_BUDGET,
        }
    }
}

/// Sidigraphs of order `n` whose characteristic polynomial is `target`,
/// sorted by arc list.
pub fn search_by_charpoly(
    n: usize,
    target: &IntPolynomial,
    constraints: SearchConstraints,
    mode: SearchMode,
) -> Result<Vec<Sidigraph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if target.degree() != n || !target.is_monic() || target.coeff(n - 1) != 0.into() {
        // the trace of an adjacency matrix is zero
        return Ok(Vec::new());
    }
    let Some(wanted) = target
        .leading_first()
        .iter()
        .map(|c| c.to_i128())
        .collect::<Option<Vec<i128>>>()
    else {
        return Ok(Vec::new());
    };
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let max_arcs = constraints.max_arcs.unwrap_or(slots.len()).min(slots.len());
    let mut found = match mode {
        SearchMode::Exhaustive { budget } => {
            if n > EXHAUSTIVE_ORDER_LIMIT {
                return Err(Error::OracleBoundExceeded {
                    order: n,
                    bound: EXHAUSTIVE_ORDER_LIMIT,
                });
            }
            let total = assignment_count(slots.len(), max_arcs);
            if total > u128::from(budget) {
                return Err(Error::SearchBudgetExceeded { budget });
            }
            let mut walk = Exhaustive {
                n,
                slots: &slots,
                matrix: vec![0i128; n * n],
                wanted: &wanted,
                constraints,
                max_arcs,
                found: Vec::new(),
            };
            walk.descend(0, 0)?;
            walk.found
        }
        SearchMode::Random {
            samples,
            seed,
            wanted: limit,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut found: Vec<Sidigraph> = Vec::new();
            let mut matrix = vec![0i128; n * n];
            for _ in 0..samples {
                let density: f64 = rng.random_range(0.1..0.9);
                let mut arcs = 0;
                for &(u, v) in &slots {
                    let e = if arcs < max_arcs && rng.random_bool(density) {
                        arcs += 1;
                        if rng.random::<bool>() {
                            -1
                        } else {
                            1
                        }
                    } else {
                        0
                    };
                    matrix[u * n + v] = e;
                }
                if charpoly_dense(&matrix, n) != wanted {
                    continue;
                }
                let s = from_dense(n, &matrix);
                if passes(&s, constraints)? && !found.contains(&s) {
                    found.push(s);
                    if found.len() >= limit {
                        break;
                    }
                }
            }
            if found.is_empty() {
                return Err(Error::SearchBudgetExceeded { budget: samples });
            }
            found
        }
    };
    found.sort_by(|a, b| a.arcs().cmp(b.arcs()));
    Ok(found)
}

/// Assignments of signed arcs to `slots` positions using at most `max_arcs`:
/// `Σ_{m ≤ max_arcs} C(slots, m) 2^m`.
fn assignment_count(slots: usize, max_arcs: usize) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128;
    for m in 0..=max_arcs {
        total = total.saturating_add(binom.saturating_mul(1u128 << m.min(127)));
        binom = binom * (slots - m) as u128 / (m + 1) as u128;
    }
    total
}

fn from_dense(n: usize, m: &[i128]) -> Sidigraph {
    let arcs = (0..n * n).filter(|&i| m[i] != 0).map(|i| {
        let sign = if m[i] < 0 {
            Sign::Negative
        } else {
            Sign::Positive
        };
        Arc::new(i / n, i % n, sign)
    });
    Sidigraph::new(n, arcs).expect("slots exclude loops and repeats")
}

fn passes(s: &Sidigraph, c: SearchConstraints) -> Result<bool> {
    if c.strongly_connected && !s.is_strongly_connected() {
        return Ok(false);
    }
    if c.bipartite && !s.is_bipartite() {
        return Ok(false);
    }
    if c.non_cycle_balanced && classify(s)?.is_cycle_balanced {
        return Ok(false);
    }
    Ok(true)
}

struct Exhaustive<'a> {
    n: usize,
    slots: &'a [(usize, usize)],
    matrix: Vec<i128>,
    wanted: &'a [i128],
    constraints: SearchConstraints,
    max_arcs: usize,
    found: Vec<Sidigraph>,
}

impl Exhaustive<'_> {
    fn descend(&mut self, slot: usize, arcs: usize) -> Result<()> {
        if slot == self.slots.len() {
            if charpoly_dense(&self.matrix, self.n) == self.wanted {
                let s = from_dense(self.n, &self.matrix);
                if passes(&s, self.constraints)? {
                    self.found.push(s);
                }
            }
            return Ok(());
        }
        let (u, v) = self.slots[slot];
        let idx = u * self.n + v;
        self.descend(slot + 1, arcs)?;
        if arcs < self.max_arcs {
            for e in [1, -1] {
                self.matrix[idx] = e;
                self.descend(slot + 1, arcs + 1)?;
            }
            self.matrix[idx] = 0;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_leading_first(c)
    }

    #[test]
    fn two_vertex_searches() {
        let hits = search_by_charpoly(
            2,
            &p(&[1, 0, 1]),
            SearchConstraints::default(),
            SearchMode::default(),
        )
        .unwrap();
        assert_eq!(hits.len(), 2);
        for h in &hits {
            assert_eq!(h.arc_count(), 2);
            assert_eq!(h.negative_arcs().count(), 1);
        }
        let none = search_by_charpoly(
            2,
            &p(&[1, 0, 5]),
            SearchConstraints::default(),
            SearchMode::default(),
        )
        .unwrap();
        assert!(none.is_empty());
        // z^2 - 1 on two vertices: the positive and the doubly negative digon
        let hits = search_by_charpoly(
            2,
            &p(&[1, 0, -1]),
            SearchConstraints::default(),
            SearchMode::default(),
        )
        .unwrap();
        assert_eq!(hits.len(), 2);
    }

    #[test]
    fn assignment_counts() {
        assert_eq!(assignment_count(2, 2), 9);
        assert_eq!(assignment_count(6, 6), 729);
        assert_eq!(assignment_count(12, 12), 531_441);
        assert_eq!(assignment_count(4, 1), 9);
    }

    #[test]
    fn budget_is_checked_before_searching() {
        let err = search_by_charpoly(
            5,
            &p(&[1, 0, 0, 0, 0, 0]),
            SearchConstraints::default(),
            SearchMode::Exhaustive { budget: 1000 },
        )
        .unwrap_err();
        assert_eq!(err, Error::SearchBudgetExceeded { budget: 1000 });
    }

    #[test]
    fn random_mode() {
        let mode = SearchMode::Random {
            samples: 20_000,
            seed: 7,
            wanted: 3,
        };
        let hits = search_by_charpoly(4, &p(&[1, 0, 0, 0, -1]), SearchConstraints::default(), mode)
            .unwrap();
        assert!(!hits.is_empty() && hits.len() <= 3);
        let impossible = SearchMode::Random {
            samples: 100,
            seed: 7,
            wanted: 1,
        };
        assert_eq!(
            search_by_charpoly(
                3,
                &p(&[1, 0, 0, 100]),
                SearchConstraints::default(),
                impossible
            ),
            Err(Error::SearchBudgetExceeded { budget: 100 })
        );
    }
}
