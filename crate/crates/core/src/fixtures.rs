//! Built-in order-4 fixtures, grouped in cospectral families.
//!
//! Every fixture is strongly connected and non-symmetric. The arc lists were
//! found with [`crate::search::search_by_charpoly`], preferring few arcs and
//! pairwise non-isomorphic underlying digraphs, and are checked on load.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};

use crate::charpoly::charpoly_exact;
use crate::cycles::classify;
use crate::error::{Error, Result};
use crate::graph::{Arc, Sidigraph, Sign};
use crate::poly::IntPolynomial;

/// Expected properties of a named fixture.
#[derive(Clone, Copy, Debug)]
pub struct FixtureSpec {
    pub name: &'static str,
    /// `(tail, head, sign)`, 0-based.
    pub arcs: &'static [(usize, usize, i8)],
    /// Characteristic polynomial, leading coefficient first.
    pub charpoly: &'static [i64],
    /// Characteristic polynomial of the underlying digraph, when pinned.
    pub underlying: Option<&'static [i64]>,
    pub cycle_balanced: bool,
}

const INTEGRAL: &[i64] = &[1, 0, -3, 2, 0];
const REAL: &[i64] = &[1, 0, -3, 0, 2];
const GAUSSIAN: &[i64] = &[1, 0, 0, 0, -1];
const UNDERLYING: &[i64] = &[1, 0, -3, -2, 0];

pub const FIXTURES: &[FixtureSpec] = &[
    FixtureSpec {
        name: "thm211_s1",
        arcs: &[
            (0, 1, 1),
            (0, 2, 1),
            (0, 3, -1),
            (1, 0, 1),
            (1, 3, 1),
            (2, 0, 1),
            (3, 1, 1),
            (3, 2, 1),
        ],
        charpoly: INTEGRAL,
        underlying: Some(UNDERLYING),
        cycle_balanced: false,
    },
    FixtureSpec {
        name: "thm211_s2",
        arcs: &[
            (0, 1, 1),
            (0, 2, 1),
            (1, 0, 1),
            (1, 2, -1),
            (2, 0, 1),
            (2, 3, 1),
            (3, 1, 1),
            (3, 2, 1),
        ],
        charpoly: INTEGRAL,
        underlying: Some(UNDERLYING),
        cycle_balanced: false,
    },
    FixtureSpec {
        name: "thm212_s1",
        arcs: &[
            (0, 1, 1),
            (0, 2, 1),
            (0, 3, 1),
            (1, 0, 1),
            (1, 2, 1),
            (1, 3, -1),
            (2, 1, 1),
            (3, 0, 1),
        ],
        charpoly: REAL,
        underlying: Some(UNDERLYING),
        cycle_balanced: false,
    },
    FixtureSpec {
        name: "thm212_s2",
        arcs: &[
            (0, 1, 1),
            (0, 2, 1),
            (0, 3, 1),
            (1, 0, 1),
            (1, 2, 1),
            (2, 1, 1),
            (2, 3, -1),
            (3, 0, 1),
        ],
        charpoly: REAL,
        underlying: Some(UNDERLYING),
        cycle_balanced: false,
    },
    FixtureSpec {
        name: "thm212_s3",
        arcs: &[
            (0, 1, 1),
            (0, 2, 1),
            (1, 0, 1),
            (1, 3, 1),
            (2, 0, 1),
            (2, 3, -1),
            (3, 1, 1),
        ],
        charpoly: REAL,
        underlying: None,
        cycle_balanced: false,
    },
    FixtureSpec {
        name: "thm213_s1",
        arcs: &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)],
        charpoly: GAUSSIAN,
        underlying: None,
        cycle_balanced: true,
    },
    FixtureSpec {
        name: "thm213_s2",
        arcs: &[
            (0, 1, 1),
            (0, 2, 1),
            (1, 0, 1),
            (1, 3, -1),
            (2, 3, 1),
            (3, 1, 1),
        ],
        charpoly: GAUSSIAN,
        underlying: None,
        cycle_balanced: false,
    },
    FixtureSpec {
        name: "thm213_s3",
        arcs: &[
            (0, 1, 1),
            (0, 2, 1),
            (1, 2, 1),
            (1, 3, -1),
            (2, 3, 1),
            (3, 0, 1),
        ],
        charpoly: GAUSSIAN,
        underlying: None,
        cycle_balanced: false,
    },
];

impl FixtureSpec {
    pub fn build(&self) -> Result<Sidigraph> {
        let arcs = self.arcs.iter().map(|&(u, v, s)| {
            let sign = if s < 0 {
                Sign::Negative
            } else {
                Sign::Positive
            };
            Arc::new(u, v, sign)
        });
        Sidigraph::new(4, arcs)
    }

    pub fn expected_charpoly(&self) -> IntPolynomial {
        IntPolynomial::from_leading_first(self.charpoly)
    }

    /// Checks `s` against this fixture's polynomial and structural flags.
    pub fn validate(&self, s: &Sidigraph) -> Result<()> {
        let fail = |reason: String| {
            Err(Error::FixtureValidationFailure {
                name: self.name.to_string(),
                reason,
            })
        };
        let phi = charpoly_exact(s)?;
        if phi != self.expected_charpoly() {
            return fail(format!("characteristic polynomial is {phi}"));
        }
        if let Some(u) = self.underlying {
            let psi = charpoly_exact(&s.underlying_digraph())?;
            if psi != IntPolynomial::from_leading_first(u) {
                return fail(format!("underlying digraph has polynomial {psi}"));
            }
        }
        if !s.is_strongly_connected() {
            return fail("not strongly connected".into());
        }
        if s.is_symmetric() {
            return fail("symmetric".into());
        }
        if classify(s)?.is_cycle_balanced != self.cycle_balanced {
            return fail(format!(
                "cycle balanced flag should be {}",
                self.cycle_balanced
            ));
        }
        Ok(())
    }
}

pub fn fixture_spec(name: &str) -> Option<&'static FixtureSpec> {
    FIXTURES.iter().find(|f| f.name == name)
}

/// All built-in fixtures by name, each validated.
pub fn builtin_fixtures() -> Result<BTreeMap<String, Sidigraph>> {
    FIXTURES
        .iter()
        .map(|f| {
            let s = f.build()?;
            f.validate(&s)?;
            Ok((f.name.to_string(), s))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_validate() {
        let map = builtin_fixtures().unwrap();
        assert_eq!(map.len(), 8);
    }

    #[test]
    fn tampered_fixture_is_rejected() {
        let spec = fixture_spec("thm211_s1").unwrap();
        let s = spec.build().unwrap().negate();
        assert!(matches!(
            spec.validate(&s),
            Err(Error::FixtureValidationFailure { .. })
        ));
    }
}
