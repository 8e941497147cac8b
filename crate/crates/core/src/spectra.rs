//! Numerical spectra, energy and spectral comparisons.
//!
//! Roots come from [`crate::roots::find_roots`]; anything that can be decided
//! on integer polynomials (cospectrality) is decided there and never through
//! floating point.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::charpoly::charpoly_exact;
use crate::cycles::classify;
use crate::error::{Error, Result};
use crate::graph::{Sidigraph, Sign};
use crate::poly::IntPolynomial;
use crate::roots::{find_roots, scaled_residual, RootOptions};

/// Radius within which roots are reported as one repeated root.
pub const CLUSTER_TOL: f64 = 1e-8;
/// Default tolerance for [`classify_spectrum`].
pub const CLASS_TOL: f64 = 1e-6;

/// Roots of a characteristic polynomial, with multiplicity, sorted by real
/// part and then imaginary part.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub roots: Vec<Complex64>,
    pub cluster_tol: f64,
    pub source_poly: IntPolynomial,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Distinct roots with multiplicities, grouping roots closer than
    /// `cluster_tol` to the first root of their group.
    pub fn multiplicities(&self) -> Vec<(Complex64, usize)> {
        let mut groups: Vec<(Complex64, usize)> = Vec::new();
        for &z in &self.roots {
            match groups
                .iter_mut()
                .find(|(c, _)| (*c - z).norm() <= self.cluster_tol)
            {
                Some(g) => g.1 += 1,
                None => groups.push((z, 1)),
            }
        }
        groups
    }

    /// Largest scaled residual `|p(z)|` over the roots.
    pub fn max_residual(&self) -> f64 {
        self.roots
            .iter()
            .map(|&z| scaled_residual(&self.source_poly, z))
            .fold(0.0, f64::max)
    }

    /// Sum of absolute real parts.
    pub fn energy(&self) -> f64 {
        energy_from_spectrum(self)
    }
}

/// All complex roots of `p`.
pub fn roots(p: &IntPolynomial) -> Result<Spectrum> {
    roots_with(p, RootOptions::default())
}

pub fn roots_with(p: &IntPolynomial, opts: RootOptions) -> Result<Spectrum> {
    Ok(Spectrum {
        roots: find_roots(p, opts)?,
        cluster_tol: CLUSTER_TOL,
        source_poly: p.clone(),
    })
}

/// Spectrum of the adjacency matrix.
pub fn spectrum(s: &Sidigraph) -> Result<Spectrum> {
    roots(&charpoly_exact(s)?)
}

pub fn energy_from_spectrum(sp: &Spectrum) -> f64 {
    sp.roots.iter().map(|z| z.re.abs()).sum()
}

/// Energy of a sidigraph through its spectrum.
pub fn energy(s: &Sidigraph) -> Result<f64> {
    Ok(spectrum(s)?.energy())
}

/// Which lattices the spectrum lies on, up to `tol`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumClass {
    pub integral: bool,
    pub real: bool,
    pub gaussian: bool,
    pub tol: f64,
}

pub fn classify_spectrum(sp: &Spectrum, tol: f64) -> SpectrumClass {
    let near_int = |x: f64| (x - libm::round(x)).abs() <= tol;
    let real = sp.roots.iter().all(|z| z.im.abs() <= tol);
    let gaussian = sp.roots.iter().all(|z| near_int(z.re) && near_int(z.im));
    SpectrumClass {
        integral: real && gaussian,
        real,
        gaussian,
        tol,
    }
}

/// Exact equality of characteristic polynomials.
pub fn cospectral(s1: &Sidigraph, s2: &Sidigraph) -> Result<bool> {
    check_orders(s1, s2)?;
    Ok(charpoly_exact(s1)? == charpoly_exact(s2)?)
}

/// Equal energy within `tol` without being cospectral.
pub fn equienergetic(s1: &Sidigraph, s2: &Sidigraph, tol: f64) -> Result<bool> {
    check_orders(s1, s2)?;
    let p1 = charpoly_exact(s1)?;
    let p2 = charpoly_exact(s2)?;
    if p1 == p2 {
        return Ok(false);
    }
    let e1 = roots(&p1)?.energy();
    let e2 = roots(&p2)?.energy();
    Ok((e1 - e2).abs() <= tol)
}

fn check_orders(s1: &Sidigraph, s2: &Sidigraph) -> Result<()> {
    if s1.order() != s2.order() {
        return Err(Error::OrderMismatch {
            left: s1.order(),
            right: s2.order(),
        });
    }
    Ok(())
}

/// Largest arc count for which every signing is enumerated.
pub const EXHAUSTIVE_SIGNING_ARCS: usize = 20;
const SEARCH_SEED: u64 = 0x5eed_516e;

/// Two signings with equal characteristic polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiCospectralWitness {
    pub signing1: Sidigraph,
    pub signing2: Sidigraph,
    pub polynomial: IntPolynomial,
    /// The underlying digraphs are not cospectral.
    pub strict: bool,
    /// The underlying digraphs are cospectral and neither signing is cycle
    /// balanced.
    pub strong: bool,
}

#[derive(Default)]
struct Seen {
    first: Option<Sidigraph>,
    unbalanced: Option<Sidigraph>,
}

/// Looks for signings of `d1` and `d2` with equal characteristic
/// polynomials. Every signing is tried when both arc counts are at most
/// [`EXHAUSTIVE_SIGNING_ARCS`] and `2^a1 + 2^a2 <= budget`; otherwise
/// `budget / 2` random signings of each. `None` only means nothing was found.
///
/// When the underlying digraphs are cospectral, a pair of non cycle balanced
/// signings is preferred over the trivial all-positive match.
pub fn quasi_cospectral_search(
    d1: &Sidigraph,
    d2: &Sidigraph,
    budget: u64,
) -> Result<Option<QuasiCospectralWitness>> {
    if d1.order() != d2.order() {
        return Ok(None);
    }
    let u1 = d1.underlying_digraph();
    let u2 = d2.underlying_digraph();
    let base1 = charpoly_exact(&u1)?;
    let base2 = charpoly_exact(&u2)?;
    let underlying_cospectral = base1 == base2;

    let signings1 = signings(&u1, budget);
    let mut table: BTreeMap<Vec<BigInt>, Seen> = BTreeMap::new();
    for s in signings1 {
        let phi = charpoly_exact(&s)?;
        let unbalanced = phi != base1;
        let entry = table.entry(phi.coeffs().to_vec()).or_default();
        if entry.first.is_none() {
            entry.first = Some(s.clone());
        }
        if unbalanced && entry.unbalanced.is_none() {
            entry.unbalanced = Some(s);
        }
    }

    let mut fallback = None;
    for s in signings(&u2, budget) {
        let phi = charpoly_exact(&s)?;
        let Some(seen) = table.get(phi.coeffs()) else {
            continue;
        };
        let unbalanced = phi != base2;
        if underlying_cospectral && unbalanced {
            if let Some(t) = &seen.unbalanced {
                return Ok(Some(witness(t, &s, phi, false, true)?));
            }
        }
        if !underlying_cospectral {
            let t = seen
                .first
                .as_ref()
                .expect("entry always has a first signing");
            return Ok(Some(witness(t, &s, phi, true, false)?));
        }
        if fallback.is_none() {
            let t = seen
                .first
                .clone()
                .expect("entry always has a first signing");
            fallback = Some((t, s, phi));
        }
    }
    match fallback {
        Some((t, s, phi)) => Ok(Some(witness(&t, &s, phi, false, false)?)),
        None => Ok(None),
    }
}

fn witness(
    s1: &Sidigraph,
    s2: &Sidigraph,
    polynomial: IntPolynomial,
    strict: bool,
    strong: bool,
) -> Result<QuasiCospectralWitness> {
    // a cheap polynomial test picked the pair; confirm balance on cycles
    let strong = strong && !classify(s1)?.is_cycle_balanced && !classify(s2)?.is_cycle_balanced;
    Ok(QuasiCospectralWitness {
        signing1: s1.clone(),
        signing2: s2.clone(),
        polynomial,
        strict,
        strong,
    })
}

/// Signings of `d` in Gray-code order, or uniform random signings when the
/// full set is too large for `budget`.
fn signings(d: &Sidigraph, budget: u64) -> Vec<Sidigraph> {
    let m = d.arc_count();
    let half = (budget / 2).max(1);
    let mut signs = alloc::vec![Sign::Positive; m];
    let mut out = Vec::new();
    if m <= EXHAUSTIVE_SIGNING_ARCS && (1u64 << m) <= half {
        out.push(d.with_signs(&signs));
        for k in 1u64..(1u64 << m) {
            let flip = k.trailing_zeros() as usize;
            signs[flip] = -signs[flip];
            out.push(d.with_signs(&signs));
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SEARCH_SEED ^ m as u64);
        for _ in 0..half {
            for s in signs.iter_mut() {
                *s = if rng.random::<bool>() {
                    Sign::Negative
                } else {
                    Sign::Positive
                };
            }
            out.push(d.with_signs(&signs));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Arc;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_leading_first(c)
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn spectrum_with_double_root() {
        let sp = roots(&p(&[1, 0, -3, 2, 0])).unwrap();
        let re: Vec<f64> = sp.roots.iter().map(|z| z.re).collect();
        for (got, want) in re.iter().zip([-2.0, 0.0, 1.0, 1.0]) {
            assert!(close(*got, want, 1e-10));
        }
        assert!(sp.roots.iter().all(|z| z.im.abs() < 1e-10));
        let m = sp.multiplicities();
        assert_eq!(m.len(), 3);
        assert_eq!(m[2].1, 2);
        assert!(close(sp.energy(), 4.0, 1e-10));
        assert!(sp.max_residual() <= 1e-10);
    }

    #[test]
    fn energies_of_small_polynomials() {
        let e = |c: &[i64]| roots(&p(c)).unwrap().energy();
        assert!(close(e(&[1, 0, 1, 0, -1, 0, -1]), 2.0, 1e-9));
        assert!(close(e(&[1, 0, 2, 0, 0, 0, 1]), 2.491799038604211, 1e-9));
        assert!(close(e(&[1, 0, 1, 0, 0, 0, 1]), 2.910418490310383, 1e-9));
        assert!(close(e(&[1, 0, 1]), 0.0, 1e-12));
    }

    #[test]
    fn spectrum_classes() {
        let c = classify_spectrum(&roots(&p(&[1, 0, -3, 2, 0])).unwrap(), CLASS_TOL);
        assert!(c.integral && c.real && c.gaussian);
        let c = classify_spectrum(&roots(&p(&[1, 0, -3, 0, 2])).unwrap(), CLASS_TOL);
        assert!(c.real && !c.integral && !c.gaussian);
        let c = classify_spectrum(&roots(&p(&[1, 0, 0, 0, -1])).unwrap(), CLASS_TOL);
        assert!(c.gaussian && !c.real && !c.integral);
    }

    #[test]
    fn cospectrality_is_exact() {
        let a = Sidigraph::new(2, [Arc::positive(0, 1), Arc::negative(1, 0)]).unwrap();
        let b = Sidigraph::new(2, [Arc::negative(0, 1), Arc::positive(1, 0)]).unwrap();
        assert!(cospectral(&a, &b).unwrap());
        assert!(!equienergetic(&a, &b, 1e-9).unwrap());
        let c = Sidigraph::empty(3).unwrap();
        assert_eq!(
            cospectral(&a, &c),
            Err(Error::OrderMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn signing_search_on_identical_digraphs() {
        let d = Sidigraph::new(
            3,
            [
                Arc::positive(0, 1),
                Arc::positive(1, 2),
                Arc::positive(2, 0),
                Arc::positive(1, 0),
            ],
        )
        .unwrap();
        let w = quasi_cospectral_search(&d, &d, 1 << 12).unwrap().unwrap();
        assert!(!w.strict);
        assert_eq!(charpoly_exact(&w.signing1).unwrap(), w.polynomial);
        assert_eq!(charpoly_exact(&w.signing2).unwrap(), w.polynomial);
    }

    #[test]
    fn signing_search_degree_mismatch() {
        let digon = Sidigraph::new(2, [Arc::positive(0, 1), Arc::positive(1, 0)]).unwrap();
        let path = Sidigraph::new(3, [Arc::positive(0, 1), Arc::positive(1, 2)]).unwrap();
        assert_eq!(
            quasi_cospectral_search(&digon, &path, 1 << 10).unwrap(),
            None
        );
    }
}
