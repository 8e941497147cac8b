//! Energy through Coulson-type integrals, and the coefficient quasi-order on
//! the first alternating class.
//!
//! For a monic `p` with zero roots removed, leaving `q` of degree `d`, the
//! energy is `(1/π) ∫ x⁻² log|x^d q(i/x)| dx` over the real line. The
//! integrand is even; the half-line is split at 1 and the tail mapped by
//! `x = 1/t`, which turns it into `∫₀¹ log|q(it)| dt + d`. Near the origin the
//! logarithm is evaluated as `log1p` of an expression that is `O(x²)`, so the
//! apparent `1/x²` singularity never cancels numerically.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, Zero};

use crate::charpoly::charpoly_exact;
use crate::cycles::classify;
use crate::error::{Error, Result};
use crate::graph::Sidigraph;
use crate::linear::delta_form_of;
use crate::poly::{eval_f64, IntPolynomial};
use crate::quad::integrate;
use crate::roots::{find_roots, RootOptions};
use crate::spectra::{energy_from_spectrum, roots};

/// How the half-line `[0, ∞)` is made finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Compactification {
    /// Split at 1 and map `[1, ∞)` to `(0, 1]` by `x = 1/t`.
    #[default]
    Reciprocal,
    /// `x = tan θ` on `[0, π/2)`.
    Tangent,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub transform: Compactification,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-6,
            max_subdivisions: 4000,
            transform: Compactification::Reciprocal,
        }
    }
}

impl QuadratureSpec {
    fn piece(&self, f: impl Fn(f64) -> f64, a: f64, b: f64) -> Result<f64> {
        // two pieces per half-line, doubled and scaled by 1/π afterwards
        let tol = self.abs_tol / 4.0;
        Ok(integrate(f, a, b, tol, self.max_subdivisions)?.value)
    }

    /// `∫ₐᵇ f` with the interval split at `breaks`, so that logarithmic
    /// singularities sit on panel ends where the rule converges reliably.
    fn split_piece(&self, f: impl Fn(f64) -> f64, a: f64, b: f64, breaks: &[f64]) -> Result<f64> {
        let margin = 1e-9 * (b - a);
        let mut points: Vec<f64> = breaks
            .iter()
            .copied()
            .filter(|&p| p > a + margin && p < b - margin)
            .collect();
        points.sort_by(f64::total_cmp);
        points.dedup_by(|x, y| *x - *y < margin);
        let mut edges = alloc::vec![a];
        edges.extend(points);
        edges.push(b);
        let tol = self.abs_tol / (4.0 * (edges.len() - 1) as f64);
        let mut total = 0.0;
        for w in edges.windows(2) {
            total += integrate(&f, w[0], w[1], tol, self.max_subdivisions)?.value;
        }
        Ok(total)
    }

    fn unit_piece(&self, f: impl Fn(f64) -> f64, breaks: &[f64]) -> Result<f64> {
        self.split_piece(f, 0.0, 1.0, breaks)
    }
}

/// Roots within this relative distance of the imaginary axis get breakpoints.
const AXIS_BAND: f64 = 1e-3;

/// Breakpoints `(inner, outer)` for the general integral: a root `iy` close
/// to the axis makes `log|q(it)|` singular at `t = |y|` and the inner piece
/// singular at `x = 1/|y|`.
fn axis_breaks(fs: &[Factor]) -> Result<(Vec<f64>, Vec<f64>)> {
    let (mut inner, mut outer) = (Vec::new(), Vec::new());
    for f in fs {
        for z in f.roots()? {
            let y = z.im.abs();
            if y > 0.0 && z.re.abs() <= AXIS_BAND * z.norm() {
                outer.push(y);
                inner.push(1.0 / y);
            }
        }
    }
    Ok((inner, outer))
}

/// `log|x^d f(i/x)|` for a monic factor `f` of degree `d`, expanded in
/// ascending powers of `x` as `i^d (1 + r(x) + i s(x))` with `r` collecting
/// the even and `s` the odd powers.
struct NearOrigin {
    real: Vec<f64>,
    imag: Vec<f64>,
}

impl NearOrigin {
    fn new(f: &[f64]) -> Self {
        let d = f.len() - 1;
        let mut real = alloc::vec![0.0; d + 1];
        let mut imag = alloc::vec![0.0; d + 1];
        for k in 1..=d {
            // coefficient of x^k is f_{d-k} (-i)^k
            let c = f[d - k];
            match k % 4 {
                0 => real[k] = c,
                1 => imag[k] = -c,
                2 => real[k] = -c,
                _ => imag[k] = c,
            }
        }
        NearOrigin { real, imag }
    }

    fn log_abs(&self, x: f64) -> f64 {
        let horner = |c: &[f64]| c.iter().rev().fold(0.0, |acc, &v| acc * x + v);
        let r = horner(&self.real);
        let s = horner(&self.imag);
        // |.|² - 1 = r(2 + r) + s², which is O(x²) near the origin
        let h = r * (2.0 + r) + s * s;
        if h.abs() < 0.5 {
            0.5 * libm::log1p(h)
        } else {
            libm::log(libm::hypot(1.0 + r, s))
        }
    }
}

/// A square-free factor with its multiplicity.
struct Factor {
    exact: IntPolynomial,
    coeffs: Vec<f64>,
    near: NearOrigin,
    multiplicity: f64,
}

impl Factor {
    fn roots(&self) -> Result<Vec<Complex64>> {
        find_roots(&self.exact, RootOptions::default())
    }
}

/// Square-free factors of `p` with its zero roots removed, each monic, and
/// the degree of the remaining part. Integrating factor by factor keeps
/// repeated roots on the imaginary axis from cancelling to roundoff.
fn factors(p: &IntPolynomial) -> Result<(Vec<Factor>, usize)> {
    if p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NotCharacteristic("leading coefficient must be 1"));
    }
    let (q, _) = p.deflate_zero_roots();
    let out = q
        .squarefree_factors()
        .into_iter()
        .map(|(f, m)| {
            let coeffs = f.to_f64();
            Factor {
                near: NearOrigin::new(&coeffs),
                coeffs,
                exact: f,
                multiplicity: m as f64,
            }
        })
        .collect();
    Ok((out, q.degree()))
}

fn log_abs_at_imaginary(f: &[f64], t: f64) -> f64 {
    libm::log(eval_f64(f, Complex64::new(0.0, t)).norm())
}

/// Energy of the polynomial's roots from the log-magnitude integral.
pub fn energy_coulson_general(p: &IntPolynomial, q: QuadratureSpec) -> Result<f64> {
    let (fs, d) = factors(p)?;
    if d == 0 {
        return Ok(0.0);
    }
    // log|x^d q(i/x)|
    let log_g = |x: f64| {
        fs.iter()
            .map(|f| f.multiplicity * f.near.log_abs(x))
            .sum::<f64>()
    };
    // log|q(it)|
    let log_q = |t: f64| {
        fs.iter()
            .map(|f| f.multiplicity * log_abs_at_imaginary(&f.coeffs, t))
            .sum::<f64>()
    };
    let half_line = match q.transform {
        Compactification::Reciprocal => {
            let (inner_breaks, outer_breaks) = axis_breaks(&fs)?;
            let inner = q.unit_piece(|x| log_g(x) / (x * x), &inner_breaks)?;
            let outer = q.unit_piece(log_q, &outer_breaks)?;
            inner + outer + d as f64
        }
        Compactification::Tangent => {
            let f = |theta: f64| {
                let x = libm::tan(theta);
                let sin = libm::sin(theta);
                let value = if x <= 1.0 {
                    log_g(x)
                } else {
                    d as f64 * libm::log(x) + log_q(1.0 / x)
                };
                value / (sin * sin)
            };
            let (inner_breaks, _) = axis_breaks(&fs)?;
            let mut breaks: Vec<f64> = inner_breaks.iter().map(|&x| libm::atan(x)).collect();
            breaks.push(PI / 4.0);
            q.split_piece(f, 0.0, PI / 2.0, &breaks)?
        }
    };
    Ok(2.0 * half_line / PI)
}

/// Energy from the principal-value integral of `n - ix φ'(ix)/φ(ix)`.
/// Intended as a cross-check; roots on the imaginary axis make the
/// integrand singular.
pub fn energy_coulson_log_derivative(p: &IntPolynomial, q: QuadratureSpec) -> Result<f64> {
    if p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NotCharacteristic("leading coefficient must be 1"));
    }
    let (q_poly, _) = p.deflate_zero_roots();
    let (coeffs, d) = (q_poly.to_f64(), q_poly.degree());
    if d == 0 {
        return Ok(0.0);
    }
    let derivative: Vec<f64> = (1..=d).map(|k| k as f64 * coeffs[k]).collect();
    // reversed polynomial r(u) = u^d q(1/u) and its derivative
    let reversed: Vec<f64> = coeffs.iter().rev().copied().collect();
    let reversed_derivative: Vec<f64> = (1..=d).map(|k| k as f64 * reversed[k]).collect();
    // d - z q'(z)/q(z) on |x| <= 1
    let inner = |x: f64| {
        let z = Complex64::new(0.0, x);
        let ratio = eval_f64(&derivative, z) / eval_f64(&coeffs, z);
        d as f64 - (z * ratio).re
    };
    // with u = 1/z the same quantity is u r'(u)/r(u); x = 1/t, u = -it
    let outer = |t: f64| {
        let u = Complex64::new(0.0, -t);
        let value = u * eval_f64(&reversed_derivative, u) / eval_f64(&reversed, u);
        value.re / (t * t)
    };
    let half_line = q.piece(inner, 0.0, 1.0)? + q.piece(outer, 0.0, 1.0)?;
    Ok(2.0 * half_line / PI)
}

/// `P(y) = 1 + Σ w_j y^j` with `w_j = c_{2j}`, or `(-1)^j c_{2j}` when
/// `alternate`.
fn even_polynomial(c: &[BigInt], alternate: bool) -> Result<IntPolynomial> {
    let mut coeffs = Vec::with_capacity(c.len() + 1);
    coeffs.push(BigInt::from(1));
    for (i, v) in c.iter().enumerate() {
        if v.is_negative() {
            return Err(Error::NegativeCoefficient { index: 2 * (i + 1) });
        }
        coeffs.push(if alternate && i % 2 == 0 {
            -v.clone()
        } else {
            v.clone()
        });
    }
    Ok(IntPolynomial::new(coeffs))
}

/// `(1/π) ∫ x⁻² log|P(x²)| dx` over the real line. Each square-free factor
/// `f` of `P` has `f(0) = ±1` and contributes `∫₀¹ log|f(x²)|/x² dx` plus, after
/// `x = 1/t`, `∫₀¹ log|t^{2e} f(1/t²)| dt + 2e` with `e = deg f`.
fn even_form_energy(poly: &IntPolynomial, q: QuadratureSpec) -> Result<f64> {
    let big_j = poly.degree();
    if big_j == 0 {
        return Ok(0.0);
    }
    let exact = poly.squarefree_factors();
    let fs: Vec<(Vec<f64>, f64)> = exact
        .iter()
        .map(|(f, m)| {
            let mut c = f.to_f64();
            let c0 = c[0];
            c.iter_mut().for_each(|v| *v /= c0);
            (c, *m as f64)
        })
        .collect();
    // a root y₀ > 0 of P puts singularities at x = √y₀ and t = 1/√y₀
    let (mut inner_breaks, mut outer_breaks) = (Vec::new(), Vec::new());
    for (f, _) in &exact {
        if f.degree() == 0 {
            continue;
        }
        for y in find_roots(f, RootOptions::default())? {
            if y.re > 0.0 && y.im.abs() <= AXIS_BAND * y.norm() {
                let x = libm::sqrt(y.re);
                inner_breaks.push(x);
                outer_breaks.push(1.0 / x);
            }
        }
    }
    let inner = |x: f64| {
        let y = x * x;
        let log: f64 = fs
            .iter()
            .map(|(c, m)| {
                let tail = c[1..].iter().rev().fold(0.0, |acc, &v| acc * y + v) * y;
                let l = if tail.abs() < 0.5 {
                    libm::log1p(tail)
                } else {
                    libm::log(libm::fabs(1.0 + tail))
                };
                m * l
            })
            .sum();
        log / y
    };
    let outer = |t: f64| {
        let y = t * t;
        fs.iter()
            .map(|(c, m)| m * libm::log(libm::fabs(c.iter().fold(0.0, |acc, &v| acc * y + v))))
            .sum::<f64>()
    };
    let half_line = q.unit_piece(inner, &inner_breaks)?
        + q.unit_piece(outer, &outer_breaks)?
        + 2.0 * big_j as f64;
    Ok(2.0 * half_line / PI)
}

fn check_length(c: &[BigInt], n: usize) -> Result<()> {
    if c.len() > n / 2 {
        return Err(Error::InvalidOrder {
            j: 2 * c.len(),
            order: n,
        });
    }
    Ok(())
}

/// Energy of a member of the first alternating class from its coefficient
/// magnitudes `c = (c₂, c₄, …)`: `(1/π) ∫ x⁻² log(1 + Σ c_{2j} x^{2j}) dx`.
pub fn energy_delta1(c: &[BigInt], n: usize, q: QuadratureSpec) -> Result<f64> {
    check_length(c, n)?;
    even_form_energy(&even_polynomial(c, false)?, q)
}

/// Energy of a member of the all-negative class:
/// `(1/π) ∫ x⁻² log|1 + Σ (-1)^j c_{2j} x^{2j}| dx`.
pub fn energy_delta2(c: &[BigInt], n: usize, q: QuadratureSpec) -> Result<f64> {
    check_length(c, n)?;
    even_form_energy(&even_polynomial(c, true)?, q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuasiOrderRelation {
    PrecedesStrictly,
    Equal,
    SucceedsStrictly,
    Incomparable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiOrderResult {
    pub relation: QuasiOrderRelation,
    pub c1: Vec<BigInt>,
    pub c2: Vec<BigInt>,
}

/// Componentwise order of two coefficient vectors, missing entries read as 0.
pub fn compare_coefficients(c1: &[BigInt], c2: &[BigInt]) -> QuasiOrderRelation {
    let zero = BigInt::zero();
    let len = c1.len().max(c2.len());
    let (mut less, mut greater) = (false, false);
    for i in 0..len {
        let a = c1.get(i).unwrap_or(&zero);
        let b = c2.get(i).unwrap_or(&zero);
        less |= a < b;
        greater |= a > b;
    }
    match (less, greater) {
        (false, false) => QuasiOrderRelation::Equal,
        (true, false) => QuasiOrderRelation::PrecedesStrictly,
        (false, true) => QuasiOrderRelation::SucceedsStrictly,
        (true, true) => QuasiOrderRelation::Incomparable,
    }
}

fn delta1_coefficients(s: &Sidigraph) -> Result<Vec<BigInt>> {
    if !classify(s)?.in_delta1 {
        return Err(Error::NotInDelta1);
    }
    let (_, _, c) = delta_form_of(&charpoly_exact(s)?);
    Ok(c)
}

/// Compares two members of the first alternating class by their even
/// coefficient magnitudes. A strict relation implies the same strict
/// relation between energies.
pub fn quasi_order_compare(s1: &Sidigraph, s2: &Sidigraph) -> Result<QuasiOrderResult> {
    if s1.order() != s2.order() {
        return Err(Error::OrderMismatch {
            left: s1.order(),
            right: s2.order(),
        });
    }
    let c1 = delta1_coefficients(s1)?;
    let c2 = delta1_coefficients(s2)?;
    Ok(QuasiOrderResult {
        relation: compare_coefficients(&c1, &c2),
        c1,
        c2,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArcDeletionReport {
    pub e_before: f64,
    pub e_after: f64,
    pub decreased: bool,
}

/// Energy before and after deleting the arc `(tail, head)` of a symmetric
/// pair in a member of the first alternating class.
pub fn arc_deletion_energy_delta(
    s: &Sidigraph,
    tail: usize,
    head: usize,
) -> Result<ArcDeletionReport> {
    if !classify(s)?.in_delta1 {
        return Err(Error::NotInDelta1);
    }
    for (u, v) in [(tail, head), (head, tail)] {
        if u >= s.order() || v >= s.order() || !s.has_arc(u, v) {
            return Err(Error::MissingArc { tail: u, head: v });
        }
    }
    let after = s.delete_arc(tail, head)?;
    let e_before = energy_from_spectrum(&roots(&charpoly_exact(s)?)?);
    let e_after = energy_from_spectrum(&roots(&charpoly_exact(&after)?)?);
    Ok(ArcDeletionReport {
        e_before,
        e_after,
        decreased: e_after < e_before,
    })
}
