//! Exact integer polynomials.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[k]` is the coefficient of `z^k`. Trailing zeros are trimmed, so
/// the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// `z^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// From coefficients in ascending order of power.
    pub fn from_ascending<T: Into<BigInt> + Copy>(coeffs: &[T]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| c.into()).collect())
    }

    /// From coefficients listed leading term first, e.g. `[1, 0, -3, 2, 0]`
    /// for `z^4 - 3z^2 + 2z`.
    pub fn from_leading_first<T: Into<BigInt> + Copy>(coeffs: &[T]) -> Self {
        IntPolynomial::new(coeffs.iter().rev().map(|&c| c.into()).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_first(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `z^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Number of vanishing low-order coefficients (multiplicity of the root 0).
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Drops the factor `z^m` where `m` is [`trailing_zeros`](Self::trailing_zeros).
    pub fn deflate_zero_roots(&self) -> (IntPolynomial, usize) {
        let m = self.trailing_zeros();
        (
            IntPolynomial {
                coeffs: self.coeffs[m.min(self.coeffs.len())..].to_vec(),
            },
            m,
        )
    }

    /// `p(-z)`
    pub fn reflect(&self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn derivative(&self) -> IntPolynomial {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn scale(&self, factor: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Greatest common divisor of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Content removed and leading coefficient made positive.
    pub fn primitive_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Pseudo-remainder of `self` by `divisor`: the remainder of
    /// `lc(divisor)^(deg self - deg divisor + 1) * self` divided by `divisor`.
    pub fn pseudo_rem(&self, divisor: &IntPolynomial) -> IntPolynomial {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut r = self.coeffs.clone();
        let d = divisor.degree();
        let lc = divisor.leading();
        while r.len() > d && !r.is_empty() {
            let shift = r.len() - 1 - d;
            let top = r.last().cloned().expect("non-empty");
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                r[k + shift] -= &top * dc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        IntPolynomial::new(r)
    }

    /// Exact quotient when `divisor` divides `self` over the integers.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let d = divisor.degree();
        let lc = divisor.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.degree() - d + 1];
        for shift in (0..q.len()).rev() {
            let top = &r[shift + d];
            let (quot, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                r[k + shift] -= &quot * dc;
            }
            q[shift] = quot;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPolynomial::new(q))
    }

    /// Primitive greatest common divisor (positive leading coefficient).
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Square-free decomposition `p = c * f_1 * f_2^2 * ... * f_k^k`
    /// (Yun's algorithm over the integers). Returns `(f_i, i)` pairs with
    /// non-constant `f_i`, each primitive with positive leading coefficient.
    pub fn squarefree_factors(&self) -> Vec<(IntPolynomial, usize)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let f = self.primitive_part();
        let mut repeated = f.gcd(&f.derivative());
        let mut distinct = f.div_exact(&repeated).expect("gcd divides");
        let mut multiplicity = 1;
        while distinct.degree() > 0 {
            let g = distinct.gcd(&repeated);
            let factor = distinct.div_exact(&g).expect("gcd divides");
            if factor.degree() > 0 {
                out.push((factor, multiplicity));
            }
            repeated = repeated.div_exact(&g).expect("gcd divides");
            distinct = g;
            multiplicity += 1;
        }
        out
    }

    /// Horner evaluation at a complex point in double precision.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let coeffs = self.to_f64();
        eval_f64(&coeffs, z)
    }

    /// Coefficients converted to `f64` (ascending).
    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Largest coefficient magnitude as `f64`.
    pub fn max_abs_coeff(&self) -> f64 {
        self.to_f64().iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn fits_i64(&self) -> bool {
        self.coeffs.iter().all(|c| c.to_i64().is_some())
    }
}

/// Horner evaluation of ascending `f64` coefficients.
pub(crate) fn eval_f64(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Leading-first coefficient list as space separated decimal integers.
pub fn format_leading_first(p: &IntPolynomial) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (i, c) in p.leading_first().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{c}");
    }
    out
}
