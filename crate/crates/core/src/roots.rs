//! Numerical roots of integer polynomials.
//!
//! The main path removes zero roots exactly, splits the rest into square-free
//! factors with exact integer gcds, and runs the Aberth–Ehrlich iteration on
//! each factor. Every factor has simple roots, so the iteration converges
//! to full double precision even where the original polynomial has repeated
//! roots. [`companion_eigenvalues`] is an independent cross-check via the
//! Francis QR iteration on the balanced companion matrix.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::{eval_f64, IntPolynomial};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootOptions {
    pub max_iterations: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions {
            max_iterations: 1000,
        }
    }
}

/// All complex roots of `p`, repeated according to multiplicity, sorted by
/// real part and then imaginary part.
pub fn find_roots(p: &IntPolynomial, opts: RootOptions) -> Result<Vec<Complex64>> {
    if p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let (rest, zeros) = p.deflate_zero_roots();
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    if rest.degree() > 0 {
        for (factor, multiplicity) in rest.squarefree_factors() {
            let simple = squarefree_roots(&factor.to_f64(), opts)?;
            for z in simple {
                roots.extend(core::iter::repeat_n(z, multiplicity));
            }
        }
    }
    sort_roots(&mut roots);
    Ok(roots)
}

/// Roots of a square-free polynomial without zero roots. An even
/// polynomial `g(z²)` is solved through `g`, so its roots come in exact
/// `±` pairs and negative real `z²` give exactly imaginary roots.
fn squarefree_roots(coeffs: &[f64], opts: RootOptions) -> Result<Vec<Complex64>> {
    let even = coeffs.len() > 1 && coeffs.iter().skip(1).step_by(2).all(|&c| c == 0.0);
    if !even {
        return aberth(coeffs, opts);
    }
    let half: Vec<f64> = coeffs.iter().step_by(2).copied().collect();
    // adding 0.0 turns the -0.0 parts produced by negation into +0.0
    let tidy = |z: Complex64| Complex64::new(z.re + 0.0, z.im + 0.0);
    Ok(aberth(&half, opts)?
        .into_iter()
        .flat_map(|w| {
            let r = w.sqrt();
            [tidy(r), tidy(-r)]
        })
        .collect())
}

pub(crate) fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// Residual of `z` as a root of `p`, scaled by the coefficient size and
/// `max(1, |z|)^deg`.
pub fn scaled_residual(p: &IntPolynomial, z: Complex64) -> f64 {
    let scale = p.max_abs_coeff().max(1.0) * libm::pow(z.norm().max(1.0), p.degree() as f64);
    p.eval_complex(z).norm() / scale
}

/// Aberth–Ehrlich iteration for a polynomial with simple roots.
fn aberth(coeffs: &[f64], opts: RootOptions) -> Result<Vec<Complex64>> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d];
    let a: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    if d == 1 {
        return Ok(vec![Complex64::new(-a[0], 0.0)]);
    }
    let da: Vec<f64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect();
    let abs_a: Vec<f64> = a.iter().map(|c| c.abs()).collect();

    let mut z = initial_guesses(&a);
    let mut done = vec![false; d];
    let eps = f64::EPSILON;
    let mut iterations = 0;
    while done.iter().any(|&f| !f) {
        if iterations == opts.max_iterations {
            return Err(Error::ConvergenceFailure { iterations });
        }
        iterations += 1;
        for i in 0..d {
            if done[i] {
                continue;
            }
            let zi = z[i];
            let value = eval_f64(&a, zi);
            // rounding level of Horner at |z|
            let bound = eval_f64(&abs_a, Complex64::new(zi.norm(), 0.0)).re * 4.0 * eps;
            if value.norm() <= bound {
                done[i] = true;
                continue;
            }
            let ratio = value / eval_f64(&da, zi);
            let repulsion: Complex64 = (0..d).filter(|&j| j != i).map(|j| (zi - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                return Err(Error::ConvergenceFailure { iterations });
            }
            z[i] = zi - step;
            if step.norm() <= 2.0 * eps * z[i].norm() {
                done[i] = true;
            }
        }
    }
    symmetrize(&mut z);
    Ok(z)
}

/// Starting points on a circle whose radius is the geometric mean of the
/// root moduli, rotated off the axes so no start is real.
fn initial_guesses(monic: &[f64]) -> Vec<Complex64> {
    let d = monic.len() - 1;
    let radius = libm::pow(monic[0].abs(), 1.0 / d as f64).max(libm::sqrt(f64::MIN_POSITIVE));
    (0..d)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / d as f64 + 0.4))
        .collect()
}

/// Snaps numerically real roots onto the axis and makes the rest exact
/// conjugate pairs.
fn symmetrize(z: &mut [Complex64]) {
    let real_tol = |w: Complex64| 1e-12 * w.norm().max(1.0);
    for w in z.iter_mut() {
        if w.im.abs() <= real_tol(*w) {
            w.im = 0.0;
        }
    }
    let upper: Vec<usize> = (0..z.len()).filter(|&i| z[i].im > 0.0).collect();
    let mut lower: Vec<usize> = (0..z.len()).filter(|&i| z[i].im < 0.0).collect();
    if upper.len() != lower.len() {
        return;
    }
    for i in upper {
        let target = z[i].conj();
        let (pos, _) = lower
            .iter()
            .enumerate()
            .min_by(|(_, &a), (_, &b)| (z[a] - target).norm().total_cmp(&(z[b] - target).norm()))
            .expect("same count");
        let j = lower.swap_remove(pos);
        let mean = (z[i] + z[j].conj()) * 0.5;
        z[i] = mean;
        z[j] = mean.conj();
    }
}

/// Eigenvalues of the companion matrix of `p` (Francis double-shift QR on
/// the balanced upper Hessenberg form), sorted like [`find_roots`].
pub fn companion_eigenvalues(p: &IntPolynomial) -> Result<Vec<Complex64>> {
    let n = p.degree();
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let c = p.to_f64();
    // 1-based storage keeps the classical index arithmetic readable.
    let mut a = vec![vec![0.0f64; n + 1]; n + 1];
    for j in 1..=n {
        a[1][j] = -c[n - j] / c[n];
    }
    for j in 2..=n {
        a[j][j - 1] = 1.0;
    }
    balance(&mut a, n);
    let mut roots = hqr(&mut a, n)?;
    sort_roots(&mut roots);
    Ok(roots)
}

fn balance(a: &mut [Vec<f64>], n: usize) {
    const RADIX: f64 = 2.0;
    let sqrdx = RADIX * RADIX;
    let mut done = false;
    while !done {
        done = true;
        for i in 1..=n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in 1..=n {
                if j != i {
                    c += a[j][i].abs();
                    r += a[i][j].abs();
                }
            }
            if c != 0.0 && r != 0.0 {
                let mut g = r / RADIX;
                let mut f = 1.0;
                let s = c + r;
                while c < g {
                    f *= RADIX;
                    c *= sqrdx;
                }
                g = r * RADIX;
                while c > g {
                    f /= RADIX;
                    c /= sqrdx;
                }
                if (c + r) / f < 0.95 * s {
                    done = false;
                    let g = 1.0 / f;
                    for j in 1..=n {
                        a[i][j] *= g;
                    }
                    for row in a.iter_mut().take(n + 1).skip(1) {
                        row[i] *= f;
                    }
                }
            }
        }
    }
}

fn sign_of(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        a.abs()
    } else {
        -a.abs()
    }
}

#[allow(clippy::many_single_char_names, unused_assignments)]
fn hqr(a: &mut [Vec<f64>], n: usize) -> Result<Vec<Complex64>> {
    let mut wr = vec![0.0; n + 1];
    let mut wi = vec![0.0; n + 1];
    let mut anorm = 0.0;
    for i in 1..=n {
        for j in (i.max(2) - 1)..=n {
            anorm += a[i][j].abs();
        }
    }
    let mut nn = n;
    let mut t = 0.0;
    let (mut p, mut q, mut r) = (0.0, 0.0, 0.0);
    let (mut x, mut y, mut z, mut w) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut total_iterations = 0usize;
    while nn >= 1 {
        let mut its = 0;
        loop {
            let mut l = nn;
            while l >= 2 {
                let mut s = a[l - 1][l - 1].abs() + a[l][l].abs();
                if s == 0.0 {
                    s = anorm;
                }
                if a[l][l - 1].abs() + s == s {
                    a[l][l - 1] = 0.0;
                    break;
                }
                l -= 1;
            }
            x = a[nn][nn];
            if l == nn {
                wr[nn] = x + t;
                wi[nn] = 0.0;
                nn -= 1;
            } else {
                y = a[nn - 1][nn - 1];
                w = a[nn][nn - 1] * a[nn - 1][nn];
                if l == nn - 1 {
                    p = 0.5 * (y - x);
                    q = p * p + w;
                    z = libm::sqrt(q.abs());
                    x += t;
                    if q >= 0.0 {
                        z = p + sign_of(z, p);
                        wr[nn - 1] = x + z;
                        wr[nn] = x + z;
                        if z != 0.0 {
                            wr[nn] = x - w / z;
                        }
                        wi[nn - 1] = 0.0;
                        wi[nn] = 0.0;
                    } else {
                        wr[nn - 1] = x + p;
                        wr[nn] = x + p;
                        wi[nn - 1] = -z;
                        wi[nn] = z;
                    }
                    nn -= 2;
                } else {
                    if its == 60 {
                        return Err(Error::ConvergenceFailure {
                            iterations: total_iterations,
                        });
                    }
                    if its == 10 || its == 20 || its == 40 {
                        // exceptional shift
                        t += x;
                        for i in 1..=nn {
                            a[i][i] -= x;
                        }
                        let s = a[nn][nn - 1].abs() + a[nn - 1][nn - 2].abs();
                        x = 0.75 * s;
                        y = x;
                        w = -0.4375 * s * s;
                    }
                    its += 1;
                    total_iterations += 1;
                    let mut m = nn - 2;
                    loop {
                        z = a[m][m];
                        r = x - z;
                        let s = y - z;
                        p = (r * s - w) / a[m + 1][m] + a[m][m + 1];
                        q = a[m + 1][m + 1] - z - r - s;
                        r = a[m + 2][m + 1];
                        let s = p.abs() + q.abs() + r.abs();
                        p /= s;
                        q /= s;
                        r /= s;
                        if m == l {
                            break;
                        }
                        let u = a[m][m - 1].abs() * (q.abs() + r.abs());
                        let v = p.abs() * (a[m - 1][m - 1].abs() + z.abs() + a[m + 1][m + 1].abs());
                        if u + v == v {
                            break;
                        }
                        m -= 1;
                    }
                    for i in (m + 2)..=nn {
                        a[i][i - 2] = 0.0;
                        if i != m + 2 {
                            a[i][i - 3] = 0.0;
                        }
                    }
                    let mut k = m;
                    while k < nn {
                        if k != m {
                            p = a[k][k - 1];
                            q = a[k + 1][k - 1];
                            r = 0.0;
                            if k != nn - 1 {
                                r = a[k + 2][k - 1];
                            }
                            x = p.abs() + q.abs() + r.abs();
                            if x != 0.0 {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        let s = sign_of(libm::sqrt(p * p + q * q + r * r), p);
                        if s != 0.0 {
                            if k == m {
                                if l != m {
                                    a[k][k - 1] = -a[k][k - 1];
                                }
                            } else {
                                a[k][k - 1] = -s * x;
                            }
                            p += s;
                            x = p / s;
                            y = q / s;
                            z = r / s;
                            q /= p;
                            r /= p;
                            for j in k..=nn {
                                p = a[k][j] + q * a[k + 1][j];
                                if k != nn - 1 {
                                    p += r * a[k + 2][j];
                                    a[k + 2][j] -= p * z;
                                }
                                a[k + 1][j] -= p * y;
                                a[k][j] -= p * x;
                            }
                            let mmin = if nn < k + 3 { nn } else { k + 3 };
                            for i in l..=mmin {
                                p = x * a[i][k] + y * a[i][k + 1];
                                if k != nn - 1 {
                                    p += z * a[i][k + 2];
                                    a[i][k + 2] -= p * r;
                                }
                                a[i][k + 1] -= p * q;
                                a[i][k] -= p;
                            }
                        }
                        k += 1;
                    }
                }
            }
            if nn < 2 || l + 1 >= nn {
                break;
            }
        }
    }
    Ok((1..=n).map(|i| Complex64::new(wr[i], wi[i])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_leading_first(c)
    }

    fn close(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol)
    }

    #[test]
    fn integral_spectrum_with_double_root() {
        let roots = find_roots(&p(&[1, 0, -3, 2, 0]), RootOptions::default()).unwrap();
        let expected = [-2.0, 0.0, 1.0, 1.0].map(|r| Complex64::new(r, 0.0));
        assert!(close(&roots, &expected, 1e-12), "{roots:?}");
    }

    #[test]
    fn fourth_roots_of_unity() {
        let roots = find_roots(&p(&[1, 0, 0, 0, -1]), RootOptions::default()).unwrap();
        let expected = [
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(1.0, 0.0),
        ];
        assert!(close(&roots, &expected, 1e-12), "{roots:?}");
    }

    #[test]
    fn imaginary_pair() {
        let roots = find_roots(&p(&[1, 0, 1]), RootOptions::default()).unwrap();
        assert!(close(
            &roots,
            &[Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0)],
            1e-14
        ));
        assert_eq!(roots[0], roots[1].conj());
        assert_eq!(roots[0].re, 0.0);
    }

    #[test]
    fn even_polynomials_have_exactly_symmetric_roots() {
        // z^8 + 3z^6 + 7z^4 + 8z^2 + 3 has roots ±i, ±0.8586i and a quartet
        let roots = find_roots(&p(&[1, 0, 3, 0, 7, 0, 8, 0, 3]), RootOptions::default()).unwrap();
        for z in &roots {
            assert!(roots.contains(&-z));
        }
        assert_eq!(roots.iter().filter(|z| z.re == 0.0).count(), 4);
    }

    #[test]
    fn residuals_on_high_degree() {
        for poly in [
            p(&[1, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
            p(&[1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
        ] {
            let roots = find_roots(&poly, RootOptions::default()).unwrap();
            assert_eq!(roots.len(), 17);
            for z in roots {
                assert!(scaled_residual(&poly, z) <= 1e-10);
            }
        }
    }

    #[test]
    fn constant_is_rejected() {
        assert_eq!(
            find_roots(&p(&[3]), RootOptions::default()),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn companion_matches_aberth() {
        for poly in [
            p(&[1, 0, 0, 1, 0, 0, 1]),
            p(&[1, 0, -3, 0, 2]),
            p(&[1, 0, 2, 0, 0, 0, 1]),
            p(&[1, 2, 0, 0, -1, 0, 3, 1]),
        ] {
            let a = find_roots(&poly, RootOptions::default()).unwrap();
            let b = companion_eigenvalues(&poly).unwrap();
            assert!(close(&a, &b, 1e-8), "{poly}: {a:?} vs {b:?}");
        }
    }
}
