//! Exact characteristic polynomials `det(zI - A(S))`.
//!
//! [`charpoly_exact`] runs Berkowitz's division-free algorithm over the
//! integers. [`charpoly_minors`] is a deliberately slow oracle that sums
//! principal minors evaluated by cofactor expansion; the combinatorial route
//! through linear subsidigraphs lives in [`crate::linear`].

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Sidigraph;
use crate::poly::IntPolynomial;

/// Largest order accepted by [`charpoly_exact`].
pub const EXACT_ORDER_LIMIT: usize = 64;
/// Default largest order accepted by [`charpoly_minors`].
pub const MINORS_ORDER_LIMIT: usize = 12;
// Berkowitz intermediates are bounded by n^n, which fits in i128 up to here.
const I128_ORDER_LIMIT: usize = 24;

/// Exact characteristic polynomial, monic of degree `n`.
pub fn charpoly_exact(s: &Sidigraph) -> Result<IntPolynomial> {
    let n = s.order();
    if n > EXACT_ORDER_LIMIT {
        return Err(Error::OracleBoundExceeded {
            order: n,
            bound: EXACT_ORDER_LIMIT,
        });
    }
    if n <= I128_ORDER_LIMIT {
        let m = dense::<i128>(s);
        let leading_first = berkowitz(&m, n);
        return Ok(IntPolynomial::new(
            leading_first.into_iter().rev().map(BigInt::from).collect(),
        ));
    }
    Ok(charpoly_bigint(s))
}

/// Berkowitz over `BigInt` regardless of order.
pub fn charpoly_bigint(s: &Sidigraph) -> IntPolynomial {
    let m = dense::<BigInt>(s);
    let leading_first = berkowitz(&m, s.order());
    IntPolynomial::new(leading_first.into_iter().rev().collect())
}

/// Leading-first coefficients of `det(zI - M)` for a dense row-major `n×n`
/// matrix with entries in `{-1, 0, 1}`, for hot loops on small orders.
pub(crate) fn charpoly_dense(m: &[i128], n: usize) -> Vec<i128> {
    debug_assert!(n <= I128_ORDER_LIMIT);
    berkowitz(m, n)
}

fn dense<T: From<i8>>(s: &Sidigraph) -> Vec<T> {
    s.raw_matrix().iter().map(|&e| T::from(e)).collect()
}

/// Berkowitz's algorithm on a row-major `n×n` matrix. Returns the
/// coefficients of `det(zI - A)` leading term first.
fn berkowitz<T>(a: &[T], n: usize) -> Vec<T>
where
    T: Clone + Zero + One + Neg<Output = T>,
    for<'x> &'x T: Add<&'x T, Output = T> + Mul<&'x T, Output = T> + Sub<&'x T, Output = T>,
{
    let at = |i: usize, j: usize| &a[i * n + j];
    let mut poly = vec![T::one()];
    for r in 0..n {
        // column of the Toeplitz matrix: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
        let mut col = Vec::with_capacity(r + 2);
        col.push(T::one());
        col.push(-at(r, r).clone());
        // v = A_{r} C where A_r is the leading r×r block and C = a[0..r][r]
        let mut v: Vec<T> = (0..r).map(|i| at(i, r).clone()).collect();
        for _ in 0..r {
            let rc = (0..r).fold(T::zero(), |acc, k| &acc + &(at(r, k) * &v[k]));
            col.push(-rc);
            v = (0..r)
                .map(|i| (0..r).fold(T::zero(), |acc, k| &acc + &(at(i, k) * &v[k])))
                .collect();
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut acc = T::zero();
            for (j, pj) in poly.iter().enumerate() {
                if i >= j {
                    acc = &acc + &(&col[i - j] * pj);
                }
            }
            next.push(acc);
        }
        poly = next;
    }
    poly
}

/// Characteristic polynomial from sums of principal minors, each minor by
/// cofactor expansion. Fails above `bound` vertices.
pub fn charpoly_minors(s: &Sidigraph, bound: usize) -> Result<IntPolynomial> {
    let n = s.order();
    if n > bound || n > 20 {
        return Err(Error::OracleBoundExceeded {
            order: n,
            bound: bound.min(20),
        });
    }
    // sums[j] = sum of principal j×j minors
    let mut sums = vec![0i128; n + 1];
    sums[0] = 1;
    let mut rows = Vec::with_capacity(n);
    for subset in 1u32..(1u32 << n) {
        rows.clear();
        rows.extend((0..n).filter(|&i| subset & (1 << i) != 0));
        sums[rows.len()] += cofactor_det(s, &rows);
    }
    // coefficient of z^{n-j} is (-1)^j E_j
    let coeffs: Vec<BigInt> = (0..=n)
        .map(|k| {
            let j = n - k;
            let e = BigInt::from(sums[j]);
            if j % 2 == 1 {
                -e
            } else {
                e
            }
        })
        .collect();
    Ok(IntPolynomial::new(coeffs))
}

/// Determinant of the principal submatrix on `rows` by cofactor expansion
/// along successive rows, memoised on the set of columns still available.
fn cofactor_det(s: &Sidigraph, rows: &[usize]) -> i128 {
    let k = rows.len();
    // memo[mask] = det of rows[0..popcount(mask)] × columns in mask
    let mut memo = vec![0i128; 1 << k];
    memo[0] = 1;
    for mask in 1usize..(1 << k) {
        let depth = mask.count_ones() as usize;
        let row = rows[depth - 1];
        let mut acc = 0i128;
        // expansion along row depth-1 over the columns in mask; the sign is
        // the parity of the column's position among the chosen columns
        let mut position = 0;
        for c in 0..k {
            if mask & (1 << c) == 0 {
                continue;
            }
            let e = s.entry(row, rows[c]);
            if e != 0 {
                let minor = memo[mask & !(1 << c)];
                let term = i128::from(e) * minor;
                if (position + depth - 1) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            position += 1;
        }
        memo[mask] = acc;
    }
    memo[(1 << k) - 1]
}
