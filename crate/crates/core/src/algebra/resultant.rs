use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination. Every intermediate division is exact.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                debug_assert!((&v % &prev).is_zero());
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Sylvester resultant for coefficient lists taken at their formal degree
/// (`len - 1`), so leading zeros are allowed. Rows of `p` come first.
pub fn sylvester_resultant(p: &[BigInt], q: &[BigInt]) -> BigInt {
    let m = p.len().saturating_sub(1);
    let n = q.len().saturating_sub(1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    // descending coefficients, shifted right one column per row
    for shift in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (i, c) in p.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (i, c) in q.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    bareiss_determinant(rows)
}

/// Res(p, q) as the determinant of the Sylvester matrix with the rows of `p`
/// first. Res(y - 2, y - 3) = -1 under this convention.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> Result<BigInt> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial("resultant"));
    }
    Ok(sylvester_resultant(p.coeffs(), q.coeffs()))
}
