//! Root-of-unity structure of a characteristic polynomial.
//!
//! A sequence is degenerate when two distinct roots of its characteristic
//! polynomial have a root of unity as ratio. Passing to residue classes
//! modulo m removes this once m is a multiple of every such order and of the
//! order of every root-of-unity root. This module finds the least such m
//! exactly, with cyclotomic divisibility tests on the squarefree
//! characteristic polynomial and on its ratio polynomial.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::{cyclotomic, squarefree_part, totient, IntPoly, RatPoly};
use crate::error::{Error, Result};

/// Default cap on the sectioning modulus.
pub const DEFAULT_MODULUS_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnityReport {
    /// N such that some root is a primitive N-th root of unity.
    pub root_orders: BTreeSet<u64>,
    /// N >= 2 such that some ratio of distinct roots is a primitive N-th root of unity.
    pub ratio_orders: BTreeSet<u64>,
    pub modulus: u64,
}

/// Polynomial in x whose roots are all ratios a/b of roots a, b of `q`
/// (the diagonal contributes the root 1), normalized to equal
/// Res_y(q(y), q(xy)) under the Sylvester convention.
///
/// The power sums of the ratios factor as p_s(roots of q) * p_s(roots of the
/// reversal of q), so the monic ratio polynomial follows from Newton's
/// identities in O(n^4) rational operations. The resultant equals
/// lc^n ((-1)^n q(0))^n times that monic polynomial.
pub fn ratio_poly(q: &IntPoly) -> Result<IntPoly> {
    let n = q.degree().ok_or(Error::ZeroPolynomial("ratio_poly"))?;
    if q.coeff(0).is_zero() {
        return Err(Error::InvalidSpec(
            "ratio polynomial of a polynomial with root 0".into(),
        ));
    }
    let deg = n * n;
    let reversed = IntPoly::new(q.coeffs().iter().rev().cloned().collect());
    let forward = power_sums(q, deg);
    let backward = power_sums(&reversed, deg);
    let sums: Vec<BigRational> = forward.iter().zip(&backward).map(|(a, b)| a * b).collect();
    let monic = from_power_sums(&sums);

    let lc = q.leading().unwrap();
    let c0 = if n % 2 == 0 { q.coeff(0) } else { -q.coeff(0) };
    let scale = num_traits::pow(lc * c0, n);
    Ok(monic
        .scale(&BigRational::from_integer(scale))
        .to_int()
        .expect("scaled ratio polynomial is integral"))
}

/// p_1, ..., p_count: power sums of the roots of `q` (with multiplicity).
fn power_sums(q: &IntPoly, count: usize) -> Vec<BigRational> {
    let n = q.degree().unwrap();
    let c = |i: usize| BigRational::from_integer(q.coeff(i));
    let lc = c(n);
    let mut p: Vec<BigRational> = Vec::with_capacity(count + 1);
    p.push(BigRational::from_integer(BigInt::from(n)));
    for s in 1..=count {
        // lc p_s + c_{n-1} p_{s-1} + ... = -s c_{n-s} (s <= n), 0 (s > n)
        let mut acc = if s <= n {
            -c(n - s) * BigRational::from_integer(BigInt::from(s))
        } else {
            BigRational::zero()
        };
        for i in 1..s.min(n + 1) {
            acc -= c(n - i) * &p[s - i];
        }
        p.push(acc / &lc);
    }
    p.remove(0);
    p
}

/// Monic polynomial whose roots have power sums `sums[0], sums[1], ...`.
fn from_power_sums(sums: &[BigRational]) -> RatPoly {
    let d = sums.len();
    let mut e = vec![BigRational::one()];
    for k in 1..=d {
        let mut acc = BigRational::zero();
        for i in 1..=k {
            let term = &e[k - i] * &sums[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / BigRational::from_integer(BigInt::from(k)));
    }
    // x^d - e_1 x^{d-1} + e_2 x^{d-2} - ...
    let coeffs = (0..=d)
        .map(|i| {
            let k = d - i;
            if k % 2 == 0 {
                e[k].clone()
            } else {
                -&e[k]
            }
        })
        .collect();
    RatPoly::new(coeffs)
}

/// Every N with phi(N) <= bound. phi(N) >= sqrt(N / 2), so N <= 2 bound^2 + 2
/// covers them all.
fn candidate_orders(bound: usize) -> impl Iterator<Item = u64> {
    let bound = bound as u64;
    (1..=2 * bound * bound + 2).filter(move |&n| totient(n) <= bound)
}

/// All N for which Phi_N divides `p` (equivalently gcd(p, Phi_N) is
/// nonconstant, Phi_N being irreducible), searched over phi(N) <= `degree_bound`.
pub fn unity_orders(p: &IntPoly, degree_bound: usize) -> Result<BTreeSet<u64>> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial("unity_orders"))?;
    let p = p.primitive_normalized();
    let mut out = BTreeSet::new();
    for n in candidate_orders(degree_bound.min(deg)) {
        if cyclotomic(n).divides(&p)? {
            out.insert(n);
        }
    }
    Ok(out)
}

/// Least sectioning modulus for a minimal characteristic polynomial.
pub fn compute_modulus(q_min: &IntPoly, cap: u64) -> Result<UnityReport> {
    if q_min.is_zero() {
        return Err(Error::ZeroPolynomial("compute_modulus"));
    }
    let k = q_min.degree().unwrap();
    if k == 0 {
        return Ok(UnityReport {
            root_orders: BTreeSet::new(),
            ratio_orders: BTreeSet::new(),
            modulus: 1,
        });
    }
    if q_min.coeff(0).is_zero() {
        return Err(Error::InvalidSpec(
            "characteristic polynomial has the root 0".into(),
        ));
    }
    let sq = squarefree_part(q_min)?;
    let root_orders = unity_orders(&sq, k)?;
    let mut ratio_orders = unity_orders(&ratio_poly(&sq)?, k * k)?;
    ratio_orders.remove(&1);

    let lcm = root_orders
        .iter()
        .chain(&ratio_orders)
        .fold(BigInt::one(), |acc, &n| acc.lcm(&BigInt::from(n)));
    match lcm.to_u64() {
        Some(m) if m <= cap => Ok(UnityReport {
            root_orders,
            ratio_orders,
            modulus: m,
        }),
        _ => Err(Error::ModulusCapExceeded {
            modulus: lcm.to_string(),
            cap,
        }),
    }
}

/// Whether `p` is a product of cyclotomic polynomials, i.e. every root is a
/// root of unity. Non-monic input is never such a product.
pub fn is_cyclotomic_product(p: &IntPoly) -> bool {
    if !p.is_monic() {
        return false;
    }
    let mut rest = p.clone();
    'strip: while !rest.is_one() {
        let deg = rest.degree().unwrap();
        for n in candidate_orders(deg) {
            if let Ok(Some(q)) = rest.div_exact(&cyclotomic(n)) {
                rest = q;
                continue 'strip;
            }
        }
        return false;
    }
    true
}

/// Splits off the largest power of (x - 1): returns (rest, d) with
/// p = (x - 1)^d * rest.
pub fn strip_unit_root(p: &IntPoly) -> (IntPoly, usize) {
    let x_minus_one = IntPoly::linear_root(BigInt::one());
    let mut rest = p.clone();
    let mut d = 0;
    if rest.is_zero() {
        return (rest, 0);
    }
    while let Ok(Some(q)) = rest.div_exact(&x_minus_one) {
        rest = q;
        d += 1;
    }
    (rest, d)
}
