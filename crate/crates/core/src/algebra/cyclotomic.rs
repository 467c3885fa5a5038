//! Cyclotomic polynomials and elementary arithmetic functions.

use num_bigint::BigInt;
use num_traits::One;

use super::poly::IntPoly;

/// Prime factorization by trial division, as (prime, exponent) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let cur = ds.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            ds.extend(cur.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

/// Phi_N(x).
///
/// Built from Phi_1 = x - 1 through Phi_{rp}(x) = Phi_r(x^p) / Phi_r(x) for
/// primes p not dividing r, then Phi_N(x) = Phi_{rad N}(x^{N / rad N}).
/// This keeps every intermediate at degree at most p * phi(r).
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic order must be positive");
    let primes = factorize(n);
    let mut phi = IntPoly::linear_root(BigInt::one());
    let mut rad = 1u64;
    for &(p, _) in &primes {
        let inflated = phi.inflate(p as usize);
        phi = inflated
            .div_exact(&phi)
            .expect("nonzero divisor")
            .expect("Phi_r(x) divides Phi_r(x^p)");
        rad *= p;
    }
    if rad < n {
        phi = phi.inflate((n / rad) as usize);
    }
    phi
}
