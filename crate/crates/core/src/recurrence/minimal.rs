//! Shortest recurrence of a finite integer sequence by Berlekamp-Massey over Q.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::RecurrenceSpec;
use crate::error::{Error, Result};

/// Shortest recurrence satisfied by a sequence. `certified_integral` records
/// that the integrality check on the coefficients was run and passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalRecurrence {
    pub spec: RecurrenceSpec,
    pub certified_integral: bool,
}

impl MinimalRecurrence {
    pub fn order(&self) -> usize {
        self.spec.order()
    }
}

/// Shortest recurrence fitting `terms`, which must hold at least
/// `2 * order_bound` values of a sequence known to satisfy some recurrence of
/// order at most `order_bound` from n = 1 on.
///
/// The rational run is checked afterwards: a_0 must be nonzero and every
/// coefficient an integer, since an integer sequence with a rational
/// recurrence has an integral shortest one.
pub fn minimal_recurrence(terms: &[BigInt], order_bound: usize) -> Result<MinimalRecurrence> {
    if terms.len() < 2 * order_bound {
        return Err(Error::NotEnoughTerms {
            needed: 2 * order_bound,
            got: terms.len(),
        });
    }
    let s: Vec<BigRational> = terms
        .iter()
        .map(|t| BigRational::from_integer(t.clone()))
        .collect();

    // connection polynomial c(x) = 1 + c_1 x + ... with
    // s_i + sum_j c_j s_{i-j} = 0 for i >= len
    let mut c = vec![BigRational::one()];
    let mut b = vec![BigRational::one()];
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut last_disc = BigRational::one();

    for i in 0..s.len() {
        let mut d = s[i].clone();
        for j in 1..=len.min(c.len() - 1) {
            d += &c[j] * &s[i - j];
        }
        if d.is_zero() {
            shift += 1;
            continue;
        }
        let factor = &d / &last_disc;
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, BigRational::zero());
        }
        for (j, bj) in b.iter().enumerate() {
            c[j + shift] -= &factor * bj;
        }
        if 2 * len <= i {
            len = i + 1 - len;
            b = prev;
            last_disc = d;
            shift = 1;
        } else {
            shift += 1;
        }
    }

    if len > order_bound {
        return Err(Error::OrderBoundExceeded {
            found: len,
            bound: order_bound,
        });
    }
    c.resize(len + 1, BigRational::zero());

    // f(n + len) = sum a_i f(n + i) with a_i = -c_{len - i}
    let mut coeffs = Vec::with_capacity(len);
    for i in 0..len {
        let a = -&c[len - i];
        if !a.is_integer() {
            return Err(Error::FatouViolation(a.to_string()));
        }
        coeffs.push(a.to_integer());
    }
    if coeffs.first().is_some_and(Zero::is_zero) {
        return Err(Error::VanishingConstant);
    }
    let spec = RecurrenceSpec::new(coeffs, terms[..len].to_vec())?;
    debug_assert_eq!(spec.terms(terms.len()), terms);
    Ok(MinimalRecurrence {
        spec,
        certified_integral: true,
    })
}
