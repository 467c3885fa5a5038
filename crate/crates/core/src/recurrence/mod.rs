//! Integer linear recurrence sequences.
//!
//! A sequence of order k is `f(n + k) = a_0 f(n) + ... + a_{k-1} f(n + k - 1)`
//! for n >= 1, with `a_0 != 0` and initial terms `f(1), ..., f(k)`. Order zero
//! is the zero sequence. The same definition makes sense over any integral
//! domain; only Z (and Q for backward extension) are implemented.

mod matrix;
mod minimal;

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::IntPoly;
use crate::error::{Error, Result};

pub use matrix::{char_poly_faddeev, mat_pow, Matrix};
pub use minimal::{minimal_recurrence, MinimalRecurrence};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RecurrenceSpec {
    coeffs: Vec<BigInt>,
    initial: Vec<BigInt>,
}

impl RecurrenceSpec {
    /// `coeffs` is a_0 first, `initial` is f(1) first.
    pub fn new(coeffs: Vec<BigInt>, initial: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != initial.len() {
            return Err(Error::InvalidSpec(format!(
                "{} coefficients but {} initial terms",
                coeffs.len(),
                initial.len()
            )));
        }
        if coeffs.first().is_some_and(Zero::is_zero) {
            return Err(Error::InvalidSpec("a_0 must be nonzero".into()));
        }
        Ok(RecurrenceSpec { coeffs, initial })
    }

    pub fn from_i64s(coeffs: &[i64], initial: &[i64]) -> Result<Self> {
        Self::new(
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            initial.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    pub fn zero() -> Self {
        RecurrenceSpec {
            coeffs: Vec::new(),
            initial: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn initial(&self) -> &[BigInt] {
        &self.initial
    }

    /// x^k - a_{k-1} x^{k-1} - ... - a_0; the constant 1 for k = 0.
    pub fn char_poly(&self) -> IntPoly {
        let mut c: Vec<BigInt> = self.coeffs.iter().map(|a| -a).collect();
        c.push(BigInt::one());
        IntPoly::new(c)
    }

    /// The next term after a window of k consecutive terms.
    fn step(&self, window: &[BigInt]) -> BigInt {
        self.coeffs
            .iter()
            .zip(window)
            .fold(BigInt::zero(), |acc, (a, f)| acc + a * f)
    }

    /// f(1), ..., f(count).
    pub fn terms(&self, count: usize) -> Vec<BigInt> {
        let k = self.order();
        if k == 0 {
            return vec![BigInt::zero(); count];
        }
        let mut out: Vec<BigInt> = self.initial.iter().take(count).cloned().collect();
        while out.len() < count {
            let next = self.step(&out[out.len() - k..]);
            out.push(next);
        }
        out
    }

    /// f(n) by forward iteration of the defining recurrence.
    pub fn eval_simple(&self, n: u64) -> Result<BigInt> {
        self.eval_simple_until(n, None)
    }

    /// Forward iteration that gives up once `deadline` has passed.
    pub fn eval_simple_until(&self, n: u64, deadline: Option<Instant>) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::OutOfRange("0 (indices start at 1)".into()));
        }
        let k = self.order();
        if k == 0 {
            return Ok(BigInt::zero());
        }
        if n as usize <= k {
            return Ok(self.initial[n as usize - 1].clone());
        }
        let mut window: Vec<BigInt> = self.initial.clone();
        let mut head = 0usize; // ring buffer: window[head] is the oldest term
        let mut idx = k as u64;
        while idx < n {
            if idx % 1024 == 0 {
                if let Some(d) = deadline {
                    if Instant::now() >= d {
                        return Err(Error::BudgetExceeded {
                            reached: idx,
                            target: n,
                        });
                    }
                }
            }
            let mut next = BigInt::zero();
            for (i, a) in self.coeffs.iter().enumerate() {
                next += a * &window[(head + i) % k];
            }
            window[head] = next;
            head = (head + 1) % k;
            idx += 1;
        }
        Ok(window[(head + k - 1) % k].clone())
    }

    /// f(n) for n <= 0, running the recurrence backwards over Q.
    pub fn eval_backward(&self, n: i64) -> Result<BigRational> {
        if n > 0 {
            return Err(Error::OutOfRange(format!("{n} (backward evaluation needs n <= 0)")));
        }
        let k = self.order();
        if k == 0 {
            return Ok(BigRational::zero());
        }
        let a0 = BigRational::from_integer(self.coeffs[0].clone());
        // window holds f(lo), ..., f(lo + k - 1)
        let mut window: Vec<BigRational> = self
            .initial
            .iter()
            .map(|v| BigRational::from_integer(v.clone()))
            .collect();
        let mut lo: i64 = 1;
        while lo > n {
            let mut acc = window[k - 1].clone();
            for i in 1..k {
                acc -= BigRational::from_integer(self.coeffs[i].clone()) * &window[i - 1];
            }
            window.pop();
            window.insert(0, acc / &a0);
            lo -= 1;
        }
        Ok(window[0].clone())
    }

    /// Matrix taking (f(n), ..., f(n+k-1)) to (f(n+1), ..., f(n+k)).
    pub fn companion(&self) -> Result<Matrix> {
        let k = self.order();
        if k == 0 {
            return Err(Error::InvalidSpec("the zero sequence has no companion matrix".into()));
        }
        let mut m = Matrix::zero(k);
        for i in 0..k - 1 {
            m[(i, i + 1)] = BigInt::one();
        }
        for (j, a) in self.coeffs.iter().enumerate() {
            m[(k - 1, j)] = a.clone();
        }
        Ok(m)
    }

    /// f(n) from the state vector transported by the (n-1)-th companion power.
    pub fn eval_matrix(&self, n: u64) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::OutOfRange("0 (indices start at 1)".into()));
        }
        if self.order() == 0 {
            return Ok(BigInt::zero());
        }
        let p = mat_pow(&self.companion()?, n - 1);
        Ok(p.row(0)
            .iter()
            .zip(&self.initial)
            .fold(BigInt::zero(), |acc, (a, b)| acc + a * b))
    }

    /// Recurrence for g(n) = f(j + m(n-1)) taken from the characteristic
    /// polynomial of M^m (Cayley-Hamilton), before minimization. Order k.
    pub fn section_unreduced(&self, m: u64, j: u64) -> Result<RecurrenceSpec> {
        check_residue(m, j)?;
        let k = self.order();
        if k == 0 {
            return Ok(RecurrenceSpec::zero());
        }
        let power = mat_pow(&self.companion()?, m);
        let chi = char_poly_faddeev(&power);
        let coeffs: Vec<BigInt> = (0..k).map(|i| -chi.coeff(i)).collect();
        let initial = self.section_terms(m, j, k);
        RecurrenceSpec::new(coeffs, initial)
    }

    /// The m-section f(j + m(n-1)) as a minimal recurrence.
    pub fn section(&self, m: u64, j: u64) -> Result<RecurrenceSpec> {
        let full = self.section_unreduced(m, j)?;
        let k = full.order();
        let terms = full.terms(2 * k);
        Ok(minimal_recurrence(&terms, k)?.spec)
    }

    /// f(j), f(j+m), ..., `count` terms along a residue class.
    pub fn section_terms(&self, m: u64, j: u64, count: usize) -> Vec<BigInt> {
        if count == 0 {
            return Vec::new();
        }
        let last = j as usize + m as usize * (count - 1);
        let all = self.terms(last);
        (0..count)
            .map(|i| all[j as usize - 1 + m as usize * i].clone())
            .collect()
    }
}

fn check_residue(m: u64, j: u64) -> Result<()> {
    if m == 0 || j == 0 || j > m {
        return Err(Error::OutOfRange(format!("residue {j} mod {m} (need 1 <= j <= m)")));
    }
    Ok(())
}
