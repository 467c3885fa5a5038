//! Dispatch evaluator: polynomial residues are answered by evaluating the
//! class polynomial at n, every other residue by running the recurrence.
//!
//! The polynomial path costs O(deg q) operations on numbers of O(log n) bits.
//! On exponential classes the output already has Theta(n) bits, so forward
//! iteration stays polynomial in the size of the answer.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::classifier::{eval_class_poly, ClassKind, Classification};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EvalMethod {
    /// Polynomial path on polynomial residues, forward iteration elsewhere.
    #[default]
    Auto,
    /// Forward iteration of the input recurrence for every n.
    ForcedSimple,
    /// Companion-matrix powering of the input recurrence for every n.
    ForcedMatrix,
    /// Polynomial path only; exponential residues are an error.
    ForcedPio,
}

impl std::str::FromStr for EvalMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(EvalMethod::Auto),
            "simple" => Ok(EvalMethod::ForcedSimple),
            "matrix" => Ok(EvalMethod::ForcedMatrix),
            "pio" => Ok(EvalMethod::ForcedPio),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

fn index_u64(n: &BigUint) -> Result<u64> {
    n.to_u64()
        .ok_or_else(|| Error::OutOfRange(format!("{n} (too large for recurrence iteration)")))
}

pub fn eval_pio(cls: &Classification, n: &BigUint, method: EvalMethod) -> Result<BigInt> {
    eval_pio_until(cls, n, method, None)
}

/// As [`eval_pio`]; `deadline` bounds the forced forward iteration only.
pub fn eval_pio_until(
    cls: &Classification,
    n: &BigUint,
    method: EvalMethod,
    deadline: Option<Instant>,
) -> Result<BigInt> {
    if n.is_zero() {
        return Err(Error::OutOfRange("0 (indices start at 1)".into()));
    }
    match method {
        EvalMethod::ForcedSimple => cls.spec.eval_simple_until(index_u64(n)?, deadline),
        EvalMethod::ForcedMatrix => cls.spec.eval_matrix(index_u64(n)?),
        EvalMethod::Auto | EvalMethod::ForcedPio => {
            let class = cls.class_of(n);
            match (&class.poly, method) {
                (Some(poly), _) => eval_class_poly(poly, n),
                (None, EvalMethod::ForcedPio) => Err(Error::OutOfRange(format!(
                    "{n} lies in exponential residue class {}",
                    class.residue
                ))),
                (None, _) => cls.minimal.spec.eval_simple(index_u64(n)?),
            }
        }
    }
}

/// Output size in the sense of the cost bound: bit length of 2 + |f(n)|.
pub fn output_bits(value: &BigInt) -> u64 {
    (value.magnitude() + BigUint::from(2u32)).bits()
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub index: BigUint,
    pub residue: u64,
    pub kind: ClassKind,
    pub auto_time: Duration,
    /// Big-number multiply-adds on the auto path.
    pub auto_ops: BigUint,
    /// `None` when forward iteration was skipped or ran out of budget.
    pub simple_time: Option<Duration>,
    pub simple_ops: BigUint,
    pub output_bits: u64,
    /// Whether the two paths agreed, when both ran.
    pub agree: Option<bool>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

fn iteration_ops(n: &BigUint, k: usize) -> BigUint {
    let k_big = BigUint::from(k);
    if *n <= k_big {
        BigUint::zero()
    } else {
        (n - &k_big) * k_big
    }
}

/// Times the auto path against forced forward iteration at each index.
///
/// Forward iteration gets `budget` per index. Once it overruns at some index,
/// every later index at least as large is skipped without being attempted.
pub fn bench_compare(cls: &Classification, indices: &[BigUint], budget: Duration) -> Result<BenchReport> {
    let mut rows = Vec::with_capacity(indices.len());
    let mut overrun_at: Option<BigUint> = None;
    for n in indices {
        let class = cls.class_of(n);
        let start = Instant::now();
        let value = eval_pio(cls, n, EvalMethod::Auto)?;
        let auto_time = start.elapsed();
        let auto_ops = match &class.poly {
            Some(p) => BigUint::from(p.degree().map_or(0, |d| d + 1)),
            None => iteration_ops(n, cls.minimal.order()),
        };
        let simple_ops = iteration_ops(n, cls.spec.order());

        let mut row = BenchRow {
            index: n.clone(),
            residue: class.residue,
            kind: class.kind,
            auto_time,
            auto_ops,
            simple_time: None,
            simple_ops,
            output_bits: output_bits(&value),
            agree: None,
            note: None,
        };
        let skip = overrun_at.as_ref().is_some_and(|o| n >= o);
        if skip {
            row.note = Some("skipped: a smaller index already exceeded the budget".into());
        } else if n.to_u64().is_none() {
            row.note = Some("skipped: index too large for forward iteration".into());
        } else {
            let start = Instant::now();
            match eval_pio_until(cls, n, EvalMethod::ForcedSimple, Some(start + budget)) {
                Ok(v) => {
                    row.simple_time = Some(start.elapsed());
                    row.agree = Some(v == value);
                }
                Err(Error::BudgetExceeded { reached, .. }) => {
                    row.note = Some(format!(
                        "skipped: budget of {:.3}s exceeded at index {reached}",
                        budget.as_secs_f64()
                    ));
                    overrun_at = Some(match overrun_at {
                        Some(o) if o < *n => o,
                        _ => n.clone(),
                    });
                }
                Err(e) => return Err(e),
            }
        }
        rows.push(row);
    }
    Ok(BenchReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::classify;
    use crate::recurrence::tests::{f1, fib};
    use crate::recurrence::RecurrenceSpec;
    use num_traits::One;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn f1_examples() {
        let c = classify(&f1()).unwrap();
        // 11^4 - 22
        assert_eq!(eval_pio(&c, &n(11), EvalMethod::Auto).unwrap(), BigInt::from(14619));
        // 2 * 3^4 + 4^4 - 8
        assert_eq!(eval_pio(&c, &n(4), EvalMethod::Auto).unwrap(), BigInt::from(410));
        assert_eq!(f1().eval_simple(4).unwrap(), BigInt::from(410));
    }

    #[test]
    fn zero_sequence_at_huge_index() {
        let c = classify(&RecurrenceSpec::zero()).unwrap();
        assert_eq!(eval_pio(&c, &n(1_000_000_000), EvalMethod::Auto).unwrap(), BigInt::zero());
        let googol = num_traits::pow(BigUint::from(10u32), 100);
        assert_eq!(eval_pio(&c, &googol, EvalMethod::Auto).unwrap(), BigInt::zero());
    }

    #[test]
    fn f1_polynomial_path_at_huge_index() {
        let c = classify(&f1()).unwrap();
        let big = num_traits::pow(BigUint::from(10u32), 40) + BigUint::one();
        let expected = num_traits::pow(BigInt::from(big.clone()), 4) - BigInt::from(big.clone()) * 2;
        assert_eq!(eval_pio(&c, &big, EvalMethod::Auto).unwrap(), expected);
        assert!(eval_pio(&c, &(big + BigUint::one()), EvalMethod::Auto).is_err());
    }

    #[test]
    fn methods_agree() {
        for spec in [f1(), fib(), RecurrenceSpec::from_i64s(&[-1, 0], &[1, 0]).unwrap()] {
            let c = classify(&spec).unwrap();
            for i in 1..=300 {
                let auto = eval_pio(&c, &n(i), EvalMethod::Auto).unwrap();
                assert_eq!(auto, eval_pio(&c, &n(i), EvalMethod::ForcedSimple).unwrap());
                assert_eq!(auto, eval_pio(&c, &n(i), EvalMethod::ForcedMatrix).unwrap());
                assert_eq!(auto, spec.eval_simple(i).unwrap());
            }
        }
    }

    #[test]
    fn forced_pio_rejects_exponential_residue() {
        let c = classify(&f1()).unwrap();
        assert!(eval_pio(&c, &n(7), EvalMethod::ForcedPio).is_ok());
        assert!(eval_pio(&c, &n(8), EvalMethod::ForcedPio).is_err());
        assert!(eval_pio(&c, &n(0), EvalMethod::Auto).is_err());
    }

    #[test]
    fn output_size() {
        assert_eq!(output_bits(&BigInt::zero()), 2);
        assert_eq!(output_bits(&BigInt::from(-6)), 4);
    }

    #[test]
    fn bench_rows() {
        let c = classify(&fib()).unwrap();
        let report = bench_compare(&c, &[n(1000)], Duration::from_secs(30)).unwrap();
        let row = &report.rows[0];
        assert_eq!(row.kind, ClassKind::Exponential);
        assert_eq!(row.agree, Some(true));
        assert_eq!(row.simple_ops, n(998 * 2));

        let c = classify(&RecurrenceSpec::zero()).unwrap();
        let report = bench_compare(&c, &[n(5), n(50)], Duration::from_secs(1)).unwrap();
        assert!(report.rows.iter().all(|r| r.output_bits == 2 && r.kind == ClassKind::Polynomial));
    }

    #[test]
    fn bench_skips_after_overrun() {
        let c = classify(&f1()).unwrap();
        let report = bench_compare(&c, &[n(2_000_001), n(3_000_001)], Duration::ZERO).unwrap();
        assert!(report.rows.iter().all(|r| r.simple_time.is_none() && r.note.is_some()));
        assert!(report.rows[1].note.as_ref().unwrap().contains("smaller index"));
        // f1(10^6 + 1) = n^4 - 2n has about 80 bits
        let report = bench_compare(&c, &[n(1_000_001)], Duration::ZERO).unwrap();
        assert_eq!(report.rows[0].output_bits, 80);
        assert_eq!(report.rows[0].kind, ClassKind::Polynomial);
    }
}
