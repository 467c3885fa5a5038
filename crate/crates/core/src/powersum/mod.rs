//! Numeric power-sum representations f(n) = sum_i p_i(n) alpha_i^n with
//! certified enclosures, plus zero scans and growth diagnostics.

mod dyadic;
mod interval;
mod roots;

pub use dyadic::{Dyadic, Round};
pub use interval::{ComplexEnclosure, Interval};
pub use roots::{isolate_roots, RootEnclosure, PRECISION_CAP, START_PRECISION};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::classifier::{ClassKind, Classification};
use crate::error::{Error, Result};
use crate::recurrence::{minimal_recurrence, RecurrenceSpec};

/// Relative slack allowed between the empirical and the certified exponent.
pub const GROWTH_EPSILON: f64 = 0.05;

/// Extra bits carried by the interval linear solve over the target precision.
const SOLVE_GUARD: u64 = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSumTerm {
    pub root: ComplexEnclosure,
    pub multiplicity: usize,
    /// Coefficients of p_i, ascending; length equals the multiplicity.
    pub coeffs: Vec<ComplexEnclosure>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NumericPowerSum {
    pub terms: Vec<PowerSumTerm>,
    pub source_spec: RecurrenceSpec,
    pub precision: u64,
}

impl NumericPowerSum {
    /// Enclosure of S(n).
    pub fn eval(&self, n: u64) -> ComplexEnclosure {
        let work = self.precision + SOLVE_GUARD;
        let n_iv = Interval::from_int(n);
        let mut acc = ComplexEnclosure::zero();
        for t in &self.terms {
            let mut poly = ComplexEnclosure::zero();
            for c in t.coeffs.iter().rev() {
                poly = poly.scale(&n_iv, work).add(c, work);
            }
            acc = acc.add(&poly.mul(&t.root.pow(n, work), work), work);
        }
        acc
    }
}

/// Solves the confluent Vandermonde system for the coefficient polynomials of
/// the minimal recurrence behind `spec`, from its first values.
pub fn power_sum(spec: &RecurrenceSpec, precision: u64) -> Result<NumericPowerSum> {
    let k = spec.order();
    let minimal = minimal_recurrence(&spec.terms(2 * k), k)?;
    let mut out = NumericPowerSum {
        terms: Vec::new(),
        source_spec: spec.clone(),
        precision,
    };
    let kmin = minimal.order();
    if kmin == 0 {
        return Ok(out);
    }
    let q = minimal.spec.char_poly();
    let values = spec.terms(kmin);
    let mut attempt = precision;
    while attempt <= PRECISION_CAP {
        let roots = isolate_roots(&q, attempt)?;
        if let Some(terms) = solve_coefficients(&roots, &values, attempt + SOLVE_GUARD) {
            out.terms = terms;
            return Ok(out);
        }
        attempt *= 2;
    }
    Err(Error::PrecisionExhausted {
        cap: PRECISION_CAP as u32,
    })
}

fn solve_coefficients(roots: &[RootEnclosure], values: &[BigInt], work: u64) -> Option<Vec<PowerSumTerm>> {
    let k = values.len();
    // column (i, j) holds n^j alpha_i^n for n = 1..k
    let columns: Vec<(usize, usize)> = roots
        .iter()
        .enumerate()
        .flat_map(|(i, r)| (0..r.multiplicity).map(move |j| (i, j)))
        .collect();
    debug_assert_eq!(columns.len(), k);
    let mut rows: Vec<Vec<ComplexEnclosure>> = (1..=k as u64)
        .map(|n| {
            let mut row: Vec<ComplexEnclosure> = columns
                .iter()
                .map(|&(i, j)| {
                    let nj = Interval::from_int(BigInt::from(n).pow(j as u32));
                    roots[i].root.pow(n, work).scale(&nj, work)
                })
                .collect();
            row.push(ComplexEnclosure::from_int(values[n as usize - 1].clone()));
            row
        })
        .collect();

    // interval Gaussian elimination, pivoting on the largest lower magnitude
    for col in 0..k {
        let pivot = (col..k).max_by(|&a, &b| {
            let ma = rows[a][col].norm_sqr(work).lo.clone();
            let mb = rows[b][col].norm_sqr(work).lo.clone();
            ma.cmp(&mb).then(b.cmp(&a))
        })?;
        if rows[pivot][col].norm_sqr(work).lo.is_zero() {
            return None;
        }
        rows.swap(col, pivot);
        let piv = rows[col][col].clone();
        for r in col + 1..k {
            let factor = rows[r][col].div(&piv, work)?;
            for c in col..=k {
                let sub = factor.mul(&rows[col][c], work);
                rows[r][c] = rows[r][c].sub(&sub, work);
            }
        }
    }
    let mut x = vec![ComplexEnclosure::zero(); k];
    for r in (0..k).rev() {
        let mut acc = rows[r][k].clone();
        for c in r + 1..k {
            acc = acc.sub(&rows[r][c].mul(&x[c], work), work);
        }
        x[r] = acc.div(&rows[r][r], work)?;
    }

    let mut terms: Vec<PowerSumTerm> = roots
        .iter()
        .map(|r| PowerSumTerm {
            root: r.root.clone(),
            multiplicity: r.multiplicity,
            coeffs: Vec::with_capacity(r.multiplicity),
        })
        .collect();
    for (&(i, _), c) in columns.iter().zip(x) {
        terms[i].coeffs.push(c);
    }
    Some(terms)
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub checked: u64,
    /// Largest side of any enclosure of S(n), n = 1..checked.
    pub max_width: Dyadic,
    pub widths: Vec<Dyadic>,
}

/// Checks that S(n) encloses the exact f(n) for n = 1..=limit.
pub fn verify_powersum(s: &NumericPowerSum, limit: u64) -> Result<VerifyReport> {
    if limit == 0 {
        return Err(Error::OutOfRange("verification limit must be positive".into()));
    }
    let exact = s.source_spec.terms(limit as usize);
    let mut widths = Vec::with_capacity(exact.len());
    for (n, v) in (1..=limit).zip(&exact) {
        let e = s.eval(n);
        if !e.contains_int(v) {
            return Err(Error::ContainmentFailure {
                index: n,
                expected: v.to_string(),
            });
        }
        widths.push(e.width());
    }
    let max_width = widths.iter().max().cloned().unwrap_or_else(Dyadic::zero);
    Ok(VerifyReport {
        checked: limit,
        max_width,
        widths,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroEntry {
    pub index: u64,
    pub residue: u64,
    pub kind: ClassKind,
}

/// Every n in 1..=limit with f(n) = 0, tagged with its residue class.
pub fn zero_scan(cls: &Classification, limit: u64) -> Vec<ZeroEntry> {
    cls.spec
        .terms(limit as usize)
        .iter()
        .zip(1u64..)
        .filter(|(v, _)| v.is_zero())
        .map(|(_, n)| {
            let class = cls.class_of(&BigUint::from(n));
            ZeroEntry {
                index: n,
                residue: class.residue,
                kind: class.kind,
            }
        })
        .collect()
}

/// True iff `n` is a root of the polynomial attached to a Polynomial class.
pub fn is_class_root(cls: &Classification, n: u64) -> bool {
    cls.class_of(&BigUint::from(n))
        .poly
        .as_ref()
        .is_some_and(|p| p.eval(&BigRational::from_integer(n.into())).is_zero())
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRow {
    pub residue: u64,
    /// Largest index in the class not above the limit.
    pub index: u64,
    /// ln|f(n)| / n, `None` when f(n) = 0.
    pub empirical: Option<f64>,
    /// Certified bounds on ln(max root modulus) per unit step of n.
    pub log_c_lo: f64,
    pub log_c_hi: f64,
    /// empirical >= (1 - eps) log c.
    pub meets_bound: bool,
    /// |empirical - log c| <= eps log c.
    pub within_tolerance: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    pub limit: u64,
    pub epsilon: f64,
    pub rows: Vec<GrowthRow>,
}

/// ln|v| for a nonzero integer.
pub fn ln_abs(v: &BigInt) -> f64 {
    let mag = v.magnitude();
    let bits = mag.bits();
    if bits <= 64 {
        return mag.to_f64().unwrap_or(f64::NAN).ln();
    }
    let top = (mag >> (bits - 64)).to_f64().unwrap_or(f64::NAN);
    top.ln() + (bits - 64) as f64 * std::f64::consts::LN_2
}

/// Compares ln|f(n)|/n near `limit` with the certified dominant-root exponent
/// of each Exponential class.
pub fn growth_report(cls: &Classification, limit: u64) -> Result<GrowthReport> {
    if limit < 100 {
        return Err(Error::OutOfRange(format!("growth limit {limit} (need at least 100)")));
    }
    let m = cls.modulus();
    let values = cls.minimal.spec.terms(limit as usize);
    let mut rows = Vec::new();
    for class in cls.classes.iter().filter(|c| c.kind == ClassKind::Exponential) {
        let j = class.residue;
        let index = limit - (limit + m - j) % m;
        let v = &values[index as usize - 1];
        let empirical = (!v.is_zero()).then(|| ln_abs(v) / index as f64);

        let roots = isolate_roots(&class.section.char_poly(), START_PRECISION)?;
        let prec = START_PRECISION + SOLVE_GUARD;
        let mods: Vec<Interval> = roots.iter().map(|r| r.root.abs(prec)).collect();
        let max_mod = mods
            .iter()
            .skip(1)
            .fold(mods[0].clone(), |acc, x| {
                Interval::new(Dyadic::max(&acc.lo, &x.lo), Dyadic::max(&acc.hi, &x.hi))
            });
        let (ln_lo, ln_hi) = max_mod
            .ln()
            .ok_or_else(|| Error::OutOfRange("dominant root modulus encloses zero".into()))?;
        let (log_c_lo, log_c_hi) = (ln_lo / m as f64, ln_hi / m as f64);
        let eps = GROWTH_EPSILON;
        let meets_bound = empirical.is_some_and(|e| e >= (1.0 - eps) * log_c_hi.max(0.0));
        let within_tolerance = empirical.is_some_and(|e| {
            e >= log_c_hi - eps * log_c_lo.abs() && e <= log_c_lo + eps * log_c_lo.abs()
        });
        rows.push(GrowthRow {
            residue: j,
            index,
            empirical,
            log_c_lo,
            log_c_hi,
            meets_bound,
            within_tolerance,
        });
    }
    Ok(GrowthReport {
        limit,
        epsilon: GROWTH_EPSILON,
        rows,
    })
}

impl std::fmt::Display for GrowthRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let emp = self.empirical.map_or("-inf".to_string(), |e| format!("{e:.6}"));
        write!(
            f,
            "residue {} at n={}: empirical {} vs log c in [{:.6}, {:.6}]",
            self.residue, self.index, emp, self.log_c_lo, self.log_c_hi
        )
    }
}
