//! Residue-class classification of a recurrence sequence.
//!
//! After sectioning by the modulus from [`crate::degeneracy`], every residue
//! class j in 1..=m is one of two kinds:
//!
//! * polynomial: f(n) = q(n) for all n = j (mod m), for a rational
//!   polynomial q of degree below the minimal order (or q = 0);
//! * exponential: |f(n)| eventually exceeds c^n for some c > 1 along the class.
//!
//! A class is polynomial exactly when the minimal characteristic polynomial of
//! its section is (x - 1)^d. Sectioning leaves 1 as the only possible root of
//! unity, and a minimal integral recurrence with every root in the closed unit
//! disk has only roots of unity as roots, so any other shape has a root of
//! modulus above one.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};

use crate::algebra::{IntPoly, RatPoly};
use crate::degeneracy::{compute_modulus, UnityReport, DEFAULT_MODULUS_CAP};
use crate::error::{Error, Result};
use crate::recurrence::{minimal_recurrence, MinimalRecurrence, RecurrenceSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Polynomial,
    Exponential,
}

impl ClassKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::Polynomial => "polynomial",
            ClassKind::Exponential => "exponential",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueClassInfo {
    /// In 1..=m.
    pub residue: u64,
    pub kind: ClassKind,
    /// f(n) as a polynomial in n itself (not in the section index). Present
    /// iff the class is polynomial.
    pub poly: Option<RatPoly>,
    /// Minimal recurrence of the section f(residue + m(n - 1)).
    pub section: RecurrenceSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub spec: RecurrenceSpec,
    pub minimal: MinimalRecurrence,
    pub unity: UnityReport,
    /// One entry per residue 1..=m, in order.
    pub classes: Vec<ResidueClassInfo>,
}

impl Classification {
    pub fn modulus(&self) -> u64 {
        self.unity.modulus
    }

    /// The residues whose class is polynomial.
    pub fn polynomial_residues(&self) -> BTreeSet<u64> {
        self.classes
            .iter()
            .filter(|c| c.kind == ClassKind::Polynomial)
            .map(|c| c.residue)
            .collect()
    }

    /// n mod m, represented in 1..=m.
    pub fn residue_of(&self, n: &BigUint) -> u64 {
        residue_in_range(n, self.modulus())
    }

    pub fn class_of(&self, n: &BigUint) -> &ResidueClassInfo {
        &self.classes[self.residue_of(n) as usize - 1]
    }
}

pub(crate) fn residue_in_range(n: &BigUint, m: u64) -> u64 {
    let r = (n % BigUint::from(m)).to_u64().unwrap();
    if r == 0 {
        m
    } else {
        r
    }
}

/// Some(d) iff `p` is exactly (x - 1)^d.
pub fn is_unipotent(p: &IntPoly) -> Option<usize> {
    let d = p.degree()?;
    // (x - 1)^d = sum C(d, i) (-1)^(d - i) x^i
    let mut binom = BigInt::one();
    for i in 0..=d {
        let expected = if (d - i) % 2 == 0 { binom.clone() } else { -&binom };
        if p.coeff(i) != expected {
            return None;
        }
        binom = binom * BigInt::from(d - i) / BigInt::from(i + 1);
    }
    Some(d)
}

pub fn classify(spec: &RecurrenceSpec) -> Result<Classification> {
    classify_with_cap(spec, DEFAULT_MODULUS_CAP)
}

pub fn classify_with_cap(spec: &RecurrenceSpec, modulus_cap: u64) -> Result<Classification> {
    let k = spec.order();
    let minimal = minimal_recurrence(&spec.terms(2 * k), k)?;
    let kmin = minimal.order();
    let unity = compute_modulus(&minimal.spec.char_poly(), modulus_cap)?;
    let m = unity.modulus;

    if kmin == 0 {
        let classes = (1..=m)
            .map(|residue| ResidueClassInfo {
                residue,
                kind: ClassKind::Polynomial,
                poly: Some(RatPoly::zero()),
                section: RecurrenceSpec::zero(),
            })
            .collect();
        return Ok(Classification {
            spec: spec.clone(),
            minimal,
            unity,
            classes,
        });
    }

    // 2 kmin section terms decide the section recurrence; a polynomial class
    // of multiplicity d <= kmin consumes 3d terms for interpolation and its
    // check.
    let per_class = 3 * kmin;
    let span = usize::try_from(m)
        .ok()
        .and_then(|m| m.checked_mul(per_class))
        .ok_or_else(|| Error::ModulusCapExceeded {
            modulus: m.to_string(),
            cap: modulus_cap,
        })?;
    let all = minimal.spec.terms(span);
    let at = |j: u64, i: usize| &all[j as usize - 1 + m as usize * i];

    let mut classes = Vec::with_capacity(m as usize);
    for j in 1..=m {
        let sec_terms: Vec<BigInt> = (0..2 * kmin).map(|i| at(j, i).clone()).collect();
        let section = minimal_recurrence(&sec_terms, kmin)?.spec;
        let info = match is_unipotent(&section.char_poly()) {
            Some(0) => ResidueClassInfo {
                residue: j,
                kind: ClassKind::Polynomial,
                poly: Some(RatPoly::zero()),
                section,
            },
            Some(d) => {
                let poly = interpolate_along(m, j, d - 1, |i| at(j, i).clone())?;
                ResidueClassInfo {
                    residue: j,
                    kind: ClassKind::Polynomial,
                    poly: Some(poly),
                    section,
                }
            }
            None => ResidueClassInfo {
                residue: j,
                kind: ClassKind::Exponential,
                poly: None,
                section,
            },
        };
        classes.push(info);
    }
    Ok(Classification {
        spec: spec.clone(),
        minimal,
        unity,
        classes,
    })
}

/// Polynomial of degree <= `degree` in n through f(n) at the first
/// `degree + 1` indices n = j (mod m), checked against the next
/// `2 degree + 2` indices of the class before it is returned.
pub fn interpolate_class(spec: &RecurrenceSpec, m: u64, j: u64, degree: usize) -> Result<RatPoly> {
    if m == 0 || j == 0 || j > m {
        return Err(Error::OutOfRange(format!("residue {j} mod {m}")));
    }
    let terms = spec.section_terms(m, j, 3 * degree + 3);
    interpolate_along(m, j, degree, |i| terms[i].clone())
}

fn interpolate_along(
    m: u64,
    j: u64,
    degree: usize,
    value: impl Fn(usize) -> BigInt,
) -> Result<RatPoly> {
    let index = |i: usize| BigInt::from(j) + BigInt::from(m) * BigInt::from(i);
    let points: Vec<(BigInt, BigInt)> = (0..=degree).map(|i| (index(i), value(i))).collect();
    let poly = RatPoly::interpolate(&points);
    for i in degree + 1..=3 * degree + 2 {
        let got = poly.eval_int(&index(i));
        if !got.is_integer() || got.to_integer() != value(i) {
            return Err(Error::InterpolationMismatch {
                residue: j,
                modulus: m,
                index: index(i).to_u64().unwrap_or(u64::MAX),
            });
        }
    }
    Ok(poly)
}

/// Integer value of a class polynomial at n; a fractional value means the
/// classification is inconsistent.
pub(crate) fn eval_class_poly(poly: &RatPoly, n: &BigUint) -> Result<BigInt> {
    let v = poly.eval_int(&BigInt::from(n.clone()));
    if !v.denom().is_one() {
        return Err(Error::NonIntegerValue(v.to_string()));
    }
    Ok(v.to_integer())
}
