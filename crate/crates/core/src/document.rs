//! JSON documents: the recurrence input and the analysis output.
//!
//! Every exact number travels as a decimal string ("-12") or a reduced
//! rational string ("3/4"), so magnitudes are unbounded and output is
//! bit-exact.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rat_to_string;
use crate::classifier::Classification;
use crate::error::{Error, Result};
use crate::recurrence::RecurrenceSpec;

pub const FORMAT_VERSION: u32 = 1;

fn invalid(field: &str, msg: impl std::fmt::Display) -> Error {
    Error::InvalidSpec(format!("{field}: {msg}"))
}

fn is_decimal(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

/// Strict signed decimal integer: optional '-', then digits.
pub fn parse_int(field: &str, s: &str) -> Result<BigInt> {
    if !is_decimal(s) {
        return Err(invalid(field, format!("{s:?} is not a decimal integer")));
    }
    BigInt::from_str(s).map_err(|e| invalid(field, e))
}

/// Positive decimal index n >= 1 of any size.
pub fn parse_index(field: &str, s: &str) -> Result<BigUint> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(invalid(field, format!("{s:?} is not a positive decimal integer")));
    }
    let n = BigUint::from_str(s).map_err(|e| invalid(field, e))?;
    if n.is_zero() {
        return Err(invalid(field, "indices start at 1"));
    }
    Ok(n)
}

/// Rational in canonical form: "p" or "p/q" with q > 1 and gcd(p, q) = 1.
pub fn parse_rational(field: &str, s: &str) -> Result<BigRational> {
    let (num, den) = match s.split_once('/') {
        None => (parse_int(field, s)?, BigInt::one()),
        Some((p, q)) => {
            let p = parse_int(field, p)?;
            let q = parse_int(field, q)?;
            if !q.is_positive() {
                return Err(invalid(field, "denominator must be positive"));
            }
            (p, q)
        }
    };
    let r = BigRational::new(num.clone(), den.clone());
    if r.numer() != &num || r.denom() != &den || (s.contains('/') && den.is_one()) {
        return Err(invalid(field, format!("{s:?} is not in lowest terms")));
    }
    Ok(r)
}

fn ints_to_strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn parse_ints(field: &str, v: &[String]) -> Result<Vec<BigInt>> {
    v.iter()
        .enumerate()
        .map(|(i, s)| parse_int(&format!("{field}[{i}]"), s))
        .collect()
}

/// Linear recurrence input: k, coefficients a_0..a_{k-1}, values f(1)..f(k).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub k: u64,
    pub coeffs: Vec<String>,
    pub initial: Vec<String>,
}

impl SpecDocument {
    pub fn from_spec(spec: &RecurrenceSpec) -> Self {
        SpecDocument {
            k: spec.order() as u64,
            coeffs: ints_to_strings(spec.coeffs()),
            initial: ints_to_strings(spec.initial()),
        }
    }

    pub fn to_spec(&self) -> Result<RecurrenceSpec> {
        let k = usize::try_from(self.k).map_err(|_| invalid("k", "too large"))?;
        if self.coeffs.len() != k {
            return Err(invalid("coeffs", format!("expected {k} entries, found {}", self.coeffs.len())));
        }
        if self.initial.len() != k {
            return Err(invalid("initial", format!("expected {k} entries, found {}", self.initial.len())));
        }
        let coeffs = parse_ints("coeffs", &self.coeffs)?;
        if coeffs.first().is_some_and(Zero::is_zero) {
            return Err(invalid("coeffs[0]", "a_0 must be nonzero"));
        }
        let initial = parse_ints("initial", &self.initial)?;
        RecurrenceSpec::new(coeffs, initial)
    }
}

fn json_error(e: serde_json::Error) -> Error {
    // serde messages already name the missing, unknown or mistyped field
    Error::InvalidSpec(format!("malformed document: {e}"))
}

/// Parses and validates a spec document.
pub fn parse_spec(text: &str) -> Result<RecurrenceSpec> {
    let doc: SpecDocument = serde_json::from_str(text).map_err(json_error)?;
    doc.to_spec()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassRecord {
    pub residue: u64,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly_coeffs: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section_coeffs: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisDocument {
    pub format_version: u32,
    pub spec: SpecDocument,
    pub minimal_order: u64,
    pub minimal_coeffs: Vec<String>,
    pub m: u64,
    pub x: Vec<u64>,
    pub classes: Vec<ClassRecord>,
}

impl AnalysisDocument {
    pub fn from_classification(cls: &Classification) -> Self {
        let classes = cls
            .classes
            .iter()
            .map(|c| match &c.poly {
                Some(p) => ClassRecord {
                    residue: c.residue,
                    kind: c.kind.as_str().to_string(),
                    poly_coeffs: Some(if p.is_zero() {
                        vec!["0".to_string()]
                    } else {
                        p.coeffs().iter().map(rat_to_string).collect()
                    }),
                    section_order: None,
                    section_coeffs: None,
                },
                None => ClassRecord {
                    residue: c.residue,
                    kind: c.kind.as_str().to_string(),
                    poly_coeffs: None,
                    section_order: Some(c.section.order() as u64),
                    section_coeffs: Some(ints_to_strings(c.section.coeffs())),
                },
            })
            .collect();
        AnalysisDocument {
            format_version: FORMAT_VERSION,
            spec: SpecDocument::from_spec(&cls.spec),
            minimal_order: cls.minimal.order() as u64,
            minimal_coeffs: ints_to_strings(cls.minimal.spec.coeffs()),
            m: cls.modulus(),
            x: cls.polynomial_residues().into_iter().collect(),
            classes,
        }
    }

    /// Pretty JSON with a trailing newline; the canonical serialization.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("analysis document serializes");
        s.push('\n');
        s
    }

    /// Parses and checks internal consistency; numbers must be canonical so
    /// that `to_json` reproduces canonical input byte for byte.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: AnalysisDocument = serde_json::from_str(text).map_err(json_error)?;
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<()> {
        if self.format_version != FORMAT_VERSION {
            return Err(invalid("format_version", format!("unsupported version {}", self.format_version)));
        }
        let spec = self.spec.to_spec().map_err(|e| invalid("spec", e))?;
        if SpecDocument::from_spec(&spec) != self.spec {
            return Err(invalid("spec", "numbers are not in canonical form"));
        }
        if self.minimal_coeffs.len() as u64 != self.minimal_order {
            return Err(invalid("minimal_coeffs", "length differs from minimal_order"));
        }
        canonical_ints("minimal_coeffs", &self.minimal_coeffs)?;
        if self.m == 0 {
            return Err(invalid("m", "modulus must be positive"));
        }
        if self.classes.len() as u64 != self.m {
            return Err(invalid("classes", format!("expected {} records, found {}", self.m, self.classes.len())));
        }
        let mut polynomial = Vec::new();
        for (i, c) in self.classes.iter().enumerate() {
            let field = format!("classes[{i}]");
            if c.residue != i as u64 + 1 {
                return Err(invalid(&format!("{field}.residue"), "residues must run 1..m in order"));
            }
            match (c.kind.as_str(), &c.poly_coeffs, c.section_order, &c.section_coeffs) {
                ("polynomial", Some(p), None, None) => {
                    for (j, s) in p.iter().enumerate() {
                        let r = parse_rational(&format!("{field}.poly_coeffs[{j}]"), s)?;
                        if rat_to_string(&r) != *s {
                            return Err(invalid(&format!("{field}.poly_coeffs[{j}]"), format!("{s:?} is not canonical")));
                        }
                    }
                    if p.is_empty() || (p.len() > 1 && p.last().is_some_and(|s| s == "0")) {
                        return Err(invalid(&format!("{field}.poly_coeffs"), "coefficients must be nonempty with a nonzero leading entry"));
                    }
                    polynomial.push(c.residue);
                }
                ("exponential", None, Some(order), Some(coeffs)) => {
                    if coeffs.len() as u64 != order {
                        return Err(invalid(&format!("{field}.section_coeffs"), "length differs from section_order"));
                    }
                    canonical_ints(&format!("{field}.section_coeffs"), coeffs)?;
                }
                ("polynomial" | "exponential", ..) => {
                    return Err(invalid(&field, "fields do not match the class kind"));
                }
                (other, ..) => return Err(invalid(&format!("{field}.kind"), format!("unknown kind {other:?}"))),
            }
        }
        if polynomial != self.x {
            return Err(invalid("x", "does not list exactly the polynomial residues"));
        }
        Ok(())
    }
}

fn canonical_ints(field: &str, v: &[String]) -> Result<()> {
    for (i, (s, n)) in v.iter().zip(parse_ints(field, v)?).enumerate() {
        if n.to_string() != *s {
            return Err(invalid(&format!("{field}[{i}]"), format!("{s:?} is not canonical")));
        }
    }
    Ok(())
}
