//! JSON and plain-text renderings of the command reports.

use std::fmt::Write;

use serde::Serialize;

use pio_core::classifier::Classification;
use pio_core::document::FORMAT_VERSION;
use pio_core::evaluator::BenchReport;
use pio_core::powersum::{NumericPowerSum, VerifyReport, ZeroEntry};
use pio_core::recurrence::RecurrenceSpec;

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

/// Decimal digits matching a binary precision.
fn digits_for(bits: u64) -> usize {
    ((bits as f64) * std::f64::consts::LOG10_2).ceil() as usize + 1
}

pub fn analysis_text(cls: &Classification) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "minimal order {}: {}", cls.minimal.order(), cls.minimal.spec.char_poly());
    let _ = writeln!(out, "m = {}", cls.modulus());
    let x: Vec<String> = cls.polynomial_residues().iter().map(u64::to_string).collect();
    let _ = writeln!(out, "X = {{{}}}", x.join(", "));
    for c in &cls.classes {
        match &c.poly {
            Some(p) => {
                let _ = writeln!(out, "  residue {}: polynomial, q(n) = {}", c.residue, poly_in_n(p));
            }
            None => {
                let _ = writeln!(
                    out,
                    "  residue {}: exponential, section order {}, char poly {}",
                    c.residue,
                    c.section.order(),
                    c.section.char_poly()
                );
            }
        }
    }
    out
}

fn poly_in_n(p: &pio_core::algebra::RatPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let c = pio_core::algebra::rat_to_string(c);
        let var = match i {
            0 => String::new(),
            1 => "n".to_string(),
            _ => format!("n^{i}"),
        };
        terms.push(match (c.as_str(), i) {
            (_, 0) => c,
            ("1", _) => var,
            ("-1", _) => format!("-{var}"),
            _ => format!("{c}*{var}"),
        });
    }
    terms.join(" + ").replace("+ -", "- ")
}

#[derive(Serialize)]
struct BenchRowOut {
    n: String,
    residue: u64,
    kind: &'static str,
    auto_seconds: f64,
    auto_ops: String,
    simple_seconds: Option<f64>,
    simple_ops: String,
    output_bits: u64,
    agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Serialize)]
struct BenchOut {
    format_version: u32,
    rows: Vec<BenchRowOut>,
}

pub fn bench_json(report: &BenchReport) -> String {
    let rows = report
        .rows
        .iter()
        .map(|r| BenchRowOut {
            n: r.index.to_string(),
            residue: r.residue,
            kind: r.kind.as_str(),
            auto_seconds: r.auto_time.as_secs_f64(),
            auto_ops: r.auto_ops.to_string(),
            simple_seconds: r.simple_time.map(|t| t.as_secs_f64()),
            simple_ops: r.simple_ops.to_string(),
            output_bits: r.output_bits,
            agree: r.agree,
            note: r.note.clone(),
        })
        .collect();
    to_json(&BenchOut {
        format_version: FORMAT_VERSION,
        rows,
    })
}

pub fn bench_text(report: &BenchReport) -> String {
    let mut out = format!(
        "{:>16} {:>8} {:>12} {:>12} {:>12} {:>12}\n",
        "n", "residue", "kind", "auto s", "simple s", "output bits"
    );
    for r in &report.rows {
        let simple = r
            .simple_time
            .map_or("skipped".to_string(), |t| format!("{:.6}", t.as_secs_f64()));
        let _ = writeln!(
            out,
            "{:>16} {:>8} {:>12} {:>12.6} {:>12} {:>12}",
            r.index.to_string(),
            r.residue,
            r.kind.as_str(),
            r.auto_time.as_secs_f64(),
            simple,
            r.output_bits
        );
    }
    out
}

#[derive(Serialize)]
struct ZeroOut {
    n: u64,
    residue: u64,
    kind: &'static str,
}

#[derive(Serialize)]
struct ZerosOut {
    format_version: u32,
    limit: u64,
    zeros: Vec<ZeroOut>,
}

pub fn zeros_json(limit: u64, zeros: &[ZeroEntry]) -> String {
    to_json(&ZerosOut {
        format_version: FORMAT_VERSION,
        limit,
        zeros: zeros
            .iter()
            .map(|z| ZeroOut {
                n: z.index,
                residue: z.residue,
                kind: z.kind.as_str(),
            })
            .collect(),
    })
}

pub fn zeros_text(zeros: &[ZeroEntry]) -> String {
    if zeros.is_empty() {
        return "none\n".into();
    }
    let list: Vec<String> = zeros.iter().map(|z| z.index.to_string()).collect();
    format!("{}\n", list.join(", "))
}

#[derive(Serialize)]
struct TermOut {
    root: String,
    multiplicity: usize,
    coeffs: Vec<String>,
}

#[derive(Serialize)]
struct PowerSumOut {
    format_version: u32,
    precision: u64,
    terms: Vec<TermOut>,
    verified_up_to: u64,
    max_value_width: String,
}

fn terms_out(s: &NumericPowerSum) -> Vec<TermOut> {
    let digits = digits_for(s.precision);
    s.terms
        .iter()
        .map(|t| TermOut {
            root: t.root.to_decimal(digits),
            multiplicity: t.multiplicity,
            coeffs: t.coeffs.iter().map(|c| c.to_decimal(digits)).collect(),
        })
        .collect()
}

pub fn powersum_json(s: &NumericPowerSum, check: &VerifyReport) -> String {
    to_json(&PowerSumOut {
        format_version: FORMAT_VERSION,
        precision: s.precision,
        terms: terms_out(s),
        verified_up_to: check.checked,
        max_value_width: format!("{:e}", check.max_width.to_f64()),
    })
}

pub fn powersum_text(s: &NumericPowerSum, check: &VerifyReport) -> String {
    let mut out = String::new();
    if s.terms.is_empty() {
        out.push_str("empty power sum (zero sequence)\n");
    }
    for t in terms_out(s) {
        let _ = writeln!(out, "root {} (multiplicity {})", t.root, t.multiplicity);
        for (j, c) in t.coeffs.iter().enumerate() {
            let _ = writeln!(out, "  n^{j}: {c}");
        }
    }
    let _ = writeln!(out, "verified f(1..{}) enclosed", check.checked);
    out
}

#[derive(Serialize)]
struct SectionOut {
    residue: u64,
    order: usize,
    coeffs: Vec<String>,
    initial: Vec<String>,
    char_poly: String,
}

#[derive(Serialize)]
struct SectionsOut {
    format_version: u32,
    m: u64,
    sections: Vec<SectionOut>,
}

fn sections_out(sections: &[RecurrenceSpec]) -> Vec<SectionOut> {
    sections
        .iter()
        .zip(1u64..)
        .map(|(s, j)| SectionOut {
            residue: j,
            order: s.order(),
            coeffs: s.coeffs().iter().map(ToString::to_string).collect(),
            initial: s.initial().iter().map(ToString::to_string).collect(),
            char_poly: s.char_poly().to_string(),
        })
        .collect()
}

pub fn sections_json(m: u64, sections: &[RecurrenceSpec]) -> String {
    to_json(&SectionsOut {
        format_version: FORMAT_VERSION,
        m,
        sections: sections_out(sections),
    })
}

pub fn sections_text(m: u64, sections: &[RecurrenceSpec]) -> String {
    let mut out = format!("m = {m}\n");
    for s in sections_out(sections) {
        let _ = writeln!(out, "  residue {}: order {}, char poly {}", s.residue, s.order, s.char_poly);
    }
    out
}
