//! Certified isolation of all complex roots of an integer polynomial.
//!
//! Each squarefree factor g of degree d is approximated by Aberth iteration
//! at a working precision, then certified exactly. For distinct points z_i let
//!
//!   W_i = g(z_i) / (lc(g) * prod_{j != i} (z_i - z_j)).
//!
//! Lagrange interpolation at the z_i gives g(x)/lc = prod (x - z_j) +
//! sum_i W_i prod_{j != i} (x - z_j), so the roots of g are the eigenvalues of
//! diag(z) - W 1^T. Gerschgorin's theorem on that matrix puts every root in
//! the union of the discs |x - z_i| <= d |W_i|, and a connected union of r
//! discs holds exactly r roots. Pairwise disjoint boxes around those discs
//! therefore hold one root each.

use num_bigint::BigInt;
use num_traits::Zero;

use super::dyadic::{Dyadic, Round};
use super::interval::ComplexEnclosure;
use crate::algebra::{squarefree_decomposition, IntPoly};
use crate::error::{Error, Result};

pub const START_PRECISION: u64 = 64;
pub const PRECISION_CAP: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootEnclosure {
    pub root: ComplexEnclosure,
    pub multiplicity: usize,
}

/// Complex point with rounded arithmetic, used only for the approximation.
#[derive(Debug, Clone, PartialEq)]
struct Cx {
    re: Dyadic,
    im: Dyadic,
}

impl Cx {
    fn zero() -> Self {
        Cx {
            re: Dyadic::zero(),
            im: Dyadic::zero(),
        }
    }

    fn real(v: Dyadic) -> Self {
        Cx {
            re: v,
            im: Dyadic::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn add(&self, o: &Cx) -> Cx {
        Cx {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    fn sub(&self, o: &Cx) -> Cx {
        Cx {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    /// Exact product.
    fn mul(&self, o: &Cx) -> Cx {
        Cx {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }

    fn round(&self, prec: u64) -> Cx {
        Cx {
            re: self.re.round(prec, Round::Down),
            im: self.im.round(prec, Round::Down),
        }
    }

    fn norm_sqr(&self) -> Dyadic {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    fn div(&self, o: &Cx, prec: u64) -> Option<Cx> {
        let den = o.norm_sqr();
        if den.is_zero() {
            return None;
        }
        let conj = Cx {
            re: o.re.clone(),
            im: -&o.im,
        };
        let num = self.mul(&conj);
        Some(Cx {
            re: num.re.div(&den, prec, Round::Down),
            im: num.im.div(&den, prec, Round::Down),
        })
    }

    /// Cheap magnitude estimate: max(|re|, |im|).
    fn size_log2(&self) -> Option<i64> {
        match (self.re.log2_floor(), self.im.log2_floor()) {
            (None, None) => None,
            (a, b) => Some(a.unwrap_or(i64::MIN).max(b.unwrap_or(i64::MIN))),
        }
    }
}

/// Encloses every complex root of `q` with its multiplicity. Enclosures are
/// pairwise disjoint and at most 2^-prec wide; working precision starts at
/// 64 bits and doubles up to 4096 before giving up.
pub fn isolate_roots(q: &IntPoly, prec: u64) -> Result<Vec<RootEnclosure>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial("isolate_roots"));
    }
    if q.coeff(0).is_zero() {
        return Err(Error::InvalidSpec("isolate_roots needs q(0) != 0".into()));
    }
    let factors = squarefree_decomposition(q)?;
    let mut work = START_PRECISION.max(prec);
    while work <= PRECISION_CAP {
        if let Some(roots) = try_isolate(&factors, prec, work) {
            return Ok(roots);
        }
        work *= 2;
    }
    Err(Error::PrecisionExhausted {
        cap: PRECISION_CAP as u32,
    })
}

fn try_isolate(factors: &[(IntPoly, usize)], prec: u64, work: u64) -> Option<Vec<RootEnclosure>> {
    let max_width = Dyadic::pow2(-(prec as i64));
    let mut out: Vec<RootEnclosure> = Vec::new();
    for (g, mult) in factors {
        let guard = root_bound_log2(g) + 2 * g.degree().unwrap_or(0) as u64 + 16;
        let approx = aberth(g, work + guard);
        for b in certify(g, &approx)? {
            if b.width() > max_width {
                return None;
            }
            out.push(RootEnclosure {
                root: b,
                multiplicity: *mult,
            });
        }
    }
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            if !out[i].root.is_disjoint(&out[j].root) {
                return None;
            }
        }
    }
    out.sort_by(|a, b| {
        let (ar, ai) = a.root.mid();
        let (br, bi) = b.root.mid();
        ar.cmp(&br).then(ai.cmp(&bi))
    });
    Some(out)
}

/// Rough log2 of the Cauchy root bound.
fn root_bound_log2(g: &IntPoly) -> u64 {
    let lead_bits = g.leading().map_or(0, |c| c.bits());
    let max_bits = g.coeffs().iter().map(|c| c.bits()).max().unwrap_or(0);
    max_bits.saturating_sub(lead_bits) + 2
}

fn horner(coeffs: &[Dyadic], z: &Cx, prec: Option<u64>) -> Cx {
    let mut acc = Cx::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(z).add(&Cx::real(c.clone()));
        if let Some(p) = prec {
            acc = acc.round(p);
        }
    }
    acc
}

fn aberth(g: &IntPoly, work: u64) -> Vec<Cx> {
    let d = g.degree().unwrap_or(0);
    let coeffs: Vec<Dyadic> = g.coeffs().iter().map(|c| Dyadic::from_int(c.clone())).collect();
    if d == 1 {
        let root = (-&coeffs[0]).div(&coeffs[1], work, Round::Down);
        return vec![Cx::real(root)];
    }
    let dcoeffs: Vec<Dyadic> = g
        .derivative()
        .coeffs()
        .iter()
        .map(|c| Dyadic::from_int(c.clone()))
        .collect();

    // starting points on a circle with the geometric-mean root modulus
    let r0 = {
        let ratio = coeffs[0].abs().to_f64().ln() - coeffs[d].abs().to_f64().ln();
        let r = (ratio / d as f64).exp();
        if r.is_finite() && r > 0.0 {
            r
        } else {
            1.0
        }
    };
    let mut z: Vec<Cx> = (0..d)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / d as f64 + 0.4;
            Cx {
                re: Dyadic::from_f64(r0 * t.cos()).unwrap_or_else(Dyadic::one),
                im: Dyadic::from_f64(r0 * t.sin()).unwrap_or_else(Dyadic::zero),
            }
        })
        .collect();

    let tol_bits = (work / 2) as i64;
    let mut settled_rounds = 0;
    for _ in 0..(200 + 4 * work) {
        let mut worst = i64::MIN;
        for i in 0..d {
            let p = horner(&coeffs, &z[i], Some(work));
            if p.is_zero() {
                continue;
            }
            let dp = horner(&dcoeffs, &z[i], Some(work));
            let Some(newton) = p.div(&dp, work) else {
                z[i] = z[i].add(&Cx::real(Dyadic::pow2(-(tol_bits))));
                worst = i64::MAX;
                continue;
            };
            let mut s = Cx::zero();
            let mut clash = false;
            for j in 0..d {
                if j == i {
                    continue;
                }
                match Cx::real(Dyadic::one()).div(&z[i].sub(&z[j]), work) {
                    Some(inv) => s = s.add(&inv).round(work),
                    None => clash = true,
                }
            }
            if clash {
                z[i] = z[i].add(&Cx::real(Dyadic::pow2(-(tol_bits)))).round(work);
                worst = i64::MAX;
                continue;
            }
            let denom = Cx::real(Dyadic::one()).sub(&newton.mul(&s)).round(work);
            let step = newton.div(&denom, work).unwrap_or(newton);
            z[i] = z[i].sub(&step).round(work);
            if let Some(step_size) = step.size_log2() {
                let scale = z[i].size_log2().unwrap_or(0).max(0);
                worst = worst.max(step_size - scale);
            }
        }
        if worst < -tol_bits {
            settled_rounds += 1;
            if settled_rounds >= 3 {
                break;
            }
        }
    }
    z
}

/// Exact inclusion test. `None` if two approximations coincide.
fn certify(g: &IntPoly, z: &[Cx]) -> Option<Vec<ComplexEnclosure>> {
    let d = z.len();
    let coeffs: Vec<Dyadic> = g.coeffs().iter().map(|c| Dyadic::from_int(c.clone())).collect();
    let lead = Cx::real(Dyadic::from_int(g.leading()?.clone()));
    let mut boxes = Vec::with_capacity(d);
    for i in 0..d {
        let p = horner(&coeffs, &z[i], None);
        let mut den = lead.clone();
        for j in 0..d {
            if j != i {
                den = den.mul(&z[i].sub(&z[j]));
            }
        }
        let den_sq = den.norm_sqr();
        if den_sq.is_zero() {
            return None;
        }
        // |W_i| <= sqrt(|p|^2 / |den|^2), all rounded up
        let w_sq = p.norm_sqr().div(&den_sq, 64, Round::Up);
        let rad = (&Dyadic::from_int(BigInt::from(d)) * &w_sq.sqrt(64, Round::Up)).round(64, Round::Up);
        boxes.push(ComplexEnclosure::ball(&z[i].re, &z[i].im, &rad));
    }
    Some(boxes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntPoly;
    use proptest::prelude::*;

    fn roots(c: &[i64], prec: u64) -> Vec<RootEnclosure> {
        isolate_roots(&IntPoly::from_i64s(c), prec).unwrap()
    }

    fn holds_real(b: &ComplexEnclosure, v: i64) -> bool {
        b.contains_int(&BigInt::from(v))
    }

    #[test]
    fn difference_of_squares() {
        let r = roots(&[-9, 0, 1], 64);
        assert_eq!(r.len(), 2);
        assert!(holds_real(&r[0].root, -3) && holds_real(&r[1].root, 3));
        assert!(r.iter().all(|e| e.multiplicity == 1));
    }

    #[test]
    fn fifth_power() {
        // (x - 1)^5
        let r = roots(&[-1, 5, -10, 10, -5, 1], 64);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].multiplicity, 5);
        assert!(holds_real(&r[0].root, 1));
    }

    #[test]
    fn golden_ratio() {
        let r = roots(&[-1, -1, 1], 64);
        assert_eq!(r.len(), 2);
        // quadratic formula oracle: (1 +- sqrt 5)/2, enclosed exactly via sqrt(5) brackets
        let s_lo = Dyadic::from_int(5).sqrt(200, Round::Down);
        let s_hi = Dyadic::from_int(5).sqrt(200, Round::Up);
        let one = Dyadic::one();
        let phi = ((&one + &s_lo).mul_pow2(-1), (&one + &s_hi).mul_pow2(-1));
        let psi = ((&one - &s_hi).mul_pow2(-1), (&one - &s_lo).mul_pow2(-1));
        let within = |b: &ComplexEnclosure, (lo, hi): (Dyadic, Dyadic)| {
            b.im.contains_zero() && b.re.lo <= hi && lo <= b.re.hi
        };
        assert!(within(&r[0].root, psi));
        assert!(within(&r[1].root, phi));
        assert!(r.iter().all(|e| e.root.width() <= Dyadic::pow2(-64)));
        assert!((r[1].root.mid().0.to_f64() - 1.618_033_988_749_895).abs() < 1e-15);
    }

    #[test]
    fn gaussian_integers_and_unit_roots() {
        // x^2 + 1
        let r = roots(&[1, 0, 1], 64);
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|e| e.root.re.contains_zero()));
        // x^6 - 1 has six distinct roots on the unit circle
        let r = roots(&[-1, 0, 0, 0, 0, 0, 1], 100);
        assert_eq!(r.len(), 6);
        for e in &r {
            assert!(e.root.norm_sqr(200).contains(&Dyadic::one()));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(isolate_roots(&IntPoly::zero(), 64).is_err());
        assert!(isolate_roots(&IntPoly::from_i64s(&[0, 1]), 64).is_err());
        assert!(isolate_roots(&IntPoly::from_i64s(&[3]), 64).unwrap().is_empty());
        assert!(matches!(
            isolate_roots(&IntPoly::from_i64s(&[-1, 1]), 5000),
            Err(Error::PrecisionExhausted { .. })
        ));
    }

    #[test]
    fn close_roots_need_more_precision() {
        // (x - 1)(2^40 x - 2^40 - 1): roots 2^-40 apart
        let big = 1i64 << 40;
        let p = &IntPoly::from_i64s(&[-1, 1]) * &IntPoly::from_i64s(&[-big - 1, big]);
        let r = isolate_roots(&p, 64).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r[0].root.is_disjoint(&r[1].root));
    }

    #[test]
    fn doubling_precision_nests() {
        let p = IntPoly::from_i64s(&[7, -3, 0, 2, 1]);
        let r64 = isolate_roots(&p, 64).unwrap();
        let r128 = isolate_roots(&p, 128).unwrap();
        assert_eq!(r64.len(), r128.len());
        for (a, b) in r64.iter().zip(&r128) {
            // both hold the same root, so they intersect
            assert!(!a.root.is_disjoint(&b.root));
            assert!(b.root.width() <= Dyadic::pow2(-128));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn counts_and_vieta(coeffs in prop::collection::vec(-9i64..=9, 1..=6), lead in 1i64..=3, c0 in 1i64..=9) {
            let mut c = coeffs;
            c[0] = c0;
            c.push(lead);
            let p = IntPoly::from_i64s(&c);
            let r = isolate_roots(&p, 64).unwrap();
            let total: usize = r.iter().map(|e| e.multiplicity).sum();
            prop_assert_eq!(total, p.degree().unwrap());
            // product of roots with multiplicity encloses (-1)^deg c0 / lead
            let mut prod = ComplexEnclosure::from_int(1);
            for e in &r {
                prod = prod.mul(&e.root.pow(e.multiplicity as u64, 128), 128);
            }
            let target = prod.scale(&super::super::interval::Interval::from_int(lead), 128);
            let sign = if p.degree().unwrap() % 2 == 0 { c0 } else { -c0 };
            prop_assert!(target.contains_int(&BigInt::from(sign)));
        }
    }
}
