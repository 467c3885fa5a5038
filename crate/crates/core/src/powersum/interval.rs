//! Outward-rounded real intervals and complex boxes over dyadic endpoints.
//!
//! Every operation takes the working precision in bits; results are rounded
//! outward so the exact result of the same operation on any members of the
//! inputs stays inside.

use num_bigint::BigInt;

use super::dyadic::{Dyadic, Round};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        Interval { lo, hi }
    }

    pub fn point(x: Dyadic) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn zero() -> Self {
        Interval::point(Dyadic::zero())
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Interval::point(Dyadic::from_int(v))
    }

    /// Centre plus or minus `rad`.
    pub fn ball(mid: &Dyadic, rad: &Dyadic) -> Self {
        Interval::new(mid - rad, mid + rad)
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Dyadic {
        (&self.lo + &self.hi).mul_pow2(-1)
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Dyadic::zero())
    }

    pub fn is_disjoint(&self, other: &Interval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    pub fn is_subset(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Largest absolute value of a member.
    pub fn mag(&self) -> Dyadic {
        Dyadic::max(&self.lo.abs(), &self.hi.abs())
    }

    /// Smallest absolute value of a member.
    pub fn mig(&self) -> Dyadic {
        if self.contains_zero() {
            Dyadic::zero()
        } else {
            Dyadic::min(&self.lo.abs(), &self.hi.abs())
        }
    }

    fn rounded(lo: Dyadic, hi: Dyadic, prec: u64) -> Self {
        Interval::new(lo.round(prec, Round::Down), hi.round(prec, Round::Up))
    }

    pub fn add(&self, o: &Interval, prec: u64) -> Self {
        Interval::rounded(&self.lo + &o.lo, &self.hi + &o.hi, prec)
    }

    pub fn sub(&self, o: &Interval, prec: u64) -> Self {
        Interval::rounded(&self.lo - &o.hi, &self.hi - &o.lo, prec)
    }

    pub fn neg(&self) -> Self {
        Interval::new(-&self.hi, -&self.lo)
    }

    pub fn mul(&self, o: &Interval, prec: u64) -> Self {
        let products = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval::rounded(lo, hi, prec)
    }

    pub fn sqr(&self, prec: u64) -> Self {
        let (a, b) = (&self.lo * &self.lo, &self.hi * &self.hi);
        let hi = Dyadic::max(&a, &b);
        let lo = if self.contains_zero() {
            Dyadic::zero()
        } else {
            Dyadic::min(&a, &b)
        };
        Interval::rounded(lo, hi, prec)
    }

    /// `None` when the divisor contains zero.
    pub fn div(&self, o: &Interval, prec: u64) -> Option<Self> {
        if o.contains_zero() {
            return None;
        }
        let quotients = |dir| {
            [
                self.lo.div(&o.lo, prec, dir),
                self.lo.div(&o.hi, prec, dir),
                self.hi.div(&o.lo, prec, dir),
                self.hi.div(&o.hi, prec, dir),
            ]
        };
        let lo = quotients(Round::Down).into_iter().min().unwrap();
        let hi = quotients(Round::Up).into_iter().max().unwrap();
        Some(Interval::new(lo, hi))
    }

    pub fn hull(&self, o: &Interval) -> Self {
        Interval::new(Dyadic::min(&self.lo, &o.lo), Dyadic::max(&self.hi, &o.hi))
    }

    pub fn sqrt(&self, prec: u64) -> Self {
        let lo = if self.lo.is_negative() {
            Dyadic::zero()
        } else {
            self.lo.sqrt(prec, Round::Down)
        };
        Interval::new(lo, self.hi.sqrt(prec, Round::Up))
    }

    /// "mid±rad" where the printed radius covers the printed midpoint's
    /// rounding error, so the decimal range still encloses the interval.
    pub fn to_decimal(&self, digits: usize) -> String {
        let rad = self.width().mul_pow2(-1).to_f64();
        let slack = 0.5 * 10f64.powi(-(digits as i32));
        format!("{}±{}", self.mid().to_decimal(digits), fmt_upper(rad + slack))
    }

    /// Enclosure of the natural logarithm of a positive interval, computed in
    /// double precision and widened by a few ulps to absorb libm error.
    pub fn ln(&self) -> Option<(f64, f64)> {
        if self.lo.signum() <= 0 {
            return None;
        }
        let ln_bound = |x: &Dyadic, dir: Round| {
            let (m, e) = (x.mantissa(), x.exponent());
            let bits = m.bits() as i64;
            // x = (m / 2^bits) * 2^(e + bits) with the first factor in [1/2, 1)
            let frac = Dyadic::new(m.clone(), -bits).round(60, dir).to_f64();
            let v = frac.ln() + (e + bits) as f64 * std::f64::consts::LN_2;
            let slack = 8.0 * f64::EPSILON * (v.abs() + 1.0);
            match dir {
                Round::Down => v - slack,
                Round::Up => v + slack,
            }
        };
        Some((ln_bound(&self.lo, Round::Down), ln_bound(&self.hi, Round::Up)))
    }
}

/// Two significant digits, rounded away from zero with a little slack.
fn fmt_upper(v: f64) -> String {
    if v <= 0.0 {
        return "0".into();
    }
    let v = v * (1.0 + 1e-12);
    let e = v.log10().floor() as i32;
    let m = (v / 10f64.powi(e) * 10.0).ceil() / 10.0;
    let (m, e) = if m >= 10.0 { (m / 10.0, e + 1) } else { (m, e) };
    format!("{m:.1}e{e}")
}

/// Axis-aligned complex box: a real interval times an imaginary one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexEnclosure {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexEnclosure {
    pub fn new(re: Interval, im: Interval) -> Self {
        ComplexEnclosure { re, im }
    }

    pub fn point(re: Dyadic, im: Dyadic) -> Self {
        ComplexEnclosure::new(Interval::point(re), Interval::point(im))
    }

    pub fn zero() -> Self {
        ComplexEnclosure::new(Interval::zero(), Interval::zero())
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        ComplexEnclosure::new(Interval::from_int(v), Interval::zero())
    }

    pub fn real(re: Interval) -> Self {
        ComplexEnclosure::new(re, Interval::zero())
    }

    /// Square box of half-width `rad` around a point.
    pub fn ball(re: &Dyadic, im: &Dyadic, rad: &Dyadic) -> Self {
        ComplexEnclosure::new(Interval::ball(re, rad), Interval::ball(im, rad))
    }

    /// Larger of the two side lengths.
    pub fn width(&self) -> Dyadic {
        Dyadic::max(&self.re.width(), &self.im.width())
    }

    pub fn mid(&self) -> (Dyadic, Dyadic) {
        (self.re.mid(), self.im.mid())
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn contains_int(&self, v: &BigInt) -> bool {
        self.re.contains(&Dyadic::from_int(v.clone())) && self.im.contains_zero()
    }

    pub fn is_disjoint(&self, o: &ComplexEnclosure) -> bool {
        self.re.is_disjoint(&o.re) || self.im.is_disjoint(&o.im)
    }

    pub fn is_subset(&self, o: &ComplexEnclosure) -> bool {
        self.re.is_subset(&o.re) && self.im.is_subset(&o.im)
    }

    pub fn add(&self, o: &ComplexEnclosure, prec: u64) -> Self {
        ComplexEnclosure::new(self.re.add(&o.re, prec), self.im.add(&o.im, prec))
    }

    pub fn sub(&self, o: &ComplexEnclosure, prec: u64) -> Self {
        ComplexEnclosure::new(self.re.sub(&o.re, prec), self.im.sub(&o.im, prec))
    }

    pub fn neg(&self) -> Self {
        ComplexEnclosure::new(self.re.neg(), self.im.neg())
    }

    pub fn mul(&self, o: &ComplexEnclosure, prec: u64) -> Self {
        let re = self.re.mul(&o.re, prec).sub(&self.im.mul(&o.im, prec), prec);
        let im = self.re.mul(&o.im, prec).add(&self.im.mul(&o.re, prec), prec);
        ComplexEnclosure::new(re, im)
    }

    pub fn scale(&self, s: &Interval, prec: u64) -> Self {
        ComplexEnclosure::new(self.re.mul(s, prec), self.im.mul(s, prec))
    }

    /// Enclosure of |z|^2.
    pub fn norm_sqr(&self, prec: u64) -> Interval {
        self.re.sqr(prec).add(&self.im.sqr(prec), prec)
    }

    /// Enclosure of |z|.
    pub fn abs(&self, prec: u64) -> Interval {
        self.norm_sqr(prec).sqrt(prec)
    }

    /// `None` when the divisor box touches zero.
    pub fn div(&self, o: &ComplexEnclosure, prec: u64) -> Option<Self> {
        let den = o.norm_sqr(prec);
        let re = self.re.mul(&o.re, prec).add(&self.im.mul(&o.im, prec), prec);
        let im = self.im.mul(&o.re, prec).sub(&self.re.mul(&o.im, prec), prec);
        Some(ComplexEnclosure::new(re.div(&den, prec)?, im.div(&den, prec)?))
    }

    pub fn pow(&self, mut e: u64, prec: u64) -> Self {
        let mut result = ComplexEnclosure::from_int(1);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base, prec);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, prec);
            }
        }
        result
    }

    pub fn hull(&self, o: &ComplexEnclosure) -> Self {
        ComplexEnclosure::new(self.re.hull(&o.re), self.im.hull(&o.im))
    }
}

impl ComplexEnclosure {
    /// "re±w + im±w·i" with `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let im = self.im.to_decimal(digits);
        let (sign, im) = match im.strip_prefix('-') {
            Some(rest) => ("-", rest.to_string()),
            None => ("+", im),
        };
        format!("{} {sign} {im}·i", self.re.to_decimal(digits))
    }
}

impl std::fmt::Display for ComplexEnclosure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (re, im) = self.mid();
        let rad = self.width().mul_pow2(-1);
        write!(f, "{} {:+}i (+/- {:.1e})", re.to_f64(), im.to_f64(), rad.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(Dyadic::from_f64(a).unwrap(), Dyadic::from_f64(b).unwrap())
    }

    fn member(i: &Interval, t: f64) -> Dyadic {
        // exact dyadic point between the endpoints
        let w = i.width();
        let frac = Dyadic::from_f64(t).unwrap();
        &i.lo + &(&w * &frac)
    }

    #[test]
    fn division_excludes_zero_divisor() {
        assert!(iv(1.0, 2.0).div(&iv(-1.0, 1.0), 64).is_none());
        let q = iv(1.0, 1.0).div(&iv(3.0, 3.0), 64).unwrap();
        assert!(q.width() <= Dyadic::pow2(-63));
    }

    #[test]
    fn complex_product_and_quotient() {
        // (1 + 2i)(3 - i) = 5 + 5i
        let a = ComplexEnclosure::point(Dyadic::from_int(1), Dyadic::from_int(2));
        let b = ComplexEnclosure::point(Dyadic::from_int(3), Dyadic::from_int(-1));
        let p = a.mul(&b, 64);
        assert_eq!(p, ComplexEnclosure::point(Dyadic::from_int(5), Dyadic::from_int(5)));
        let q = p.div(&b, 64).unwrap();
        assert!(q.re.contains(&Dyadic::from_int(1)) && q.im.contains(&Dyadic::from_int(2)));
        // i^4 = 1
        let i = ComplexEnclosure::point(Dyadic::zero(), Dyadic::one());
        assert_eq!(i.pow(4, 32), ComplexEnclosure::from_int(1));
    }

    #[test]
    fn decimal_enclosure() {
        let x = iv(0.25, 0.75);
        assert_eq!(x.to_decimal(2), "0.50±2.6e-1");
        let z = ComplexEnclosure::new(iv(1.0, 1.0), iv(-2.0, -2.0));
        assert_eq!(z.to_decimal(1), "1.0±5.1e-2 - 2.0±5.1e-2·i");
    }

    #[test]
    fn log_encloses() {
        let (lo, hi) = Interval::from_int(9).ln().unwrap();
        assert!(lo <= 9f64.ln() && 9f64.ln() <= hi && hi - lo < 1e-13);
        assert!(Interval::zero().ln().is_none());
    }

    proptest! {
        #[test]
        fn ops_contain_member_results(
            a in -100.0f64..100.0, wa in 0.0f64..1.0,
            b in -100.0f64..100.0, wb in 0.0f64..1.0,
            ta in 0.0f64..1.0, tb in 0.0f64..1.0,
            prec in 8u64..64,
        ) {
            let (x, y) = (iv(a, a + wa), iv(b, b + wb));
            let (px, py) = (member(&x, ta), member(&y, tb));
            prop_assert!(x.add(&y, prec).contains(&(&px + &py)));
            prop_assert!(x.sub(&y, prec).contains(&(&px - &py)));
            prop_assert!(x.mul(&y, prec).contains(&(&px * &py)));
            prop_assert!(x.sqr(prec).contains(&(&px * &px)));
            if let Some(q) = x.div(&y, prec) {
                // q contains px / py  <=>  q.lo * py <= px <= q.hi * py (py > 0)
                let (l, h) = (&q.lo * &py, &q.hi * &py);
                prop_assert!(Dyadic::min(&l, &h) <= px && px <= Dyadic::max(&l, &h));
            }
        }
    }
}
