//! Dyadic rationals m·2^e and directed rounding to a bit budget.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Round {
    /// Toward negative infinity.
    Down,
    /// Toward positive infinity.
    Up,
}

/// Exact value `man * 2^exp`, kept with an odd mantissa (or zero with exp 0).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

fn shr_round(man: &BigInt, s: u64, dir: Round) -> BigInt {
    match dir {
        Round::Down => man >> s,
        Round::Up => -((-man) >> s),
    }
}

impl Dyadic {
    pub fn new(man: BigInt, exp: i64) -> Self {
        if man.is_zero() {
            return Dyadic::zero();
        }
        let tz = man.trailing_zeros().unwrap_or(0);
        Dyadic {
            man: man >> tz,
            exp: exp + tz as i64,
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            man: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic::from_int(1)
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Dyadic::new(v.into(), 0)
    }

    /// Exact conversion; `None` for NaN or infinities.
    pub fn from_f64(v: f64) -> Option<Self> {
        if !v.is_finite() {
            return None;
        }
        if v == 0.0 {
            return Some(Dyadic::zero());
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (man, exp) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        Some(Dyadic::new(BigInt::from(man) * sign, exp))
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            man: self.man.abs(),
            exp: self.exp,
        }
    }

    /// 2^k.
    pub fn pow2(k: i64) -> Self {
        Dyadic {
            man: BigInt::one(),
            exp: k,
        }
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic {
            man: self.man.clone(),
            exp: self.exp + k,
        }
    }

    /// Floor of log2 |self|; `None` for zero.
    pub fn log2_floor(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.man.bits() as i64 - 1 + self.exp)
        }
    }

    /// Rounds to at most `prec` significant bits in direction `dir`.
    pub fn round(&self, prec: u64, dir: Round) -> Self {
        let bits = self.man.bits();
        if bits <= prec {
            return self.clone();
        }
        let s = bits - prec;
        Dyadic::new(shr_round(&self.man, s, dir), self.exp + s as i64)
    }

    /// self / other rounded to `prec` significant bits.
    pub fn div(&self, other: &Dyadic, prec: u64, dir: Round) -> Self {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        // quotient of (man_a << s) / man_b carries at least prec + 1 bits
        let s = (prec + 2 + other.man.bits()).saturating_sub(self.man.bits());
        let num = &self.man << s;
        let den = &other.man;
        let (q, r) = num_integer::Integer::div_mod_floor(&num, den);
        let q = match dir {
            Round::Down => q,
            Round::Up if r.is_zero() => q,
            Round::Up => q + 1,
        };
        Dyadic::new(q, self.exp - other.exp - s as i64).round(prec, dir)
    }

    /// Square root of a nonnegative value, rounded to `prec` bits.
    pub fn sqrt(&self, prec: u64, dir: Round) -> Self {
        assert!(!self.is_negative(), "square root of a negative dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let mut s = (2 * prec + 4).saturating_sub(self.man.bits());
        if (self.exp - s as i64) % 2 != 0 {
            s += 1;
        }
        let scaled = &self.man << s;
        let r = scaled.sqrt();
        let r = if dir == Round::Up && &r * &r != scaled {
            r + 1
        } else {
            r
        };
        Dyadic::new(r, (self.exp - s as i64) / 2).round(prec, dir)
    }

    /// Nearest double, for display and rough estimates.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.man.bits();
        let (m, e) = if bits > 60 {
            (&self.man >> (bits - 60), self.exp + (bits - 60) as i64)
        } else {
            (self.man.clone(), self.exp)
        };
        let m = m.to_f64().unwrap_or(f64::NAN);
        m * 2f64.powi(e.clamp(-2000, 2000) as i32)
    }

    /// Decimal with `digits` fractional digits, rounded to nearest, so the
    /// printed value is within 10^-digits / 2 of the exact one.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scaled = &self.man * num_traits::pow(BigInt::from(10), digits);
        let v = if self.exp >= 0 {
            scaled << self.exp as u64
        } else {
            let s = (-self.exp) as u64;
            (scaled + (BigInt::one() << (s - 1))) >> s
        };
        let neg = v.is_negative();
        let mut body = v.abs().to_string();
        if body.len() <= digits {
            body = format!("{}{body}", "0".repeat(digits + 1 - body.len()));
        }
        let (int, frac) = body.split_at(body.len() - digits);
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    pub fn signum(&self) -> i32 {
        match self.man.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn min(a: &Dyadic, b: &Dyadic) -> Dyadic {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    pub fn max(a: &Dyadic, b: &Dyadic) -> Dyadic {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }
}

fn align(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, i64) {
    let e = a.exp.min(b.exp);
    (
        &a.man << (a.exp - e) as u64,
        &b.man << (b.exp - e) as u64,
        e,
    )
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, e) = align(self, rhs);
        Dyadic::new(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.man * &rhs.man, self.exp + rhs.exp)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            man: -&self.man,
            exp: self.exp,
        }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -&self
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = align(self, other);
        a.cmp(&b)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.man, self.exp)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}
