//! Dense univariate polynomials over Z and Q.
//!
//! Coefficients are stored in ascending order of degree. The zero polynomial
//! is the empty coefficient list and every other polynomial has a nonzero
//! leading coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// x - c
    pub fn linear_root(c: BigInt) -> Self {
        Self::new(vec![-c, BigInt::one()])
    }

    /// c x^e
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of x^i, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> IntPoly {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// p(x^e)
    pub fn inflate(&self, e: usize) -> IntPoly {
        assert!(e >= 1);
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * e + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * e] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Content (positive gcd of the coefficients) and primitive part, with
    /// `content * primitive == self`.
    pub fn content_primitive(&self) -> Result<(BigInt, IntPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("content_primitive"));
        }
        let content = self
            .coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c));
        let prim = Self::new(self.coeffs.iter().map(|c| c / &content).collect());
        Ok((content, prim))
    }

    /// Primitive part normalized to a positive leading coefficient. Zero maps to zero.
    pub fn primitive_normalized(&self) -> IntPoly {
        match self.content_primitive() {
            Err(_) => IntPoly::zero(),
            Ok((_, p)) => {
                if p.leading().is_some_and(Signed::is_negative) {
                    -p
                } else {
                    p
                }
            }
        }
    }

    /// Pseudo-remainder: a positive-power multiple of `self` by lc(d),
    /// reduced modulo `d`, computed without leaving Z.
    pub fn pseudo_rem(&self, d: &IntPoly) -> Result<IntPoly> {
        let dd = d.degree().ok_or(Error::ZeroDivisor)?;
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let top = r.len() - 1;
            let t = r[top].clone();
            for c in r.iter_mut() {
                *c *= lc;
            }
            let shift = top - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &t * dc;
            }
            trim(&mut r);
        }
        Ok(IntPoly::new(r))
    }

    /// Exact quotient `self / d` in Z[x], or `None` when `d` does not divide
    /// `self` over Z.
    pub fn div_exact(&self, d: &IntPoly) -> Result<Option<IntPoly>> {
        let dd = d.degree().ok_or(Error::ZeroDivisor)?;
        if self.is_zero() {
            return Ok(Some(IntPoly::zero()));
        }
        let sd = self.degree().unwrap();
        if sd < dd {
            return Ok(None);
        }
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); sd - dd + 1];
        for shift in (0..=sd - dd).rev() {
            let top = &r[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (t, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return Ok(None);
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &t * dc;
            }
            q[shift] = t;
        }
        if r.iter().all(Zero::is_zero) {
            Ok(Some(IntPoly::new(q)))
        } else {
            Ok(None)
        }
    }

    pub fn divides(&self, other: &IntPoly) -> Result<bool> {
        Ok(other.div_exact(self)?.is_some())
    }

    /// Division over Q: quotient and remainder with deg(rem) < deg(d).
    pub fn div_rem(&self, d: &IntPoly) -> Result<(RatPoly, RatPoly)> {
        RatPoly::from(self).div_rem(&RatPoly::from(d))
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::from(self)
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        trim(&mut coeffs);
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigRational {
        let x = BigRational::from_integer(x.clone());
        self.eval(&x)
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn div_rem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let dd = d.degree().ok_or(Error::ZeroDivisor)?;
        let Some(sd) = self.degree().filter(|&sd| sd >= dd) else {
            return Ok((RatPoly::zero(), self.clone()));
        };
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigRational::zero(); sd - dd + 1];
        for shift in (0..=sd - dd).rev() {
            let t = &r[shift + dd] / lc;
            if t.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &t * dc;
            }
            q[shift] = t;
        }
        r.truncate(dd);
        Ok((RatPoly::new(q), RatPoly::new(r)))
    }

    /// Lagrange interpolant through `(x_i, y_i)` with distinct `x_i`; degree
    /// below the number of points.
    pub fn interpolate(points: &[(BigInt, BigInt)]) -> RatPoly {
        let mut acc = RatPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = IntPoly::one();
            let mut denom = BigInt::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = &basis * &IntPoly::linear_root(xj.clone());
                    denom *= xi - xj;
                }
            }
            acc = &acc + &basis.to_rat().scale(&BigRational::new(yi.clone(), denom));
        }
        acc
    }

    /// Scales by the lcm of denominators and returns the primitive integer
    /// polynomial with positive leading coefficient.
    pub fn to_primitive_int(&self) -> IntPoly {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
                .collect(),
        )
        .primitive_normalized()
    }

    /// `Some` iff every coefficient is an integer.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        RatPoly::new(
            p.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

macro_rules! ring_ops {
    ($ty:ident, $elem:ty) => {
        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                let n = self.coeffs.len().max(rhs.coeffs.len());
                let mut v: Vec<$elem> = Vec::with_capacity(n);
                for i in 0..n {
                    let mut c = self.coeffs.get(i).cloned().unwrap_or_else(<$elem>::zero);
                    if let Some(b) = rhs.coeffs.get(i) {
                        c += b;
                    }
                    v.push(c);
                }
                $ty::new(v)
            }
        }

        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                self + &(-rhs)
            }
        }

        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty {
                    coeffs: self.coeffs.iter().map(|c| -c).collect(),
                }
            }
        }

        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }

        impl Mul for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
                    return $ty::zero();
                }
                let mut v = vec![<$elem>::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
                for (i, a) in self.coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in rhs.coeffs.iter().enumerate() {
                        v[i + j] += a * b;
                    }
                }
                $ty::new(v)
            }
        }

        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }

        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }

        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
    };
}

ring_ops!(IntPoly, BigInt);
ring_ops!(RatPoly, BigRational);

fn write_terms<T: fmt::Display + Signed>(f: &mut fmt::Formatter<'_>, coeffs: &[T]) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let unit = mag.is_one();
        match (i, unit) {
            (0, _) => write!(f, "{mag}")?,
            (_, true) => {}
            (_, false) => write!(f, "{mag}")?,
        }
        match i {
            0 => {}
            1 => write!(f, "x")?,
            _ => write!(f, "x^{i}")?,
        }
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

/// Primitive gcd over Q, normalized to a primitive integer polynomial with
/// positive leading coefficient.
pub fn poly_gcd(p: &IntPoly, q: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroPolynomial("poly_gcd"));
    }
    let mut a = p.primitive_normalized();
    let mut b = q.primitive_normalized();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b)?.primitive_normalized();
        a = b;
        b = r;
    }
    Ok(a.primitive_normalized())
}

/// p / gcd(p, p'): the same roots, each with multiplicity one.
pub fn squarefree_part(p: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree_part"));
    }
    if p.is_constant() {
        return Ok(IntPoly::one());
    }
    let g = poly_gcd(p, &p.derivative())?;
    let (quot, _) = p.div_rem(&g)?;
    Ok(quot.to_primitive_int())
}

/// Yun's algorithm: primitive squarefree, pairwise coprime factors `s_i` with
/// `p = c * prod s_i^i`. Factors equal to 1 are omitted.
pub fn squarefree_decomposition(p: &IntPoly) -> Result<Vec<(IntPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree_decomposition"));
    }
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    // Yun over Q; b, c, d share one scalar normalization so the quotients stay exact.
    let rat_gcd = |a: &RatPoly, b: &RatPoly| -> Result<RatPoly> {
        Ok(poly_gcd(&a.to_primitive_int(), &b.to_primitive_int())?.to_rat())
    };
    let quo = |a: &RatPoly, b: &RatPoly| -> Result<RatPoly> { Ok(a.div_rem(b)?.0) };

    let f = p.to_rat();
    let df = p.derivative().to_rat();
    let g = rat_gcd(&f, &df)?;
    let mut b = quo(&f, &g)?;
    let c = quo(&df, &g)?;
    let mut d = &c - &derivative_rat(&b);
    let mut i = 1;
    while b.degree().is_some_and(|deg| deg > 0) {
        let a = rat_gcd(&b, &d)?;
        if a.degree().is_some_and(|deg| deg > 0) {
            out.push((a.to_primitive_int(), i));
        }
        b = quo(&b, &a)?;
        let c = quo(&d, &a)?;
        d = &c - &derivative_rat(&b);
        i += 1;
    }
    Ok(out)
}

fn derivative_rat(p: &RatPoly) -> RatPoly {
    RatPoly::new(
        p.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}
