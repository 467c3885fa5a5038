use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{bareiss_determinant, IntPoly};

/// Square matrix of big integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<BigInt>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n, "matrix must be square");
            for (j, &v) in r.iter().enumerate() {
                m[(i, j)] = BigInt::from(v);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| &self[(i, i)]).sum()
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn determinant(&self) -> BigInt {
        bareiss_determinant(self.rows())
    }

    fn add_diagonal(&mut self, c: &BigInt) {
        for i in 0..self.n {
            self[(i, i)] += c;
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for l in 0..n {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * &rhs[(l, j)];
                }
            }
        }
        out
    }
}

/// M^e by square-and-multiply.
pub fn mat_pow(m: &Matrix, mut e: u64) -> Matrix {
    let mut result = Matrix::identity(m.n);
    let mut base = m.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = &result * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    result
}

/// det(xI - A) by Faddeev-LeVerrier. For integer A every trace division
/// below is exact.
pub fn char_poly_faddeev(a: &Matrix) -> IntPoly {
    let n = a.n;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut aux = Matrix::zero(n);
    for i in 1..=n {
        // M_i = A M_{i-1} + c_{n-i+1} I, c_{n-i} = -tr(A M_i) / i
        let mut next = a * &aux;
        next.add_diagonal(&coeffs[n - i + 1]);
        let t = (a * &next).trace();
        let (q, r) = t.div_rem(&BigInt::from(i));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier trace not divisible");
        coeffs[n - i] = -q;
        aux = next;
    }
    IntPoly::new(coeffs)
}
