//! Dense square and rectangular matrices over `BigInt`.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use super::poly::IntPolynomial;
use crate::error::CoreError;

/// Row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds from row-major entries; panics if the length is not
    /// `rows * cols`.
    pub fn from_rows(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major data length mismatch");
        IntMatrix { rows, cols, data }
    }

    /// Convenience constructor from machine integers, row-major.
    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        Self::from_rows(rows, cols, data.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn require_square(&self) -> Result<usize, CoreError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(CoreError::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| &self[(i, j)] * &v[j])
                    .sum::<BigInt>()
            })
            .collect()
    }

    /// Nonnegative integer power by repeated squaring; `pow(0)` is the
    /// identity.
    pub fn pow(&self, mut e: u64) -> Self {
        let n = self.rows;
        assert!(self.is_square(), "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Self::identity(n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> BigInt {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn is_identity(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want_one = i == j;
                if want_one != self[(i, j)].is_one() || (!want_one && !self[(i, j)].is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// True when every entry is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|c| !c.is_negative())
    }

    /// Determinant by Bareiss fraction-free elimination. Exact over Z.
    pub fn det(&self) -> BigInt {
        let n = match self.require_square() {
            Ok(n) => n,
            Err(_) => panic!("determinant of a non-square matrix"),
        };
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                // Pivot search below row k.
                let swap = (k + 1..n).find(|&r| !a[r * n + k].is_zero());
                match swap {
                    Some(r) => {
                        for j in 0..n {
                            a.swap(k * n + j, r * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    // Bareiss guarantees exact divisibility by the previous pivot.
                    let (q, r) = num_integer::Integer::div_rem(&num, &prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    let _ = r;
                    a[i * n + j] = q;
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = a[k * n + k].clone();
        }
        let d = a[(n - 1) * n + (n - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Characteristic polynomial `det(xI − M)`, monic, by the
    /// Faddeev–LeVerrier recurrence. Divisions by `k` are exact.
    pub fn char_poly(&self) -> Result<IntPolynomial, CoreError> {
        let n = self.require_square()?;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut ak = self.clone();
        for k in 1..=n {
            let ck = {
                let t = ak.trace();
                // c_k = -tr(A_k)/k; exact by Newton's identities.
                let (q, r) = num_integer::Integer::div_rem(&t, &BigInt::from(k));
                debug_assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
                let _ = r;
                -q
            };
            coeffs[n - k] = ck.clone();
            if k < n {
                let mut shifted = ak;
                for i in 0..n {
                    shifted[(i, i)] += &ck;
                }
                ak = self.mul(&shifted);
            }
        }
        Ok(IntPolynomial::new(coeffs))
    }

    /// Companion matrix of `p` scaled by its leading coefficient: for
    /// `p = Σ a_k x^k` of degree `n`, returns the integer matrix `a_n · C`
    /// where `C` is the rational companion matrix of `p / a_n`. Its
    /// eigenvalues are `a_n · (roots of p)`.
    pub fn scaled_companion(p: &IntPolynomial) -> Result<Self, CoreError> {
        let n = p.degree().ok_or(CoreError::ZeroPolynomial)?;
        if n == 0 {
            return Err(CoreError::InvalidConfig(
                "companion matrix needs degree >= 1".into(),
            ));
        }
        let lead = p.leading_coeff();
        let mut m = Self::zeros(n, n);
        for i in 1..n {
            m[(i, i - 1)] = lead.clone();
        }
        for i in 0..n {
            m[(i, n - 1)] = -p.coeff(i);
        }
        Ok(m)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl Serialize for IntMatrix {
    /// Nested arrays of decimal strings, row-major.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}
