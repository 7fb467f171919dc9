//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros;
//! the zero polynomial is the empty vector. All arithmetic is exact.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::CoreError;

/// Polynomial with `BigInt` coefficients, ascending degree, trailing zeros
/// stripped. `coeffs.is_empty()` encodes the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from ascending coefficients, stripping trailing
    /// zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Convenience constructor from machine integers, ascending degree.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficient slice with trailing zeros stripped.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        Self::new(coeffs)
    }

    /// Evaluates at an integer point by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `p(a/b)` for `b > 0`, via the homogenized integer value
    /// `Σ c_k a^k b^(d−k)`, which has the same sign as `p(a/b)`.
    pub fn sign_at_rational(&self, num: &BigInt, den: &BigInt) -> i32 {
        assert!(den.is_positive(), "denominator must be positive");
        if self.is_zero() {
            return 0;
        }
        let d = self.coeffs.len() - 1;
        let mut acc = BigInt::zero();
        // a_pow and b_pow walk in opposite directions across the degree range.
        let mut a_pow = BigInt::one();
        let mut powers_a = Vec::with_capacity(d + 1);
        for _ in 0..=d {
            powers_a.push(a_pow.clone());
            a_pow *= num;
        }
        let mut b_pow = BigInt::one();
        for k in (0..=d).rev() {
            acc += &self.coeffs[k] * &powers_a[k] * &b_pow;
            b_pow *= den;
        }
        match acc.cmp(&BigInt::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// Coefficient reversal `x^d · p(1/x)`. Degree may drop if the constant
    /// term is zero.
    pub fn reversal(&self) -> Self {
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Content: gcd of all coefficients, nonnegative. Zero for the zero
    /// polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient. Zero maps to zero.
    pub fn primitive_positive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_negative() {
            g = -g;
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division; panics if `other` does not divide `self` exactly.
    /// Callers use this only where divisibility is guaranteed by theory,
    /// so a failure here is a logic error, not an input error.
    pub fn div_exact(&self, other: &Self) -> Self {
        self.try_div_exact(other)
            .expect("exact polynomial division failed")
    }

    /// Exact division returning `None` if the remainder is nonzero.
    pub fn try_div_exact(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = self.coeffs.len() - 1;
        let dv = other.coeffs.len() - 1;
        if dd < dv {
            return None;
        }
        let lead = other.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dd - dv + 1];
        for k in (0..=dd - dv).rev() {
            let top = rem[k + dv].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in other.coeffs.iter().enumerate() {
                let delta = &q * c;
                rem[k + j] -= delta;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// Pseudo-remainder: the remainder of `lc(g)^(deg f − deg g + 1) · f`
    /// divided by `g`, which stays over the integers.
    pub fn pseudo_rem(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "pseudo-remainder by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let dv = other.coeffs.len() - 1;
        if self.coeffs.len() - 1 < dv {
            return self.clone();
        }
        let lead = other.leading_coeff();
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dv {
                break;
            }
            let top = rem.leading_coeff();
            // lead·rem − top·x^(dr−dv)·other kills the leading term.
            rem = rem.scale(&lead).sub(&other.scale(&top).shift_up(dr - dv));
        }
        rem
    }

    /// Greatest common divisor over Z, primitive with positive leading
    /// coefficient, computed by a primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_positive();
        }
        if other.is_zero() {
            return self.primitive_positive();
        }
        let content_gcd = self.content().gcd(&other.content());
        let mut a = self.primitive_positive();
        let mut b = other.primitive_positive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_positive();
            a = b;
            b = r;
        }
        a.scale(&content_gcd)
    }

    /// Square-free part `p / gcd(p, p′)`, primitive with positive leading
    /// coefficient.
    pub fn square_free_part(&self) -> Result<Self, CoreError> {
        if self.is_zero() {
            return Err(CoreError::ZeroPolynomial);
        }
        let p = self.primitive_positive();
        if p.degree() == Some(0) {
            return Ok(Self::one());
        }
        let g = p.gcd(&p.derivative());
        Ok(p.div_exact(&g).primitive_positive())
    }

    /// Yun's square-free decomposition of the primitive positive part:
    /// returns `[(g_1, 1), (g_2, 2), …]` with each `g_i` square-free,
    /// pairwise coprime, and `Π g_i^i = primitive_positive(self)`. Entries
    /// with `g_i = 1` are omitted.
    pub fn square_free_decomposition(&self) -> Result<Vec<(Self, usize)>, CoreError> {
        if self.is_zero() {
            return Err(CoreError::ZeroPolynomial);
        }
        let f = self.primitive_positive();
        if f.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_exact(&a);
        let mut c = df.div_exact(&a);
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1usize;
        loop {
            a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a);
            if b.degree() == Some(0) {
                break;
            }
            c = d.div_exact(&a);
            d = c.sub(&b.derivative());
            i += 1;
        }
        Ok(out)
    }

    /// Strips all factors of `x`, returning the quotient and the number of
    /// factors removed.
    pub fn strip_x_factors(&self) -> (Self, usize) {
        if self.is_zero() {
            return (Self::zero(), 0);
        }
        let k = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial has a nonzero coefficient");
        (
            IntPolynomial {
                coeffs: self.coeffs[k..].to_vec(),
            },
            k,
        )
    }

    /// Composition `p(c·x)`.
    pub fn compose_scaled_arg(&self, c: &BigInt) -> Self {
        let mut pow = BigInt::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a * &pow;
                pow *= c;
                v
            })
            .collect();
        Self::new(coeffs)
    }

    /// Squared Euclidean norm of the coefficient vector.
    pub fn norm_squared(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Maximum absolute coefficient.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// True when `p` equals its reversal up to sign: `rev(p) = ±p`.
    pub fn is_self_reciprocal_up_to_sign(&self) -> bool {
        let rev = self.reversal();
        rev == *self || rev == self.neg()
    }
}

impl fmt::Display for IntPolynomial {
    /// Human form, descending degree: `x^4 - 2*x^3 - 2*x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            if k > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = CoreError;

    /// Parses a comma-separated ascending coefficient list: `1,-1,-1,-1,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(CoreError::Parse("empty coefficient list".into()));
        }
        let coeffs = trimmed
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<BigInt>()
                    .map_err(|e| CoreError::Parse(format!("bad coefficient {:?}: {e}", tok.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(coeffs))
    }
}

impl Serialize for IntPolynomial {
    /// Ascending decimal-string coefficient list, e.g. `["1","-3","1"]`.
    /// Strings keep arbitrary-precision values exact across JSON readers.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CoeffVisitor;

        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = IntPolynomial;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a list of decimal integer strings, ascending degree")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    let c = s
                        .parse::<BigInt>()
                        .map_err(|e| de::Error::custom(format!("bad coefficient {s:?}: {e}")))?;
                    coeffs.push(c);
                }
                Ok(IntPolynomial::new(coeffs))
            }
        }

        deserializer.deserialize_seq(CoeffVisitor)
    }
}
