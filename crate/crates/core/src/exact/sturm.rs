//! Sturm chains over the integers, real-root counting and isolation, and
//! the root-power transform.
//!
//! All root counts are of distinct real roots: chains are built on the
//! square-free part, so multiplicity never inflates a count.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::RationalInterval;
use super::matrix::IntMatrix;
use super::poly::IntPolynomial;
use crate::error::CoreError;

/// Sturm chain of the square-free part of a polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

/// Pseudo-remainder of `f` by `g` together with the sign of the implied
/// multiplier: the loop computes `lc(g)^t · f mod g` for some `t >= 0`, and
/// the second return value says whether `lc(g)^t < 0`.
fn prem_with_multiplier_sign(f: &IntPolynomial, g: &IntPolynomial) -> (IntPolynomial, bool) {
    let dg = g.degree().expect("pseudo-remainder by zero polynomial");
    let lead = g.leading_coeff();
    let lead_negative = lead.is_negative();
    let mut rem = f.clone();
    let mut flips = 0usize;
    while let Some(dr) = rem.degree() {
        if dr < dg {
            break;
        }
        let top = rem.leading_coeff();
        rem = rem.scale(&lead).sub(&g.scale(&top).shift_up(dr - dg));
        flips += 1;
    }
    (rem, lead_negative && flips % 2 == 1)
}

impl SturmChain {
    /// Builds the chain for the square-free part of `p`. Errors on the zero
    /// polynomial.
    pub fn new(p: &IntPolynomial) -> Result<Self, CoreError> {
        let q = p.square_free_part()?;
        let mut chain = vec![q.clone()];
        if q.degree().unwrap_or(0) >= 1 {
            chain.push(q.derivative());
            loop {
                let f = &chain[chain.len() - 2];
                let g = &chain[chain.len() - 1];
                if g.degree().is_none() {
                    break;
                }
                if g.degree() == Some(0) {
                    break;
                }
                let (prem, multiplier_negative) = prem_with_multiplier_sign(f, g);
                if prem.is_zero() {
                    break;
                }
                // Next element is -rem_Q(f, g) up to a positive factor:
                // negate prem, undoing a negative multiplier, then shrink by
                // the (positive) content.
                let signed = if multiplier_negative {
                    prem
                } else {
                    prem.neg()
                };
                let next = {
                    let content = signed.content();
                    let coeffs = signed.coeffs().iter().map(|c| c / &content).collect();
                    IntPolynomial::new(coeffs)
                };
                chain.push(next);
            }
        }
        Ok(SturmChain { chain })
    }

    /// The square-free polynomial the chain counts roots of.
    pub fn square_free(&self) -> &IntPolynomial {
        &self.chain[0]
    }

    /// Number of sign variations in the chain at `x`, zeros skipped.
    pub fn variations_at(&self, x: &BigRational) -> usize {
        let num = x.numer();
        let den = x.denom();
        let mut variations = 0usize;
        let mut last = 0i32;
        for p in &self.chain {
            let s = p.sign_at_rational(num, den);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                variations += 1;
            }
            last = s;
        }
        variations
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    /// Valid even when `a` or `b` is itself a root.
    pub fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        assert!(a <= b, "interval endpoints out of order");
        if a == b {
            return 0;
        }
        let va = self.variations_at(a);
        let vb = self.variations_at(b);
        va.saturating_sub(vb)
    }

    /// Sign of the square-free part at a rational point.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        self.chain[0].sign_at_rational(x.numer(), x.denom())
    }
}

/// Strict bound on the absolute value of every complex root of `p`:
/// `B = 1 + max_k |a_k| / |a_n|`. All roots satisfy `|z| < B`.
pub fn cauchy_root_bound(p: &IntPolynomial) -> Result<BigRational, CoreError> {
    let n = p.degree().ok_or(CoreError::ZeroPolynomial)?;
    let lead = p.leading_coeff().abs();
    let max_low = (0..n)
        .map(|k| p.coeff(k).abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    Ok(BigRational::one() + BigRational::new(max_low, lead))
}

/// Counts distinct real roots of `p` in the open interval `(a, b)`.
/// Errors if either endpoint is a root of `p`, so that open and closed
/// counts cannot disagree silently; callers perturb and retry.
pub fn sturm_count(
    p: &IntPolynomial,
    a: &BigRational,
    b: &BigRational,
) -> Result<usize, CoreError> {
    if a > b {
        return Err(CoreError::InvalidConfig(format!(
            "interval endpoints out of order: {a} > {b}"
        )));
    }
    let chain = SturmChain::new(p)?;
    if chain.sign_at(a) == 0 {
        return Err(CoreError::EndpointIsRoot {
            endpoint: a.to_string(),
        });
    }
    if chain.sign_at(b) == 0 {
        return Err(CoreError::EndpointIsRoot {
            endpoint: b.to_string(),
        });
    }
    Ok(chain.count_half_open(a, b))
}

/// Isolates the largest real root of `p` to within `tol`, returning a
/// closed rational interval of width `<= tol` containing it (a point
/// interval when the root is hit exactly). Errors when `p` has no real
/// roots.
pub fn isolate_largest_real_root(
    p: &IntPolynomial,
    tol: &BigRational,
) -> Result<RationalInterval, CoreError> {
    if !tol.is_positive() {
        return Err(CoreError::InvalidConfig(
            "tolerance must be positive".into(),
        ));
    }
    let chain = SturmChain::new(p)?;
    if chain.square_free().degree().unwrap_or(0) == 0 {
        return Err(CoreError::NoRealRoots);
    }
    let bound = cauchy_root_bound(p)?;
    let mut lo = -bound.clone();
    let mut hi = bound.clone();
    if chain.count_half_open(&lo, &hi) == 0 {
        return Err(CoreError::NoRealRoots);
    }
    let two = BigRational::from(BigInt::from(2));
    // Invariant: the largest real root lies in (lo, hi].
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        if chain.count_half_open(&mid, &hi) > 0 {
            lo = mid;
        } else if chain.sign_at(&mid) == 0 {
            // mid is a root and nothing lies above it: exact hit.
            return Ok(RationalInterval::point(mid));
        } else {
            hi = mid;
        }
    }
    Ok(RationalInterval::new(lo, hi))
}

/// Polynomial whose roots are the `k`-th powers of the roots of `p`,
/// with multiplicity, returned primitive with positive leading
/// coefficient. Computed exactly via the characteristic polynomial of the
/// `k`-th power of the scaled companion matrix.
pub fn power_transform(p: &IntPolynomial, k: u32) -> Result<IntPolynomial, CoreError> {
    if k == 0 {
        return Err(CoreError::ZeroPower);
    }
    let n = p.degree().ok_or(CoreError::ZeroPolynomial)?;
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let lead = p.leading_coeff();
    let companion = IntMatrix::scaled_companion(p)?;
    // Eigenvalues of companion^k are (lead·r)^k over roots r of p.
    let powered = companion.pow(u64::from(k));
    let char_poly = powered.char_poly()?;
    // Substitute x -> lead^k · x to land on roots r^k; coefficients stay
    // integral because char_poly is monic of degree n.
    let scale = lead.pow(k);
    Ok(char_poly.compose_scaled_arg(&scale).primitive_positive())
}
