//! Exact counting of distinct roots on the complex unit circle.
//!
//! The pipeline: strip `x` factors, pass to the square-free part, split off
//! roots at `±1`, take the self-reciprocal part (which owns every remaining
//! circle root), fold it through `y = x + 1/x`, and count real roots of the
//! folded polynomial in the open interval `(-2, 2)` with a Sturm chain.
//! Each such real root corresponds to exactly one conjugate pair on the
//! circle, so the arithmetic is exact end to end.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::poly::IntPolynomial;
use super::sturm::SturmChain;
use crate::error::CoreError;

/// Distinct unit-circle roots of a polynomial, split by kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircleRootCount {
    /// True when 1 is a root.
    pub root_at_one: bool,
    /// True when -1 is a root.
    pub root_at_minus_one: bool,
    /// Number of conjugate pairs strictly inside the upper/lower half
    /// circle (excludes ±1 by construction).
    pub conjugate_pairs: usize,
    /// Total distinct roots on the circle:
    /// `root_at_one + root_at_minus_one + 2 * conjugate_pairs`.
    pub total_distinct: usize,
}

/// Largest factor of `p` whose root set is closed under `z -> 1/z`:
/// the primitive positive gcd of `p` with its coefficient reversal.
/// Every root of `p` on the unit circle is a root of this factor.
pub fn self_reciprocal_part(p: &IntPolynomial) -> Result<IntPolynomial, CoreError> {
    if p.is_zero() {
        return Err(CoreError::ZeroPolynomial);
    }
    Ok(p.gcd(&p.reversal()).primitive_positive())
}

/// Writes an even-degree palindromic `q` as `x^k · q~(x + 1/x)` with
/// `k = deg(q)/2` and returns `q~`. Uses the recurrence
/// `v_0 = 2, v_1 = y, v_{j+1} = y·v_j − v_{j−1}` for `x^j + x^{−j}`.
pub fn fold_palindrome(q: &IntPolynomial) -> Result<IntPolynomial, CoreError> {
    let d = q.degree().ok_or(CoreError::ZeroPolynomial)?;
    if d % 2 != 0 || q.reversal() != *q {
        return Err(CoreError::NotPalindromic);
    }
    let k = d / 2;
    let mut folded = IntPolynomial::new(vec![q.coeff(k)]);
    if k == 0 {
        return Ok(folded);
    }
    let mut v_prev = IntPolynomial::from_i64(&[2]);
    let mut v_cur = IntPolynomial::from_i64(&[0, 1]);
    let y = IntPolynomial::from_i64(&[0, 1]);
    for j in 1..=k {
        folded = folded.add(&v_cur.scale(&q.coeff(k + j)));
        if j < k {
            let v_next = y.mul(&v_cur).sub(&v_prev);
            v_prev = v_cur;
            v_cur = v_next;
        }
    }
    Ok(folded)
}

/// Census of circle roots plus the factor that witnesses it: the
/// self-reciprocal part of the square-free part (zero roots stripped).
/// Every circle root of the input is a root of the witness; the witness
/// may also hold reciprocal off-circle pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircleCensus {
    pub counts: CircleRootCount,
    pub self_reciprocal_factor: IntPolynomial,
}

/// Counts circle roots of `p` and returns the self-reciprocal witness.
/// Multiplicity is collapsed: a repeated circle root counts once.
pub fn circle_census(p: &IntPolynomial) -> Result<CircleCensus, CoreError> {
    if p.is_zero() {
        return Err(CoreError::ZeroPolynomial);
    }
    let (no_x, _) = p.strip_x_factors();
    let mut r = no_x.square_free_part()?;

    let one = BigInt::one();
    let root_at_one = r.eval(&one).is_zero();
    if root_at_one {
        r = r.div_exact(&IntPolynomial::from_i64(&[-1, 1]));
    }
    let root_at_minus_one = r.eval(&(-&one)).is_zero();
    if root_at_minus_one {
        r = r.div_exact(&IntPolynomial::from_i64(&[1, 1]));
    }

    let mut pair_factor = IntPolynomial::one();
    let conjugate_pairs = if r.degree().unwrap_or(0) == 0 {
        0
    } else {
        let g = self_reciprocal_part(&r)?;
        if g.degree().unwrap_or(0) == 0 {
            0
        } else {
            // g is palindromic of even degree with no roots at 0 or ±1,
            // so the fold is defined and its real roots in (-2, 2) are in
            // bijection with conjugate pairs of g on the circle.
            let folded = fold_palindrome(&g)?;
            let chain = SturmChain::new(&folded)?;
            let two = num_rational::BigRational::from(BigInt::from(2));
            let pairs = chain.count_half_open(&(-two.clone()), &two);
            pair_factor = g;
            pairs
        }
    };

    // Reattach the stripped ±1 roots: they are coprime to the remainder,
    // so this is exactly the self-reciprocal part of the square-free part.
    let mut witness = pair_factor;
    if root_at_one {
        witness = witness.mul(&IntPolynomial::from_i64(&[-1, 1]));
    }
    if root_at_minus_one {
        witness = witness.mul(&IntPolynomial::from_i64(&[1, 1]));
    }

    let total_distinct =
        usize::from(root_at_one) + usize::from(root_at_minus_one) + 2 * conjugate_pairs;
    Ok(CircleCensus {
        counts: CircleRootCount {
            root_at_one,
            root_at_minus_one,
            conjugate_pairs,
            total_distinct,
        },
        self_reciprocal_factor: witness,
    })
}

/// Counts the distinct roots of `p` on the complex unit circle, exactly.
/// Multiplicity is collapsed: a repeated circle root counts once.
pub fn count_unit_circle_roots(p: &IntPolynomial) -> Result<CircleRootCount, CoreError> {
    Ok(circle_census(p)?.counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    #[test]
    fn self_reciprocal_part_examples() {
        // x^2 - x - 1 shares nothing with its reversal.
        assert_eq!(
            self_reciprocal_part(&p(&[-1, -1, 1])).unwrap(),
            IntPolynomial::one()
        );
        // (x^2+1)(x-2): the circle factor x^2+1 survives.
        let f = p(&[1, 0, 1]).mul(&p(&[-2, 1]));
        assert_eq!(self_reciprocal_part(&f).unwrap(), p(&[1, 0, 1]));
        // Anti-palindromic: reversal is -p, so the whole polynomial is
        // self-reciprocal up to sign.
        let g = p(&[-1, 5, -5, 1]);
        assert_eq!(self_reciprocal_part(&g).unwrap(), g);
    }

    #[test]
    fn fold_frozen_examples() {
        assert_eq!(fold_palindrome(&p(&[1, -3, 1])).unwrap(), p(&[-3, 1]));
        assert_eq!(fold_palindrome(&p(&[1, -4, 1])).unwrap(), p(&[-4, 1]));
        assert_eq!(
            fold_palindrome(&p(&[1, -1, -1, -1, 1])).unwrap(),
            p(&[-3, -1, 1])
        );
        assert_eq!(
            fold_palindrome(&p(&[1, -2, 0, -2, 1])).unwrap(),
            p(&[-2, -2, 1])
        );
    }

    #[test]
    fn fold_rejects_non_palindromes() {
        assert_eq!(
            fold_palindrome(&p(&[1, 2, 3])).unwrap_err(),
            CoreError::NotPalindromic
        );
        assert_eq!(
            fold_palindrome(&p(&[1, 0, 0, 1])).unwrap_err(),
            CoreError::NotPalindromic
        );
    }

    #[test]
    fn fold_evaluates_consistently() {
        // q(x) = x^k · q~(x + 1/x). At x = 3 with k = 2:
        // q(3) = 9 · q~(10/3) = homogenized eval of q~ at (10, 3).
        let q = p(&[1, -1, -1, -1, 1]);
        let folded = fold_palindrome(&q).unwrap();
        let lhs = q.eval(&BigInt::from(3));
        let n10 = BigInt::from(10);
        let n3 = BigInt::from(3);
        let rhs = folded.coeff(2) * &n10 * &n10
            + folded.coeff(1) * &n10 * &n3
            + folded.coeff(0) * &n3 * &n3;
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, BigInt::from(43));
    }

    #[test]
    fn circle_count_no_circle_roots() {
        let c = count_unit_circle_roots(&p(&[1, -3, 1])).unwrap();
        assert_eq!(c.total_distinct, 0);
        assert!(!c.root_at_one && !c.root_at_minus_one);
        let d = count_unit_circle_roots(&p(&[6, -5, 1])).unwrap(); // (x-2)(x-3)
        assert_eq!(d.total_distinct, 0);
    }

    #[test]
    fn circle_count_root_at_one_only() {
        // (x-1)(x^2-4x+1): 1 is the only circle root.
        let c = count_unit_circle_roots(&p(&[-1, 5, -5, 1])).unwrap();
        assert!(c.root_at_one);
        assert!(!c.root_at_minus_one);
        assert_eq!(c.conjugate_pairs, 0);
        assert_eq!(c.total_distinct, 1);
    }

    #[test]
    fn circle_count_conjugate_pair_quartics() {
        let zhirov = count_unit_circle_roots(&p(&[1, -1, -1, -1, 1])).unwrap();
        assert_eq!(zhirov.conjugate_pairs, 1);
        assert_eq!(zhirov.total_distinct, 2);
        assert!(!zhirov.root_at_one && !zhirov.root_at_minus_one);

        let lt = count_unit_circle_roots(&p(&[1, -2, 0, -2, 1])).unwrap();
        assert_eq!(lt.conjugate_pairs, 1);
        assert_eq!(lt.total_distinct, 2);
    }

    #[test]
    fn circle_count_cyclotomic() {
        // x^2 + x + 1: primitive cube roots of unity.
        let c = count_unit_circle_roots(&p(&[1, 1, 1])).unwrap();
        assert_eq!(c.conjugate_pairs, 1);
        assert_eq!(c.total_distinct, 2);
        // x^4 - 1: ±1 and ±i.
        let d = count_unit_circle_roots(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert!(d.root_at_one && d.root_at_minus_one);
        assert_eq!(d.conjugate_pairs, 1);
        assert_eq!(d.total_distinct, 4);
    }

    #[test]
    fn circle_count_collapses_multiplicity() {
        // (x-1)^2 (x^2+1)^2: distinct circle roots are 1, i, -i.
        let f = p(&[-1, 1])
            .mul(&p(&[-1, 1]))
            .mul(&p(&[1, 0, 1]))
            .mul(&p(&[1, 0, 1]));
        let c = count_unit_circle_roots(&f).unwrap();
        assert!(c.root_at_one);
        assert!(!c.root_at_minus_one);
        assert_eq!(c.conjugate_pairs, 1);
        assert_eq!(c.total_distinct, 3);
    }

    #[test]
    fn census_witness_factor() {
        // Palindromic input with no circle roots: the witness is the whole
        // polynomial (reciprocal pair off the circle).
        let golden = circle_census(&p(&[1, -3, 1])).unwrap();
        assert_eq!(golden.self_reciprocal_factor, p(&[1, -3, 1]));
        assert_eq!(golden.counts.total_distinct, 0);
        // (x-1)(x^2-4x+1) is its own reversal up to sign.
        let chain = circle_census(&p(&[-1, 5, -5, 1])).unwrap();
        assert_eq!(chain.self_reciprocal_factor, p(&[-1, 5, -5, 1]));
        // (x-2)(x^2+1): only the circle pair survives in the witness.
        let mixed = circle_census(&p(&[1, 0, 1]).mul(&p(&[-2, 1]))).unwrap();
        assert_eq!(mixed.self_reciprocal_factor, p(&[1, 0, 1]));
        // Multiplicity collapses and the x^5 factor is stripped before the
        // witness is formed: (x-1)^2 (x+1) x^5 -> (x-1)(x+1) = x^2 - 1.
        let f = p(&[-1, 1])
            .mul(&p(&[-1, 1]))
            .mul(&p(&[1, 1]))
            .mul(&p(&[0, 0, 0, 0, 0, 1]));
        let c = circle_census(&f).unwrap();
        assert_eq!(c.self_reciprocal_factor, p(&[-1, 0, 1]));
        assert_eq!(c.counts.total_distinct, 2);
        // Constant witness when nothing is reciprocal.
        let lone = circle_census(&p(&[-2, 1])).unwrap();
        assert_eq!(lone.self_reciprocal_factor, IntPolynomial::one());
    }

    #[test]
    fn circle_count_ignores_zero_roots() {
        // x^3 (x^2+x+1): zero is off the circle.
        let f = p(&[0, 0, 0, 1]).mul(&p(&[1, 1, 1]));
        let c = count_unit_circle_roots(&f).unwrap();
        assert_eq!(c.total_distinct, 2);
        let g = count_unit_circle_roots(&p(&[0, 0, 0, 1])).unwrap();
        assert_eq!(g.total_distinct, 0);
    }

    #[test]
    fn circle_count_interlaced_off_circle_reciprocal() {
        // x^2 - 3x + 1 is palindromic but its roots (3±sqrt5)/2 are real,
        // off the circle: the fold root 3 lies outside (-2, 2).
        let c = count_unit_circle_roots(&p(&[1, -3, 1])).unwrap();
        assert_eq!(c.total_distinct, 0);
        // Mixed product: circle pair times reciprocal off-circle pair.
        let f = p(&[1, -3, 1]).mul(&p(&[1, 1, 1]));
        let d = count_unit_circle_roots(&f).unwrap();
        assert_eq!(d.conjugate_pairs, 1);
        assert_eq!(d.total_distinct, 2);
    }
}
