//! The quadratic height form `h(v) = ½ vᵀΩv` and its exact identities.
//!
//! For a twist generator `Q_i` the height gain is a perfect square:
//! `h(Q_i v) − h(v) = ‖Q_i v − v‖²` holds exactly for every rational
//! vector, so the residual of that identity is identically zero. Heights
//! never decrease along words, with equality exactly when the word matrix
//! fixes the vector.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::ser::Serializer;
use serde::Serialize;

use crate::error::CoreError;
use crate::exact::IntMatrix;
use crate::penner::{IntersectionMatrix, TwistLetter, TwistWord};

/// Height form attached to an intersection matrix.
#[derive(Debug, Clone)]
pub struct HeightForm {
    omega: IntMatrix,
}

fn rational_as_string<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Before/after heights for one application of a word matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotonicityCheck {
    /// `h(v)`.
    #[serde(serialize_with = "rational_as_string")]
    pub h_before: BigRational,
    /// `h(Mv)`.
    #[serde(serialize_with = "rational_as_string")]
    pub h_after: BigRational,
    /// True when `Mv = v`.
    pub fixed: bool,
}

impl MonotonicityCheck {
    /// The claim the heights must satisfy: never decreasing, with equality
    /// exactly on fixed vectors.
    pub fn satisfies_monotonicity(&self) -> bool {
        if self.fixed {
            self.h_after == self.h_before
        } else {
            self.h_after > self.h_before
        }
    }
}

impl HeightForm {
    pub fn new(ix: &IntersectionMatrix) -> Self {
        HeightForm {
            omega: ix.omega().clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.omega.rows()
    }

    fn check_dim(&self, v: &[BigRational]) -> Result<(), CoreError> {
        if v.len() != self.dim() {
            return Err(CoreError::DimensionMismatch {
                left: self.dim(),
                right: v.len(),
            });
        }
        Ok(())
    }

    /// `h(v) = ½ vᵀΩv`, exact.
    pub fn height(&self, v: &[BigRational]) -> Result<BigRational, CoreError> {
        self.check_dim(v)?;
        let mut acc = BigRational::zero();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if !self.omega[(i, j)].is_zero() {
                    acc += BigRational::from(self.omega[(i, j)].clone()) * &v[i] * &v[j];
                }
            }
        }
        Ok(acc / BigRational::from(BigInt::from(2)))
    }

    /// `Q_i v`: adds `(row i of Ω) · v` to the i-th entry. `index` is
    /// 1-based.
    pub fn twist_apply(
        &self,
        index: TwistLetter,
        v: &[BigRational],
    ) -> Result<Vec<BigRational>, CoreError> {
        self.check_dim(v)?;
        if index == 0 || index > self.dim() {
            return Err(CoreError::IndexOutOfRange {
                index,
                max: self.dim(),
            });
        }
        let i = index - 1;
        let mut t = BigRational::zero();
        for (j, vj) in v.iter().enumerate() {
            if !self.omega[(i, j)].is_zero() {
                t += BigRational::from(self.omega[(i, j)].clone()) * vj;
            }
        }
        let mut out = v.to_vec();
        out[i] += t;
        Ok(out)
    }

    /// Residual of the twist identity
    /// `h(Q_i v) − h(v) − ‖Q_i v − v‖²`; exactly zero for every `v`.
    pub fn height_identity_residual(
        &self,
        index: TwistLetter,
        v: &[BigRational],
    ) -> Result<BigRational, CoreError> {
        let after_vec = self.twist_apply(index, v)?;
        let gain = self.height(&after_vec)? - self.height(v)?;
        let norm_sq: BigRational = after_vec
            .iter()
            .zip(v)
            .map(|(a, b)| {
                let d = a - b;
                &d * &d
            })
            .sum();
        Ok(gain - norm_sq)
    }

    /// Applies the word matrix to `v` (rightmost letter acts first, so the
    /// result is `word_matrix(w) · v`) and reports the height comparison.
    pub fn monotonicity_check(
        &self,
        word: &TwistWord,
        v: &[BigRational],
    ) -> Result<MonotonicityCheck, CoreError> {
        self.check_dim(v)?;
        let mut mv = v.to_vec();
        for &letter in word.letters().iter().rev() {
            mv = self.twist_apply(letter, &mv)?;
        }
        let h_before = self.height(v)?;
        let h_after = self.height(&mv)?;
        let fixed = mv == v;
        Ok(MonotonicityCheck {
            h_before,
            h_after,
            fixed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus() -> IntersectionMatrix {
        IntersectionMatrix::new(1, 1, IntMatrix::from_i64(2, 2, &[0, 1, 1, 0])).unwrap()
    }

    fn chain3() -> IntersectionMatrix {
        IntersectionMatrix::new(
            2,
            1,
            IntMatrix::from_i64(3, 3, &[0, 0, 1, 0, 0, 1, 1, 1, 0]),
        )
        .unwrap()
    }

    fn rv(vals: &[i64]) -> Vec<BigRational> {
        vals.iter()
            .map(|&x| BigRational::from(BigInt::from(x)))
            .collect()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn ratq(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn frozen_height_values() {
        let h = HeightForm::new(&torus());
        assert_eq!(h.height(&rv(&[1, 1])).unwrap(), rat(1));
        assert_eq!(h.height(&rv(&[2, 1])).unwrap(), rat(2));
        assert_eq!(h.height(&rv(&[0, 0])).unwrap(), rat(0));
        let h3 = HeightForm::new(&chain3());
        assert_eq!(h3.height(&rv(&[1, 1, 1])).unwrap(), rat(2));
        assert_eq!(h3.height(&rv(&[1, 1, 3])).unwrap(), rat(6));
        // Rational vector: h((1/2, 1/3)) = (1/2)(1/3) on the torus.
        assert_eq!(h.height(&[ratq(1, 2), ratq(1, 3)]).unwrap(), ratq(1, 6));
    }

    #[test]
    fn twist_gain_is_square_norm() {
        // Q_3 on (1,1,1) gives (1,1,3): gain 4 equals ‖(0,0,2)‖².
        let ix = chain3();
        let h = HeightForm::new(&ix);
        let v = rv(&[1, 1, 1]);
        let res = h.height_identity_residual(3, &v).unwrap();
        assert_eq!(res, rat(0));
        let after = h.twist_apply(3, &v).unwrap();
        assert_eq!(after, rv(&[1, 1, 3]));
        assert_eq!(h.height(&after).unwrap() - h.height(&v).unwrap(), rat(4));
    }

    #[test]
    fn residual_zero_for_negative_and_rational_vectors() {
        let ix = torus();
        let h = HeightForm::new(&ix);
        let cases = [
            rv(&[-3, 2]),
            rv(&[0, 0]),
            rv(&[-1, -1]),
            rv(&[7, -4]),
            vec![ratq(1, 2), ratq(-3, 7)],
            vec![ratq(99, 100), ratq(-100, 99)],
        ];
        for v in &cases {
            assert_eq!(h.height_identity_residual(1, v).unwrap(), rat(0));
            assert_eq!(h.height_identity_residual(2, v).unwrap(), rat(0));
        }
    }

    #[test]
    fn monotonicity_frozen_case() {
        let ix = torus();
        let h = HeightForm::new(&ix);
        let word: TwistWord = "1,2".parse().unwrap();
        let check = h.monotonicity_check(&word, &rv(&[1, 1])).unwrap();
        assert_eq!(check.h_before, rat(1));
        assert_eq!(check.h_after, rat(6));
        assert!(!check.fixed);
        assert!(check.satisfies_monotonicity());
    }

    #[test]
    fn stepwise_equals_matrix_application() {
        // The rightmost-first application must agree with multiplying by
        // the word matrix.
        let ix = torus();
        let h = HeightForm::new(&ix);
        let word: TwistWord = "1,2".parse().unwrap();
        let m = ix.word_matrix(&word).unwrap();
        let v = [rat(1), rat(1)];
        let mut stepped = v.to_vec();
        for &letter in word.letters().iter().rev() {
            stepped = h.twist_apply(letter, &stepped).unwrap();
        }
        // M = [[2,1],[1,1]], v = (1,1): Mv = (3,2).
        assert_eq!(stepped, rv(&[3, 2]));
        let mv: Vec<BigInt> = m.mul_vec(&[BigInt::from(1), BigInt::from(1)]);
        let mv_rat: Vec<BigRational> = mv.into_iter().map(BigRational::from).collect();
        assert_eq!(stepped, mv_rat);
    }

    #[test]
    fn fixed_vector_keeps_height() {
        // Zero vector is fixed by every word.
        let ix = chain3();
        let h = HeightForm::new(&ix);
        let word: TwistWord = "1,2,3".parse().unwrap();
        let check = h.monotonicity_check(&word, &rv(&[0, 0, 0])).unwrap();
        assert!(check.fixed);
        assert!(check.satisfies_monotonicity());
        assert_eq!(check.h_before, check.h_after);
        // (1,0) is fixed by Q_1 on the torus: row 1 of Ω dotted with (1,0)
        // vanishes.
        let ht = HeightForm::new(&torus());
        let w1: TwistWord = "1".parse().unwrap();
        let c2 = ht.monotonicity_check(&w1, &rv(&[1, 0])).unwrap();
        assert!(c2.fixed);
        assert_eq!(c2.h_before, rat(0));
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let h = HeightForm::new(&torus());
        assert!(matches!(
            h.height(&rv(&[1, 2, 3])),
            Err(CoreError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            h.twist_apply(1, &rv(&[1])),
            Err(CoreError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            h.twist_apply(5, &rv(&[1, 2])),
            Err(CoreError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn check_serializes_as_strings() {
        let ix = torus();
        let h = HeightForm::new(&ix);
        let word: TwistWord = "1,2".parse().unwrap();
        let check = h
            .monotonicity_check(&word, &[ratq(1, 2), ratq(1, 2)])
            .unwrap();
        let json = serde_json::to_value(&check).unwrap();
        assert_eq!(json["h_before"], "1/4");
        assert_eq!(json["fixed"], false);
    }
}

#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_case() -> impl Strategy<Value = (IntersectionMatrix, Vec<BigRational>, Vec<usize>)> {
        (1usize..=3, 1usize..=3)
            .prop_flat_map(|(n, m)| {
                let dim = n + m;
                (
                    Just(n),
                    Just(m),
                    proptest::collection::vec(0i64..=4, n * m),
                    proptest::collection::vec((-60i64..=60, 1i64..=9), dim),
                    proptest::collection::vec(1usize..=dim, 0..8),
                )
            })
            .prop_map(|(n, m, block, v, word)| {
                let dim = n + m;
                let mut omega = IntMatrix::zeros(dim, dim);
                for i in 0..n {
                    for j in 0..m {
                        let val = BigInt::from(block[i * m + j]);
                        omega[(i, n + j)] = val.clone();
                        omega[(n + j, i)] = val;
                    }
                }
                let vector = v
                    .into_iter()
                    .map(|(num, den)| BigRational::new(BigInt::from(num), BigInt::from(den)))
                    .collect();
                (IntersectionMatrix::new(n, m, omega).unwrap(), vector, word)
            })
    }

    proptest! {
        /// The twist identity residual vanishes for every index and every
        /// rational vector, sign unrestricted.
        #[test]
        fn residual_always_zero((ix, v, _) in arb_case()) {
            let h = HeightForm::new(&ix);
            for i in 1..=ix.dim() {
                let res = h.height_identity_residual(i, &v).unwrap();
                prop_assert!(res.is_zero());
            }
        }

        /// Heights never decrease along words; equality forces a fixed
        /// vector and vice versa.
        #[test]
        fn words_never_lower_height((ix, v, word) in arb_case()) {
            let h = HeightForm::new(&ix);
            let w = TwistWord::new(word);
            let check = h.monotonicity_check(&w, &v).unwrap();
            prop_assert!(check.satisfies_monotonicity());
        }
    }
}
