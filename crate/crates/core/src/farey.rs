//! PSL(2,Z) elements, trace classification, and LR words of hyperbolic
//! elements.
//!
//! The generators are `L = [[1,0],[1,1]]` and `R = [[1,1],[0,1]]`. The
//! nonnegative determinant-1 matrices form a free monoid on L and R, so a
//! positive hyperbolic element has a unique LR word recovered by peeling:
//! at each step exactly one of the two rows dominates the other. General
//! hyperbolic elements are first conjugated into the positive cone by a
//! continued-fraction reduction driven by the attracting fixed point,
//! compared exactly as a quadratic surd; the conjugator is reported so the
//! result can be verified by reconstruction.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::Serializer;
use serde::Serialize;

use crate::error::CoreError;

/// Trace classification of a PSL(2,Z) element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementClass {
    /// |trace| < 2: finite order.
    Elliptic,
    /// |trace| = 2: conjugate to a power of R (or the identity).
    Parabolic,
    /// |trace| > 2: two fixed points on the boundary, a stretch factor.
    Hyperbolic,
}

impl fmt::Display for ElementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementClass::Elliptic => write!(f, "elliptic"),
            ElementClass::Parabolic => write!(f, "parabolic"),
            ElementClass::Hyperbolic => write!(f, "hyperbolic"),
        }
    }
}

/// Element of PSL(2,Z): an integer matrix `[[a,b],[c,d]]` with
/// `ad − bc = 1`, stored with canonical sign (first nonzero entry of the
/// top row positive).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PSL2ZElement {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl PSL2ZElement {
    /// Builds an element from matrix entries, normalizing the sign.
    /// Errors unless the determinant is exactly 1.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self, CoreError> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(CoreError::NotDeterminantOne {
                det: det.to_string(),
            });
        }
        let flip = if a.is_zero() {
            b.is_negative()
        } else {
            a.is_negative()
        };
        if flip {
            Ok(PSL2ZElement {
                a: -a,
                b: -b,
                c: -c,
                d: -d,
            })
        } else {
            Ok(PSL2ZElement { a, b, c, d })
        }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self, CoreError> {
        Self::new(
            BigInt::from(a),
            BigInt::from(b),
            BigInt::from(c),
            BigInt::from(d),
        )
    }

    pub fn identity() -> Self {
        PSL2ZElement {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// Generator `L = [[1,0],[1,1]]`.
    pub fn l() -> Self {
        PSL2ZElement {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::one(),
            d: BigInt::one(),
        }
    }

    /// Generator `R = [[1,1],[0,1]]`.
    pub fn r() -> Self {
        PSL2ZElement {
            a: BigInt::one(),
            b: BigInt::one(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// Entries row-major, canonical sign.
    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Trace of the canonical representative. Only |trace| is an invariant
    /// of the PSL(2,Z) element.
    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn mul(&self, other: &Self) -> Self {
        PSL2ZElement::new(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
        .expect("product of determinant-1 matrices")
    }

    pub fn inverse(&self) -> Self {
        PSL2ZElement::new(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
        .expect("inverse of a determinant-1 matrix")
    }

    pub fn classify(&self) -> ElementClass {
        let t = self.trace().abs();
        let two = BigInt::from(2);
        if t < two {
            ElementClass::Elliptic
        } else if t == two {
            ElementClass::Parabolic
        } else {
            ElementClass::Hyperbolic
        }
    }

    fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }
}

impl fmt::Display for PSL2ZElement {
    /// Four integers row-major: `[[a,b],[c,d]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl Serialize for PSL2ZElement {
    /// Four decimal strings row-major, canonical sign.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(4))?;
        for e in self.entries() {
            seq.serialize_element(&e.to_string())?;
        }
        seq.end()
    }
}

/// Word in the letters L and R.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LRWord(String);

impl LRWord {
    pub fn new(word: &str) -> Result<Self, CoreError> {
        if word.is_empty() {
            return Err(CoreError::EmptyWord);
        }
        if let Some(bad) = word.chars().find(|c| *c != 'L' && *c != 'R') {
            return Err(CoreError::Parse(format!(
                "LR words use only letters L and R; got {bad:?}"
            )));
        }
        Ok(LRWord(word.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Product of the generator matrices, leftmost letter first.
    pub fn matrix(&self) -> PSL2ZElement {
        let mut acc = PSL2ZElement::identity();
        for ch in self.0.chars() {
            let gen = if ch == 'L' {
                PSL2ZElement::l()
            } else {
                PSL2ZElement::r()
            };
            acc = acc.mul(&gen);
        }
        acc
    }

    /// Lexicographically least cyclic rotation, the canonical form for
    /// comparing conjugacy classes.
    pub fn canonical_rotation(&self) -> LRWord {
        let bytes = self.0.as_bytes();
        let n = bytes.len();
        let mut best = 0usize;
        for start in 1..n {
            for k in 0..n {
                let cur = bytes[(start + k) % n];
                let b = bytes[(best + k) % n];
                if cur < b {
                    best = start;
                    break;
                }
                if cur > b {
                    break;
                }
            }
        }
        let rotated: String = (0..n).map(|k| bytes[(best + k) % n] as char).collect();
        LRWord(rotated)
    }

    /// Maximal run lengths of the word read cyclically. A word of a single
    /// letter is one run spanning the whole word.
    pub fn cyclic_run_lengths(&self) -> Vec<usize> {
        let bytes = self.0.as_bytes();
        let n = bytes.len();
        if bytes.iter().all(|&b| b == bytes[0]) {
            return vec![n];
        }
        // Start at a boundary so the first and last runs do not wrap.
        let start = (1..=n)
            .find(|&i| bytes[i % n] != bytes[i - 1])
            .expect("mixed word has a boundary")
            % n;
        let mut runs = Vec::new();
        let mut k = 0usize;
        while k < n {
            let letter = bytes[(start + k) % n];
            let mut len = 0usize;
            while k < n && bytes[(start + k) % n] == letter {
                len += 1;
                k += 1;
            }
            runs.push(len);
        }
        runs
    }

    /// True when every maximal cyclic run has even length: exactly the
    /// words realized by double twists on the four-punctured sphere.
    pub fn four_puncture_realizable(&self) -> bool {
        self.cyclic_run_lengths().iter().all(|r| r % 2 == 0)
    }
}

impl fmt::Display for LRWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for LRWord {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LRWord::new(s.trim())
    }
}

impl Serialize for LRWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

/// Sign of `A + B·√delta` for non-square `delta > 0`, exact.
fn sign_plus_sqrt(a: &BigInt, b: &BigInt, delta: &BigInt) -> i32 {
    let sa = if a.is_zero() {
        0
    } else if a.is_positive() {
        1
    } else {
        -1
    };
    let sb = if b.is_zero() {
        0
    } else if b.is_positive() {
        1
    } else {
        -1
    };
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    // Opposite signs: compare a² with b²·delta.
    let a2 = a * a;
    let b2d = b * b * delta;
    match a2.cmp(&b2d) {
        std::cmp::Ordering::Greater => sa,
        std::cmp::Ordering::Less => sb,
        // Equality would make √delta rational; delta is non-square.
        std::cmp::Ordering::Equal => unreachable!("delta is not a perfect square"),
    }
}

/// Raw 2x2 entries row-major, used during reduction where the
/// trace-positive representative must be preserved exactly (the canonical
/// PSL sign would flip it).
type Raw = [BigInt; 4];

fn raw_mul(x: &Raw, y: &Raw) -> Raw {
    [
        &x[0] * &y[0] + &x[1] * &y[2],
        &x[0] * &y[1] + &x[1] * &y[3],
        &x[2] * &y[0] + &x[3] * &y[2],
        &x[2] * &y[1] + &x[3] * &y[3],
    ]
}

/// Inverse of a determinant-1 raw matrix.
fn raw_inv(x: &Raw) -> Raw {
    [x[3].clone(), -&x[1], -&x[2], x[0].clone()]
}

/// Exact comparison of the attracting fixed point
/// `x⁺ = (a − d + √delta) / (2c)` of a trace-positive matrix with the
/// rational `num/den` (`den > 0`).
fn cmp_fixed_point_to_rational(
    h: &Raw,
    delta: &BigInt,
    num: &BigInt,
    den: &BigInt,
) -> std::cmp::Ordering {
    // x⁺ − num/den has the sign of ((a−d)·den − 2c·num + den·√delta) · sign(2c·den).
    let two_c = BigInt::from(2) * &h[2];
    let lin = (&h[0] - &h[3]) * den - &two_c * num;
    let s = sign_plus_sqrt(&lin, den, delta) * if two_c.is_negative() { -1 } else { 1 };
    match s {
        x if x > 0 => std::cmp::Ordering::Greater,
        x if x < 0 => std::cmp::Ordering::Less,
        _ => std::cmp::Ordering::Equal,
    }
}

/// Least integer k >= 1 with `x⁺ <= k` minus the strictness correction:
/// returns ⌊x⁺⌋ for x⁺ > 1 (x⁺ is irrational, so floor is the largest k
/// below it). Exact binary search on surd comparisons.
fn floor_of_fixed_point(h: &Raw, delta: &BigInt) -> BigInt {
    let one = BigInt::one();
    let mut lo = BigInt::one();
    let mut hi = BigInt::from(2);
    while cmp_fixed_point_to_rational(h, delta, &hi, &one).is_gt() {
        hi = &hi * BigInt::from(2);
    }
    while &hi - &lo > BigInt::one() {
        let mid = (&lo + &hi) / BigInt::from(2);
        if cmp_fixed_point_to_rational(h, delta, &mid, &one).is_gt() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Largest T >= 1 with `x⁺ < 1/T`, for 0 < x⁺ < 1: this is ⌊1/x⁺⌋ when
/// 1/x⁺ is irrational, found by exact binary search.
fn floor_of_inverse_fixed_point(h: &Raw, delta: &BigInt) -> BigInt {
    let one = BigInt::one();
    let mut lo = BigInt::one();
    let mut hi = BigInt::from(2);
    while cmp_fixed_point_to_rational(h, delta, &one, &hi).is_lt() {
        hi = &hi * BigInt::from(2);
    }
    while &hi - &lo > BigInt::one() {
        let mid = (&lo + &hi) / BigInt::from(2);
        if cmp_fixed_point_to_rational(h, delta, &one, &mid).is_lt() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Least k >= 1 with `x⁺ + k > 0`, i.e. ⌈−x⁺⌉ for x⁺ < 0, by exact
/// binary search.
fn ceil_of_negated_fixed_point(h: &Raw, delta: &BigInt) -> BigInt {
    let one = BigInt::one();
    let mut lo = BigInt::zero();
    let mut hi = BigInt::one();
    while cmp_fixed_point_to_rational(h, delta, &(-&hi), &one).is_lt() {
        hi = &hi * BigInt::from(2);
    }
    while &hi - &lo > BigInt::one() {
        let mid = (&lo + &hi) / BigInt::from(2);
        if cmp_fixed_point_to_rational(h, delta, &(-&mid), &one).is_gt() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Result of the LR-word computation: the word of a positive conjugate and
/// the conjugator that returns it to the input, `g = u · word · u⁻¹`.
#[derive(Debug, Clone, Serialize)]
pub struct LRDecomposition {
    pub word: LRWord,
    pub conjugator: PSL2ZElement,
}

/// LR word of a hyperbolic element. For a nonnegative matrix this is the
/// unique factorization into L and R; otherwise the word of the positive
/// conjugate found by continued-fraction reduction (well defined up to
/// rotation; use [`LRWord::canonical_rotation`] for conjugacy comparisons).
pub fn lr_word(g: &PSL2ZElement) -> Result<LRWord, CoreError> {
    Ok(lr_word_with_conjugator(g)?.word)
}

/// LR word together with the conjugator `u` satisfying
/// `g = u · matrix(word) · u⁻¹` in PSL(2,Z).
pub fn lr_word_with_conjugator(g: &PSL2ZElement) -> Result<LRDecomposition, CoreError> {
    let class = g.classify();
    if class != ElementClass::Hyperbolic {
        return Err(CoreError::NotHyperbolic {
            class: class.to_string(),
        });
    }

    // Work on raw entries of the trace-positive representative so the
    // attracting fixed point is (a − d + √delta)/(2c). Canonical PSL sign
    // must not be reapplied between steps: it can flip the trace.
    let mut h: Raw = if g.trace().is_negative() {
        [-&g.a, -&g.b, -&g.c, -&g.d]
    } else {
        [g.a.clone(), g.b.clone(), g.c.clone(), g.d.clone()]
    };
    let delta = {
        let t = &h[0] + &h[3];
        &t * &t - BigInt::from(4)
    };
    let entry_bits: usize = h.iter().map(|e| e.bits() as usize).sum();

    let mut conjugator = PSL2ZElement::identity();
    // Each pass is one full continued-fraction step (a whole power of one
    // generator), so step count is logarithmic in the entries; the cap
    // only backstops the termination argument.
    let max_steps = 64 * (entry_bits + delta.bits() as usize + 8);
    let mut steps = 0usize;
    let nonneg = |m: &Raw| m.iter().all(|e| !e.is_negative());
    while !nonneg(&h) {
        steps += 1;
        if steps > max_steps {
            return Err(CoreError::InternalInvariant(format!(
                "fixed-point reduction did not terminate for {g}"
            )));
        }
        let zero = BigInt::zero();
        let one = BigInt::one();
        // u = R^k, L^k, or R^(-k); x⁺ is irrational so the comparisons
        // are never ties.
        let u: Raw = if cmp_fixed_point_to_rational(&h, &delta, &one, &one).is_gt() {
            // x⁺ > 1: shift down by ⌊x⁺⌋, leaving x⁺ in (0,1).
            let k = floor_of_fixed_point(&h, &delta);
            [one.clone(), k, zero, one]
        } else if cmp_fixed_point_to_rational(&h, &delta, &zero, &one).is_gt() {
            // 0 < x⁺ < 1: apply L^T with T = ⌊1/x⁺⌋, sending x⁺ above 1.
            let t = floor_of_inverse_fixed_point(&h, &delta);
            [one.clone(), zero, t, one]
        } else {
            // x⁺ < 0: shift up by R^(-k) with k = ⌈-x⁺⌉, landing in (0,1).
            let k = ceil_of_negated_fixed_point(&h, &delta);
            [one.clone(), -k, zero, one]
        };
        h = raw_mul(&raw_mul(&raw_inv(&u), &h), &u);
        let u_el = PSL2ZElement::new(u[0].clone(), u[1].clone(), u[2].clone(), u[3].clone())
            .expect("generator powers have determinant 1");
        conjugator = conjugator.mul(&u_el);
    }

    let m0 = PSL2ZElement::new(h[0].clone(), h[1].clone(), h[2].clone(), h[3].clone())
        .expect("reduction preserves the determinant");

    // Peel the positive matrix: the row that dominates determines the
    // leftmost letter.
    let mut word = String::new();
    let mut m = m0;
    while !m.is_identity() {
        let row1_ge = m.a >= m.c && m.b >= m.d;
        let row2_ge = m.c >= m.a && m.d >= m.b;
        if row1_ge == row2_ge {
            return Err(CoreError::InternalInvariant(format!(
                "peeling ambiguity at {m}"
            )));
        }
        if row1_ge {
            word.push('R');
            m = PSL2ZElement::new(&m.a - &m.c, &m.b - &m.d, m.c.clone(), m.d.clone())
                .expect("peeling preserves determinant");
        } else {
            word.push('L');
            m = PSL2ZElement::new(m.a.clone(), m.b.clone(), &m.c - &m.a, &m.d - &m.b)
                .expect("peeling preserves determinant");
        }
    }

    Ok(LRDecomposition {
        word: LRWord::new(&word)?,
        conjugator,
    })
}

/// Builds the element of an LR word: the product of generators in word
/// order.
pub fn reconstruct(word: &LRWord) -> PSL2ZElement {
    word.matrix()
}

/// Surfaces on which a two-curve twist word acts through PSL(2,Z).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelSurface {
    /// Torus or once-punctured torus: each twist maps to a single letter.
    Torus,
    /// Four-punctured sphere: each twist maps to a doubled letter.
    FourPuncturedSphere,
}

/// Translates a twist word over two curves (letter 1: positive twist along
/// the first curve, letter 2: negative twist along the second) into the LR
/// word of its action: letter 1 becomes R, letter 2 becomes L, doubled on
/// the four-punctured sphere.
pub fn dehn_twist_word_to_lr(
    word: &crate::penner::TwistWord,
    surface: ModelSurface,
) -> Result<LRWord, CoreError> {
    if word.is_empty() {
        return Err(CoreError::EmptyWord);
    }
    let reps = match surface {
        ModelSurface::Torus => 1,
        ModelSurface::FourPuncturedSphere => 2,
    };
    let mut out = String::new();
    for &letter in word.letters() {
        let ch = match letter {
            1 => 'R',
            2 => 'L',
            other => {
                return Err(CoreError::IndexOutOfRange {
                    index: other,
                    max: 2,
                })
            }
        };
        for _ in 0..reps {
            out.push(ch);
        }
    }
    LRWord::new(&out)
}
