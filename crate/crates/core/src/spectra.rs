//! Spectral certificates and the coronal classifier.
//!
//! A unit-circle certificate states, with exact arithmetic, that a matrix
//! has no eigenvalue of absolute value 1 other than possibly 1 itself. A
//! coronal verdict classifies a stretch-factor polynomial by whether the
//! Galois conjugates of its largest real root include a point on the unit
//! circle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::CoreError;
use crate::exact::cauchy_root_bound;
use crate::exact::{
    circle_census, count_unit_circle_roots, factor_over_integers, isolate_largest_real_root,
    power_transform, CircleRootCount, IntMatrix, IntPolynomial, RationalInterval, SturmChain,
};
use crate::penner::{IntersectionMatrix, TwistWord};

/// Fractional digits used when rendering an exact interval midpoint as a
/// decimal string in reports.
pub const REPORT_DECIMAL_DIGITS: u32 = 12;

/// Default width for isolating intervals of largest real roots.
pub fn default_root_tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64).pow(12))
}

/// Exact census of a matrix's eigenvalues on the unit circle. All counts
/// are of distinct eigenvalues (multiplicity collapsed to the square-free
/// part), so the two root indicators are 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitCircleCertificate {
    /// Characteristic polynomial of the certified matrix.
    pub char_poly: IntPolynomial,
    /// Self-reciprocal part of the square-free part of `char_poly` (zero
    /// roots stripped): every circle eigenvalue is a root of this factor.
    pub self_reciprocal_factor: IntPolynomial,
    /// 1 when 1 is an eigenvalue.
    pub roots_at_one: usize,
    /// 1 when -1 is an eigenvalue.
    pub roots_at_minus_one: usize,
    /// Conjugate pairs strictly off the real axis on the circle.
    pub conjugate_pairs_on_circle: usize,
    /// `roots_at_one + roots_at_minus_one + 2 * conjugate_pairs_on_circle`.
    pub total_on_circle: usize,
    /// True when the only eigenvalue on the circle (if any) is 1.
    pub no_circle_eigenvalues_except_one: bool,
}

/// Certifies the unit-circle eigenvalue census of a square integer matrix.
/// For twist-word products the expected outcome is `roots_at_minus_one = 0`
/// and `conjugate_pairs_on_circle = 0`; the certificate reports whatever is
/// true of the matrix, so it doubles as a refutation detector.
pub fn certify_no_unit_circle_except_one(
    matrix: &IntMatrix,
) -> Result<UnitCircleCertificate, CoreError> {
    let char_poly = matrix.char_poly()?;
    let census = circle_census(&char_poly)?;
    let counts = census.counts;
    let no_circle_eigenvalues_except_one = !counts.root_at_minus_one && counts.conjugate_pairs == 0;
    Ok(UnitCircleCertificate {
        char_poly,
        self_reciprocal_factor: census.self_reciprocal_factor,
        roots_at_one: usize::from(counts.root_at_one),
        roots_at_minus_one: usize::from(counts.root_at_minus_one),
        conjugate_pairs_on_circle: counts.conjugate_pairs,
        total_on_circle: counts.total_distinct,
        no_circle_eigenvalues_except_one,
    })
}

/// Full spectral report for the matrix of a twist word.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralReport {
    /// Dimension of the analyzed matrix (number of curves).
    pub matrix_dim: usize,
    /// The word that was analyzed.
    pub word: TwistWord,
    /// True when the word uses every curve index.
    pub admissible: bool,
    /// Product of the twist generators over the word.
    pub matrix: IntMatrix,
    /// Characteristic polynomial of the product.
    pub char_poly: IntPolynomial,
    /// Eigenvalue census on the unit circle.
    pub certificate: UnitCircleCertificate,
    /// Isolating interval for the Perron–Frobenius eigenvalue (the largest
    /// real eigenvalue, which exists for every twist product).
    pub pf_interval: RationalInterval,
    /// Truncated decimal rendering of the interval midpoint. Display only;
    /// assertions should use `pf_interval`.
    pub pf_float: String,
    /// True when the PF eigenvalue strictly exceeds 1.
    pub expanding: bool,
}

/// Analyzes the product matrix of `word` over `ix`. The interval width for
/// the PF eigenvalue is at most `tol`.
pub fn spectral_report(
    ix: &IntersectionMatrix,
    word: &TwistWord,
    tol: &BigRational,
) -> Result<SpectralReport, CoreError> {
    if word.is_empty() {
        return Err(CoreError::EmptyWord);
    }
    let matrix = ix.word_matrix(word)?;
    let certificate = certify_no_unit_circle_except_one(&matrix)?;

    // Twist products are nonnegative with positive diagonal, so the
    // spectral radius is a real eigenvalue >= 1.
    let pf_interval = isolate_largest_real_root(&certificate.char_poly, tol)?;
    let chain = SturmChain::new(&certificate.char_poly)?;
    let bound = cauchy_root_bound(&certificate.char_poly)?;
    let one = BigRational::one();
    let expanding = bound > one && chain.count_half_open(&one, &bound) > 0;
    if pf_interval.hi() < &one {
        return Err(CoreError::InternalInvariant(format!(
            "twist product has spectral radius below 1: word {word}"
        )));
    }
    let pf_float = pf_interval.midpoint_decimal(REPORT_DECIMAL_DIGITS);
    Ok(SpectralReport {
        matrix_dim: matrix.rows(),
        word: word.clone(),
        admissible: word.is_admissible(ix.dim()),
        matrix,
        char_poly: certificate.char_poly.clone(),
        certificate,
        pf_interval,
        pf_float,
        expanding,
    })
}

/// Classification of a stretch-factor polynomial.
#[derive(Debug, Clone, Serialize)]
pub struct CoronalVerdict {
    /// The polynomial as given.
    pub input_poly: IntPolynomial,
    /// Irreducible factor owning the largest real root λ; divides the
    /// input.
    pub minimal_poly_of_largest_root: IntPolynomial,
    /// Isolating interval for λ.
    pub lambda_interval: RationalInterval,
    /// Truncated decimal rendering of the interval midpoint.
    pub lambda: String,
    /// Distinct roots of the minimal polynomial on the unit circle.
    pub circle: CircleRootCount,
    /// Total distinct circle roots of the minimal polynomial.
    pub on_circle_count: usize,
    /// True when λ has a Galois conjugate on the unit circle.
    pub coronal: bool,
}

/// Classifies a stretch-factor polynomial: isolates its largest real root
/// λ (which must exceed 1), finds the irreducible factor that owns it, and
/// counts that factor's roots on the unit circle. Coronal means at least
/// one conjugate of λ lies on the circle.
pub fn coronal_verdict(p: &IntPolynomial, tol: &BigRational) -> Result<CoronalVerdict, CoreError> {
    if p.is_zero() {
        return Err(CoreError::ZeroPolynomial);
    }
    let chain = SturmChain::new(p)?;
    let bound = cauchy_root_bound(p)?;
    let one = BigRational::one();
    if bound <= one || chain.count_half_open(&one, &bound) == 0 {
        // A root exactly at 1 is not above 1; the half-open count from 1
        // excludes it, which is the wanted behavior.
        return Err(CoreError::NoRootAboveOne);
    }

    let factorization = factor_over_integers(p)?;
    let mut candidates: Vec<(IntPolynomial, RationalInterval)> = Vec::new();
    let coarse = BigRational::new(BigInt::one(), BigInt::from(16));
    for (factor, _) in &factorization.factors {
        if let Ok(interval) = isolate_largest_real_root(factor, &coarse) {
            candidates.push((factor.clone(), interval));
        }
    }
    if candidates.is_empty() {
        return Err(CoreError::NoRealRoots);
    }

    // Distinct irreducibles share no roots, so shrinking intervals
    // eventually separates the winners.
    let two = BigRational::from(BigInt::from(2));
    let mut width = coarse;
    let minimal = loop {
        let best = candidates
            .iter()
            .enumerate()
            .max_by(|(_, (_, a)), (_, (_, b))| a.hi().cmp(b.hi()))
            .map(|(i, _)| i)
            .expect("candidate list is nonempty");
        let separated = candidates
            .iter()
            .enumerate()
            .all(|(i, (_, iv))| i == best || iv.hi() < candidates[best].1.lo());
        if separated || candidates.len() == 1 {
            break candidates.swap_remove(best).0;
        }
        width /= &two;
        for (factor, interval) in candidates.iter_mut() {
            *interval = isolate_largest_real_root(factor, &width)?;
        }
    };

    let lambda_interval = isolate_largest_real_root(&minimal, tol)?;
    let circle = count_unit_circle_roots(&minimal)?;
    let lambda = lambda_interval.midpoint_decimal(REPORT_DECIMAL_DIGITS);
    Ok(CoronalVerdict {
        input_poly: p.clone(),
        minimal_poly_of_largest_root: minimal,
        lambda_interval,
        lambda,
        on_circle_count: circle.total_distinct,
        coronal: circle.total_distinct > 0,
        circle,
    })
}

/// Runs the coronal classifier on `p` and on the polynomial whose roots
/// are the k-th powers of the roots of `p`. When the base verdict is
/// coronal and λ dominates, the power verdict is coronal for every k: the
/// circle conjugate's power stays on the circle.
pub fn coronal_power_check(
    p: &IntPolynomial,
    k: u32,
    tol: &BigRational,
) -> Result<(CoronalVerdict, CoronalVerdict), CoreError> {
    let base = coronal_verdict(p, tol)?;
    let powered = power_transform(p, k)?;
    let power = coronal_verdict(&powered, tol)?;
    Ok((base, power))
}
