//! Seeded random experiments: certificate scans over random twist words,
//! unit-circle statistics of random palindromic polynomials, and height
//! identity spot checks.
//!
//! Determinism contract: every trial draws from its own ChaCha8 stream
//! keyed by `(seed, trial index)`, and all aggregation is order
//! independent, so serial and parallel runs of the same configuration
//! produce identical results. ChaCha8 is fixed as the generator; changing
//! it would silently invalidate recorded seeds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde::ser::Serializer;
use serde::Serialize;

use crate::error::CoreError;
use crate::exact::{count_unit_circle_roots, IntMatrix, IntPolynomial, RationalInterval};
use crate::height::HeightForm;
use crate::penner::{IntersectionMatrix, TwistWord};
use crate::spectra::spectral_report;

/// One trial's source of randomness: a ChaCha8 stream keyed by the
/// experiment seed, with the trial index as the stream id. Streams never
/// overlap, so trials can run in any order or thread.
///
/// All derived draws (ranges, shuffles, rationals) go through [`below`],
/// which uses plain rejection sampling. Nothing here depends on the rand
/// crate's distribution code, so outputs are stable across dependency
/// upgrades.
///
/// [`below`]: TrialRng::below
pub struct TrialRng {
    inner: ChaCha8Rng,
}

impl TrialRng {
    pub fn new(seed: u64, trial: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(trial);
        TrialRng { inner }
    }

    /// Uniform draw from `0..n`. Rejection keeps it exactly uniform.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0) is empty");
        // Largest multiple of n that fits in u64 arithmetic: accept draws
        // below it, so every residue class has equal mass.
        let rem = (u64::MAX % n + 1) % n;
        let zone = u64::MAX - rem;
        loop {
            let v = self.inner.next_u64();
            if v <= zone {
                return v % n;
            }
        }
    }

    /// Uniform draw from the inclusive range `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        let span = (hi as i128 - lo as i128 + 1) as u64;
        (lo as i128 + self.below(span) as i128) as i64
    }

    /// Uniform draw from `-bound..=bound` excluding 0.
    pub fn nonzero_i64(&mut self, bound: u64) -> i64 {
        assert!(bound > 0, "no nonzero values in [-0, 0]");
        let v = 1 + self.below(2 * bound) as i64;
        let b = bound as i64;
        if v <= b {
            v
        } else {
            b - v
        }
    }

    /// Uniform rational: numerator in `-bound..=bound`, denominator in
    /// `1..=bound`. Not uniform over values (reducible pairs collapse),
    /// which is fine for identity testing.
    pub fn rational(&mut self, bound: u64) -> BigRational {
        let num = self.range_i64(-(bound as i64), bound as i64);
        let den = 1 + self.below(bound) as i64;
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    /// Fisher-Yates shuffle driven by this stream.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}

/// Draws before giving up on strict-mode connectivity. With any positive
/// entry bound a connected draw is overwhelmingly likely, so hitting this
/// limit means the configuration cannot produce one (e.g. bound 0).
const CONNECTIVITY_RETRIES: u32 = 1000;

/// Samples a valid intersection matrix. Total dimension is uniform in
/// `2..=max_dim`, the family split uniform over `1..dim`, and each A x B
/// block entry uniform in `0..=max_intersection`, symmetrized. In strict
/// mode the draw repeats until the intersection graph is connected.
pub fn random_intersection(
    rng: &mut TrialRng,
    max_dim: usize,
    max_intersection: u32,
    strict: bool,
) -> Result<IntersectionMatrix, CoreError> {
    if max_dim < 2 {
        return Err(CoreError::InvalidConfig(
            "max_dim must be at least 2 (one curve per family)".into(),
        ));
    }
    for _ in 0..CONNECTIVITY_RETRIES {
        let dim = 2 + rng.below(max_dim as u64 - 1) as usize;
        let n = 1 + rng.below(dim as u64 - 1) as usize;
        let m = dim - n;
        let mut omega = IntMatrix::zeros(dim, dim);
        for i in 0..n {
            for j in 0..m {
                let e = BigInt::from(rng.below(max_intersection as u64 + 1));
                omega[(i, n + j)] = e.clone();
                omega[(n + j, i)] = e;
            }
        }
        let built = if strict {
            IntersectionMatrix::new_strict(n, m, omega)
        } else {
            IntersectionMatrix::new(n, m, omega)
        };
        match built {
            Ok(ix) => return Ok(ix),
            // Only connectivity can fail here; the block construction
            // satisfies every structural rule by shape.
            Err(_) if strict => continue,
            Err(e) => return Err(e),
        }
    }
    Err(CoreError::InvalidConfig(format!(
        "no connected intersection matrix in {CONNECTIVITY_RETRIES} draws; raise max_intersection"
    )))
}

/// Samples a word using every index in `1..=dim`: one copy of each index
/// is planted, extra letters are drawn uniformly, and the whole word is
/// shuffled. Length is uniform in `dim..=max_word_len`. Planting instead
/// of drawing until coverage keeps the length bound hard.
pub fn random_admissible_word(
    rng: &mut TrialRng,
    dim: usize,
    max_word_len: usize,
) -> Result<TwistWord, CoreError> {
    if max_word_len < dim {
        return Err(CoreError::InvalidConfig(format!(
            "max_word_len {max_word_len} cannot cover all {dim} indices"
        )));
    }
    let len = dim + rng.below((max_word_len - dim) as u64 + 1) as usize;
    let mut letters: Vec<usize> = (1..=dim).collect();
    for _ in dim..len {
        letters.push(1 + rng.below(dim as u64) as usize);
    }
    rng.shuffle(&mut letters);
    Ok(TwistWord::new(letters))
}

/// Samples a rational vector; see [`TrialRng::rational`] for the entry
/// distribution.
pub fn random_rational_vector(rng: &mut TrialRng, dim: usize, bound: u64) -> Vec<BigRational> {
    (0..dim).map(|_| rng.rational(bound)).collect()
}

/// Samples a palindromic polynomial of even `degree`: upper-half
/// coefficients uniform in `-bound..=bound` with nonzero leading
/// coefficient, lower half mirrored. The constant term equals the leading
/// coefficient, so the result has exact degree `degree` and no root at 0.
pub fn random_palindromic(rng: &mut TrialRng, degree: usize, bound: u64) -> IntPolynomial {
    assert!(
        degree >= 2 && degree % 2 == 0,
        "degree must be even and positive"
    );
    assert!(bound > 0, "bound must be positive");
    let half = degree / 2;
    let mut coeffs = vec![BigInt::zero(); degree + 1];
    coeffs[degree] = BigInt::from(rng.nonzero_i64(bound));
    for c in &mut coeffs[half..degree] {
        *c = BigInt::from(rng.range_i64(-(bound as i64), bound as i64));
    }
    for j in 0..half {
        coeffs[j] = coeffs[degree - j].clone();
    }
    IntPolynomial::new(coeffs)
}

fn rational_string<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Parameters of a certificate scan.
#[derive(Debug, Clone, Serialize)]
pub struct ScanConfig {
    pub seed: u64,
    pub trials: u64,
    /// Upper bound on n+m. Sampled dimensions are additionally capped by
    /// `max_word_len`, since admissible words must visit every index.
    pub max_dim: usize,
    pub max_word_len: usize,
    pub max_intersection: u32,
    /// Require connected intersection graphs.
    pub strict_mode: bool,
    /// Width bound for the reported stretch-factor interval.
    #[serde(serialize_with = "rational_string")]
    pub tolerance: BigRational,
}

impl ScanConfig {
    pub fn validate(&self) -> Result<(), CoreError> {
        if self.trials == 0 {
            return Err(CoreError::InvalidConfig("trials must be at least 1".into()));
        }
        if self.max_dim < 2 {
            return Err(CoreError::InvalidConfig(
                "max_dim must be at least 2 (one curve per family)".into(),
            ));
        }
        if self.max_word_len < 2 {
            return Err(CoreError::InvalidConfig(
                "max_word_len must be at least 2 (admissible words visit every index)".into(),
            ));
        }
        if self.max_intersection == 0 {
            return Err(CoreError::InvalidConfig(
                "max_intersection must be at least 1".into(),
            ));
        }
        if !self.tolerance.is_positive() {
            return Err(CoreError::InvalidConfig(
                "tolerance must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// One scan trial. Records are self-contained: `omega` and `word` are
/// exactly the inputs of a single-word report, so any record can be
/// replayed to reproduce its certificate.
#[derive(Debug, Clone, Serialize)]
pub struct ScanRecord {
    pub trial: u64,
    pub omega: IntersectionMatrix,
    pub word: TwistWord,
    pub char_poly: IntPolynomial,
    /// Decimal rendering of the stretch factor; display only.
    pub pf: String,
    pub roots_at_one: usize,
    pub roots_at_minus_one: usize,
    pub conjugate_pairs_on_circle: usize,
    pub total_on_circle: usize,
    /// True when the certificate found a circle eigenvalue other than 1.
    pub violation: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanSummary {
    pub trials_run: u64,
    pub violations_found: u64,
    pub max_on_circle: usize,
}

/// Outcome of a certificate scan. `status` is `"ok"` when every trial
/// passed and `"FAILED"` otherwise; a failed run would falsify the
/// no-circle-eigenvalues property and deserves a bug report either way.
#[derive(Debug, Clone, Serialize)]
pub struct ScanResult {
    pub status: String,
    pub config: ScanConfig,
    pub summary: ScanSummary,
    pub records: Vec<ScanRecord>,
}

impl ScanResult {
    pub fn failed(&self) -> bool {
        self.summary.violations_found > 0
    }

    /// Per-trial CSV table with a header row. The word column is quoted
    /// because words render with commas.
    pub fn summary_csv(&self) -> String {
        let mut out = String::from(
            "trial,n,m,dim,word,word_len,pf,roots_at_one,roots_at_minus_one,\
             conjugate_pairs_on_circle,total_on_circle,violation\n",
        );
        for r in &self.records {
            out.push_str(&format!(
                "{},{},{},{},\"{}\",{},{},{},{},{},{},{}\n",
                r.trial,
                r.omega.family_a_count(),
                r.omega.family_b_count(),
                r.omega.dim(),
                r.word,
                r.word.len(),
                r.pf,
                r.roots_at_one,
                r.roots_at_minus_one,
                r.conjugate_pairs_on_circle,
                r.total_on_circle,
                r.violation,
            ));
        }
        out
    }
}

fn scan_trial(config: &ScanConfig, trial: u64) -> Result<ScanRecord, CoreError> {
    let mut rng = TrialRng::new(config.seed, trial);
    let dim_cap = config.max_dim.min(config.max_word_len);
    let ix = random_intersection(
        &mut rng,
        dim_cap,
        config.max_intersection,
        config.strict_mode,
    )?;
    let word = random_admissible_word(&mut rng, ix.dim(), config.max_word_len)?;
    let report = spectral_report(&ix, &word, &config.tolerance)?;
    Ok(ScanRecord {
        trial,
        omega: ix,
        word,
        char_poly: report.char_poly,
        pf: report.pf_float,
        roots_at_one: report.certificate.roots_at_one,
        roots_at_minus_one: report.certificate.roots_at_minus_one,
        conjugate_pairs_on_circle: report.certificate.conjugate_pairs_on_circle,
        total_on_circle: report.certificate.total_on_circle,
        violation: !report.certificate.no_circle_eigenvalues_except_one,
    })
}

/// Runs the scan. Records come back sorted by trial index regardless of
/// execution order, so `parallel` changes wall time only.
pub fn run_scan(config: &ScanConfig, parallel: bool) -> Result<ScanResult, CoreError> {
    config.validate()?;
    let mut records = if parallel {
        (0..config.trials)
            .into_par_iter()
            .map(|t| scan_trial(config, t))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        (0..config.trials)
            .map(|t| scan_trial(config, t))
            .collect::<Result<Vec<_>, _>>()?
    };
    records.sort_by_key(|r| r.trial);
    let violations_found = records.iter().filter(|r| r.violation).count() as u64;
    let max_on_circle = records.iter().map(|r| r.total_on_circle).max().unwrap_or(0);
    Ok(ScanResult {
        status: if violations_found == 0 {
            "ok"
        } else {
            "FAILED"
        }
        .into(),
        config: config.clone(),
        summary: ScanSummary {
            trials_run: config.trials,
            violations_found,
            max_on_circle,
        },
        records,
    })
}

/// Fraction of sampled palindromic polynomials with at least one root on
/// the unit circle.
#[derive(Debug, Clone, Serialize)]
pub struct RecipExperimentResult {
    pub degree: usize,
    pub coeff_bound: u64,
    pub samples: u64,
    pub with_circle_root: u64,
    /// Exact reduced fraction `with_circle_root / samples`.
    pub fraction: String,
    /// Decimal rendering of `fraction`; display only.
    pub fraction_decimal: String,
}

fn recip_hit(seed: u64, sample: u64, degree: usize, bound: u64) -> Result<bool, CoreError> {
    let mut rng = TrialRng::new(seed, sample);
    let p = random_palindromic(&mut rng, degree, bound);
    Ok(count_unit_circle_roots(&p)?.total_distinct > 0)
}

/// Samples palindromic polynomials and counts how many have a unit-circle
/// root, by exact Sturm counting. The fraction is reported as data, not
/// checked against any expected value: the distribution here is uniform
/// coefficients, not a random walk on a mapping class group, and the two
/// need not agree.
pub fn run_recip(
    degree: usize,
    coeff_bound: u64,
    samples: u64,
    seed: u64,
    parallel: bool,
) -> Result<RecipExperimentResult, CoreError> {
    if degree < 2 || degree % 2 != 0 {
        return Err(CoreError::InvalidConfig(format!(
            "degree must be even and at least 2, got {degree}"
        )));
    }
    if coeff_bound == 0 {
        return Err(CoreError::InvalidConfig(
            "coefficient bound must be at least 1".into(),
        ));
    }
    if samples == 0 {
        return Err(CoreError::InvalidConfig(
            "samples must be at least 1".into(),
        ));
    }
    let hits = if parallel {
        (0..samples)
            .into_par_iter()
            .map(|i| recip_hit(seed, i, degree, coeff_bound))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        (0..samples)
            .map(|i| recip_hit(seed, i, degree, coeff_bound))
            .collect::<Result<Vec<_>, _>>()?
    };
    let with_circle_root = hits.iter().filter(|h| **h).count() as u64;
    let fraction = BigRational::new(BigInt::from(with_circle_root), BigInt::from(samples));
    let fraction_decimal = RationalInterval::point(fraction.clone()).midpoint_decimal(6);
    Ok(RecipExperimentResult {
        degree,
        coeff_bound,
        samples,
        with_circle_root,
        fraction: fraction.to_string(),
        fraction_decimal,
    })
}

/// Witness for a failed height identity trial: enough to replay the case
/// by hand.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityFailure {
    pub trial: u64,
    pub index: usize,
    pub vector: Vec<String>,
    pub residual: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheckResult {
    /// Trials executed; equals the request on success, stops at the first
    /// failure otherwise.
    pub trials: u64,
    pub passed: bool,
    pub failure: Option<IdentityFailure>,
}

/// Checks `h(Q_i v) - h(v) = |Q_i v - v|^2` on random rational vectors
/// and random indices over a fixed Ω. Entry numerators and denominators
/// are bounded by `bound`. The residual must be exactly zero; the first
/// nonzero residual aborts the run with its witness.
pub fn run_identity_trials(
    ix: &IntersectionMatrix,
    trials: u64,
    seed: u64,
    bound: u64,
) -> Result<IdentityCheckResult, CoreError> {
    if trials == 0 {
        return Err(CoreError::InvalidConfig("trials must be at least 1".into()));
    }
    if bound == 0 {
        return Err(CoreError::InvalidConfig(
            "entry bound must be at least 1".into(),
        ));
    }
    let form = HeightForm::new(ix);
    for trial in 0..trials {
        let mut rng = TrialRng::new(seed, trial);
        let index = 1 + rng.below(ix.dim() as u64) as usize;
        let v = random_rational_vector(&mut rng, ix.dim(), bound);
        let residual = form.height_identity_residual(index, &v)?;
        if !residual.is_zero() {
            return Ok(IdentityCheckResult {
                trials: trial + 1,
                passed: false,
                failure: Some(IdentityFailure {
                    trial,
                    index,
                    vector: v.iter().map(|x| x.to_string()).collect(),
                    residual: residual.to_string(),
                }),
            });
        }
    }
    Ok(IdentityCheckResult {
        trials,
        passed: true,
        failure: None,
    })
}
