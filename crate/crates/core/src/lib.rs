//! Exact-arithmetic core for twist products and their spectra.
//!
//! Everything here computes over arbitrary-precision integers and rationals;
//! floating point appears only in human-readable report fields, never in a
//! decision path. The crate is organized around five concerns:
//!
//! * [`exact`] — integer matrices, integer polynomials, Sturm chains,
//!   factorization over the integers, and unit-circle root counting.
//! * [`penner`] — intersection matrices, twist generators `Q_i = I + D_i Ω`,
//!   and words in the monoid they generate.
//! * [`height`] — the quadratic form `h(v) = ½ vᵀΩv` and its exact
//!   monotonicity identities.
//! * [`spectra`] — spectral reports, unit-circle eigenvalue certificates,
//!   and the coronal classifier.
//! * [`farey`] — PSL(2,Z) classification, LR words of hyperbolic elements,
//!   and the LL/RR-block realizability test.
//!
//! [`experiments`] adds seeded, reproducible random scans on top.
//!
//! All operations are pure functions on immutable values and are safe to
//! call concurrently.

pub mod error;
pub mod exact;
pub mod experiments;
pub mod farey;
pub mod height;
pub mod penner;
pub mod spectra;

pub use error::CoreError;
pub use exact::{
    cauchy_root_bound, circle_census, count_unit_circle_roots, factor_over_integers,
    fold_palindrome, isolate_largest_real_root, power_transform, self_reciprocal_part, sturm_count,
    CircleCensus, CircleRootCount, Factorization, IntMatrix, IntPolynomial, RationalInterval,
    SturmChain,
};
pub use experiments::{
    random_admissible_word, random_intersection, random_palindromic, random_rational_vector,
    run_identity_trials, run_recip, run_scan, IdentityCheckResult, IdentityFailure,
    RecipExperimentResult, ScanConfig, ScanRecord, ScanResult, ScanSummary, TrialRng,
};
pub use farey::{
    dehn_twist_word_to_lr, lr_word, lr_word_with_conjugator, reconstruct, ElementClass,
    LRDecomposition, LRWord, ModelSurface, PSL2ZElement,
};
pub use height::{HeightForm, MonotonicityCheck};
pub use penner::{validate_omega, IntersectionMatrix, OmegaViolation, TwistLetter, TwistWord};
pub use spectra::{
    certify_no_unit_circle_except_one, coronal_power_check, coronal_verdict,
    default_root_tolerance, spectral_report, CoronalVerdict, SpectralReport, UnitCircleCertificate,
};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
