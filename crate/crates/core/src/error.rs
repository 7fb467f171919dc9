use thiserror::Error;

/// Errors surfaced by exact computations and input validation.
///
/// Variants carry enough context to render a useful one-line message;
/// callers that need structured detail (e.g. the CLI's JSON error output)
/// match on the variant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("matrix is not square: {rows}x{cols}")]
    NonSquareMatrix { rows: usize, cols: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not palindromic of even degree")]
    NotPalindromic,

    #[error("polynomial has zero constant term after x-factor removal")]
    ZeroConstantTerm,

    #[error("interval endpoint {endpoint} is a root; perturb the query interval")]
    EndpointIsRoot { endpoint: String },

    #[error("polynomial has no real roots")]
    NoRealRoots,

    #[error("polynomial has no real root above 1")]
    NoRootAboveOne,

    #[error("exponent must be positive")]
    ZeroPower,

    #[error("twist index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("word is empty")]
    EmptyWord,

    #[error("word does not use every twist index: missing {missing:?}")]
    NotAdmissible { missing: Vec<usize> },

    #[error("element is not hyperbolic: {class}")]
    NotHyperbolic { class: String },

    #[error("matrix has determinant {det}, expected 1")]
    NotDeterminantOne { det: String },

    #[error("invalid intersection matrix: {violations:?}")]
    InvalidOmega { violations: Vec<String> },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A proved invariant failed at runtime. Seeing this means a bug in
    /// the library or its premises, not bad input.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

impl CoreError {
    /// Stable machine-readable tag for each variant, used in CLI JSON output.
    pub fn code(&self) -> &'static str {
        match self {
            CoreError::NonSquareMatrix { .. } => "non_square_matrix",
            CoreError::DimensionMismatch { .. } => "dimension_mismatch",
            CoreError::ZeroPolynomial => "zero_polynomial",
            CoreError::NotPalindromic => "not_palindromic",
            CoreError::ZeroConstantTerm => "zero_constant_term",
            CoreError::EndpointIsRoot { .. } => "endpoint_is_root",
            CoreError::NoRealRoots => "no_real_roots",
            CoreError::NoRootAboveOne => "no_root_above_one",
            CoreError::ZeroPower => "zero_power",
            CoreError::IndexOutOfRange { .. } => "index_out_of_range",
            CoreError::EmptyWord => "empty_word",
            CoreError::NotAdmissible { .. } => "not_admissible",
            CoreError::NotHyperbolic { .. } => "not_hyperbolic",
            CoreError::NotDeterminantOne { .. } => "not_determinant_one",
            CoreError::InvalidOmega { .. } => "invalid_omega",
            CoreError::InvalidConfig(_) => "invalid_config",
            CoreError::Parse(_) => "parse_error",
            CoreError::InternalInvariant(_) => "internal_invariant",
        }
    }
}
