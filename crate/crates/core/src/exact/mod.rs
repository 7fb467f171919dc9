//! Exact integer and rational arithmetic: polynomials, matrices, Sturm
//! chains, factorization, and unit-circle root counting.
//!
//! Every function in this module is deterministic and allocation-bounded by
//! the size of its inputs; none consults floating point.

mod circle;
mod factor;
mod interval;
mod matrix;
mod poly;
mod sturm;

pub use circle::{
    circle_census, count_unit_circle_roots, fold_palindrome, self_reciprocal_part, CircleCensus,
    CircleRootCount,
};
pub use factor::{factor_over_integers, Factorization};
pub use interval::RationalInterval;
pub use matrix::IntMatrix;
pub use poly::IntPolynomial;
pub use sturm::{
    cauchy_root_bound, isolate_largest_real_root, power_transform, sturm_count, SturmChain,
};
