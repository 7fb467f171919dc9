//! Closed rational intervals used to report isolated real roots exactly.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

/// Closed interval `[lo, hi]` with rational endpoints, `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RationalInterval { lo, hi }
    }

    /// Degenerate interval `[x, x]`.
    pub fn point(x: BigRational) -> Self {
        RationalInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from(BigInt::from(2))
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Midpoint as `f64`, for human-readable report fields only.
    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering of the midpoint, truncated toward zero at
    /// `digits` fractional places. Exact: no float round-trip.
    pub fn midpoint_decimal(&self, digits: u32) -> String {
        let mid = self.midpoint();
        let neg = mid.is_negative();
        let abs = mid.abs();
        let scale = BigInt::from(10u32).pow(digits);
        // floor(|mid| * 10^digits) gives the truncated digit stream.
        let scaled = (abs * BigRational::from(scale.clone()))
            .floor()
            .to_integer();
        let (int_part, frac_part) = (scaled.clone() / &scale, scaled % &scale);
        let sign = if neg && (!int_part.is_zero() || !frac_part.is_zero()) {
            "-"
        } else {
            ""
        };
        if digits == 0 {
            return format!("{sign}{int_part}");
        }
        format!(
            "{sign}{int_part}.{frac:0>width$}",
            frac = frac_part.to_string(),
            width = digits as usize
        )
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Serialize for RationalInterval {
    /// Two-element array of exact rational strings: `["p/q", "r/s"]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&self.lo.to_string())?;
        seq.serialize_element(&self.hi.to_string())?;
        seq.end()
    }
}
