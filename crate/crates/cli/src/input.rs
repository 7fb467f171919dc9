//! Parsers for command-line inputs: rational tolerances, polynomials in
//! human or coefficient-list form, and intersection matrix files.

use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use coronal_core::{CoreError, IntPolynomial, IntersectionMatrix};

/// Parses "p/q", a decimal like "0.003", scientific notation like
/// "2.5e-9", or a plain integer, into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, CoreError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(CoreError::Parse("empty rational".into()));
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| CoreError::Parse(format!("bad numerator in {t:?}")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| CoreError::Parse(format!("bad denominator in {t:?}")))?;
        if d.is_zero() {
            return Err(CoreError::Parse("zero denominator".into()));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some(idx) = t.find(['e', 'E']) {
        let mantissa = parse_rational(&t[..idx])?;
        let exp: i32 = t[idx + 1..]
            .parse()
            .map_err(|_| CoreError::Parse(format!("bad exponent in {t:?}")))?;
        if exp.unsigned_abs() > 10_000 {
            return Err(CoreError::Parse(format!("exponent out of range in {t:?}")));
        }
        let ten = BigInt::from(10u32).pow(exp.unsigned_abs());
        let scale = if exp >= 0 {
            BigRational::from_integer(ten)
        } else {
            BigRational::new(BigInt::one(), ten)
        };
        return Ok(mantissa * scale);
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        let signed = int_part.trim();
        let (negative, int_digits) = match signed.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, signed.strip_prefix('+').unwrap_or(signed)),
        };
        if !int_digits.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
            || (int_digits.is_empty() && frac_part.is_empty())
        {
            return Err(CoreError::Parse(format!("bad decimal {t:?}")));
        }
        let int_val: BigInt = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            int_digits.parse().expect("digits parse")
        };
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac_val: BigInt = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            frac_part.parse().expect("digits parse")
        };
        let magnitude = BigRational::new(int_val * &scale + frac_val, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    let n: BigInt = t
        .parse()
        .map_err(|_| CoreError::Parse(format!("bad rational {t:?}")))?;
    Ok(BigRational::from_integer(n))
}

/// Parses a polynomial. Input containing a comma is an ascending integer
/// coefficient list ("1,-3,1" is 1 - 3x + x^2); anything else is human
/// form such as "x^4-x^3-x^2-x+1", "x^2 - 3x + 1", or "2*x^2+1".
pub fn parse_poly(s: &str) -> Result<IntPolynomial, CoreError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(CoreError::Parse("empty polynomial".into()));
    }
    if t.contains(',') {
        let coeffs = t
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<BigInt>()
                    .map_err(|_| CoreError::Parse(format!("bad coefficient {:?}", c.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let p = IntPolynomial::new(coeffs);
        if p.is_zero() {
            return Err(CoreError::Parse("zero polynomial".into()));
        }
        return Ok(p);
    }
    parse_human_poly(t)
}

fn parse_human_poly(s: &str) -> Result<IntPolynomial, CoreError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(CoreError::Parse("empty polynomial".into()));
    }
    // Split into signed terms: a sign starts a new term except at the
    // front. Exponents are unsigned, so every interior '-' is a term sign.
    let mut terms: Vec<String> = Vec::new();
    let mut current = String::new();
    for (i, c) in compact.chars().enumerate() {
        if (c == '+' || c == '-') && i > 0 {
            terms.push(std::mem::take(&mut current));
            current.push(c);
        } else {
            current.push(c);
        }
    }
    terms.push(current);

    let mut coeffs: Vec<BigInt> = Vec::new();
    for term in &terms {
        let (coeff, degree) = parse_term(term)?;
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, BigInt::zero());
        }
        coeffs[degree] += coeff;
    }
    let p = IntPolynomial::new(coeffs);
    if p.is_zero() {
        return Err(CoreError::Parse("zero polynomial".into()));
    }
    Ok(p)
}

/// One term like "-3x", "x^4", "+2*x^2", or "7".
fn parse_term(term: &str) -> Result<(BigInt, usize), CoreError> {
    let bad = || CoreError::Parse(format!("bad term {term:?}"));
    let (sign, rest) = match term.strip_prefix('-') {
        Some(r) => (-1, r),
        None => (1, term.strip_prefix('+').unwrap_or(term)),
    };
    if rest.is_empty() {
        return Err(bad());
    }
    let (coeff_str, degree) = match rest.find('x') {
        None => (rest, 0usize),
        Some(pos) => {
            let after = &rest[pos + 1..];
            let degree = if after.is_empty() {
                1
            } else {
                after
                    .strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse::<usize>()
                    .map_err(|_| bad())?
            };
            let head = &rest[..pos];
            (head.strip_suffix('*').unwrap_or(head), degree)
        }
    };
    let coeff: BigInt = if coeff_str.is_empty() {
        BigInt::one()
    } else {
        coeff_str.parse().map_err(|_| bad())?
    };
    Ok((coeff * sign, degree))
}

/// Loads an intersection matrix file, accepting both the text layout
/// ("n m" header plus rows) and the JSON object form; JSON is detected by
/// a leading brace.
pub fn load_omega(path: &Path, strict: bool) -> Result<IntersectionMatrix, CoreError> {
    let raw = fs::read_to_string(path)
        .map_err(|e| CoreError::Parse(format!("cannot read {}: {e}", path.display())))?;
    if raw.trim_start().starts_with('{') {
        IntersectionMatrix::parse_json(&raw, strict)
    } else {
        IntersectionMatrix::parse_text(&raw, strict)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use coronal_core::BigRational as Rat;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("2").unwrap(), rat(2, 1));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rational("2.5e-3").unwrap(), rat(1, 400));
        assert_eq!(parse_rational("1.5E2").unwrap(), rat(150, 1));
        assert_eq!(
            parse_rational(" 1/1000000000000 ").unwrap(),
            rat(1, 1_000_000_000_000)
        );
    }

    #[test]
    fn rational_rejects_garbage() {
        for bad in [
            "",
            "a",
            "1/0",
            "1//2",
            "1.2.3",
            "1e",
            "--2",
            "--2.5",
            "1e99999999",
        ] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn poly_human_forms() {
        let quartic = parse_poly("x^4-x^3-x^2-x+1").unwrap();
        assert_eq!(quartic, IntPolynomial::from_i64(&[1, -1, -1, -1, 1]));
        let implicit = parse_poly("x^2 - 3x + 1").unwrap();
        assert_eq!(implicit, IntPolynomial::from_i64(&[1, -3, 1]));
        let starred = parse_poly("x^4 - 2*x^3 - 2*x + 1").unwrap();
        assert_eq!(starred, IntPolynomial::from_i64(&[1, -2, 0, -2, 1]));
        assert_eq!(parse_poly("2x").unwrap(), IntPolynomial::from_i64(&[0, 2]));
        assert_eq!(parse_poly("-x").unwrap(), IntPolynomial::from_i64(&[0, -1]));
        assert_eq!(parse_poly("7").unwrap(), IntPolynomial::from_i64(&[7]));
        // Repeated degrees accumulate.
        assert_eq!(parse_poly("x+x").unwrap(), IntPolynomial::from_i64(&[0, 2]));
    }

    #[test]
    fn poly_display_round_trips() {
        let polys = [
            IntPolynomial::from_i64(&[1, -1, -1, -1, 1]),
            IntPolynomial::from_i64(&[1, -2, 0, -2, 1]),
            IntPolynomial::from_i64(&[-1, 5, -5, 1]),
            IntPolynomial::from_i64(&[0, -3, 0, 2]),
        ];
        for p in &polys {
            assert_eq!(&parse_poly(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn poly_coefficient_lists() {
        assert_eq!(
            parse_poly("1,-3,1").unwrap(),
            IntPolynomial::from_i64(&[1, -3, 1])
        );
        assert_eq!(
            parse_poly("1, -1, -1, -1, 1").unwrap(),
            IntPolynomial::from_i64(&[1, -1, -1, -1, 1])
        );
    }

    #[test]
    fn poly_rejects_garbage() {
        for bad in ["", "x^", "x^-2", "3y", "1,,2", "x**2", "2**x", "0", "0,0"] {
            assert!(parse_poly(bad).is_err(), "accepted {bad:?}");
        }
    }
}
