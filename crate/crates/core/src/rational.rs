//! Exact rationals and their text form.
//!
//! Values are `num::BigRational`, which keeps every number in lowest terms
//! with a positive denominator. The text form is `"p"` or `"p/q"`.

use num::{BigInt, One, Signed, Zero};
use thiserror::Error;

pub type Rational = num::BigRational;

/// Small-integer shorthand for `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("`{0}` is not an integer or a fraction p/q")]
    Malformed(String),
    #[error("`{0}` has a non-positive denominator")]
    BadDenominator(String),
    #[error("`{0}` is not in lowest terms")]
    NotReduced(String),
}

/// Parses `"p"`, `"-p"`, `"p/q"` or `"-p/q"`. The denominator must be
/// positive and the fraction reduced.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let text = s.trim();
    let malformed = || ParseRationalError::Malformed(s.to_string());
    let parse_int = |part: &str| -> Result<BigInt, ParseRationalError> {
        let digits = part.strip_prefix('-').unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        part.parse::<BigInt>().map_err(|_| malformed())
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text)?)),
        Some((num, den)) => {
            let numer = parse_int(num)?;
            if den.starts_with('-') {
                return Err(ParseRationalError::BadDenominator(s.to_string()));
            }
            let denom = parse_int(den)?;
            if !denom.is_positive() {
                return Err(ParseRationalError::BadDenominator(s.to_string()));
            }
            let value = Rational::new(numer.clone(), denom.clone());
            if value.numer() != &numer || value.denom() != &denom {
                return Err(ParseRationalError::NotReduced(s.to_string()));
            }
            Ok(value)
        }
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exact square root of a non-negative rational, if it is rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rational::zero());
    }
    let rn = q.numer().sqrt();
    let rd = q.denom().sqrt();
    if &(&rn * &rn) == q.numer() && &(&rd * &rd) == q.denom() {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}
