//! Scalar type: arbitrary-precision rationals in canonical form.
//!
//! `num_rational::BigRational` already keeps values reduced with a positive
//! denominator, which is exactly the canonical form the rest of the library
//! relies on for equality and for byte-stable serialization. This module adds
//! the `"p/q"` text round-trip used by every file format and report.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Renders as `p` when the denominator is one, otherwise `p/q` with the sign
/// on the numerator.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with optional leading sign. Rejects empty parts, a
/// zero denominator, and anything that is not an integer on either side.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| format!("invalid integer `{num_str}` in rational `{s}`"))?;
    let denom: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| format!("invalid integer `{d}` in rational `{s}`"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(format!("zero denominator in rational `{s}`"));
    }
    Ok(Rational::new(numer, denom))
}

pub fn is_negative(r: &Rational) -> bool {
    r.numer().is_negative()
}
