//! Small helpers around [`BigRational`]: integer embedding, canonical
//! `p/q` rendering, parsing, and exact floor.
//!
//! Every quantity in this crate is either an integer or an exact rational;
//! floating point is never used.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact rational from an integer.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact rational `n/d`, reduced. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Floor of an exact rational as `i64`.
///
/// Values in this crate stay at desk scale; the conversion is checked and
/// panics if a value ever leaves the `i64` range.
pub fn floor_i64(r: &BigRational) -> i64 {
    r.floor()
        .to_integer()
        .to_i64()
        .expect("rational floor out of i64 range")
}

/// Render in lowest terms with positive denominator: `"p/q"`, or `"p"`
/// when the denominator is one.
pub fn render(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty fraction string")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("too many `/` in `{0}`")]
    TooManySlashes(String),
}

/// Parse `"p"` or `"p/q"` into a reduced rational with positive denominator.
pub fn parse(s: &str) -> Result<BigRational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let mut parts = s.split('/');
    let numer_str = parts.next().unwrap_or("");
    let numer: BigInt = numer_str
        .trim()
        .parse()
        .map_err(|_| ParseRationalError::BadInteger(numer_str.trim().to_string()))?;
    let denom: BigInt = match parts.next() {
        None => BigInt::one(),
        Some(d) => d
            .trim()
            .parse()
            .map_err(|_| ParseRationalError::BadInteger(d.trim().to_string()))?,
    };
    if parts.next().is_some() {
        return Err(ParseRationalError::TooManySlashes(s.to_string()));
    }
    if denom.is_zero() {
        return Err(ParseRationalError::ZeroDenominator(s.to_string()));
    }
    Ok(BigRational::new(numer, denom))
}

/// Denominator of a reduced rational as `u64`.
pub fn denom_u64(r: &BigRational) -> u64 {
    r.denom()
        .abs()
        .to_u64()
        .expect("denominator out of u64 range")
}

/// Serde adapter serializing a `BigRational` as a canonical fraction string.
pub mod serde_rational {
    use super::{parse, render};
    use num::rational::BigRational;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&render(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_is_canonical() {
        assert_eq!(render(&frac(1, 2)), "1/2");
        assert_eq!(render(&frac(2, 4)), "1/2");
        assert_eq!(render(&frac(-3, 6)), "-1/2");
        assert_eq!(render(&frac(3, -6)), "-1/2");
        assert_eq!(render(&int(7)), "7");
        assert_eq!(render(&frac(8, 4)), "2");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["0", "1/2", "-1/3", "57/4", "7"] {
            assert_eq!(render(&parse(s).unwrap()), s);
        }
        assert_eq!(parse(" 2/4 ").unwrap(), frac(1, 2));
        assert!(matches!(parse("1/0"), Err(ParseRationalError::ZeroDenominator(_))));
        assert!(matches!(parse(""), Err(ParseRationalError::Empty)));
        assert!(matches!(parse("x/2"), Err(ParseRationalError::BadInteger(_))));
        assert!(matches!(parse("1/2/3"), Err(ParseRationalError::TooManySlashes(_))));
    }

    #[test]
    fn floor_matches_integer_division_toward_minus_infinity() {
        assert_eq!(floor_i64(&frac(57, 4)), 14);
        assert_eq!(floor_i64(&frac(-1, 2)), -1);
        assert_eq!(floor_i64(&int(3)), 3);
    }
}
