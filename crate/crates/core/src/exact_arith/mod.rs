//! Exact scalars, univariate polynomials and rational functions in `t`.

mod poly;
mod ratfun;

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

pub use poly::Poly1;
pub use ratfun::RationalFunction1;

use crate::error::{Error, Result};

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parses `"p/q"` or `"p"`, with optional sign and surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let r = Rational::from_str(s).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
    Ok(r)
}

/// Always `p/q`, including a `/1` denominator.
pub fn format_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

/// `Some(k)` if `r` is an integer fitting in `i64`.
pub fn as_i64(r: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn floor_i64(r: &Rational) -> i64 {
    use num_traits::ToPrimitive;
    r.floor().numer().to_i64().expect("floor fits in i64")
}

pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational(" -6/4 ").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err() || parse_rational("x").is_err());
        assert!(parse_rational("abc").is_err());
        assert_eq!(format_pq(&int(3)), "3/1");
        assert_eq!(format_pq(&rat(-2, 4)), "-1/2");
    }

    #[test]
    fn floors() {
        assert_eq!(floor_i64(&rat(-7, 3)), -3);
        assert_eq!(floor_i64(&rat(2, 3)), 0);
        assert_eq!(floor_i64(&int(-2)), -2);
    }
}
