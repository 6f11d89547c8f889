use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Exact rational number; always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand constructor `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-2/5"`, `"+7"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let s = s.strip_prefix('+').unwrap_or(s);
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
