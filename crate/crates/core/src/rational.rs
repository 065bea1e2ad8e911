//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Coefficient field element. `BigRational` keeps itself reduced with a
/// positive denominator after every operation.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::InvalidRational(s.to_string()));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| Error::InvalidRational(s.to_string()))?;
    let den: BigInt = den.parse().map_err(|_| Error::InvalidRational(s.to_string()))?;
    if den == BigInt::from(0) {
        return Err(Error::InvalidRational(s.to_string()));
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"p"` / `"p/q"` rendering.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
