use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`; panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let parse_int = |x: &str| -> Result<BigInt> {
        if x.is_empty() || x.starts_with('+') && x.len() == 1 {
            return Err(Error::InvalidRational(s.to_string()));
        }
        x.parse::<BigInt>()
            .map_err(|_| Error::InvalidRational(s.to_string()))
    };
    let n = parse_int(num)?;
    let d = match den {
        Some(d) => {
            if d.starts_with('-') {
                return Err(Error::InvalidRational(s.to_string()));
            }
            parse_int(d)?
        }
        None => BigInt::from(1),
    };
    if d.is_zero() {
        return Err(Error::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(n, d))
}

/// Renders as `"p/q"`, or `"p"` when the denominator is one. The sign sits on
/// the numerator.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}
