//! Helpers around [`BigRat`]: parsing, the `num/den` wire form and correctly
//! rounded decimal rendering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type BigRat = BigRational;

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Parses `p/q` or a bare integer. Decimal and exponent forms are rejected.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let parse_int = |part: &str| -> Result<BigInt> {
        let part = part.trim();
        let digits = part.strip_prefix(['-', '+']).unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("not an exact rational: {s:?}")));
        }
        part.parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(BigRat::new(n, d))
        }
        None => Ok(BigRat::from_integer(parse_int(s)?)),
    }
}

/// The wire form: always `num/den`, even for integers.
pub fn rat_to_string(r: &BigRat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Rounds `r` to `digits` places after the decimal point, ties away from zero.
pub fn to_decimal(r: &BigRat, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = r.abs() * BigRat::from_integer(scale.clone());
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let twice = BigRat::new(rem * 2, scaled.denom().clone());
    let rounded = if twice >= BigRat::one() { q + 1 } else { q };
    let neg = r.is_negative() && !rounded.is_zero();
    let (whole, frac) = rounded.div_rem(&scale);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if digits > 0 {
        out.push('.');
        out.push_str(&format!("{:0>width$}", frac.to_string(), width = digits));
    }
    out
}
