//! Rendering and parsing of exact rational values.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Formats as `num/den` with a positive denominator, e.g. `26/27`, `0/1`.
pub fn to_fraction_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` (or a bare integer). Returns None on malformed input or
/// a nonpositive denominator.
pub fn parse_fraction(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if den.is_positive() {
        Some(BigRational::new(num, den))
    } else {
        None
    }
}

/// Renders the exact value rounded to `decimals` fractional digits using
/// round-half-even, e.g. 26/27 at 20 digits -> `0.96296296296296296296`.
/// The fraction remains the authoritative representation; this is for
/// display only.
pub fn to_decimal_string(r: &BigRational, decimals: usize) -> String {
    let negative = r.is_negative();
    let abs = r.abs();
    let num = abs.numer().magnitude().clone();
    let den = abs.denom().magnitude();
    let scale = BigUint::from(10u32).pow(decimals as u32);
    let (mut q, rem) = (num * &scale).div_rem(den);
    let twice = &rem * 2u32;
    if twice > *den || (twice == *den && q.is_odd()) {
        q += 1u32;
    }
    let (int_part, frac_part) = q.div_rem(&scale);
    let sign = if negative && !q.is_zero() { "-" } else { "" };
    if decimals == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part:0>decimals$}", decimals = decimals)
    }
}
