//! Exact rational helpers shared by every module.
//!
//! [`Rational`] is a big rational kept in lowest terms with a positive
//! denominator, so structural equality is value equality.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// Builds `num / den` from machine integers.
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn half() -> Rational {
    ratio(1, 2)
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

/// Smallest integer `>= x`, as a machine integer.
pub fn ceil_i64(x: &Rational) -> i64 {
    x.ceil()
        .to_integer()
        .to_i64()
        .expect("rational too large for i64")
}

/// Parses `a/b` or a bare integer `a`. Decimals and anything else are
/// rejected so that every accepted value is exact.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let valid_int = |part: &str| {
        let digits = part.strip_prefix(['-', '+']).unwrap_or(part);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    match s.split_once('/') {
        Some((n, d)) => {
            if !valid_int(n) || !valid_int(d) || d.starts_with(['-', '+']) {
                return None;
            }
            let den = BigInt::from_str(d).ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Rational::new(BigInt::from_str(n).ok()?, den))
        }
        None if valid_int(s) => Some(Rational::from_integer(BigInt::from_str(s).ok()?)),
        None => None,
    }
}

/// Renders `a/b`, or `a` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Decimal rendering with `digits` significant digits, rounded half away
/// from zero, computed exactly on the big integers.
pub fn to_decimal(x: &Rational, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let neg = x.is_negative();
    let a = x.abs();
    let ten = BigInt::from(10);

    // exponent e with 10^e <= a < 10^(e+1)
    let mut e: i64 = {
        let approx = a.to_f64().unwrap_or(f64::MAX);
        if approx.is_finite() && approx > 0.0 {
            approx.log10().floor() as i64
        } else {
            0
        }
    };
    let pow = |e: i64| -> Rational {
        if e >= 0 {
            Rational::from_integer(num_traits::pow(ten.clone(), e as usize))
        } else {
            Rational::new(BigInt::one(), num_traits::pow(ten.clone(), (-e) as usize))
        }
    };
    while pow(e) > a {
        e -= 1;
    }
    while pow(e + 1) <= a {
        e += 1;
    }

    let shift = digits as i64 - 1 - e;
    let scaled = &a * pow(shift);
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let mut mantissa = q;
    if BigInt::from(2) * r >= *scaled.denom() {
        mantissa += 1;
    }
    let mut shift = shift;
    // rounding may carry into a new digit, e.g. 9.99.. -> 10.0..
    if mantissa.to_string().len() > digits {
        mantissa /= &ten;
        shift -= 1;
    }

    let m = mantissa.to_string();
    let body = if shift <= 0 {
        let zeros = "0".repeat((-shift) as usize);
        format!("{m}{zeros}")
    } else {
        let shift = shift as usize;
        let padded = if m.len() <= shift {
            format!("{}{}", "0".repeat(shift - m.len() + 1), m)
        } else {
            m
        };
        let (int_part, frac_part) = padded.split_at(padded.len() - shift);
        let frac_part = frac_part.trim_end_matches('0');
        if frac_part.is_empty() {
            int_part.to_string()
        } else {
            format!("{int_part}.{frac_part}")
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}
