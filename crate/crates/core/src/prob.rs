//! Exact rational probabilities and their textual renderings.
//!
//! Nothing in this crate touches floating point on the inference path. Decimal
//! strings exist for presentation only.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact probability (or any rational quantity derived from one).
pub type Prob = BigRational;

pub fn zero() -> Prob {
    Prob::zero()
}

pub fn one() -> Prob {
    Prob::one()
}

/// Builds `num/den` from machine integers. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Prob {
    Prob::new(BigInt::from(num), BigInt::from(den))
}

/// Parses a probability literal: a plain decimal (`0.25`, `1`, `.5` is not
/// accepted) or a fraction `num/den`. Returns `None` on malformed input.
pub fn parse_literal(text: &str) -> Option<Prob> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num = parse_unsigned(num.trim())?;
        let den = parse_unsigned(den.trim())?;
        if den.is_zero() {
            return None;
        }
        return Some(Prob::new(num, den));
    }
    parse_decimal(text)
}

fn parse_unsigned(text: &str) -> Option<BigInt> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// `k`-digit decimals become `digits / 10^k` exactly.
pub fn parse_decimal(text: &str) -> Option<Prob> {
    let (int_part, frac_part) = match text.split_once('.') {
        Some((i, f)) => (i, f),
        None => (text, ""),
    };
    if int_part.is_empty() || (text.contains('.') && frac_part.is_empty()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let num = parse_unsigned(&digits)?;
    let den = num_traits::pow(BigInt::from(10), frac_part.len());
    Some(Prob::new(num, den))
}

/// True when the value has a finite decimal expansion (denominator `2^a 5^b`).
pub fn has_finite_decimal(p: &Prob) -> bool {
    let mut den = p.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    while den.is_even() {
        den /= &two;
    }
    while (&den % &five).is_zero() {
        den /= &five;
    }
    den.is_one()
}

/// Canonical literal: an exact decimal when one exists, `num/den` otherwise.
pub fn format_literal(p: &Prob) -> String {
    if !has_finite_decimal(p) {
        return format!("{}/{}", p.numer(), p.denom());
    }
    exact_decimal(p)
}

fn exact_decimal(p: &Prob) -> String {
    let negative = p.is_negative();
    let p = p.abs();
    let int_part = p.to_integer();
    let mut frac = p.fract();
    let mut out = format!("{}{}", if negative { "-" } else { "" }, int_part);
    if frac.is_zero() {
        return out;
    }
    out.push('.');
    let ten = Prob::from_integer(BigInt::from(10));
    while !frac.is_zero() {
        frac *= &ten;
        let digit = frac.to_integer();
        out.push_str(&digit.to_string());
        frac = frac.fract();
    }
    out
}

/// Always `num/den`, even for integers (`1/1`). Used by machine-facing dumps.
pub fn format_fraction(p: &Prob) -> String {
    format!("{}/{}", p.numer(), p.denom())
}

/// Rounds to `digits` significant digits (half away from zero) and trims
/// trailing zeros.
pub fn format_significant(p: &Prob, digits: usize) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let negative = p.is_negative();
    let x = p.abs();
    let ten = Prob::from_integer(BigInt::from(10));
    // Find e with 10^e <= x < 10^(e+1).
    let mut exp: i64 = 0;
    let mut scaled = x.clone();
    while scaled >= ten {
        scaled /= &ten;
        exp += 1;
    }
    while scaled < Prob::one() {
        scaled *= &ten;
        exp -= 1;
    }
    let shift = digits as i64 - 1 - exp;
    let factor = num_traits::pow(BigInt::from(10), shift.unsigned_abs() as usize);
    let shifted =
        if shift >= 0 { &x * Prob::from_integer(factor.clone()) } else { &x / Prob::from_integer(factor.clone()) };
    let rounded = (shifted + ratio(1, 2)).floor().to_integer();
    let value = if shift >= 0 { Prob::new(rounded, factor) } else { Prob::from_integer(rounded * factor) };
    let text = exact_decimal(&value);
    if negative {
        format!("-{text}")
    } else {
        text
    }
}

/// Lossy conversion for human display and tolerance checks.
pub fn to_f64(p: &Prob) -> f64 {
    p.to_f64().unwrap_or(f64::NAN)
}
