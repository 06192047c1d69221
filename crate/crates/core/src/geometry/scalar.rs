//! Exact rational coordinates and their textual forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coordinates are arbitrary-precision rationals in lowest terms.
pub type ExactScalar = BigRational;

/// Parses an integer (`-12`), a decimal (`3.25`, `-.5`, `7.`) or a ratio
/// (`22/7`) exactly. Exponents and non-finite values are rejected.
pub fn parse_scalar(text: &str) -> Result<ExactScalar, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty coordinate".into());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_integer(num.trim()).ok_or_else(|| format!("bad numerator in {s:?}"))?;
        let den = parse_integer(den.trim()).ok_or_else(|| format!("bad denominator in {s:?}"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some(v) = parse_integer(s) {
        return Ok(BigRational::from_integer(v));
    }
    parse_decimal(s).ok_or_else(|| format!("{s:?} is not an integer, decimal or p/q ratio"))
}

fn split_sign(s: &str) -> (bool, &str) {
    match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    }
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let (neg, digits) = split_sign(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let v: BigInt = digits.parse().ok()?;
    Some(if neg { -v } else { v })
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (neg, body) = split_sign(s);
    let (int, frac) = body.split_once('.')?;
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let v = BigRational::new(num, den);
    Some(if neg { -v } else { v })
}

/// `p/q` or `p` text form, parseable by [`parse_scalar`].
pub fn format_scalar(x: &ExactScalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Lossy conversion for drawing only.
pub fn to_f64(x: &ExactScalar) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| if x.is_negative() { f64::MIN } else { f64::MAX })
}
