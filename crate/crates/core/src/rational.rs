//! Exact rational numbers.
//!
//! Every weight, configuration entry and breakpoint in this crate is a
//! [`BigRational`]; nothing is ever rounded. Text input accepts `p/q`,
//! integers and finite decimals (`0.375` is read as `3/8`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn in_unit_interval(value: &Rational) -> bool {
    !value.is_negative() && *value <= Rational::one()
}

/// True when the reduced denominator is a power of two.
pub fn is_dyadic(value: &Rational) -> bool {
    let mut d = value.denom().clone();
    let two = BigInt::from(2);
    while d.is_even() {
        d /= &two;
    }
    d.is_one()
}

/// `Some(k)` when `value == 2^k` for an integer `k` (possibly negative).
pub fn log2_exact(value: &Rational) -> Option<i64> {
    if !value.is_positive() {
        return None;
    }
    let power = |n: &BigInt| -> Option<i64> {
        if n.is_zero() || (n - BigInt::one()) & n != BigInt::zero() {
            return None;
        }
        Some(n.bits() as i64 - 1)
    };
    Some(power(value.numer())? - power(value.denom())?)
}

/// Parse `p/q`, an integer, or a finite decimal.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    let (negative, body) = match text.as_bytes()[0] {
        b'-' => (true, &text[1..]),
        b'+' => (false, &text[1..]),
        _ => (false, text),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let value = Rational::new(numer, denom);
    Some(if negative { -value } else { value })
}

pub fn format_tuple(values: &[Rational]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Lossy conversion for layout purposes only.
pub fn to_f64(value: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/8"), Some(rat(3, 8)));
        assert_eq!(parse_rational("0.375"), Some(rat(3, 8)));
        assert_eq!(parse_rational("-1.5"), Some(rat(-3, 2)));
        assert_eq!(parse_rational(".5"), Some(rat(1, 2)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("6/4"), Some(rat(3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("."), None);
        assert_eq!(parse_rational("1e3"), None);
    }

    #[test]
    fn decimal_parse_is_exact() {
        // 0.1 is not representable in binary floating point.
        assert_eq!(parse_rational("0.1"), Some(rat(1, 10)));
        assert_eq!(parse_rational("0.1").unwrap() * int(3), rat(3, 10));
    }

    #[test]
    fn dyadic_and_powers() {
        assert!(is_dyadic(&rat(3, 8)));
        assert!(is_dyadic(&int(5)));
        assert!(!is_dyadic(&rat(1, 3)));
        assert_eq!(log2_exact(&rat(1, 4)), Some(-2));
        assert_eq!(log2_exact(&int(8)), Some(3));
        assert_eq!(log2_exact(&int(1)), Some(0));
        assert_eq!(log2_exact(&rat(3, 4)), None);
        assert_eq!(log2_exact(&int(-2)), None);
    }
}
