//! Exact rational scalars and their textual form `p/q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p`, `-p`, `p/q` (optionally signed, surrounding whitespace ignored).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = |message: &str| Error::Syntax {
        offset: 0,
        message: format!("{message}: {t:?}"),
    };
    if t.is_empty() {
        return Err(bad("empty rational"));
    }
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let parse_int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.len() > 4096 {
            return Err(bad("not an integer"));
        }
        s.parse::<BigInt>().map_err(|_| bad("not an integer"))
    };
    let p = parse_int(num)?;
    let q = parse_int(den)?;
    if q.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(p, q))
}

/// Canonical text: `p` for integers, `p/q` otherwise (q > 0, lowest terms).
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of the denominators of `values` (1 for none).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    let mut d = BigInt::one();
    for v in values {
        if !v.denom().is_one() {
            d = d.lcm(v.denom());
        }
    }
    d
}

/// `r * d` as an integer; caller guarantees `d` clears the denominator.
pub fn scale_to_int(r: &Rational, d: &BigInt) -> BigInt {
    let scaled = r * Rational::from_integer(d.clone());
    debug_assert!(scaled.is_integer());
    scaled.to_integer()
}

pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_formats() {
        assert_eq!(parse_rational("-5").unwrap(), int(-5));
        assert_eq!(parse_rational(" 3/6 ").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("-4/3").unwrap(), frac(-4, 3));
        assert_eq!(format_rational(&frac(312, 7)), "312/7");
        assert_eq!(format_rational(&frac(-10, 2)), "-5");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "/", "1/0", "x", "1/-", "--1", "1.5", "1/2/3"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn common_denominator_of_thirds_and_halves() {
        let v = [frac(1, 3), frac(1, 2), int(4)];
        assert_eq!(common_denominator(&v), BigInt::from(6));
    }
}
