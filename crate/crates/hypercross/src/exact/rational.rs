//! Exact rational scalars.
//!
//! All coordinates, matrix entries and LP quantities in this crate are
//! arbitrary-precision rationals kept in canonical form (positive
//! denominator, gcd 1). [`num::BigRational`] provides exactly that, so we
//! use it directly and add the string form used by the JSON interfaces:
//! `"p"` for integers, `"p/q"` otherwise.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::{One, Signed, Zero};
use std::str::FromStr;

pub type Rational = num::BigRational;

/// Rational from an integer pair; panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Parses `"p"` or `"p/q"` with optional sign, exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let make_err = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|_| make_err())?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let num = BigInt::from_str(p.trim()).map_err(|_| make_err())?;
            let den = BigInt::from_str(q.trim()).map_err(|_| make_err())?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Canonical string form: `"p"` when the denominator is 1, else `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sign as -1, 0 or 1.
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
    fn canonical_form_is_maintained() {
        let r = rat(4, -6);
        assert_eq!(format_rational(&r), "-2/3");
        assert!(r.denom() > &BigInt::from(0));
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-5/9", "12345678901234567890/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        // non-canonical input parses to the canonical value
        assert_eq!(format_rational(&parse_rational("2/4").unwrap()), "1/2");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
        assert_eq!(format_rational(&parse_rational("5/1").unwrap()), "5");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "a", "1/0", "1/2/3", "1.5"] {
            assert!(parse_rational(s).is_err(), "accepted `{s}`");
        }
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = rat(1, 3);
        let b = rat(1, 7);
        assert_eq!(&(&a + &b) - &b, a);
    }
}
