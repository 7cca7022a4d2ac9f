//! Exact rational scalars and their text format.
//!
//! Every scalar in the crate is a [`Rational`] (arbitrary-precision
//! `num_rational::BigRational`). The wire format renders a rational as
//! `"p"` for integers and `"p/q"` otherwise, with `q > 0` and the fraction
//! in lowest terms; parsing accepts exactly those shapes (plus a leading
//! minus sign) and rejects everything else.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Builds the rational `n / d`.
///
/// Panics if `d == 0`; intended for literals in code and tests.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational as `"p"` or `"p/q"` in lowest terms with positive
/// denominator.
pub fn format_rational(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the text form produced by [`format_rational`].
///
/// Accepts an optional sign, an integer numerator, and an optional
/// `/denominator` part with a positive denominator. Whitespace, empty
/// parts, and a zero denominator are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = num_str.parse().map_err(|_| bad())?;
    // Forbid forms the integer parser tolerates but the format never emits.
    if num_str.contains('+') || num_str.trim() != num_str || num_str.is_empty() {
        return Err(bad());
    }
    let denom: BigInt = match den_str {
        None => BigInt::from(1),
        Some(d) => {
            let denom: BigInt = d.parse().map_err(|_| bad())?;
            if d.contains('+') || d.contains('-') || d.trim() != d {
                return Err(bad());
            }
            if denom.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            denom
        }
    };
    Ok(Rational::new(numer, denom))
}

/// Nearest-double rendering of a rational, for CSV plotting output only.
///
/// Exact code paths never call this.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of doubles for magnitudes outside the
        // direct conversion range.
        let n = r.numer().to_f64().unwrap_or(if r.numer().is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        });
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_integers_without_denominator() {
        assert_eq!(format_rational(&rat_int(5)), "5");
        assert_eq!(format_rational(&rat_int(-3)), "-3");
        assert_eq!(format_rational(&rat_int(0)), "0");
    }

    #[test]
    fn formats_fractions_in_lowest_terms() {
        assert_eq!(format_rational(&rat(1, 2)), "1/2");
        assert_eq!(format_rational(&rat(-4, 6)), "-2/3");
        assert_eq!(format_rational(&rat(3, -9)), "-1/3");
    }

    #[test]
    fn parses_what_it_formats() {
        for r in [rat_int(0), rat_int(7), rat(-22, 7), rat(5, 40), rat(-1, 2)] {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }

    #[test]
    fn parses_unreduced_input() {
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("-0").unwrap(), rat_int(0));
    }

    #[test]
    fn rejects_malformed_input() {
        for s in ["", "/", "1/", "/2", "1/0", "1.5", "a", "1/2/3", " 1", "1 ", "+1", "1/-2", "1/+2"] {
            assert!(parse_rational(s).is_err(), "should reject {s:?}");
        }
    }

    #[test]
    fn double_rendering_is_close() {
        assert_eq!(rational_to_f64(&rat(1, 2)), 0.5);
        assert_eq!(rational_to_f64(&rat(-7, 4)), -1.75);
    }
}
