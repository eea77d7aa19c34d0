//! Exact rational numbers and their canonical text form.
//!
//! Every weight, bound and cost in the crate is a [`Rational`]. The text form
//! accepted by [`parse_rational`] is an integer (`"3"`, `"-2"`), a fraction
//! (`"7/4"`) or a finite decimal (`"0.1"`). [`format_rational`] always emits
//! the canonical form: an integer when the denominator is one, `p/q` otherwise.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

/// Shorthand for an integral rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(v as i128)
}

/// Shorthand for `num/den`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num as i128, den as i128)
}

pub fn midpoint(a: Rational, b: Rational) -> Rational {
    (a + b) / int(2)
}

// Keeps numerators well inside i128 so sums over a few thousand elements cannot overflow.
const MAGNITUDE_LIMIT: i128 = 1 << 62;

pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = |why: &str| Error::Parse(format!("invalid rational {text:?}: {why}"));
    if s.is_empty() {
        return Err(bad("empty"));
    }
    let value = if let Some((n, d)) = s.split_once('/') {
        let n: i128 = n.trim().parse().map_err(|_| bad("bad numerator"))?;
        let d: i128 = d.trim().parse().map_err(|_| bad("bad denominator"))?;
        if d.is_zero() {
            return Err(bad("zero denominator"));
        }
        Rational::new(n, d)
    } else if let Some((whole, fraction)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = whole.trim_start_matches(['-', '+']);
        if fraction.is_empty() || !fraction.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("bad decimal fraction"));
        }
        if fraction.len() > 18 {
            return Err(bad("too many decimal places"));
        }
        let whole: i128 = if digits.is_empty() {
            0
        } else {
            digits.parse().map_err(|_| bad("bad integer part"))?
        };
        let scale = 10i128.pow(fraction.len() as u32);
        let frac_part: i128 = fraction.parse().map_err(|_| bad("bad decimal fraction"))?;
        let magnitude = Rational::new(whole * scale + frac_part, scale);
        if negative {
            -magnitude
        } else {
            magnitude
        }
    } else {
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("-inf") || s.contains('∞') {
            return Err(Error::Unbounded(text.to_string()));
        }
        Rational::from_integer(s.parse().map_err(|_| bad("not a number"))?)
    };
    if value.numer().abs() > MAGNITUDE_LIMIT || value.denom().abs() > MAGNITUDE_LIMIT {
        return Err(bad("magnitude too large"));
    }
    Ok(value)
}

pub fn format_rational(v: &Rational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Lossy conversion for human-facing ratios only.
pub fn to_f64(v: &Rational) -> f64 {
    *v.numer() as f64 / *v.denom() as f64
}
