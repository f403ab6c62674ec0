//! Exact rationals and their `"p/q"` string form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half() -> Rational {
    frac(1, 2)
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-0.25"`.
pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::MalformedRational(s.to_string());
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, dec)) = t.split_once('.') {
        let neg = whole.starts_with('-');
        let digits = whole.trim_start_matches(['-', '+']);
        if dec.is_empty() || !dec.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let numer = BigInt::from_str(&format!("{digits}{dec}")).map_err(|_| bad())?;
        let denom = num_traits::pow(BigInt::from(10), dec.len());
        let r = Rational::new(numer, denom);
        return Ok(if neg { -r } else { r });
    }
    BigInt::from_str(t).map(Rational::from_integer).map_err(|_| bad())
}

/// Canonical string form, `"p/q"` in lowest terms or `"p"` for integers.
pub fn format(r: &Rational) -> String {
    r.to_string()
}

pub fn in_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && *r <= one()
}

pub fn in_open_unit_interval(r: &Rational) -> bool {
    r.is_positive() && *r < one()
}

/// `a + (b - a) * s`
pub fn lerp(a: &Rational, b: &Rational, s: &Rational) -> Rational {
    a + (b - a) * s
}
