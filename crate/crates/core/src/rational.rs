//! Exact scalars.
//!
//! Every number in the crate is a reduced `BigRational`. The text form is
//! `-?[0-9]+(/[1-9][0-9]*)?`, always written reduced.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses the strict rational-string grammar. Non-reduced input such as
/// `2/4` is accepted and reduced.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("malformed rational {s:?}"));
    let body = s.strip_prefix('-').unwrap_or(s);
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let mut value = Rational::from_integer(num.parse::<BigInt>().map_err(|_| bad())?);
    if let Some(d) = den {
        if d.is_empty() || d.starts_with('0') || !d.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        value /= Rational::from_integer(d.parse::<BigInt>().map_err(|_| bad())?);
    }
    if s.starts_with('-') {
        value = -value;
    }
    Ok(value)
}

/// Reduced text form, `n` for integers and `n/d` otherwise.
pub fn format(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

pub fn pow2(e: i32) -> Rational {
    let p = Rational::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Positive multiplier turning `values` into coprime integers. Returns one
/// for an all-zero slice.
pub fn primitive_multiplier(values: &[Rational]) -> Rational {
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let gcd = values
        .iter()
        .map(|v| (v * Rational::from_integer(lcm.clone())).to_integer())
        .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
    if gcd.is_zero() {
        return one();
    }
    Rational::new(lcm, gcd)
}
