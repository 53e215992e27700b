//! Exact rational arithmetic: univariate polynomials with rational
//! coefficients, binomial-coefficient polynomials, interpolation, and the
//! conversion between Ehrhart polynomials and h*-vectors.

mod hstar;
mod poly;

pub use hstar::{ehrhart_from_hstar, hstar_from_ehrhart, HStar};
pub use poly::{binomial_poly, lagrange_interpolate, Polynomial};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// `num / den` as a reduced rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Decimal-string pair `["num", "den"]` used by every JSON form.
pub fn rational_to_json(q: &Rational) -> serde_json::Value {
    serde_json::json!([q.numer().to_string(), q.denom().to_string()])
}

pub fn rational_from_json(v: &serde_json::Value) -> crate::Result<Rational> {
    let bad = || crate::Error::InvalidInput(format!("expected [\"num\",\"den\"], got {v}"));
    let arr = v.as_array().ok_or_else(bad)?;
    if arr.len() != 2 {
        return Err(bad());
    }
    let parse = |x: &serde_json::Value| -> crate::Result<BigInt> {
        match x {
            serde_json::Value::String(s) => s.trim().parse::<BigInt>().map_err(|_| bad()),
            serde_json::Value::Number(n) => n.to_string().parse::<BigInt>().map_err(|_| bad()),
            _ => Err(bad()),
        }
    };
    let num = parse(&arr[0])?;
    let den = parse(&arr[1])?;
    if den.is_zero() {
        return Err(crate::Error::InvalidInput("zero denominator".into()));
    }
    Ok(Rational::new(num, den))
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rational(s: &str) -> crate::Result<Rational> {
    let s = s.trim();
    let bad = || crate::Error::InvalidInput(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(int(s.parse::<BigInt>().map_err(|_| bad())?)),
    }
}

pub(crate) fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

pub(crate) fn sign_of(q: &Rational) -> std::cmp::Ordering {
    if q.is_zero() {
        std::cmp::Ordering::Equal
    } else if q.is_positive() {
        std::cmp::Ordering::Greater
    } else {
        std::cmp::Ordering::Less
    }
}
