use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use super::{binomial_poly, int, is_integer, Polynomial, Rational};
use crate::{Error, Result};

/// Numerator of the Ehrhart series `Σ i(P,t) z^t = h*(z) / (1-z)^(d+1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HStar {
    coeffs: Vec<BigInt>,
    denom_exponent: usize,
}

impl HStar {
    /// Entries are padded with zeros to `denom_exponent` and must be nonnegative.
    pub fn new(mut coeffs: Vec<BigInt>, denom_exponent: usize) -> Result<Self> {
        if denom_exponent == 0 {
            return Err(Error::InvalidParameter("h* denominator exponent must be >= 1".into()));
        }
        if coeffs.iter().any(|c| c.is_negative()) {
            return Err(Error::NotLatticeEhrhart(format!(
                "negative h* entry in {coeffs:?}"
            )));
        }
        let significant = coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
        if significant > denom_exponent {
            return Err(Error::DimensionMismatch(format!(
                "{significant} h* entries do not fit denominator (1-z)^{denom_exponent}"
            )));
        }
        coeffs.resize(denom_exponent, BigInt::zero());
        Ok(HStar { coeffs, denom_exponent })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `d + 1` where `d` is the dimension.
    pub fn denom_exponent(&self) -> usize {
        self.denom_exponent
    }

    pub fn dimension(&self) -> usize {
        self.denom_exponent - 1
    }

    /// Sum of the entries; the normalized volume of the polytope.
    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// The h*-vector of the `k`-th pyramid: same numerator, denominator
    /// exponent raised by `k`.
    pub fn pyramid(&self, k: usize) -> HStar {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(self.denom_exponent + k, BigInt::zero());
        HStar { coeffs, denom_exponent: self.denom_exponent + k }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "denom_exponent": self.denom_exponent,
        })
    }
}

impl fmt::Display for HStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({}) / (1-z)^{}", parts.join(", "), self.denom_exponent)
    }
}

impl fmt::Debug for HStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HStar{self}")
    }
}

/// `(1-z)^(d+1) · Σ_{t≥0} p(t) z^t`, truncated at degree `d = deg p`.
///
/// Fails if any entry is non-integral or negative, which means `p` is not
/// the Ehrhart polynomial of a lattice polytope of dimension `deg p`.
pub fn hstar_from_ehrhart(p: &Polynomial) -> Result<HStar> {
    let d = p
        .degree()
        .ok_or_else(|| Error::NotLatticeEhrhart("zero polynomial".into()))?;
    if p.coeff(0) != int(1) {
        return Err(Error::NotLatticeEhrhart(format!("constant term is {}, not 1", p.coeff(0))));
    }
    let values: Vec<Rational> = (0..=d as i64).map(|t| p.eval_int(t)).collect();
    let mut coeffs = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut h = Rational::zero();
        for i in 0..=j {
            let c = Rational::from_integer(binomial(BigInt::from(d + 1), BigInt::from(i)));
            if i % 2 == 0 {
                h += c * &values[j - i];
            } else {
                h -= c * &values[j - i];
            }
        }
        if !is_integer(&h) || h.is_negative() {
            return Err(Error::NotLatticeEhrhart(format!("h*_{j} = {h}")));
        }
        coeffs.push(h.to_integer());
    }
    HStar::new(coeffs, d + 1)
}

/// `Σ_j h*_j · C(t + d - j, d)`, the Ehrhart polynomial of a
/// `d`-dimensional polytope with the given h*-vector.
///
/// `d` may exceed `h.dimension()`; that reads the vector as the h* of a pyramid.
pub fn ehrhart_from_hstar(h: &HStar, d: usize) -> Result<Polynomial> {
    let significant = h.coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
    if significant > d + 1 || d == 0 {
        return Err(Error::DimensionMismatch(format!(
            "h* with {significant} entries does not fit dimension {d}"
        )));
    }
    let mut acc = Polynomial::zero();
    for (j, hj) in h.coeffs.iter().enumerate().take(significant) {
        if hj.is_zero() {
            continue;
        }
        let term = binomial_poly(d as i64 - j as i64, d);
        acc = &acc + &term.scale(&Rational::from_integer(hj.clone()));
    }
    Ok(acc)
}

impl HStar {
    /// Convenience for tests and examples.
    pub fn from_ints(coeffs: &[i64], denom_exponent: usize) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), denom_exponent)
    }

    pub fn is_normalized(&self) -> bool {
        self.coeffs.first().is_some_and(|c| c.is_one())
    }
}
