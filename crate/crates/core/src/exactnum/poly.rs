use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{fmt_rational, int, Rational};
use crate::{Error, Result};

/// Dense univariate polynomial in `t` with exact rational coefficients.
///
/// `coeffs[k]` is the coefficient of `t^k`. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients and structural
/// equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `a·t + b`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![b, a])
    }

    pub fn from_ints<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>) -> Self {
        Self::new(coeffs.into_iter().map(|c| int(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&int(x))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p(s·t)`: coefficient `k` is multiplied by `s^k`.
    ///
    /// The Ehrhart polynomial of a dilation `sP` is `substitute_scaled(i(P), s)`.
    pub fn substitute_scaled(&self, s: u64) -> Result<Self> {
        if s < 1 {
            return Err(Error::InvalidParameter(format!("dilation factor must be >= 1, got {s}")));
        }
        let s = BigInt::from(s);
        let mut power = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * Rational::from_integer(power.clone()));
            power *= &s;
        }
        Ok(Self::new(out))
    }

    /// `p(t + c)`, by Horner's rule on the linear polynomial `t + c`.
    pub fn shift(&self, c: &Rational) -> Self {
        let lin = Self::linear(int(1), c.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, k| &(&acc * &lin) + &Self::constant(k.clone()))
    }

    /// Human-readable form, descending degree: `13/6 t^3 + t^2 - 1/6 t + 1`.
    pub fn to_human(&self) -> String {
        self.render(|q, k| {
            let body = fmt_rational(q);
            match k {
                0 => body,
                _ if q.is_one() => monomial(k),
                _ => format!("{body} {}", monomial(k)),
            }
        })
    }

    /// LaTeX form, descending degree with explicit fractions.
    pub fn to_latex(&self) -> String {
        self.render(|q, k| {
            let body = if q.denom().is_one() {
                q.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
            };
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{{{k}}}"),
            };
            if k > 0 && q.is_one() {
                var
            } else {
                format!("{body}{var}")
            }
        })
    }

    fn render(&self, term: impl Fn(&Rational, usize) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = term(&c.abs(), k);
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }

    /// `{"coeffs": [["num","den"], ...]}` ascending by degree.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "coeffs": self.coeffs.iter().map(super::rational_to_json).collect::<Vec<_>>()
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let list = v
            .get("coeffs")
            .unwrap_or(v)
            .as_array()
            .ok_or_else(|| Error::InvalidInput("polynomial JSON needs a coeffs array".into()))?;
        Ok(Self::new(
            list.iter()
                .map(super::rational_from_json)
                .collect::<Result<Vec<_>>>()?,
        ))
    }
}

fn monomial(k: usize) -> String {
    match k {
        1 => "t".into(),
        _ => format!("t^{k}"),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_human())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.to_human())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

/// `C(t + a, b) = (t+a)(t+a-1)…(t+a-b+1) / b!` as a degree-`b` polynomial.
pub fn binomial_poly(a: i64, b: usize) -> Polynomial {
    let mut p = Polynomial::one();
    let mut fact = BigInt::one();
    for i in 0..b {
        p = &p * &Polynomial::linear(int(1), int(a - i as i64));
        fact *= BigInt::from(i + 1);
    }
    p.scale(&Rational::new(BigInt::one(), fact))
}

/// Unique polynomial of degree `< points.len()` through the given points.
pub fn lagrange_interpolate(points: &[(i64, BigInt)]) -> Result<Polynomial> {
    if points.is_empty() {
        return Err(Error::InvalidInput("interpolation needs at least one point".into()));
    }
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::InvalidInput(format!("duplicate abscissa {x}")));
        }
    }
    let mut acc = Polynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Polynomial::one();
        let mut denom = BigInt::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &Polynomial::linear(int(1), int(-xj));
                denom *= BigInt::from(xi - xj);
            }
        }
        acc = &acc + &basis.scale(&Rational::new(yi.clone(), denom));
    }
    Ok(acc)
}
