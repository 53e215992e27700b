//! Auxiliary sequences: the expansion of `(t+r+1)…(t+1)·t·(t-1)` and its sign
//! split, unsigned Stirling rows, cube coefficient sequences, and the
//! decomposition of an `m`-parameterized Ehrhart polynomial into `b + a·m`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::ehrhart::Engine;
use crate::exactnum::{int, Polynomial, Rational};
use crate::polytopes::Construction;
use crate::{Error, Result};

/// Coefficients `s_1..s_{r+3}` of `f_r(t) = (t+r+1)…(t+1)·t·(t-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingExpansion {
    pub r: u64,
    /// `s[j-1]` is the coefficient of `t^j`.
    pub s: Vec<BigInt>,
    /// `s_j < 0` exactly for `j <= delta`.
    pub delta: usize,
}

impl StirlingExpansion {
    pub fn s(&self, j: usize) -> &BigInt {
        &self.s[j - 1]
    }
}

fn rising_poly(roots: impl IntoIterator<Item = i64>) -> Vec<BigInt> {
    // product of (t - root), ascending coefficients
    let mut c = vec![BigInt::one()];
    for root in roots {
        let mut next = vec![BigInt::zero(); c.len() + 1];
        for (k, x) in c.iter().enumerate() {
            next[k + 1] += x;
            next[k] -= x * root;
        }
        c = next;
    }
    c
}

pub fn expand_f(r: u64) -> Result<StirlingExpansion> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be >= 1".into()));
    }
    let roots = (-(r as i64) - 1..=1).collect::<Vec<_>>();
    let coeffs = rising_poly(roots);
    debug_assert!(coeffs[0].is_zero());
    let s: Vec<BigInt> = coeffs[1..].to_vec();
    let delta = s.iter().rposition(|x| x.is_negative()).map_or(0, |i| i + 1);
    let split = s[..delta].iter().all(Signed::is_negative) && s[delta..].iter().all(Signed::is_positive);
    if !split || delta < 2 {
        return Err(Error::Domain(format!("no clean sign split for r = {r}: {s:?}")));
    }
    Ok(StirlingExpansion { r, s, delta })
}

/// `(r, delta)` for `r = 1..=r_max`.
pub fn delta_boundaries(r_max: u64) -> Result<Vec<(u64, usize)>> {
    (1..=r_max).map(|r| expand_f(r).map(|e| (r, e.delta))).collect()
}

/// Maximal runs of equal `delta`, as `(first r, last r, delta)`.
pub fn delta_intervals(r_max: u64) -> Result<Vec<(u64, u64, usize)>> {
    let mut out: Vec<(u64, u64, usize)> = Vec::new();
    for (r, d) in delta_boundaries(r_max)? {
        match out.last_mut() {
            Some(last) if last.2 == d => last.1 = r,
            _ => out.push((r, r, d)),
        }
    }
    Ok(out)
}

/// Unsigned Stirling numbers of the first kind `c(n, 1..=n)`: the
/// coefficients of `t(t+1)…(t+n-1)`.
pub fn stirling_row(n: usize) -> Vec<BigInt> {
    let c = rising_poly((0..n as i64).map(|k| -k));
    c[1..].to_vec()
}

/// Strictly increasing then strictly decreasing, no two neighbours equal.
pub fn is_strictly_unimodal(v: &[BigInt]) -> bool {
    let mut i = 1;
    while i < v.len() && v[i] > v[i - 1] {
        i += 1;
    }
    while i < v.len() && v[i] < v[i - 1] {
        i += 1;
    }
    i >= v.len()
}

/// `B_k = C(n, k)·b^k` for `k = 0..=n`, the coefficients of `(bt + 1)^n`.
pub fn cube_coeff_sequence(b: u64, n: u32) -> Vec<BigInt> {
    (0..=n)
        .map(|k| binomial(BigInt::from(n), BigInt::from(k)) * num_traits::pow(BigInt::from(b), k as usize))
        .collect()
}

/// Ehrhart coefficients written as `b_i + a_i·m`, `i = 1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDecomposition {
    pub n: usize,
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
}

impl FDecomposition {
    /// `a_1, a_2 < 0`, `a_3..a_n > 0` and every `b_i >= 0`.
    pub fn is_member(&self) -> bool {
        let zero = Rational::zero();
        self.n >= 2
            && self.a[0] < zero
            && self.a[1] < zero
            && self.a[2..].iter().all(|x| *x > zero)
            && self.b.iter().all(|x| *x >= zero)
    }

    /// `1 + Σ (b_i + a_i·m) t^i`.
    pub fn at(&self, m: u64) -> Polynomial {
        let mut c = vec![int(1)];
        c.extend(self.a.iter().zip(&self.b).map(|(a, b)| b + a * int(m)));
        Polynomial::new(c)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let list = |v: &[Rational]| v.iter().map(crate::exactnum::rational_to_json).collect::<Vec<_>>();
        serde_json::json!({ "n": self.n, "a": list(&self.a), "b": list(&self.b), "member": self.is_member() })
    }
}

/// Recovers `a`, `b` from the first two probes and checks the third.
pub fn f_family_decompose(
    template: impl Fn(u64) -> Construction,
    probes: [u64; 3],
) -> Result<FDecomposition> {
    f_family_decompose_with(&Engine::default(), template, probes)
}

pub fn f_family_decompose_with(
    engine: &Engine,
    template: impl Fn(u64) -> Construction,
    probes: [u64; 3],
) -> Result<FDecomposition> {
    let [m1, m2, m3] = probes;
    if m1 == m2 || m1 == m3 || m2 == m3 {
        return Err(Error::InvalidParameter(format!("probes must be distinct: {probes:?}")));
    }
    let polys = probes.iter().map(|&m| engine.ehrhart(&template(m))).collect::<Result<Vec<_>>>()?;
    let n = polys[0].degree().unwrap_or(0);
    if polys.iter().any(|p| p.degree() != Some(n)) {
        return Err(Error::NotAffine(format!("degree changes across probes {probes:?}")));
    }
    let (mut a, mut b) = (Vec::with_capacity(n), Vec::with_capacity(n));
    for i in 1..=n {
        let (y1, y2, y3) = (polys[0].coeff(i), polys[1].coeff(i), polys[2].coeff(i));
        let slope = (&y2 - &y1) / (int(m2) - int(m1));
        let intercept = &y1 - &slope * int(m1);
        if &intercept + &slope * int(m3) != y3 {
            return Err(Error::NotAffine(format!("coefficient of t^{i} is not affine in m")));
        }
        a.push(slope);
        b.push(intercept);
    }
    Ok(FDecomposition { n, a, b })
}
