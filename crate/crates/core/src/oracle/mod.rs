//! Brute-force lattice-point counting over the construction tree, used as
//! ground truth for the symbolic engine.
//!
//! Nothing here touches h*-vectors or closed forms: Reeve tetrahedra,
//! simplices and polygons are enumerated point by point, pyramids are summed
//! slice by slice, and dilations rescale `t`.

mod hull;

pub use hull::HullEnumerator;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::ehrhart::Engine;
use crate::exactnum::{lagrange_interpolate, Polynomial};
use crate::polytopes::{normalized_volume_simplex, polygon_area_boundary, vertex_cloud, Construction};
use crate::{Error, Result};

pub const DEFAULT_WORK_CAP: u64 = 100_000_000;

#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    /// Upper bound on visited lattice prefixes per enumeration.
    pub work_cap: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { work_cap: DEFAULT_WORK_CAP }
    }
}

fn reeve_points(m: u64) -> Vec<Vec<i64>> {
    vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, m as i64]]
}

impl Oracle {
    pub fn with_work_cap(work_cap: u64) -> Self {
        Oracle { work_cap }
    }

    /// `|tP ∩ Z^n|`.
    pub fn count_points(&self, c: &Construction, t: u64) -> Result<BigInt> {
        c.ensure_valid()?;
        Ok(self.counts(c, &[t])?.pop().unwrap())
    }

    /// Counts at each of `ts`, in the same order.
    pub fn counts_at(&self, c: &Construction, ts: &[u64]) -> Result<Vec<BigInt>> {
        c.ensure_valid()?;
        self.counts(c, ts)
    }

    fn counts(&self, c: &Construction, ts: &[u64]) -> Result<Vec<BigInt>> {
        use Construction::*;
        match c {
            Interval(m) => Ok(ts.iter().map(|&t| BigInt::from(*m) * t + 1).collect()),
            Cube { side, dim } => Ok(ts
                .iter()
                .map(|&t| num_traits::pow(BigInt::from(*side) * t + 1, *dim as usize))
                .collect()),
            Reeve(m) => self.enumerate(&reeve_points(*m), &BigInt::from(*m), ts),
            Simplex(rows) => self.enumerate(rows, &normalized_volume_simplex(c)?, ts),
            Polygon(vs) => {
                let twice_area = polygon_area_boundary(c)?.area * BigInt::from(2);
                let rows: Vec<Vec<i64>> = vs.iter().map(|v| v.to_vec()).collect();
                self.enumerate(&rows, &twice_area.to_integer(), ts)
            }
            Product(a, b) => {
                let ca = self.counts(a, ts)?;
                let cb = self.counts(b, ts)?;
                Ok(ca.into_iter().zip(cb).map(|(x, y)| x * y).collect())
            }
            Dilate(s, inner) => {
                let scaled = ts
                    .iter()
                    .map(|&t| {
                        t.checked_mul(*s)
                            .ok_or_else(|| Error::ResourceLimit(format!("dilation {s}·{t} overflows")))
                    })
                    .collect::<Result<Vec<u64>>>()?;
                self.counts(inner, &scaled)
            }
            Pyramid(inner, k) => {
                // slice j of Pyr(P)·t is a copy of (t-j)·P; summing over
                // j and iterating gives the k-fold pyramid
                let top = ts.iter().copied().max().unwrap_or(0);
                let all: Vec<u64> = (0..=top).collect();
                let mut seq = self.counts(inner, &all)?;
                for _ in 0..*k {
                    let mut acc = BigInt::zero();
                    for x in seq.iter_mut() {
                        acc += &*x;
                        *x = acc.clone();
                    }
                }
                Ok(ts.iter().map(|&t| seq[t as usize].clone()).collect())
            }
        }
    }

    fn enumerate(&self, points: &[Vec<i64>], volume: &BigInt, ts: &[u64]) -> Result<Vec<BigInt>> {
        let n = points[0].len();
        let hull = HullEnumerator::new(points)?;
        ts.iter()
            .map(|&t| {
                if t == 0 {
                    return Ok(BigInt::one());
                }
                let estimate = volume * binomial(BigInt::from(t + n as u64), BigInt::from(n));
                if estimate > BigInt::from(self.work_cap) {
                    return Err(Error::ResourceLimit(format!(
                        "estimated {estimate} lattice points at t = {t} exceeds work cap {}",
                        self.work_cap
                    )));
                }
                hull.count(t, self.work_cap)
            })
            .collect()
    }

    /// Count by a single enumeration over the vertex set of the whole
    /// construction, bypassing the product and pyramid rules. Only for small
    /// constructions: facets are found by brute force over vertex subsets.
    pub fn count_points_flat(&self, c: &Construction, t: u64) -> Result<BigInt> {
        let pts = vertex_cloud(c)?;
        if pts.len() > 40 {
            return Err(Error::ResourceLimit(format!(
                "{} vertices is too many for flat enumeration",
                pts.len()
            )));
        }
        if t == 0 {
            return Ok(BigInt::one());
        }
        HullEnumerator::new(&pts)?.count(t, self.work_cap)
    }

    /// Interpolates the counts at `t = 0..=d`.
    pub fn interpolated_ehrhart(&self, c: &Construction) -> Result<Polynomial> {
        let counts = self.node_counts(c)?;
        let points: Vec<(i64, BigInt)> =
            counts.into_iter().map(|(t, n)| (t as i64, n)).collect();
        lagrange_interpolate(&points)
    }

    fn node_counts(&self, c: &Construction) -> Result<Vec<(u64, BigInt)>> {
        let d = c.dimension()? as u64;
        let counts = (0..=d)
            .into_par_iter()
            .map(|t| self.counts(c, &[t]).map(|mut v| (t, v.pop().unwrap())))
            .collect::<Result<Vec<_>>>()?;
        Ok(counts)
    }

    /// Symbolic polynomial from `engine` against the interpolated counts.
    pub fn cross_check(&self, engine: &Engine, c: &Construction) -> Result<CheckReport> {
        let symbolic = engine.ehrhart(c)?;
        let counts = self.node_counts(c)?;
        let points: Vec<(i64, BigInt)> = counts.iter().map(|(t, n)| (*t as i64, n.clone())).collect();
        let interpolated = lagrange_interpolate(&points)?;
        let first_difference = first_difference(&symbolic, &interpolated);
        Ok(CheckReport {
            expr: c.to_string(),
            equal: first_difference.is_none(),
            symbolic,
            interpolated,
            counts,
            first_difference,
        })
    }
}

/// Lowest degree at which the coefficients differ.
pub fn first_difference(p: &Polynomial, q: &Polynomial) -> Option<usize> {
    let n = p.coeffs().len().max(q.coeffs().len());
    (0..n).find(|&k| p.coeff(k) != q.coeff(k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub expr: String,
    pub symbolic: Polynomial,
    pub interpolated: Polynomial,
    pub equal: bool,
    pub counts: Vec<(u64, BigInt)>,
    pub first_difference: Option<usize>,
}

impl CheckReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "expr": self.expr,
            "symbolic": self.symbolic.to_json(),
            "interpolated": self.interpolated.to_json(),
            "equal": self.equal,
            "counts": self.counts.iter().map(|(t, n)| serde_json::json!([t.to_string(), n.to_string()])).collect::<Vec<_>>(),
            "first_difference": self.first_difference,
        })
    }
}

pub fn count_points(c: &Construction, t: u64) -> Result<BigInt> {
    Oracle::default().count_points(c, t)
}

pub fn interpolated_ehrhart(c: &Construction) -> Result<Polynomial> {
    Oracle::default().interpolated_ehrhart(c)
}

pub fn cross_check(c: &Construction) -> Result<CheckReport> {
    Oracle::default().cross_check(&Engine::default(), c)
}
