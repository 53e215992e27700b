//! Lattice-point enumeration in `t·conv(V)` for a full-dimensional point
//! cloud `V`, one coordinate at a time.
//!
//! Level `i` holds the facets of the projection of `conv(V)` onto the first
//! `i` coordinates. Once `x_1..x_{i-1}` lie in the level `i-1` projection,
//! those facets give the exact range of `x_i`.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::linalg::{cofactor_normal, content};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct HullEnumerator {
    dim: usize,
    /// `levels[i]`: inequalities `a · x <= b·t` over the first `i + 1` coordinates.
    levels: Vec<Vec<(Vec<i128>, i128)>>,
}

fn combinations(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn projected_facets(points: &[Vec<i64>], i: usize) -> Result<Vec<(Vec<i128>, i128)>> {
    let mut proj: Vec<Vec<i64>> = points.iter().map(|p| p[..i].to_vec()).collect();
    proj.sort_unstable();
    proj.dedup();
    if i == 1 {
        let lo = proj.first().unwrap()[0] as i128;
        let hi = proj.last().unwrap()[0] as i128;
        return Ok(vec![(vec![1], hi), (vec![-1], -lo)]);
    }
    let big: Vec<Vec<BigInt>> =
        proj.iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    combinations(big.len(), i, |subset| {
        let base = &big[subset[0]];
        let edges: Vec<Vec<BigInt>> = subset[1..]
            .iter()
            .map(|&j| big[j].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let mut normal = cofactor_normal(&edges);
        if normal.iter().all(Zero::is_zero) {
            return;
        }
        let g = content(&normal);
        for x in normal.iter_mut() {
            *x /= &g;
        }
        let offset: BigInt = normal.iter().zip(base).map(|(a, b)| a * b).sum();
        let (mut below, mut above) = (false, false);
        for p in &big {
            let v: BigInt = normal.iter().zip(p).map(|(a, b)| a * b).sum();
            if v < offset {
                below = true;
            } else if v > offset {
                above = true;
            }
        }
        let (normal, offset) = match (below, above) {
            (true, true) => return,
            (_, false) => (normal, offset),
            (false, true) => (normal.into_iter().map(|x| -x).collect(), -offset),
        };
        if seen.insert((normal.clone(), offset.clone())) {
            out.push((normal, offset));
        }
    });
    out.into_iter()
        .map(|(n, o)| {
            let n: Option<Vec<i128>> = n.iter().map(ToPrimitive::to_i128).collect();
            match (n, o.to_i128()) {
                (Some(n), Some(o)) => Ok((n, o)),
                _ => Err(Error::ResourceLimit("facet coefficients exceed 128 bits".into())),
            }
        })
        .collect()
}

impl HullEnumerator {
    /// `points` must be affinely spanning in `Z^n`.
    pub fn new(points: &[Vec<i64>]) -> Result<Self> {
        let dim = points.first().map_or(0, Vec::len);
        if dim == 0 {
            return Err(Error::InvalidInput("empty point cloud".into()));
        }
        let levels = (1..=dim).map(|i| projected_facets(points, i)).collect::<Result<_>>()?;
        Ok(HullEnumerator { dim, levels })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `|tP ∩ Z^n|`, giving up once more than `cap` prefixes were visited.
    pub fn count(&self, t: u64, cap: u64) -> Result<BigInt> {
        let t = t as i128;
        let mut prefix = vec![0i128; self.dim];
        let mut visits = 0u64;
        let n = self.count_level(0, t, &mut prefix, &mut visits, cap)?;
        Ok(BigInt::from(n))
    }

    fn range(&self, level: usize, t: i128, prefix: &[i128]) -> Option<(i128, i128)> {
        let mut lo = i128::MIN;
        let mut hi = i128::MAX;
        for (a, b) in &self.levels[level] {
            let ai = a[level];
            if ai == 0 {
                continue;
            }
            let rest: i128 = a[..level].iter().zip(prefix).map(|(x, y)| x * y).sum();
            let r = b * t - rest;
            if ai > 0 {
                hi = hi.min(Integer::div_floor(&r, &ai));
            } else {
                lo = lo.max(Integer::div_ceil(&r, &ai));
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    fn count_level(
        &self,
        level: usize,
        t: i128,
        prefix: &mut Vec<i128>,
        visits: &mut u64,
        cap: u64,
    ) -> Result<u128> {
        let Some((lo, hi)) = self.range(level, t, prefix) else { return Ok(0) };
        if level + 1 == self.dim {
            return Ok((hi - lo + 1) as u128);
        }
        *visits += (hi - lo + 1) as u64;
        if *visits > cap {
            return Err(Error::ResourceLimit(format!(
                "lattice enumeration passed the work cap of {cap} visits"
            )));
        }
        let mut total = 0u128;
        for x in lo..=hi {
            prefix[level] = x;
            total += self.count_level(level + 1, t, prefix, visits, cap)?;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_enumerate_all() {
        let mut n = 0;
        combinations(6, 3, |_| n += 1);
        assert_eq!(n, 20);
        let mut last = vec![];
        combinations(4, 4, |c| last = c.to_vec());
        assert_eq!(last, vec![0, 1, 2, 3]);
    }

    #[test]
    fn reeve_counts_by_hand() {
        // t = 2, m = 5: 14 points; t = 1: just the vertices
        let pts = vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 5]];
        let e = HullEnumerator::new(&pts).unwrap();
        assert_eq!(e.count(0, 100).unwrap(), BigInt::from(1));
        assert_eq!(e.count(1, 100).unwrap(), BigInt::from(4));
        assert_eq!(e.count(2, 100).unwrap(), BigInt::from(14));
        assert_eq!(e.count(3, 100).unwrap(), BigInt::from(36));
    }

    #[test]
    fn square_and_cap() {
        let pts = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]];
        let e = HullEnumerator::new(&pts).unwrap();
        assert_eq!(e.count(4, 100).unwrap(), BigInt::from(25));
        assert!(matches!(e.count(1000, 10), Err(Error::ResourceLimit(_))));
    }
}
