use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{big_rows, Construction};
use crate::linalg::{cofactor_normal, content, det, dot};
use crate::{Error, Result};

/// `normal · x <= offset`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl Facet {
    pub fn slack(&self, x: &[BigInt]) -> BigInt {
        &self.offset - dot(&self.normal, x)
    }
}

/// H-description of a simplex: one inequality per omitted vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexFacets {
    pub inequalities: Vec<Facet>,
}

impl SimplexFacets {
    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.inequalities.iter().all(|f| !f.slack(x).is_negative())
    }
}

pub(super) fn edge_determinant(rows: &[Vec<i64>]) -> BigInt {
    let v = big_rows(rows);
    let edges: Vec<Vec<BigInt>> = v[1..]
        .iter()
        .map(|r| r.iter().zip(&v[0]).map(|(a, b)| a - b).collect())
        .collect();
    det(&edges)
}

fn simplex_rows(s: &Construction) -> Result<&[Vec<i64>]> {
    match s {
        Construction::Simplex(rows) => {
            s.ensure_valid()?;
            Ok(rows)
        }
        other => Err(Error::InvalidInput(format!("not a simplex: {other}"))),
    }
}

/// `|det(v1 - v0, …, vk - v0)|`, i.e. `k!` times the euclidean volume.
pub fn normalized_volume_simplex(s: &Construction) -> Result<BigInt> {
    Ok(edge_determinant(simplex_rows(s)?).abs())
}

/// Content-reduced facet inequalities of a full-dimensional simplex, the
/// `i`-th omitting vertex `i`.
pub fn facet_inequalities_simplex(s: &Construction) -> Result<SimplexFacets> {
    let rows = big_rows(simplex_rows(s)?);
    let k = rows.len() - 1;
    let mut inequalities = Vec::with_capacity(k + 1);
    for omit in 0..=k {
        let on: Vec<&Vec<BigInt>> = rows.iter().enumerate().filter(|&(i, _)| i != omit).map(|(_, r)| r).collect();
        let base = on[0];
        let edges: Vec<Vec<BigInt>> = on[1..]
            .iter()
            .map(|r| r.iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let mut normal = if k == 1 { vec![BigInt::from(1)] } else { cofactor_normal(&edges) };
        let g = content(&normal);
        for x in normal.iter_mut() {
            *x /= &g;
        }
        let mut offset = dot(&normal, base);
        if dot(&normal, &rows[omit]) > offset {
            for x in normal.iter_mut() {
                *x = -&*x;
            }
            offset = -offset;
        }
        debug_assert!(!normal.iter().all(Zero::is_zero));
        inequalities.push(Facet { normal, offset });
    }
    Ok(SimplexFacets { inequalities })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn unit_simplex(k: usize) -> Vec<Vec<i64>> {
        let mut rows = vec![vec![0; k]];
        for i in 0..k {
            let mut e = vec![0; k];
            e[i] = 1;
            rows.push(e);
        }
        rows
    }

    fn bigv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn volumes() {
        let mut rows = unit_simplex(7);
        rows.pop();
        rows.push(vec![1, 1, 1, 1000, 1000, 1000, 1001]);
        assert_eq!(normalized_volume_simplex(&Construction::Simplex(rows)).unwrap(), BigInt::from(1001));

        for k in 1..8 {
            let s = Construction::Simplex(unit_simplex(k));
            assert_eq!(normalized_volume_simplex(&s).unwrap(), BigInt::from(1));
        }

        let mut rows = unit_simplex(4);
        for r in rows.iter_mut() {
            r.push(0);
        }
        rows.push(vec![3, 4, 5, 8, 371]);
        assert_eq!(normalized_volume_simplex(&Construction::Simplex(rows)).unwrap(), BigInt::from(371));

        let degenerate = Construction::Simplex(vec![vec![0, 0], vec![1, 1], vec![2, 2]]);
        assert!(matches!(normalized_volume_simplex(&degenerate), Err(Error::Validation(_))));
    }

    #[test]
    fn reeve_facets() {
        let m = 13;
        let f = facet_inequalities_simplex(&Construction::reeve_simplex(m)).unwrap();
        assert_eq!(f.inequalities.len(), 4);
        // facet opposite the apex is z >= 0
        assert_eq!(f.inequalities[3].normal, bigv(&[0, 0, -1]));
        assert_eq!(f.inequalities[3].offset, BigInt::zero());
        let verts = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, m as i64]];
        for v in &verts {
            assert!(f.contains(&bigv(v)));
        }
        // centroid, scaled by 4 against the scaled inequalities
        let c = bigv(&[2, 2, m as i64]);
        for ineq in &f.inequalities {
            assert!(&ineq.offset * 4 - dot(&ineq.normal, &c) > BigInt::zero());
        }
    }

    #[test]
    fn low_dimensional_facets() {
        let seg = facet_inequalities_simplex(&Construction::Simplex(vec![vec![0], vec![1]])).unwrap();
        let pairs: Vec<(Vec<BigInt>, BigInt)> =
            seg.inequalities.iter().map(|f| (f.normal.clone(), f.offset.clone())).collect();
        assert!(pairs.contains(&(bigv(&[-1]), BigInt::zero())));
        assert!(pairs.contains(&(bigv(&[1]), BigInt::from(1))));

        let tri = facet_inequalities_simplex(&Construction::Simplex(unit_simplex(2))).unwrap();
        let pairs: Vec<(Vec<BigInt>, BigInt)> =
            tri.inequalities.iter().map(|f| (f.normal.clone(), f.offset.clone())).collect();
        assert!(pairs.contains(&(bigv(&[1, 1]), BigInt::from(1))));
        assert!(pairs.contains(&(bigv(&[-1, 0]), BigInt::zero())));
        assert!(pairs.contains(&(bigv(&[0, -1]), BigInt::zero())));
    }

    proptest! {
        #[test]
        fn vertices_tight_on_k_facets(coords in proptest::collection::vec(-6i64..7, 12)) {
            let rows: Vec<Vec<i64>> = coords.chunks(3).map(|c| c.to_vec()).collect();
            let s = Construction::Simplex(rows.clone());
            prop_assume!(s.validate().is_valid());
            let f = facet_inequalities_simplex(&s).unwrap();
            for (i, v) in rows.iter().enumerate() {
                let v = bigv(v);
                let tight = f.inequalities.iter().filter(|q| q.slack(&v).is_zero()).count();
                prop_assert!(f.contains(&v));
                prop_assert_eq!(tight, 3);
                prop_assert!(f.inequalities[i].slack(&v) > BigInt::zero());
            }
        }
    }
}
