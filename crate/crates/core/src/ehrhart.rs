//! The symbolic Ehrhart engine.
//!
//! Atoms have closed forms, except simplices, whose h*-vector is read off the
//! cosets of the lattice spanned by the lifted vertices. Pyramids raise the
//! denominator of the Ehrhart series, products multiply, dilations substitute.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::exactnum::{
    binomial_poly, ehrhart_from_hstar, hstar_from_ehrhart, int, rat, HStar, Polynomial, Rational,
};
use crate::linalg::{smith_normal_form, IntMatrix};
use crate::polytopes::{normalized_volume_simplex, polygon_area_boundary, Construction};
use crate::{Error, Result};

pub const DEFAULT_VOLUME_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Largest normalized volume a simplex may have for coset enumeration.
    pub volume_cap: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { volume_cap: DEFAULT_VOLUME_CAP }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Engine {
    pub config: EngineConfig,
}

impl Engine {
    pub fn new(config: EngineConfig) -> Self {
        Engine { config }
    }

    pub fn with_volume_cap(volume_cap: u64) -> Self {
        Engine::new(EngineConfig { volume_cap })
    }

    pub fn ehrhart(&self, c: &Construction) -> Result<Polynomial> {
        c.ensure_valid()?;
        self.eval(c)
    }

    fn eval(&self, c: &Construction) -> Result<Polynomial> {
        use Construction::*;
        Ok(match c {
            Interval(m) => Polynomial::linear(int(*m), int(1)),
            Cube { side, dim } => Polynomial::linear(int(*side), int(1)).pow(*dim),
            Reeve(m) => reeve_closed_form(*m),
            Simplex(rows) => {
                let h = self.hstar_simplex(c)?;
                ehrhart_from_hstar(&h, rows.len() - 1)?
            }
            Polygon(_) => ehrhart_polygon(c)?,
            Product(a, b) => &self.eval(a)? * &self.eval(b)?,
            Dilate(s, inner) => self.eval(inner)?.substitute_scaled(*s)?,
            Pyramid(inner, k) => {
                let p = self.eval(inner)?;
                let d = p.degree().unwrap_or(0);
                let h = hstar_from_ehrhart(&p)?.pyramid(*k as usize);
                ehrhart_from_hstar(&h, d + *k as usize)?
            }
        })
    }

    /// h*-vector of a full-dimensional lattice simplex.
    ///
    /// With `W` the matrix whose columns are the lifted vertices `(v_i, 1)`
    /// and `L·W·R = diag(d)`, the lattice points of the half-open
    /// parallelepiped correspond to `y ∈ Π [0, d_i)`; the point for `y` has
    /// barycentric coordinates `frac(R·diag(d)⁻¹·y)` and height equal to
    /// their sum.
    pub fn hstar_simplex(&self, s: &Construction) -> Result<HStar> {
        let volume = normalized_volume_simplex(s)?;
        if volume > BigInt::from(self.config.volume_cap) {
            return Err(Error::ResourceLimit(format!(
                "simplex normalized volume {volume} exceeds cap {}",
                self.config.volume_cap
            )));
        }
        let Construction::Simplex(rows) = s else { unreachable!() };
        let k = rows.len() - 1;
        let lifted: IntMatrix = (0..=k)
            .map(|r| {
                (0..=k)
                    .map(|i| if r < k { BigInt::from(rows[i][r]) } else { BigInt::from(1) })
                    .collect()
            })
            .collect();
        let snf = smith_normal_form(&lifted);
        let d: Vec<u64> = snf.factors.iter().map(|x| x.to_u64().expect("factor within cap")).collect();
        let e = d.iter().copied().fold(1u64, |a, b| a.lcm(&b));

        // M[j][i] = R[j][i]·(E/d_i) mod E, for the nontrivial factors only
        let active: Vec<usize> = (0..=k).filter(|&i| d[i] > 1).collect();
        let cols: Vec<Vec<u64>> = active
            .iter()
            .map(|&i| {
                let scale = BigInt::from(e / d[i]);
                (0..=k)
                    .map(|j| (&snf.right[j][i] * &scale).mod_floor(&BigInt::from(e)).to_u64().unwrap())
                    .collect()
            })
            .collect();

        let mut counts = vec![0u64; k + 1];
        let mut acc = vec![0u64; k + 1];
        let mut y = vec![0u64; active.len()];
        loop {
            let total: u64 = acc.iter().sum();
            debug_assert_eq!(total % e, 0);
            counts[(total / e) as usize] += 1;

            // odometer step; a digit wrapping from d_i - 1 to 0 adds d_i
            // copies of its column, which is 0 mod E
            let mut p = 0;
            loop {
                if p == active.len() {
                    let coeffs = counts.into_iter().map(BigInt::from).collect();
                    return HStar::new(coeffs, k + 1);
                }
                for (a, m) in acc.iter_mut().zip(&cols[p]) {
                    *a = (*a + m) % e;
                }
                y[p] += 1;
                if y[p] < d[active[p]] {
                    break;
                }
                y[p] = 0;
                p += 1;
            }
        }
    }
}

fn reeve_closed_form(m: u64) -> Polynomial {
    let m = BigInt::from(m);
    let six = BigInt::from(6);
    Polynomial::new(vec![
        int(1),
        Rational::new(BigInt::from(12) - &m, six.clone()),
        int(1),
        Rational::new(m, six),
    ])
}

/// Exact Ehrhart polynomial of a valid construction, with default caps.
pub fn ehrhart(c: &Construction) -> Result<Polynomial> {
    Engine::default().ehrhart(c)
}

pub fn hstar_simplex(s: &Construction) -> Result<HStar> {
    s.ensure_valid()?;
    Engine::default().hstar_simplex(s)
}

/// `C(t+k+3, k+3) + (m-1)·C(t+k+1, k+3)`.
pub fn ehrhart_pyr_reeve(k: u32, m: u64) -> Polynomial {
    let d = k as usize + 3;
    let top = binomial_poly(d as i64, d);
    let low = binomial_poly(k as i64 + 1, d).scale(&(int(m) - int(1)));
    &top + &low
}

/// `a t² + (b/2) t + 1` from area `a` and `b` boundary points.
pub fn ehrhart_polygon(p: &Construction) -> Result<Polynomial> {
    let data = polygon_area_boundary(p)?;
    Ok(Polynomial::new(vec![
        int(1),
        Rational::from_integer(data.boundary_points) * rat(1, 2),
        data.area,
    ]))
}

/// The constant term must be 1 and the top two coefficients positive.
pub fn is_plausible_ehrhart(p: &Polynomial) -> bool {
    let Some(d) = p.degree() else { return false };
    let pos = |k: usize| p.coeff(k) > Rational::zero();
    p.coeff(0) == int(1) && pos(d) && (d == 0 || pos(d - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytopes::Construction::*;
    use proptest::prelude::*;

    fn unit_rows(k: usize) -> Vec<Vec<i64>> {
        let mut rows = vec![vec![0; k]];
        for i in 0..k {
            let mut e = vec![0; k];
            e[i] = 1;
            rows.push(e);
        }
        rows
    }

    fn hs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn reeve_13_has_negative_linear_term() {
        let p = ehrhart(&Reeve(13)).unwrap();
        assert_eq!(p, Polynomial::new(vec![int(1), rat(-1, 6), int(1), rat(13, 6)]));
    }

    #[test]
    fn three_reeve_paths_agree() {
        for m in [1, 5, 12, 13, 100, 1000] {
            let closed = ehrhart(&Reeve(m)).unwrap();
            assert_eq!(ehrhart(&Construction::reeve_simplex(m)).unwrap(), closed);
            assert_eq!(ehrhart_pyr_reeve(0, m), closed);
        }
    }

    #[test]
    fn simplex_hstar_examples() {
        let h = hstar_simplex(&Construction::reeve_simplex(100)).unwrap();
        assert_eq!(h.coeffs(), &hs(&[1, 0, 99, 0])[..]);

        for k in 1..7 {
            let h = hstar_simplex(&Simplex(unit_rows(k))).unwrap();
            assert_eq!(h.sum(), BigInt::from(1));
        }

        let mut rows = unit_rows(5);
        rows[3] = vec![0, 0, 1, 0, 1];
        rows[4] = vec![0, 0, 0, 1, 1];
        rows[5] = vec![3, 4, 5, 8, 754];
        let h = hstar_simplex(&Simplex(rows)).unwrap();
        assert_eq!(h.coeffs(), &hs(&[1, 0, 181, 388, 171, 0])[..]);

        let mut rows = unit_rows(7);
        rows[7] = vec![1, 1, 1, 1000, 1000, 1000, 1001];
        let h = hstar_simplex(&Simplex(rows)).unwrap();
        assert_eq!(h.coeffs(), &hs(&[1, 0, 0, 0, 1000, 0, 0, 0])[..]);
    }

    #[test]
    fn volume_cap_is_enforced() {
        let engine = Engine::with_volume_cap(50);
        let err = engine.ehrhart(&Construction::reeve_simplex(100)).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(ref s) if s.contains("100")));
        // dilation goes through substitution, never through the cap
        assert!(engine.ehrhart(&Construction::dilate(1000, Reeve(100))).is_ok());
    }

    #[test]
    fn pyramid_formulas() {
        let m = 100;
        let k1 = ehrhart_pyr_reeve(1, m);
        let printed = Polynomial::new(vec![
            int(1),
            rat(26 - m as i64, 12),
            rat(36 - m as i64, 24),
            rat(m as i64 + 4, 12),
            rat(m as i64, 24),
        ]);
        assert_eq!(k1, printed);
        let k2 = ehrhart_pyr_reeve(2, 100);
        let expected = Polynomial::new(vec![
            int(1),
            rat(-160, 60),
            rat(-54, 24),
            rat(116, 24),
            rat(102, 24),
            rat(100, 120),
        ]);
        assert_eq!(k2, expected);
        for k in 0..=5 {
            for m in [10, 100, 1000] {
                let c = Construction::pyramid(Reeve(m), k);
                let direct = if k == 0 { ehrhart(&Reeve(m)) } else { ehrhart(&c) };
                assert_eq!(direct.unwrap(), ehrhart_pyr_reeve(k, m));
            }
        }
    }

    #[test]
    fn zero_coefficient_example() {
        let c = Construction::product(Construction::pyramid(Reeve(48), 1), Reeve(20));
        let p = ehrhart(&c).unwrap();
        let expected = Polynomial::new(vec![
            int(1),
            rat(-19, 6),
            rat(53, 18),
            rat(13, 2),
            rat(-187, 18),
            int(0),
            rat(148, 9),
            rat(20, 3),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn polygons() {
        let p = ehrhart_polygon(&Construction::thin_parallelogram(20)).unwrap();
        assert_eq!(p, Polynomial::from_ints([1, 2, 20]));
        let sq = Polygon(vec![[0, 0], [1, 0], [1, 1], [0, 1]]);
        assert_eq!(ehrhart(&sq).unwrap(), Polynomial::from_ints([1, 2, 1]));
        let tri = Polygon(vec![[0, 0], [1, 0], [0, 1]]);
        assert_eq!(ehrhart(&tri).unwrap(), Polynomial::new(vec![int(1), rat(3, 2), rat(1, 2)]));
    }

    #[test]
    fn plus_minus_plus_leading_coefficient() {
        let mut rows = unit_rows(5);
        rows[5] = vec![3, 4, 5, 8, 371];
        let c = Construction::product(
            Construction::dilate(99, Simplex(rows)),
            Construction::thin_parallelogram(1_000_000),
        );
        let p = ehrhart(&c).unwrap();
        assert_eq!(p.degree(), Some(7));
        assert_eq!(*p.leading().unwrap(), int(29_401_442_376_075_000u64));
    }

    #[test]
    fn plausibility() {
        assert!(is_plausible_ehrhart(&ehrhart(&Reeve(1000)).unwrap()));
        assert!(!is_plausible_ehrhart(&Polynomial::from_ints([1, -1, 1])));
    }

    fn small_simplex() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (2usize..5).prop_flat_map(|k| {
            proptest::collection::vec(proptest::collection::vec(-4i64..5, k), k + 1)
        })
    }

    proptest! {
        #[test]
        fn hstar_sums_to_volume(rows in small_simplex()) {
            let s = Simplex(rows);
            prop_assume!(s.validate().is_valid());
            let h = hstar_simplex(&s).unwrap();
            prop_assert_eq!(h.coeffs()[0].clone(), BigInt::from(1));
            prop_assert_eq!(h.sum(), normalized_volume_simplex(&s).unwrap());
            // normalized volume = d! · leading coefficient
            let p = ehrhart(&s).unwrap();
            let d = p.degree().unwrap();
            let fact: BigInt = (1..=d as u64).map(BigInt::from).product();
            prop_assert_eq!(p.leading().unwrap() * Rational::from_integer(fact), Rational::from_integer(h.sum()));
        }
    }
}
