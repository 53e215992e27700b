//! Polytope constructions: full-dimensional lattice atoms combined by
//! Cartesian products, pyramids, and integer dilations.

mod polygon;
mod simplex;

pub use polygon::{boundary_order, polygon_area_boundary, PolygonData};
pub use simplex::{facet_inequalities_simplex, normalized_volume_simplex, Facet, SimplexFacets};

use std::fmt;

use num_traits::Zero;

use crate::linalg;
use crate::{Error, Result};

/// A lattice polytope described as a tree of atoms and combinators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    /// The segment `[0, m]`.
    Interval(u64),
    /// `[0, side]^dim`.
    Cube { side: u64, dim: u32 },
    /// Reeve tetrahedron `conv{0, e1, e2, (1,1,m)}`.
    Reeve(u64),
    /// `k + 1` vertices in `Z^k`.
    Simplex(Vec<Vec<i64>>),
    /// Convex polygon given by its vertex set; every listed point must be
    /// a vertex of the convex hull.
    Polygon(Vec<[i64; 2]>),
    Product(Box<Construction>, Box<Construction>),
    /// `k`-fold pyramid with a new unit apex each time.
    Pyramid(Box<Construction>, u32),
    /// Integer dilation `s·P`.
    Dilate(u64, Box<Construction>),
}

impl Construction {
    pub fn product(a: Construction, b: Construction) -> Self {
        Construction::Product(Box::new(a), Box::new(b))
    }

    /// Left-nested product of all factors; panics on an empty list.
    pub fn product_of(factors: impl IntoIterator<Item = Construction>) -> Self {
        let mut it = factors.into_iter();
        let first = it.next().expect("product of no factors");
        it.fold(first, Construction::product)
    }

    pub fn pyramid(inner: Construction, k: u32) -> Self {
        Construction::Pyramid(Box::new(inner), k)
    }

    pub fn dilate(s: u64, inner: Construction) -> Self {
        Construction::Dilate(s, Box::new(inner))
    }

    /// The Reeve tetrahedron written out as an explicit simplex.
    pub fn reeve_simplex(m: u64) -> Self {
        Construction::Simplex(vec![
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![1, 1, m as i64],
        ])
    }

    /// `conv{(0,0), (1,0), (1,a), (2,a)}`: area `a`, four boundary points.
    pub fn thin_parallelogram(a: u64) -> Self {
        let a = a as i64;
        Construction::Polygon(vec![[0, 0], [1, 0], [1, a], [2, a]])
    }

    pub fn validate(&self) -> ValidationReport {
        match check(self) {
            Ok(dimension) => ValidationReport { dimension: Some(dimension), violation: None },
            Err(v) => ValidationReport { dimension: None, violation: Some(v) },
        }
    }

    /// Dimension of a valid construction.
    pub fn dimension(&self) -> Result<usize> {
        check(self).map_err(|v| Error::Validation(v.to_string()))
    }

    /// Validation as a `Result`, for callers that just want to bail out.
    pub fn ensure_valid(&self) -> Result<usize> {
        self.dimension()
    }
}

/// Outcome of [`Construction::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub dimension: Option<usize>,
    /// First violated rule, in tree order.
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    PositiveParameter,
    VertexShape,
    AffineIndependence,
    PolygonVertexCount,
    PolygonConvexity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rule = match self.rule {
            Rule::PositiveParameter => "parameters must be positive",
            Rule::VertexShape => "simplex needs k+1 vertices in Z^k",
            Rule::AffineIndependence => "simplex vertices must be affinely independent",
            Rule::PolygonVertexCount => "polygon needs at least 3 vertices",
            Rule::PolygonConvexity => "polygon vertices must be in strictly convex position",
        };
        write!(f, "{rule}: {}", self.detail)
    }
}

fn violation(rule: Rule, detail: impl Into<String>) -> Violation {
    Violation { rule, detail: detail.into() }
}

fn check(c: &Construction) -> std::result::Result<usize, Violation> {
    use Construction::*;
    let positive = |name: &str, v: u64| {
        if v == 0 {
            Err(violation(Rule::PositiveParameter, format!("{name} = 0")))
        } else {
            Ok(())
        }
    };
    match c {
        Interval(m) => positive("interval length", *m).map(|_| 1),
        Cube { side, dim } => {
            positive("cube side", *side)?;
            positive("cube dimension", u64::from(*dim))?;
            Ok(*dim as usize)
        }
        Reeve(m) => positive("reeve height", *m).map(|_| 3),
        Simplex(rows) => {
            let k = rows.len().saturating_sub(1);
            if k == 0 || rows.iter().any(|r| r.len() != k) {
                return Err(violation(
                    Rule::VertexShape,
                    format!("{} vertices with lengths {:?}", rows.len(), rows.iter().map(Vec::len).collect::<Vec<_>>()),
                ));
            }
            if simplex::edge_determinant(rows).is_zero() {
                return Err(violation(Rule::AffineIndependence, format!("{rows:?}")));
            }
            Ok(k)
        }
        Polygon(vs) => {
            polygon::check_convex(vs)?;
            Ok(2)
        }
        Product(a, b) => Ok(check(a)? + check(b)?),
        Pyramid(inner, k) => {
            positive("pyramid height", u64::from(*k))?;
            Ok(check(inner)? + *k as usize)
        }
        Dilate(s, inner) => {
            positive("dilation factor", *s)?;
            check(inner)
        }
    }
}

fn fmt_vertices<T: AsRef<[i64]>>(f: &mut fmt::Formatter<'_>, rows: &[T]) -> fmt::Result {
    for (i, r) in rows.iter().enumerate() {
        if i > 0 {
            f.write_str(";")?;
        }
        let parts: Vec<String> = r.as_ref().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))?;
    }
    Ok(())
}

/// Renders the construction DSL; parsing the output gives back the same tree.
impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Construction::*;
        match self {
            Interval(m) => write!(f, "interval({m})"),
            Cube { side, dim } => write!(f, "cube({side},{dim})"),
            Reeve(m) => write!(f, "reeve({m})"),
            Simplex(rows) => {
                f.write_str("simplex(")?;
                fmt_vertices(f, rows)?;
                f.write_str(")")
            }
            Polygon(vs) => {
                f.write_str("polygon(")?;
                fmt_vertices(f, vs)?;
                f.write_str(")")
            }
            Product(a, b) => {
                write!(f, "{a} * ")?;
                if matches!(**b, Product(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            Pyramid(inner, 1) => write!(f, "pyr({inner})"),
            Pyramid(inner, k) => write!(f, "pyr({inner},{k})"),
            Dilate(s, inner) => write!(f, "dilate({s},{inner})"),
        }
    }
}

/// Explicit vertex list of the whole construction (products expand to all
/// vertex pairs). Only sensible for small constructions.
pub fn vertex_cloud(c: &Construction) -> Result<Vec<Vec<i64>>> {
    use Construction::*;
    c.ensure_valid()?;
    fn go(c: &Construction) -> Result<Vec<Vec<i64>>> {
        Ok(match c {
            Interval(m) => vec![vec![0], vec![*m as i64]],
            Cube { side, dim } => {
                let mut out = vec![vec![]];
                for _ in 0..*dim {
                    out = out
                        .into_iter()
                        .flat_map(|v: Vec<i64>| {
                            [0, *side as i64].into_iter().map(move |x| {
                                let mut w = v.clone();
                                w.push(x);
                                w
                            })
                        })
                        .collect();
                }
                out
            }
            Reeve(m) => vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, *m as i64]],
            Simplex(rows) => rows.clone(),
            Polygon(vs) => vs.iter().map(|v| v.to_vec()).collect(),
            Product(a, b) => {
                let (va, vb) = (go(a)?, go(b)?);
                va.iter()
                    .flat_map(|x| vb.iter().map(move |y| [x.as_slice(), y.as_slice()].concat()))
                    .collect()
            }
            Pyramid(inner, k) => {
                let mut vs = go(inner)?;
                for _ in 0..*k {
                    let n = vs[0].len();
                    for v in vs.iter_mut() {
                        v.push(0);
                    }
                    let mut apex = vec![0; n + 1];
                    apex[n] = 1;
                    vs.push(apex);
                }
                vs
            }
            Dilate(s, inner) => {
                let s = i64::try_from(*s)
                    .map_err(|_| Error::InvalidParameter(format!("dilation {s} too large")))?;
                go(inner)?
                    .into_iter()
                    .map(|v| {
                        v.into_iter()
                            .map(|x| {
                                x.checked_mul(s).ok_or_else(|| {
                                    Error::InvalidParameter("vertex coordinate overflow".into())
                                })
                            })
                            .collect::<Result<Vec<i64>>>()
                    })
                    .collect::<Result<_>>()?
            }
        })
    }
    go(c)
}

pub(crate) fn big_rows(rows: &[Vec<i64>]) -> linalg::IntMatrix {
    linalg::to_big(rows)
}


#[cfg(test)]
mod tests {
    use super::*;
    use Construction::*;

    #[test]
    fn validate_examples() {
        let r = Reeve(13).validate();
        assert!(r.is_valid());
        assert_eq!(r.dimension, Some(3));

        let collinear = Simplex(vec![vec![0, 0], vec![1, 0], vec![2, 0]]);
        let r = collinear.validate();
        assert_eq!(r.violation.unwrap().rule, Rule::AffineIndependence);

        let quad = Construction::thin_parallelogram(20);
        assert!(quad.validate().is_valid());

        assert_eq!(Interval(0).validate().violation.unwrap().rule, Rule::PositiveParameter);
        let ragged = Simplex(vec![vec![0, 0], vec![1]]);
        assert_eq!(ragged.validate().violation.unwrap().rule, Rule::VertexShape);
    }

    #[test]
    fn first_violation_is_reported() {
        let c = Construction::product(
            Simplex(vec![vec![0, 0], vec![1, 1], vec![2, 2]]),
            Interval(0),
        );
        assert_eq!(c.validate().violation.unwrap().rule, Rule::AffineIndependence);
    }

    #[test]
    fn dimensions() {
        assert_eq!(Construction::pyramid(Reeve(7), 2).dimension().unwrap(), 5);
        for n in 1..6 {
            let c = Construction::product(
                Construction::pyramid(Reeve(30), 1),
                Cube { side: n, dim: n as u32 },
            );
            assert_eq!(c.dimension().unwrap(), n as usize + 4);
        }
        let mut rows = vec![vec![0; 5]];
        for i in 0..4 {
            let mut e = vec![0; 5];
            e[i] = 1;
            rows.push(e);
        }
        rows.push(vec![3, 4, 5, 8, 371]);
        assert_eq!(Construction::dilate(99, Simplex(rows)).dimension().unwrap(), 5);
        assert!(matches!(Interval(0).dimension(), Err(Error::Validation(_))));
    }

    #[test]
    fn display_is_dsl() {
        let c = Construction::product(
            Construction::product(Construction::pyramid(Reeve(48), 1), Reeve(20)),
            Construction::product(Interval(3), Construction::dilate(2, Cube { side: 2, dim: 3 })),
        );
        assert_eq!(
            c.to_string(),
            "pyr(reeve(48)) * reeve(20) * (interval(3) * dilate(2,cube(2,3)))"
        );
        let s = Simplex(vec![vec![0, 0], vec![1, 0], vec![0, -1]]);
        assert_eq!(s.to_string(), "simplex([0,0];[1,0];[0,-1])");
        assert_eq!(Construction::pyramid(Interval(1), 3).to_string(), "pyr(interval(1),3)");
    }

    #[test]
    fn vertex_clouds() {
        let c = Construction::product(Interval(2), Construction::pyramid(Interval(1), 1));
        let vs = vertex_cloud(&c).unwrap();
        assert_eq!(vs.len(), 6);
        assert!(vs.contains(&vec![2, 0, 1]));
        let d = vertex_cloud(&Construction::dilate(3, Reeve(2))).unwrap();
        assert!(d.contains(&vec![3, 3, 6]));
        assert_eq!(vertex_cloud(&Cube { side: 2, dim: 3 }).unwrap().len(), 8);
    }
}
