use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Construction, Rule, Violation};
use crate::exactnum::Rational;
use crate::{Error, Result};

/// Area (shoelace over the boundary order) and number of boundary lattice points of a polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonData {
    pub area: Rational,
    pub boundary_points: BigInt,
}

fn cross(o: [i64; 2], a: [i64; 2], b: [i64; 2]) -> i128 {
    let (ox, oy) = (o[0] as i128, o[1] as i128);
    (a[0] as i128 - ox) * (b[1] as i128 - oy) - (a[1] as i128 - oy) * (b[0] as i128 - ox)
}

/// Strict convex hull in counter-clockwise order (monotone chain, collinear
/// points dropped).
fn hull(vs: &[[i64; 2]]) -> Vec<[i64; 2]> {
    let mut pts = vs.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<[i64; 2]> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<[i64; 2]> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// The vertices in counter-clockwise boundary order, starting from the
/// lexicographically smallest.
pub fn boundary_order(vs: &[[i64; 2]]) -> Vec<[i64; 2]> {
    hull(vs)
}

pub(super) fn check_convex(vs: &[[i64; 2]]) -> std::result::Result<(), Violation> {
    let n = vs.len();
    if n < 3 {
        return Err(Violation {
            rule: Rule::PolygonVertexCount,
            detail: format!("{n} vertices"),
        });
    }
    let h = hull(vs);
    if h.len() != n {
        let inner: Vec<[i64; 2]> = vs.iter().filter(|v| !h.contains(v)).copied().collect();
        let detail = if inner.is_empty() {
            "repeated vertex".to_string()
        } else {
            format!("{inner:?} not extreme")
        };
        return Err(Violation { rule: Rule::PolygonConvexity, detail });
    }
    Ok(())
}

pub fn polygon_area_boundary(p: &Construction) -> Result<PolygonData> {
    let Construction::Polygon(vs) = p else {
        return Err(Error::InvalidInput(format!("not a polygon: {p}")));
    };
    p.ensure_valid()?;
    let vs = hull(vs);
    let n = vs.len();
    let mut twice = BigInt::zero();
    let mut boundary = BigInt::zero();
    for i in 0..n {
        let a = vs[i];
        let b = vs[(i + 1) % n];
        twice += BigInt::from(a[0]) * b[1] - BigInt::from(a[1]) * b[0];
        let (dx, dy) = (b[0] as i128 - a[0] as i128, b[1] as i128 - a[1] as i128);
        boundary += BigInt::from(dx).gcd(&BigInt::from(dy));
    }
    Ok(PolygonData {
        area: Rational::new(twice.abs(), BigInt::from(2)),
        boundary_points: boundary,
    })
}
