//! Explicit constructions realizing sign patterns in dimensions 7, 8 and 9,
//! plus the product whose Ehrhart polynomial has a vanishing middle
//! coefficient.

use crate::polytopes::Construction::{self, *};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub label: &'static str,
    pub construction: Construction,
}

fn unit_rows(k: usize) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![0; k]];
    for i in 0..k {
        let mut e = vec![0; k];
        e[i] = 1;
        rows.push(e);
    }
    rows
}

/// `conv{0, e1, e2, (2,2,1000)}`.
pub fn tall_tetrahedron() -> Construction {
    Simplex(vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![2, 2, 1000]])
}

/// Five-dimensional simplex with h* = (1, 0, 181, 388, 171, 0).
pub fn five_simplex_754() -> Construction {
    let mut rows = unit_rows(5);
    rows[3] = vec![0, 0, 1, 0, 1];
    rows[4] = vec![0, 0, 0, 1, 1];
    rows[5] = vec![3, 4, 5, 8, 754];
    Simplex(rows)
}

/// Five-dimensional simplex of normalized volume 371.
pub fn five_simplex_371() -> Construction {
    let mut rows = unit_rows(5);
    rows[5] = vec![3, 4, 5, 8, 371];
    Simplex(rows)
}

/// Seven-dimensional simplex with h* = (1, 0, 0, 0, 1000, 0, 0, 0).
pub fn seven_simplex_1001() -> Construction {
    let mut rows = unit_rows(7);
    rows[7] = vec![1, 1, 1, 1000, 1000, 1000, 1001];
    Simplex(rows)
}

/// `conv{0, e1, e2, e3, (2,2,310,610)}`.
pub fn four_simplex_610() -> Construction {
    Simplex(vec![
        vec![0, 0, 0, 0],
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![2, 2, 310, 610],
    ])
}

fn prod(parts: Vec<Construction>) -> Construction {
    Construction::product_of(parts)
}

/// All entries with a strict sign pattern, in dimension order.
pub fn witnesses() -> Vec<CatalogEntry> {
    let e = |label, construction| CatalogEntry { label, construction };
    let t10_t100 = || Construction::product(Reeve(10), Reeve(100));
    vec![
        e("dim7 +--", prod(vec![Reeve(10), Reeve(100), Interval(10)])),
        e("dim7 -+-", Construction::product(Construction::dilate(3, t10_t100()), Interval(4))),
        e(
            "dim7 --+",
            Construction::product(
                Construction::dilate(10, Reeve(100)),
                Construction::pyramid(Reeve(10000), 1),
            ),
        ),
        e("dim7 ++-", prod(vec![Reeve(15), Reeve(150), Interval(18)])),
        e("dim7 -++", prod(vec![Reeve(20), Reeve(21), Interval(1)])),
        e("dim7 +++", seven_simplex_1001()),
        e(
            "dim7 +-+",
            Construction::product(
                Construction::dilate(99, five_simplex_371()),
                Construction::thin_parallelogram(1_000_000),
            ),
        ),
        e("dim8 a", Construction::product(tall_tetrahedron(), five_simplex_754())),
        e(
            "dim8 b",
            Construction::product(Construction::dilate(2, t10_t100()), Construction::thin_parallelogram(20)),
        ),
        e(
            "dim9 a",
            prod(vec![Reeve(10), Reeve(100), Interval(10), Construction::thin_parallelogram(10)]),
        ),
        e("dim9 b", Construction::product(five_simplex_754(), four_simplex_610())),
        e("dim9 c", prod(vec![Reeve(10), Reeve(100), tall_tetrahedron()])),
    ]
}

/// `Pyr(T_48) × T_20`, whose coefficient of `t^5` vanishes.
pub fn zero_coefficient() -> CatalogEntry {
    CatalogEntry {
        label: "dim7 zero t^5",
        construction: Construction::product(Construction::pyramid(Reeve(48), 1), Reeve(20)),
    }
}

/// Witnesses followed by the zero-coefficient example.
pub fn all() -> Vec<CatalogEntry> {
    let mut v = witnesses();
    v.insert(7, zero_coefficient());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::ehrhart;
    use crate::patterns::middle_pattern;

    #[test]
    fn dimensions_and_strictness() {
        let dims: Vec<usize> = witnesses().iter().map(|e| e.construction.dimension().unwrap()).collect();
        assert_eq!(dims, [7, 7, 7, 7, 7, 7, 7, 8, 8, 9, 9, 9]);
        let mut seven: Vec<String> = witnesses()
            .iter()
            .filter(|e| e.label.starts_with("dim7"))
            .map(|e| middle_pattern(&ehrhart(&e.construction).unwrap()).unwrap().to_desc())
            .collect();
        seven.sort();
        seven.dedup();
        assert_eq!(seven.len(), 7);
        assert!(!middle_pattern(&ehrhart(&zero_coefficient().construction).unwrap()).unwrap().is_strict());
    }
}
