//! Exact integer linear algebra on small dense matrices: fraction-free
//! determinants, hyperplane normals, and Smith normal form with transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn to_big(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Determinant of a square matrix by Bareiss elimination.
pub fn det(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: IntMatrix = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Normal vector of the hyperplane spanned by `n - 1` vectors in `Z^n`,
/// via signed cofactors. Zero iff the vectors are linearly dependent.
pub fn cofactor_normal(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = rows.len() + 1;
    (0..n)
        .map(|j| {
            let minor: IntMatrix = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = det(&minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// `left · matrix · right = diag(factors)` with unimodular `left`, `right`
/// and `factors[i] | factors[i+1]`.
#[derive(Debug, Clone)]
pub struct Smith {
    pub factors: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

/// Smith normal form of a square integer matrix.
pub fn smith_normal_form(matrix: &[Vec<BigInt>]) -> Smith {
    let n = matrix.len();
    let mut a: IntMatrix = matrix.to_vec();
    let mut left = identity(n);
    let mut right = identity(n);

    for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
            let Some((pi, pj)) = pivot else {
                return finish(a, left, right);
            };
            a.swap(t, pi);
            left.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut right, t, pj);

            let mut clean = true;
            for i in t + 1..n {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                add_row(&mut a, i, t, &-&q);
                add_row(&mut left, i, t, &-&q);
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                add_col(&mut a, j, t, &-&q);
                add_col(&mut right, j, t, &-&q);
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row and retry
            let offending = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_multiple_of(&a[t][t]));
            match offending {
                Some((i, _)) => {
                    add_row(&mut a, t, i, &BigInt::one());
                    add_row(&mut left, t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in left[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    finish(a, left, right)
}

fn finish(a: IntMatrix, left: IntMatrix, right: IntMatrix) -> Smith {
    let factors = (0..a.len()).map(|i| a[i][i].clone()).collect();
    Smith { factors, left, right }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// row[dst] += k · row[src]
fn add_row(m: &mut IntMatrix, dst: usize, src: usize, k: &BigInt) {
    let src_row = m[src].clone();
    for (x, s) in m[dst].iter_mut().zip(src_row) {
        *x += k * s;
    }
}

/// col[dst] += k · col[src]
fn add_col(m: &mut IntMatrix, dst: usize, src: usize, k: &BigInt) {
    for row in m.iter_mut() {
        let s = row[src].clone();
        row[dst] += k * s;
    }
}
