//! Strategies and property checks shared by the property suite and the
//! acceptance runner.
#![allow(dead_code)]

use ehrhart_patterns::analysis::{cube_coeff_sequence, expand_f, is_strictly_unimodal, stirling_row};
use ehrhart_patterns::ehrhart::{ehrhart, hstar_simplex};
use ehrhart_patterns::exactnum::int;
use ehrhart_patterns::patterns::{embed_pattern, middle_pattern, EmbedRule, SignPattern};
use ehrhart_patterns::polytopes::normalized_volume_simplex;
use ehrhart_patterns::search::{embedding_template, find_witness, Bounds};
use ehrhart_patterns::Construction::{self, *};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Check = Result<(), TestCaseError>;

/// Origin plus `n` integer rows, kept when the simplex is full-dimensional
/// with normalized volume at most `10^4`.
pub fn simplex() -> impl Strategy<Value = Construction> {
    (2usize..=4)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(-6i64..=6, n * n), 0i64..400))
        .prop_filter_map("degenerate or too large", |(n, entries, tall)| {
            let mut rows = vec![vec![0; n]];
            for i in 0..n {
                rows.push(entries[i * n..(i + 1) * n].to_vec());
            }
            rows[n][n - 1] += tall;
            let s = Simplex(rows);
            let vol = normalized_volume_simplex(&s).ok()?;
            (!vol.is_zero() && vol <= BigInt::from(10_000)).then_some(s)
        })
}

fn atom() -> impl Strategy<Value = Construction> {
    prop_oneof![
        (1u64..6).prop_map(Interval),
        (1u64..4, 1u32..3).prop_map(|(side, dim)| Cube { side, dim }),
        (1u64..60).prop_map(Reeve),
        (1u64..20).prop_map(Construction::thin_parallelogram),
        (1i64..9).prop_map(|h| Simplex(vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![2, 3, h]])),
    ]
}

/// Small trees of products, pyramids and dilations, dimension at most 7.
pub fn construction() -> impl Strategy<Value = Construction> {
    atom()
        .prop_recursive(3, 8, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Construction::product(a, b)),
                (inner.clone(), 1u32..3).prop_map(|(a, k)| Construction::pyramid(a, k)),
                (2u64..5, inner).prop_map(|(s, a)| Construction::dilate(s, a)),
            ]
        })
        .prop_filter("dimension", |c| c.dimension().is_ok_and(|d| d <= 7))
}

/// Constructions of dimension `lo..=hi` whose middle signs are all nonzero.
pub fn strict_base(lo: usize, hi: usize) -> impl Strategy<Value = (Construction, SignPattern)> {
    let reeves = (1u64..200).prop_filter("m = 12 has a zero coefficient", |m| *m != 12).prop_map(Reeve);
    let parts = prop_oneof![
        reeves.clone(),
        (reeves.clone(), 1u32..3).prop_map(|(r, k)| Construction::pyramid(r, k)),
        (1u64..8).prop_map(Interval),
        (2u64..8, 2u32..4).prop_map(|(side, dim)| Cube { side, dim }),
        (1u64..40).prop_map(Construction::thin_parallelogram),
    ];
    prop::collection::vec(parts, 1..=3).prop_filter_map("not strict or wrong dimension", move |v| {
        let c = Construction::product_of(v);
        let d = c.dimension().ok()?;
        if d < lo || d > hi {
            return None;
        }
        let p = middle_pattern(&ehrhart(&c).ok()?).ok()?;
        p.is_strict().then_some((c, p))
    })
}

pub fn hstar_sum_is_volume(s: &Construction) -> Check {
    let h = hstar_simplex(s).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let vol = normalized_volume_simplex(s).unwrap();
    prop_assert!(h.coeffs()[0].is_one());
    prop_assert!(h.coeffs().iter().all(|c| !c.is_negative()));
    prop_assert_eq!(h.sum(), vol);
    Ok(())
}

/// `i(Pyr P, t) - i(Pyr P, t - 1) = i(P, t)` for `t >= 1`.
pub fn pyramid_difference(c: &Construction) -> Check {
    let p = ehrhart(c).unwrap();
    let q = ehrhart(&Construction::pyramid(c.clone(), 1)).unwrap();
    for t in 1..=p.degree().unwrap() as i64 + 2 {
        prop_assert_eq!(q.eval_int(t) - q.eval_int(t - 1), p.eval_int(t));
    }
    prop_assert_eq!(q.eval_int(0), int(1));
    Ok(())
}

/// `i(sP, t) = i(P, st)`.
pub fn dilation_substitution(c: &Construction, s: u64) -> Check {
    let p = ehrhart(c).unwrap();
    let q = ehrhart(&Construction::dilate(s, c.clone())).unwrap();
    prop_assert_eq!(&q, &p.substitute_scaled(s).unwrap());
    for t in 0..4i64 {
        prop_assert_eq!(q.eval_int(t), p.eval_int(s as i64 * t));
    }
    Ok(())
}

/// `B_0 < B_1 < … < B_{n-1} <= B_n` for `(bt + 1)^n`, `b >= n`.
pub fn cube_monotone(n: u32, b: u64) -> Check {
    let seq = cube_coeff_sequence(b, n);
    let n = n as usize;
    prop_assert!(seq[..n].windows(2).all(|w| w[0] < w[1]));
    prop_assert!(seq[n] >= seq[n - 1]);
    Ok(())
}

pub fn stirling_sums(r: u64) -> Check {
    let e = expand_f(r).unwrap();
    prop_assert!(e.s.iter().sum::<BigInt>().is_zero());
    let fact: BigInt = (1..=r + 1).map(BigInt::from).product();
    prop_assert_eq!(e.s(1), &-fact);
    Ok(())
}

/// Rows `c(r + 2, ·)` for `r >= 1`.
pub fn stirling_unimodal(n: usize) -> Check {
    prop_assert!(is_strictly_unimodal(&stirling_row(n)), "row {}", n);
    Ok(())
}

/// Searches the rule's template for the pattern the rule predicts, and
/// checks the found construction against it.
pub fn embedding_coherence(rule: EmbedRule, bases: &[(Construction, SignPattern)]) -> Check {
    let pats: Vec<&SignPattern> = bases.iter().map(|(_, p)| p).collect();
    let target = embed_pattern(rule, &pats).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let t = embedding_template(rule, bases.iter().map(|(c, _)| c.clone()).collect()).unwrap();
    let found = find_witness(&t, &target, &Bounds::new()).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let Some(w) = found.into_witness() else {
        return Err(TestCaseError::fail(format!("rule {rule}: no witness for {target} in {}", t.name())));
    };
    prop_assert_eq!(middle_pattern(&ehrhart(&w.construction).unwrap()).unwrap(), target);
    Ok(())
}

/// A base for every rule: a pattern source of dimension 3 to 6 and, for the
/// two-input rules, a second one of dimension 2 up to the first.
pub fn coherence_case() -> impl Strategy<Value = (EmbedRule, Vec<(Construction, SignPattern)>)> {
    (prop::sample::select(EmbedRule::ALL.to_vec()), strict_base(3, 6)).prop_flat_map(|(rule, first)| {
        let d = first.1.dim();
        let second = if rule.arity() == 2 { strict_base(2, d).prop_map(Some).boxed() } else { Just(None).boxed() };
        (Just(rule), Just(first), second).prop_map(|(rule, first, second)| {
            let mut v = vec![first];
            v.extend(second);
            (rule, v)
        })
    })
}
