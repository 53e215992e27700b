mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hstar_of_random_simplices(s in simplex()) {
        hstar_sum_is_volume(&s)?;
    }

    #[test]
    fn pyramid_identity(c in construction()) {
        pyramid_difference(&c)?;
    }

    #[test]
    fn dilation_identity(c in construction(), s in 1u64..7) {
        dilation_substitution(&c, s)?;
    }

    #[test]
    fn cube_sequence_monotone(n in 1u32..=12, extra in 0u64..30) {
        cube_monotone(n, n as u64 + extra)?;
    }

    #[test]
    fn stirling_expansion(r in 1u64..=60) {
        stirling_sums(r)?;
    }

    #[test]
    fn stirling_rows(n in 3usize..=60) {
        stirling_unimodal(n)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn embedding_rules_match_builders((rule, bases) in coherence_case()) {
        embedding_coherence(rule, &bases)?;
    }
}
