//! Sign patterns that the embedding rules cannot reach from lower
//! dimensions, their Fibonacci count, and the effect of adding rule V.

use ehrhart_patterns::patterns::{
    fibonacci_bound, remaining_patterns, remaining_patterns_strict, rule_v_experiment, KnownFacts, RuleSet,
};

fn main() -> ehrhart_patterns::Result<()> {
    for d in 6..=12 {
        let rem = remaining_patterns(d, &RuleSet::default())?;
        let shown: Vec<String> = rem.iter().take(8).map(|p| p.to_full_desc()).collect();
        println!("d = {d:>2}: {:>3} (F_d = {})  {}", rem.len(), fibonacci_bound(d)?, shown.join(" "));
    }

    let facts = KnownFacts::with_catalog_witnesses()?;
    for d in 7..=10 {
        let rem = remaining_patterns_strict(d, &RuleSet::default(), &facts)?;
        println!("strict, d = {d}: {} open", rem.len());
    }

    for d in [10, 14, 20] {
        let x = rule_v_experiment(d)?;
        println!("rule V at d = {d}: {} -> {}", x.without_v, x.with_v);
    }
    Ok(())
}
