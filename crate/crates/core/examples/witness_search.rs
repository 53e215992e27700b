//! Smallest `m` for which `Pyr^k(T_m) × [0,n]^n` has negative coefficients
//! at `t^1..t^{n+1}` and positive ones above, against the pattern reached
//! as `m` grows.

use ehrhart_patterns::patterns::{Sign, SignPattern};
use ehrhart_patterns::search::{eventual_pattern, find_witness, Bounds, Template};

fn main() -> ehrhart_patterns::Result<()> {
    for (k, n) in [(1u32, 2u32), (1, 3), (2, 2), (2, 3), (3, 5), (3, 6), (3, 7), (4, 6)] {
        let d = (n + k + 3) as usize;
        let layout = (1..=d - 2).map(|j| if j <= n as usize + 1 { Sign::Minus } else { Sign::Plus }).collect();
        let target = SignPattern::new(d, layout)?;
        let t = Template::by_name(&format!("pyr-cube:{k},{n}"))?;
        let found = find_witness(&t, &target, &Bounds::new().max("m", 20_000))?;
        let m = found.witness().map_or("none".to_string(), |w| w.params["m"].to_string());
        println!("Pyr^{k} x [0,{n}]^{n}  target {:<14} min m = {m:<6} large m: {}", target.to_full_desc(), eventual_pattern(&t)?.to_full_desc());
    }
    Ok(())
}
