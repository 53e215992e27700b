//! Sign split of `(t+r+1)…(t+1)·t·(t-1)` and the runs of `r` sharing the
//! same number of negative coefficients.

use ehrhart_patterns::analysis::{delta_intervals, expand_f, is_strictly_unimodal, stirling_row};

fn main() -> ehrhart_patterns::Result<()> {
    let e = expand_f(6)?;
    let s: Vec<String> = e.s.iter().map(ToString::to_string).collect();
    println!("r = 6: s = [{}], delta = {}", s.join(", "), e.delta);
    for (a, b, d) in delta_intervals(201)? {
        println!("  {a:>3} <= r <= {b:<3}  delta = {d}");
    }
    let row = stirling_row(8);
    println!("c(8, .) = {row:?}, strictly unimodal: {}", is_strictly_unimodal(&row));
    Ok(())
}
