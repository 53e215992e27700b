//! Brute-force lattice point counts against the symbolic engine.
//!
//!     cargo run --example oracle_cross_check -- "reeve(10) * reeve(100) * interval(10)"

use ehrhart_patterns::cli::parse_expr;
use ehrhart_patterns::oracle::cross_check;

fn main() -> ehrhart_patterns::Result<()> {
    let exprs: Vec<String> = std::env::args().skip(1).collect();
    let exprs = if exprs.is_empty() {
        vec!["pyr(reeve(20),2)".into(), "dilate(3, cube(2,2)) * reeve(7)".into(), "polygon([0,0];[2,0];[3,1];[1,3])".into()]
    } else {
        exprs
    };
    for e in exprs {
        let r = cross_check(&parse_expr(&e)?)?;
        let counts: Vec<String> = r.counts.iter().map(|(t, n)| format!("{t}:{n}")).collect();
        println!("{e}\n  equal = {}  counts {}\n  {}", r.equal, counts.join(" "), r.symbolic.to_human());
    }
    Ok(())
}
