//! Parsing and printing construction expressions.

use ehrhart_patterns::cli::parse_expr;
use ehrhart_patterns::ehrhart::ehrhart;

fn main() {
    let inputs = [
        "reeve(13)",
        "pyr(reeve(48)) * reeve(20)",
        "dilate(2, reeve(10) * reeve(100)) * polygon([0,0];[1,0];[1,20];[2,20])",
        "interval(1) * (cube(2,2) * pyr(interval(3), 2))",
        "cube(2 3)",
        "simplex([0,0];[1,1];[2,2])",
    ];
    for text in inputs {
        match parse_expr(text).and_then(|c| ehrhart(&c).map(|p| (c, p))) {
            Ok((c, p)) => println!("{c}\n  = {}", p.to_human()),
            Err(e) => println!("{text}\n  ! {e}"),
        }
    }
}
