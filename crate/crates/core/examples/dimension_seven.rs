//! The catalogued constructions for dimensions 7 to 9 with their sign
//! patterns, plus the example whose `t^5` coefficient vanishes.

use ehrhart_patterns::catalog;
use ehrhart_patterns::ehrhart::ehrhart;
use ehrhart_patterns::patterns::middle_pattern;

fn main() -> ehrhart_patterns::Result<()> {
    for entry in catalog::all() {
        let p = ehrhart(&entry.construction)?;
        println!("{:<14} {:<10} {}", entry.label, middle_pattern(&p)?.to_full_desc(), entry.construction);
        println!("{:>26}{}", "", p.to_human());
    }
    Ok(())
}
