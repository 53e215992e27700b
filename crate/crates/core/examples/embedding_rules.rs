//! Each embedding rule applied to `T_20 × [0,1]`: the predicted pattern, the
//! parameters the search settles on, and the resulting construction.

use ehrhart_patterns::ehrhart::ehrhart;
use ehrhart_patterns::patterns::{embed_pattern, middle_pattern, EmbedRule};
use ehrhart_patterns::search::{embedding_template, find_witness, Bounds};
use ehrhart_patterns::Construction::{self, Interval, Reeve};

fn main() -> ehrhart_patterns::Result<()> {
    let p = Construction::product(Reeve(20), Interval(1));
    let q = Reeve(20);
    let pp = middle_pattern(&ehrhart(&p)?)?;
    let qp = middle_pattern(&ehrhart(&q)?)?;
    println!("P = {p}: {}   Q = {q}: {}", pp.to_full_desc(), qp.to_full_desc());
    for rule in EmbedRule::ALL {
        let (bases, pats) = if rule.arity() == 2 { (vec![p.clone(), q.clone()], vec![&pp, &qp]) } else { (vec![p.clone()], vec![&pp]) };
        let target = embed_pattern(rule, &pats)?;
        let w = find_witness(&embedding_template(rule, bases)?, &target, &Bounds::new())?;
        match w.witness() {
            Some(w) => println!("{rule:<8} {:<12} {:?}  {}", target.to_full_desc(), w.params, w.construction),
            None => println!("{rule:<8} {:<12} not found", target.to_full_desc()),
        }
    }
    Ok(())
}
