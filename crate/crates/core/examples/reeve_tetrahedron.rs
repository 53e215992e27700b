//! Ehrhart polynomials of Reeve tetrahedra `T_m`. The linear coefficient
//! `(12 - m)/6` changes sign between `m = 12` and `m = 13`.

use ehrhart_patterns::ehrhart::ehrhart;
use ehrhart_patterns::oracle::count_points;
use ehrhart_patterns::Construction;

fn main() -> ehrhart_patterns::Result<()> {
    for m in [1, 6, 12, 13, 100] {
        let t = Construction::Reeve(m);
        let p = ehrhart(&t)?;
        let counts: Vec<String> = (0..4).map(|k| count_points(&t, k).map(|n| n.to_string())).collect::<Result<_, _>>()?;
        println!("m = {m:>3}: {}   counts t=0..3: {}", p.to_human(), counts.join(", "));
    }
    Ok(())
}
