//! Iterated pyramids over Reeve tetrahedra, computed three ways: the
//! closed binomial form, the h* shift, and the oracle.

use ehrhart_patterns::ehrhart::{ehrhart, ehrhart_pyr_reeve};
use ehrhart_patterns::oracle::interpolated_ehrhart;
use ehrhart_patterns::Construction;

fn main() -> ehrhart_patterns::Result<()> {
    let m = 10;
    for k in 1..=4 {
        let c = Construction::pyramid(Construction::Reeve(m), k);
        let closed = ehrhart_pyr_reeve(k, m);
        assert_eq!(closed, ehrhart(&c)?);
        assert_eq!(closed, interpolated_ehrhart(&c)?);
        println!("{c}: {}", closed.to_human());
    }
    Ok(())
}
