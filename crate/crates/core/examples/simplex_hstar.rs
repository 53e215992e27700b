//! h*-vectors of lattice simplices from the Smith normal form of their
//! lifted vertex matrix.

use ehrhart_patterns::catalog;
use ehrhart_patterns::ehrhart::hstar_simplex;
use ehrhart_patterns::polytopes::normalized_volume_simplex;
use ehrhart_patterns::Construction;

fn main() -> ehrhart_patterns::Result<()> {
    let simplices = [
        ("Reeve T_13", Construction::reeve_simplex(13)),
        ("tall tetrahedron", catalog::tall_tetrahedron()),
        ("5-simplex, apex (3,4,5,8,754)", catalog::five_simplex_754()),
        ("7-simplex, apex ending 1001", catalog::seven_simplex_1001()),
    ];
    for (name, s) in simplices {
        let h = hstar_simplex(&s)?;
        println!("{name}: h* = {h}, sum {} = volume {}", h.sum(), normalized_volume_simplex(&s)?);
    }
    Ok(())
}
