//! Coefficients affine in `m`: `Pyr(T_m)` and one step of the chain
//! `P ↦ rP × [0,1]`.

use ehrhart_patterns::analysis::f_family_decompose;
use ehrhart_patterns::Construction::{self, Interval, Reeve};

fn main() -> ehrhart_patterns::Result<()> {
    let f = f_family_decompose(|m| Construction::pyramid(Reeve(m), 1), [13, 25, 37])?;
    println!("Pyr(T_m): {}", f.to_json());

    for r in [1, 2, 4, 8] {
        let step = |m| Construction::product(Construction::dilate(r, Construction::pyramid(Reeve(m), 1)), Interval(1));
        let f = f_family_decompose(step, [13, 25, 37])?;
        println!("r = {r}: member = {}", f.is_member());
    }
    Ok(())
}
