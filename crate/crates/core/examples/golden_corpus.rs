//! Prints the catalog as JSON lines, one polynomial per construction.
//!
//!     cargo run --example golden_corpus > crates/core/data/golden.jsonl

use ehrhart_patterns::catalog;
use ehrhart_patterns::ehrhart::ehrhart;
use ehrhart_patterns::exactnum::rational_to_json;

fn main() -> ehrhart_patterns::Result<()> {
    for entry in catalog::all() {
        let p = ehrhart(&entry.construction)?;
        let line = serde_json::json!({
            "expr": entry.construction.to_string(),
            "coeffs": p.coeffs().iter().map(rational_to_json).collect::<Vec<_>>(),
            "source": entry.label,
        });
        println!("{line}");
    }
    Ok(())
}
