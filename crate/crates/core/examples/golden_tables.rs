//! Compare form-computed kinds and parities with the printed tables.
//!
//! G(3) disagrees with its printed rows; the mismatches are listed.

use superroots::tables::golden_compare;
use superroots::{build_affine, AffineTypeId};

fn main() -> superroots::Result<()> {
    for spec in ["A,2,1", "A,1,1", "B,1,1", "C,2", "D21", "F4", "G3"] {
        let system = build_affine(AffineTypeId::parse(spec)?)?;
        let report = golden_compare(&system, 5)?;
        println!(
            "{:<16} {:>4} roots  {:>3} mismatches",
            system.type_id().to_string(),
            report.roots_checked,
            report.mismatches.len()
        );
        for m in report.mismatches.iter().filter(|m| m.root.delta() == 0) {
            println!("    {m}");
        }
    }
    Ok(())
}
