//! Check the finite root supersystem axioms, including the degenerate set
//! whose form is not nondegenerate on its span.

use superroots::{build_finite, check_supersystem_axioms, FiniteTypeId};

fn main() -> superroots::Result<()> {
    for spec in ["B,1,2", "D21", "G3", "s,2"] {
        let set = build_finite(FiniteTypeId::parse(spec)?)?;
        let report = check_supersystem_axioms(&set);
        print!("{report}");
        println!("  all passed: {}\n", report.all_passed());
    }
    Ok(())
}
