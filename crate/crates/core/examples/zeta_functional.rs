//! Build the functional zeta for every named scenario and verify it.

use superroots::subsystems::SCENARIO_NAMES;
use superroots::{scenario, zeta_pipeline};

fn main() -> superroots::Result<()> {
    for name in SCENARIO_NAMES {
        let sc = scenario(name)?;
        let comps = sc.components(8)?;
        let shadow = sc.shadow(&comps)?;
        let out = zeta_pipeline(&comps, &shadow, sc.preference, 8)?;
        let z = &out.construction;
        let strict: Vec<usize> = out.bases.iter().map(|b| b.strict_count).collect();
        println!(
            "{name:<11} case {}  zeta(delta) = {}  t_i = {strict:?}  {} roots checked, {} violations",
            z.case.number(),
            z.zeta_delta,
            out.report.roots_checked,
            out.report.violations.len()
        );
        for (root, value) in z.zeta.basis().iter().zip(z.zeta.values()) {
            println!("    zeta({root}) = {value}");
        }
    }
    Ok(())
}
