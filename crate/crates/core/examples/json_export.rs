//! Serialize a window of roots, a shadow and a closure report.

use superroots::json::{affine_window_to_json, render, shadow_from_json, shadow_to_json, violations_to_json};
use superroots::{build_affine, check_closure_38, AffineTypeId, ClassConfig, Shadow};

fn main() -> superroots::Result<()> {
    let system = build_affine(AffineTypeId::B { m: 1, n: 1 })?;
    print!("{}", render(&affine_window_to_json(&system, 0)?));

    let shadow = Shadow::uniform(&system, ClassConfig::up(0, 0))?
        .with_class(&system.parse_root("-2d1")?, ClassConfig::down(0, 0))?;
    let value = shadow_to_json(&shadow);
    assert_eq!(shadow_from_json(&value)?, shadow);
    print!("{}", render(&value));

    let violations = check_closure_38(&shadow, 1);
    print!(
        "{}",
        render(&violations_to_json(&violations[..violations.len().min(2)]))
    );
    Ok(())
}
