//! Build an affine root system and classify a few of its roots.
//!
//! Run with `cargo run --example build_and_classify`.

use superroots::{build_affine, AffineTypeId};

fn main() -> superroots::Result<()> {
    let system = build_affine(AffineTypeId::parse("B,1,1")?)?;
    println!("{} over {}", system.type_id(), system.ambient().symbols().join(", "));
    for text in ["e1", "d1+2delta", "2d1-delta", "e1-d1+5delta", "3delta"] {
        let r = system.parse_root(text)?;
        println!(
            "{:<16} {:<12} {}",
            r.to_string(),
            system.classify(&r)?.label(),
            system.parity(&r)?.label()
        );
    }
    let alpha = system.parse_root("d1+delta")?;
    let beta = system.parse_root("e1-d1")?;
    println!("r_({alpha})({beta}) = {}", system.reflect(&alpha, &beta)?);
    println!("{} roots with |k| <= 2", system.window(2).len());
    Ok(())
}
