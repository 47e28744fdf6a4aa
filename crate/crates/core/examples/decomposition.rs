//! Split the even roots into affine components, with bases and highest
//! roots, and check closedness of a hand-made subset.

use superroots::subsystems::{closure, symmetric_closed_witness};
use superroots::{build_affine, decompose, AffineTypeId, KRange, RootSubset};

fn main() -> superroots::Result<()> {
    for ty in [
        AffineTypeId::D21,
        AffineTypeId::B { m: 1, n: 1 },
        AffineTypeId::B { m: 2, n: 1 },
    ] {
        let system = build_affine(ty)?;
        let comps = decompose(&RootSubset::even(&system), 6)?;
        println!("{}: {} components", system.type_id(), comps.len());
        for c in &comps {
            let base: Vec<String> = c.base.iter().map(|b| b.to_string()).collect();
            println!(
                "  S({}) type {}  base {{{}}}  theta {} = {:?}",
                c.index + 1,
                c.pure_type.map_or("?".into(), |p| p.to_string()),
                base.join(", "),
                c.theta,
                c.coeffs
            );
        }
    }

    let system = build_affine(AffineTypeId::B { m: 1, n: 1 })?;
    let e1 = system.parse_root("e1")?;
    let half = RootSubset::empty(&system).with_line(&e1, KRange::AtLeast(0))?;
    match symmetric_closed_witness(&half, 3) {
        Some(w) => println!("e1 + Z>=0 delta: {w}"),
        None => println!("e1 + Z>=0 delta is symmetric and closed"),
    }
    let grown = closure(&half.with_root(&system.parse_root("-e1+delta")?)?, 3);
    println!(
        "closure has {} roots, cut at the window: {}",
        grown.subset.window(3).len(),
        grown.touched_boundary
    );
    Ok(())
}
