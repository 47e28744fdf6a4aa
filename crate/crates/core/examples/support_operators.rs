//! The operators on supports made of points and rays along `delta`.

use superroots::{Ambient, Component, Extent, Root, SupportSet};

fn main() -> superroots::Result<()> {
    let amb = Ambient::EpsDelta { m: 1, n: 1 };
    let r = |t: &str| Root::parse(amb, t);
    let support = SupportSet::along_delta(vec![
        Component {
            anchor: r("e1")?,
            extent: Extent::Down,
        },
        Component {
            anchor: r("e1+d1")?,
            extent: Extent::Line,
        },
        Component {
            anchor: r("d1+3delta")?,
            extent: Extent::Point,
        },
    ])?;
    println!("{:<10} {:>6} {:>6}", "alpha", "in B", "in C");
    for t in ["delta", "-delta", "2delta", "d1", "-d1", "e1"] {
        let a = r(t)?;
        println!("{:<10} {:>6} {:>6}", t, support.in_frak_b(&a), support.in_frak_c(&a));
    }

    // A single downward ray is stable under -delta only.
    let ray = SupportSet::along_delta(vec![Component {
        anchor: r("e1")?,
        extent: Extent::Down,
    }])?;
    for t in ["delta", "-delta", "-3delta"] {
        let a = r(t)?;
        println!("ray: {:<8} in B {:<5} in C {}", t, ray.in_frak_b(&a), ray.in_frak_c(&a));
    }
    Ok(())
}
