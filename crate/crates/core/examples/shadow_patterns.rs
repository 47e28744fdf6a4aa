//! Shadows as per-class threshold patterns: membership, recovery of the
//! pattern from a sampled line, and the closure laws.

use superroots::{
    build_affine, check_closure_38, classify_line, Action, AffineTypeId, ClassConfig, LineOracle, LinearFunctional,
    Shadow, Q,
};

fn main() -> superroots::Result<()> {
    let system = build_affine(AffineTypeId::B { m: 1, n: 1 })?;
    let rep = system.parse_root("-e1")?;
    let shadow = Shadow::uniform(&system, ClassConfig::up(0, 0))?.with_class(&rep, ClassConfig::down(1, -1))?;

    let line = |sign: i64| LineOracle::sample(-6, 6, |k| shadow.membership(&rep.scale(sign).with_delta(k)).unwrap());
    for sign in [1, -1] {
        let marks: String = (-6..=6)
            .map(|k| match shadow.membership(&rep.scale(sign).with_delta(k)).unwrap() {
                Action::Ln => 'L',
                Action::In => '.',
            })
            .collect();
        println!("{:>4} + k delta, k = -6..6: {marks}", rep.scale(sign).to_string());
    }
    println!("recovered: {}", classify_line(&line(1), &line(-1))?);

    // Directions may differ across the components {±e1} and {±2d1}...
    println!(
        "e1 class down, rest up: {} closure violations",
        check_closure_38(&shadow, 4).len()
    );
    // ...but not between d1 and its double 2d1.
    let clash = Shadow::uniform(&system, ClassConfig::up(0, 0))?
        .with_class(&system.parse_root("-2d1")?, ClassConfig::down(0, 0))?;
    let violations = check_closure_38(&clash, 4);
    println!("2d1 class down, rest up: {} closure violations", violations.len());
    if let Some(v) = violations.first() {
        println!("  e.g. {v}");
    }

    let zeta = LinearFunctional::on_ambient(
        system.ambient(),
        &[Q::new(1, 5), Q::new(-2, 7)],
        Q::from_integer(1),
        Q::from_integer(0),
    )?;
    let induced = Shadow::from_functional(&system, &zeta)?;
    for (rep, config) in induced.classes() {
        println!("zeta-induced class {rep}: {config}");
    }
    println!(
        "zeta-induced shadow: {} closure violations",
        check_closure_38(&induced, 6).len()
    );
    Ok(())
}
