//! Shared fixtures: the table types and the seeded randomized properties.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::sample::Index;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use superroots::{
    build_affine, cartan_integer, AffineRootSystem, AffineTypeId, Component, Extent, Parity, Root, RootKind, SupportSet,
};

pub const CASES: u32 = 1000;
const SEED: [u8; 32] = *b"superroots-fixed-property-seed!!";

/// The nine types of the printed classification tables.
pub fn table_types() -> Vec<AffineTypeId> {
    vec![
        AffineTypeId::A { m: 2, n: 1 },
        AffineTypeId::Ann { n: 1 },
        AffineTypeId::B { m: 1, n: 1 },
        AffineTypeId::B { m: 2, n: 1 },
        AffineTypeId::C { n: 2 },
        AffineTypeId::D { m: 2, n: 1 },
        AffineTypeId::D21,
        AffineTypeId::F4,
        AffineTypeId::G3,
    ]
}

pub fn table_systems() -> Vec<AffineRootSystem> {
    table_types().into_iter().map(|t| build_affine(t).unwrap()).collect()
}

fn runner() -> TestRunner {
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

fn finish(r: Result<(), proptest::test_runner::TestError<impl std::fmt::Debug>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

/// `r_α(β) ∈ R` for real `α` and `β ∈ R_re ∪ R_im`.
pub fn reflection_closure() -> Result<(), String> {
    let systems = table_systems();
    let reals: Vec<Vec<Root>> = systems.iter().map(|s| s.real_window(4)).collect();
    let targets: Vec<Vec<Root>> = systems
        .iter()
        .map(|s| {
            s.window(4)
                .into_iter()
                .filter(|r| s.is_real(r) || r.finite_is_zero())
                .collect()
        })
        .collect();
    finish(
        runner().run(&(0..systems.len(), any::<Index>(), any::<Index>()), |(si, a, b)| {
            let s = &systems[si];
            let alpha = a.get(&reals[si]);
            let beta = b.get(&targets[si]);
            let image = s.reflect(alpha, beta).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert!(s.contains(&image), "r_{}({}) = {} is not a root", alpha, beta, image);
            Ok(())
        }),
    )
}

/// `⟨β, α⟩ ∈ ℤ` for real `α` and every root `β`.
pub fn cartan_integrality() -> Result<(), String> {
    let systems = table_systems();
    let reals: Vec<Vec<Root>> = systems.iter().map(|s| s.real_window(4)).collect();
    let all: Vec<Vec<Root>> = systems.iter().map(|s| s.window(4)).collect();
    finish(
        runner().run(&(0..systems.len(), any::<Index>(), any::<Index>()), |(si, a, b)| {
            let s = &systems[si];
            let (alpha, beta) = (a.get(&reals[si]), b.get(&all[si]));
            cartan_integer(beta, alpha, s.form()).map_err(|e| TestCaseError::fail(e.to_string()))?;
            Ok(())
        }),
    )
}

/// `2(R_re ∩ R₁) ⊆ R₀ ∩ R_re` on the B and G types.
pub fn doubling() -> Result<(), String> {
    let systems: Vec<AffineRootSystem> = [
        AffineTypeId::B { m: 1, n: 1 },
        AffineTypeId::B { m: 2, n: 1 },
        AffineTypeId::G3,
    ]
    .into_iter()
    .map(|t| build_affine(t).unwrap())
    .collect();
    let odd_real: Vec<Vec<Root>> = systems
        .iter()
        .map(|s| {
            s.real_window(4)
                .into_iter()
                .filter(|r| s.parity(r) == Ok(Parity::Odd))
                .collect()
        })
        .collect();
    assert!(
        odd_real.iter().all(|v| !v.is_empty()),
        "every doubling type has odd real roots"
    );
    finish(runner().run(&(0..systems.len(), any::<Index>()), |(si, a)| {
        let s = &systems[si];
        let d = a.get(&odd_real[si]).scale(2);
        prop_assert!(s.contains(&d), "{} is not a root", d);
        prop_assert_eq!(s.classify(&d).unwrap(), RootKind::Real);
        prop_assert_eq!(s.parity(&d).unwrap(), Parity::Even);
        Ok(())
    }))
}

fn extent(i: u8) -> Extent {
    [Extent::Point, Extent::Up, Extent::Down, Extent::Line][usize::from(i % 4)]
}

/// Supports inside one coset `λ + lattice`, with components along `δ`.
fn support_strategy() -> impl Strategy<Value = SupportSet> {
    let comp = ((-2i64..=2, -2i64..=2), -3i64..=3, any::<u8>());
    (prop::collection::vec(comp, 1..4), 0usize..3).prop_map(|(comps, offset)| {
        let amb = superroots::Ambient::EpsDelta { m: 1, n: 1 };
        // A common fractional offset keeps every anchor in one coset.
        let shift = Root::new(
            amb,
            vec![superroots::Q::new(offset as i64, 3), superroots::Q::new(0, 1)],
            0,
            0,
        );
        let comps = comps
            .into_iter()
            .map(|((x, y), k, e)| Component {
                anchor: &shift + &Root::from_ints(amb, &[x, y]).with_delta(k),
                extent: extent(e),
            })
            .collect();
        SupportSet::along_delta(comps).unwrap()
    })
}

fn lattice_vector() -> impl Strategy<Value = Root> {
    (any::<bool>(), -2i64..=2, -2i64..=2, -3i64..=3).prop_map(|(parallel, x, y, k)| {
        let amb = superroots::Ambient::EpsDelta { m: 1, n: 1 };
        if parallel {
            Root::delta_multiple(amb, k)
        } else {
            Root::from_ints(amb, &[x, y]).with_delta(k)
        }
    })
}

/// `α ∈ 𝔅 ⇔ tα ∈ 𝔅` for `t ∈ {1, 2, 3}`.
pub fn frak_b_scale_equivalence() -> Result<(), String> {
    finish(runner().run(&(support_strategy(), lattice_vector()), |(supp, alpha)| {
        let base = supp.in_frak_b(&alpha);
        for t in 1..=3 {
            prop_assert_eq!(supp.in_frak_b(&alpha.scale(t)), base, "t = {}", t);
        }
        Ok(())
    }))
}

/// `α, β ∈ ℭ ⇒ α + β ∈ ℭ`.
pub fn frak_c_additivity() -> Result<(), String> {
    finish(runner().run(
        &(support_strategy(), lattice_vector(), lattice_vector()),
        |(supp, a, b)| {
            if supp.in_frak_c(&a) && supp.in_frak_c(&b) {
                prop_assert!(supp.in_frak_c(&(&a + &b)));
            }
            Ok(())
        },
    ))
}

pub type Property = fn() -> Result<(), String>;

/// Every property with its name.
pub fn all_properties() -> Vec<(&'static str, Property)> {
    vec![
        ("reflection closure", reflection_closure as Property),
        ("Cartan integrality", cartan_integrality),
        ("doubling of odd real roots", doubling),
        ("B scale equivalence", frak_b_scale_equivalence),
        ("C additivity", frak_c_additivity),
    ]
}
