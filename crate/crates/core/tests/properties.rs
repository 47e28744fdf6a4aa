//! Seeded randomized properties, 1000 cases each.

mod common;

#[test]
fn reflections_stay_in_the_root_system() {
    common::reflection_closure().unwrap();
}

#[test]
fn cartan_integers_are_integral() {
    common::cartan_integrality().unwrap();
}

#[test]
fn odd_real_roots_double_to_even_real_roots() {
    common::doubling().unwrap();
}

#[test]
fn frak_b_ignores_positive_scaling() {
    common::frak_b_scale_equivalence().unwrap();
}

#[test]
fn frak_c_is_additive() {
    common::frak_c_additivity().unwrap();
}
