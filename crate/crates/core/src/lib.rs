//! Exact root combinatorics for untwisted affine Lie superalgebras.
//!
//! The crate builds finite root supersystems and their affinizations,
//! classifies roots from the bilinear form, models shadows of weight
//! modules as threshold patterns on `δ`-lines, and runs the parabolic
//! subset machinery down to an explicit functional `ζ`.

pub mod affine;
pub mod cli;
pub mod error;
pub mod finite;
pub mod form;
pub mod functional;
pub mod json;
pub mod linalg;
pub mod pure;
pub mod root;
pub mod scalar;
pub mod shadow;
pub mod subsystems;
pub mod support;
pub mod tables;

pub use affine::{build_affine, build_affine_with, canonical_class, AffineRootSystem, AffineTypeId};
pub use error::{Error, Result};
pub use finite::{
    build_finite, build_finite_with, check_supersystem_axioms, irreducible_components, root_string, Axiom, AxiomReport,
    FiniteRootSet, FiniteTypeId, Parity, RootKind,
};
pub use form::{cartan_integer, form_eval, FormTable};
pub use functional::LinearFunctional;
pub use pure::{find_base, highest_root, PureType};
pub use root::{Ambient, Root};
pub use scalar::{scalar_div, LambdaMode, Scalar, Q};
pub use shadow::{
    check_closure_38, classify_line, first_closure_violation, uniform_hybrid_check, Action, ClassConfig,
    ClosureViolation, Direction, LineOracle, Shadow, Uniformity,
};
pub use subsystems::{
    build_p, closure, construct_zeta, decompose, find_compatible_base, is_parabolic, is_symmetric_closed, scenario,
    verify_functional, zeta_pipeline, CasePreference, CompatibleBase, ComponentData, FunctionalReport, KRange,
    ParabolicSet, RootSubset, Scenario, ZetaCase, ZetaConstruction, ZetaOutcome,
};
pub use support::{Component, Extent, SupportSet};
