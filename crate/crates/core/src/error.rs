use thiserror::Error;

use crate::root::Ambient;
use crate::scalar::Scalar;

/// Every fallible operation in the crate reports through this type.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("roots live over different ambient bases ({left} vs {right})")]
    BasisMismatch { left: Ambient, right: Ambient },

    #[error("cannot reflect in the isotropic root {0}")]
    IsotropicReflection(String),

    #[error("axiom violation: {0}")]
    AxiomViolation(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("({num}) / ({den}) is not of the form a + b*lambda")]
    NonLinearQuotient { num: Scalar, den: Scalar },

    #[error("{0} vanishes at an admissible lambda, its sign is ambiguous")]
    AmbiguousSign(Scalar),

    #[error("invalid ranks: {0}")]
    Rank(String),

    #[error("{0} is not a root of the system")]
    NotARoot(String),

    #[error("{0} is not a real root")]
    NotRealRoot(String),

    #[error("not a finite root system: {0}")]
    NotAFiniteRootSystem(String),

    #[error("line assignment matches no shadow family: {0}")]
    NotAShadowPattern(String),

    #[error("direction {0} is not decidable on this support descriptor")]
    DirectionNotDecidable(String),

    #[error("hypothesis violated: {reason} (witness {witness})")]
    HypothesisViolated { reason: String, witness: String },

    #[error("component is not uniformly hybrid: {0}")]
    NotUniformlyHybrid(String),

    #[error("no compatible base found after searching {searched} candidates")]
    NoCompatibleBase { searched: usize },

    #[error("membership classes fit no construction case: {0}")]
    CaseMismatch(String),

    #[error("functional is degenerate: {0}")]
    DegenerateFunctional(String),

    #[error("invalid shadow: {0}")]
    InvalidShadow(String),

    #[error("unknown type: {0}")]
    UnknownType(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
