//! Free graded-commutative algebras with differentials (Sullivan algebras),
//! finite-dimensional cochain algebras, morphisms and bounded-degree
//! cohomology.

mod algebra;
mod finite;
mod free;
mod model;
mod morphism;
mod sullivan;

pub use algebra::{cohomology_algebra, Cdga, CdgaElement, CohomologySpace};
pub use finite::{BasisId, FiniteCdga, FiniteElement};
pub use free::{Degree, Element, GenId, GeneratorSpec, Generators, Monomial};
pub use model::{
    factor_through_quotient, finite_dimensional_model, is_free_graded_commutative,
    odd_spherical_retract, sphere_dimension_of, FreenessVerdict, SphericalRetract,
};
pub use morphism::{check_morphism, CdgaMorphism, DegreeMapReport, MorphismReport};
pub use sullivan::SullivanAlgebra;

use std::fmt;

/// Errors from CDGA construction and the operations over them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CdgaError {
    DuplicateGenerator(String),
    InvalidDegree { name: String, degree: i64 },
    UnknownGenerator(String),
    NonHomogeneous(String),
    DifferentialDegree { generator: String, expected: i64, found: i64 },
    DifferentialNotSquareZero { generator: String },
    TopDegreeNotFound { checked_to: i64 },
    NotAMorphism(String),
    NotMinimal(String),
    NotARetract(String),
    ZeroDifferentialRequired(String),
    InvalidAlgebra(String),
    Internal(String),
}

impl fmt::Display for CdgaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CdgaError::DuplicateGenerator(n) => write!(f, "duplicate generator `{n}`"),
            CdgaError::InvalidDegree { name, degree } => {
                write!(f, "generator `{name}` has invalid degree {degree} (must be >= 1)")
            }
            CdgaError::UnknownGenerator(n) => write!(f, "unknown generator `{n}`"),
            CdgaError::NonHomogeneous(what) => write!(f, "non-homogeneous input: {what}"),
            CdgaError::DifferentialDegree {
                generator,
                expected,
                found,
            } => write!(
                f,
                "differential of `{generator}` must be homogeneous of degree {expected}, found {found}"
            ),
            CdgaError::DifferentialNotSquareZero { generator } => {
                write!(f, "d\u{b2} is nonzero on generator `{generator}`")
            }
            CdgaError::TopDegreeNotFound { checked_to } => write!(
                f,
                "cohomology does not vanish above degree {} (no top degree found)",
                checked_to - 1
            ),
            CdgaError::NotAMorphism(why) => write!(f, "not a CDGA morphism: {why}"),
            CdgaError::NotMinimal(what) => write!(f, "algebra is not minimal: {what}"),
            CdgaError::NotARetract(why) => write!(f, "not a retract: {why}"),
            CdgaError::ZeroDifferentialRequired(what) => {
                write!(f, "zero differential required: {what}")
            }
            CdgaError::InvalidAlgebra(why) => write!(f, "invalid algebra: {why}"),
            CdgaError::Internal(why) => write!(f, "internal invariant violation: {why}"),
        }
    }
}

impl std::error::Error for CdgaError {}
