//! Free differential graded Lie algebras with bracket arithmetic inside the
//! tensor algebra, bounded-degree homology, and the function-space Lie model
//! on a finite cochain algebra tensor a free Lie algebra.

mod free_dgl;
mod lie;
mod tensor;

pub use free_dgl::{FreeDgl, LieBasis};
pub use lie::{LieElement, LieGenerator, TensorWord};
pub use tensor::{
    mapping_space_lie_model, EvaluationMaps, TensorLieElement, TensorLieModel, TensorModelMap,
    TensorRetract,
};

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DglError {
    DuplicateGenerator(String),
    InvalidDegree { name: String, degree: i64 },
    UnknownGenerator(String),
    NonHomogeneous(String),
    BoundaryDegree { generator: String, expected: i64, found: i64 },
    BoundaryNotSquareZero { generator: String },
    ConnectivityViolation { detail: String },
    NotARetract(String),
    TruncatedInput(String),
    StructuralCheckFailed(String),
    Internal(String),
}

impl fmt::Display for DglError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DglError::DuplicateGenerator(n) => write!(f, "duplicate Lie generator `{n}`"),
            DglError::InvalidDegree { name, degree } => {
                write!(f, "Lie generator `{name}` has invalid degree {degree} (must be >= 1)")
            }
            DglError::UnknownGenerator(n) => write!(f, "unknown Lie generator `{n}`"),
            DglError::NonHomogeneous(what) => write!(f, "non-homogeneous Lie element: {what}"),
            DglError::BoundaryDegree { generator, expected, found } => write!(
                f,
                "boundary of `{generator}` must be homogeneous of degree {expected}, found {found}"
            ),
            DglError::BoundaryNotSquareZero { generator } => {
                write!(f, "boundary squared is nonzero on generator `{generator}`")
            }
            DglError::ConnectivityViolation { detail } => {
                write!(f, "connectivity violation: {detail}")
            }
            DglError::NotARetract(why) => write!(f, "not a retract: {why}"),
            DglError::TruncatedInput(what) => write!(f, "truncated input not allowed: {what}"),
            DglError::StructuralCheckFailed(why) => {
                write!(f, "structural validation failed: {why}")
            }
            DglError::Internal(why) => write!(f, "internal invariant violation: {why}"),
        }
    }
}

impl std::error::Error for DglError {}
