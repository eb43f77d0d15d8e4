//! The dictionary between Lie models and Sullivan models: the cochain
//! dualization functor on finite-type differential graded Lie algebras, and
//! the doubled sphere-mapping-space Sullivan model with its suspension
//! derivation.

mod cstar;
mod sphere;

pub use cstar::{
    ce_dual_morphism, ce_evaluation_pair, chevalley_eilenberg, CeModel, DglLike,
};
pub use sphere::{
    sphere_mapping_space_model, SphereMappingModel, Suspension, SuspensionDerivation,
};

use crate::cdga::CdgaError;
use crate::dgl::DglError;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BridgeError {
    ConnectivityViolation { detail: String },
    NotMinimal(String),
    NameCollision(String),
    Cdga(CdgaError),
    Dgl(DglError),
    Internal(String),
}

impl fmt::Display for BridgeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BridgeError::ConnectivityViolation { detail } => {
                write!(f, "connectivity violation: {detail}")
            }
            BridgeError::NotMinimal(what) => write!(f, "not minimal: {what}"),
            BridgeError::NameCollision(n) => {
                write!(f, "generated name `{n}` collides with an existing generator")
            }
            BridgeError::Cdga(e) => write!(f, "{e}"),
            BridgeError::Dgl(e) => write!(f, "{e}"),
            BridgeError::Internal(why) => write!(f, "internal invariant violation: {why}"),
        }
    }
}

impl std::error::Error for BridgeError {}

impl From<CdgaError> for BridgeError {
    fn from(e: CdgaError) -> Self {
        BridgeError::Cdga(e)
    }
}

impl From<DglError> for BridgeError {
    fn from(e: DglError) -> Self {
        BridgeError::Dgl(e)
    }
}
