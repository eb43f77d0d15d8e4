//! Minimal Sullivan models, bigraded models of formal cohomologies, and
//! bounded-degree formality certification: an explicit quasi-isomorphism to
//! the cohomology, the regular-sequence fast path, or a triple Massey
//! product obstruction.

mod bigraded;
mod check;
mod koszul;
mod massey;
mod minimal;
mod transfer;
mod verdict;
mod witness;

pub use bigraded::{bigraded_model, BigradedModel};
pub use check::{formality_check, FormalityOptions};
pub use koszul::{koszul_formality, regular_sequence_check, KoszulOutcome, RegularityVerdict};
pub use massey::massey_triple;
pub use minimal::{minimal_model, MinimalModel};
pub use transfer::{retract_transfer_check, TransferConclusion, TransferReport};
pub use verdict::{FormalityRoute, FormalityVerdict, MasseySystem};
pub use witness::{power_coboundary_witness, PowerWitness};

use crate::cdga::CdgaError;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormalityError {
    NotConnected,
    NotSimplyConnected,
    NonHomogeneousInput(String),
    MasseyUndefined { which: &'static str },
    WitnessNotFound { searched_to: i64 },
    NotARetract(String),
    InvalidInput(String),
    Cdga(CdgaError),
    Internal(String),
}

impl fmt::Display for FormalityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormalityError::NotConnected => write!(f, "cohomology is not connected"),
            FormalityError::NotSimplyConnected => {
                write!(f, "H^1 is nonzero; the construction needs a simply connected input")
            }
            FormalityError::NonHomogeneousInput(what) => {
                write!(f, "non-homogeneous input: {what}")
            }
            FormalityError::MasseyUndefined { which } => write!(
                f,
                "triple product undefined: the product [{which}] does not vanish in cohomology"
            ),
            FormalityError::WitnessNotFound { searched_to } => write!(
                f,
                "no power witness below degree {searched_to}; existence is only guaranteed \
                 in the untruncated model, so this is not a refutation"
            ),
            FormalityError::NotARetract(why) => write!(f, "not a retract: {why}"),
            FormalityError::InvalidInput(why) => write!(f, "invalid input: {why}"),
            FormalityError::Cdga(e) => write!(f, "{e}"),
            FormalityError::Internal(why) => write!(f, "internal invariant violation: {why}"),
        }
    }
}

impl std::error::Error for FormalityError {}

impl From<CdgaError> for FormalityError {
    fn from(e: CdgaError) -> Self {
        FormalityError::Cdga(e)
    }
}
