//! Formality verdicts and the triple-product obstruction data they carry.
//! Certificates are machine-checkable values: a formal verdict holds the
//! witness morphism, a nonformal verdict holds the full Massey system, and
//! both re-verify on demand.

use super::FormalityError;
use crate::cdga::{check_morphism, Cdga, CdgaElement, CdgaMorphism};
use crate::matrix::{coords_in_rowspace, RationalMatrix};
use crate::rational::Rational;
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormalityRoute {
    /// Quotient by a regular sequence of odd-generator differentials.
    KoszulQuotient,
    /// Generator-by-generator morphism search on the minimal model.
    WitnessSearch,
}

impl FormalityRoute {
    pub fn label(&self) -> &'static str {
        match self {
            FormalityRoute::KoszulQuotient => "koszul-quotient",
            FormalityRoute::WitnessSearch => "witness-search",
        }
    }
}

/// A defined triple product: bounding elements, the resulting class and its
/// indeterminacy subspace, all in canonical coordinates.
#[derive(Debug, Clone)]
pub struct MasseySystem {
    pub degree: i64,
    pub a: CdgaElement,
    pub b: CdgaElement,
    pub c: CdgaElement,
    pub u: CdgaElement,
    pub v: CdgaElement,
    pub product: CdgaElement,
    /// Class of the product in the canonical representatives of its degree.
    pub class_coords: Vec<Rational>,
    /// Basis of [a] H + H [c] in the same coordinates.
    pub indeterminacy: Vec<Vec<Rational>>,
    /// True when the class set avoids zero, i.e. the class is not in the
    /// indeterminacy span.
    pub avoids_zero: bool,
}

impl MasseySystem {
    pub fn indeterminacy_dim(&self) -> usize {
        if self.indeterminacy.is_empty() {
            0
        } else {
            RationalMatrix::from_rows(self.indeterminacy.clone()).rank()
        }
    }

    /// Linear feasibility re-check: the affine set class + indeterminacy
    /// excludes zero iff the class vector is outside the indeterminacy span.
    pub fn reverify(&self, algebra: &Cdga) -> Result<bool, FormalityError> {
        // bounding identities
        let da = algebra
            .degree_of(&self.a)?
            .ok_or_else(|| FormalityError::Internal("zero class in a Massey system".into()))?;
        let ab = algebra.mul(&self.a, &self.b);
        if algebra.d(&self.u) != ab {
            return Ok(false);
        }
        let bc = algebra.mul(&self.b, &self.c);
        if algebra.d(&self.v) != bc {
            return Ok(false);
        }
        let mut omega = algebra.mul(&self.u, &self.c);
        let av = algebra.mul(&self.a, &self.v);
        omega = if da % 2 == 0 {
            omega.sub(&av)
        } else {
            omega.add(&av)
        };
        if omega != self.product {
            return Ok(false);
        }
        if !algebra.d(&self.product).is_zero() {
            return Ok(false);
        }
        let space = algebra.cohomology(self.degree);
        let class = algebra.class_of(&space, &self.product)?;
        if class != self.class_coords {
            return Ok(false);
        }
        let in_span = if class.iter().all(Zero::is_zero) {
            true
        } else {
            coords_in_rowspace(&class, &self.indeterminacy).is_some()
        };
        Ok(self.avoids_zero == !in_span)
    }
}

#[derive(Debug, Clone)]
pub enum FormalityVerdict {
    CertifiedFormal {
        /// Quasi-isomorphism onto a zero-differential algebra. Its source is
        /// the input itself (Koszul route) or the minimal model of the input
        /// (witness search).
        witness: CdgaMorphism,
        /// The quasi-isomorphism from the witness source to the input, when
        /// the source is not the input itself.
        model_map: Option<CdgaMorphism>,
        bound: i64,
        route: FormalityRoute,
    },
    CertifiedNonformal {
        witness: MasseySystem,
        /// The algebra the witness lives in (the analysis input).
        algebra: Cdga,
        bound: i64,
    },
    Inconclusive {
        bound: i64,
        degree_reached: i64,
        obstruction: String,
    },
}

impl FormalityVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            FormalityVerdict::CertifiedFormal { .. } => "CERTIFIED_FORMAL",
            FormalityVerdict::CertifiedNonformal { .. } => "CERTIFIED_NONFORMAL",
            FormalityVerdict::Inconclusive { .. } => "INCONCLUSIVE",
        }
    }

    /// Re-run the machine checks behind the verdict; reports embed
    /// certificates only after this returns true.
    pub fn reverify(&self) -> Result<bool, FormalityError> {
        match self {
            FormalityVerdict::CertifiedFormal {
                witness,
                model_map,
                bound,
                ..
            } => {
                let w = check_morphism(witness, *bound)?;
                if !w.all_isomorphisms() {
                    return Ok(false);
                }
                if let Some(m) = model_map {
                    let r = check_morphism(m, *bound)?;
                    if !r.all_isomorphisms() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            FormalityVerdict::CertifiedNonformal {
                witness, algebra, ..
            } => Ok(witness.reverify(algebra)? && witness.avoids_zero),
            FormalityVerdict::Inconclusive { .. } => Ok(true),
        }
    }
}
