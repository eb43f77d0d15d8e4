//! Transfer of formality along a retract: given f: A -> B and g: B -> A with
//! g o f = id, formality of B forces formality of A. The check runs the
//! analysis on both sides and reports whether the implication is confirmed
//! at the bound; an inconclusive side never counts as a counterexample.

use super::check::{formality_check, FormalityOptions};
use super::verdict::FormalityVerdict;
use super::FormalityError;
use crate::cdga::CdgaMorphism;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransferConclusion {
    /// Both sides certified formal: the implication is confirmed at the bound.
    Confirmed,
    /// The outer algebra was not certified formal, so the implication says
    /// nothing here.
    NotApplicable,
    /// The retract side could not be certified either way at this bound.
    NotDetermined,
    /// A nonformality certificate on the retract side contradicts a formal
    /// certificate on the outer algebra; with verified certificates this
    /// indicates an input error.
    Conflict,
}

#[derive(Debug)]
pub struct TransferReport {
    pub outer_verdict: FormalityVerdict,
    pub retract_verdict: Option<FormalityVerdict>,
    pub conclusion: TransferConclusion,
}

/// Verify `g o f = id` and H^1(A) = 0, then analyze B and (when B is formal)
/// A, reporting whether formality transferred as the retract property
/// guarantees.
pub fn retract_transfer_check(
    f: &CdgaMorphism,
    g: &CdgaMorphism,
    opts: &FormalityOptions,
) -> Result<TransferReport, FormalityError> {
    let composite = CdgaMorphism::compose(g, f)
        .map_err(|e| FormalityError::NotARetract(e.to_string()))?;
    if !composite.is_identity() {
        return Err(FormalityError::NotARetract(
            "g composed with f is not the identity".into(),
        ));
    }
    if f.source().cohomology_dim(1) != 0 {
        return Err(FormalityError::NotSimplyConnected);
    }
    let outer_verdict = formality_check(f.target(), opts);
    if !matches!(outer_verdict, FormalityVerdict::CertifiedFormal { .. }) {
        return Ok(TransferReport {
            outer_verdict,
            retract_verdict: None,
            conclusion: TransferConclusion::NotApplicable,
        });
    }
    let retract_verdict = formality_check(f.source(), opts);
    let conclusion = match &retract_verdict {
        FormalityVerdict::CertifiedFormal { .. } => TransferConclusion::Confirmed,
        FormalityVerdict::Inconclusive { .. } => TransferConclusion::NotDetermined,
        FormalityVerdict::CertifiedNonformal { .. } => TransferConclusion::Conflict,
    };
    Ok(TransferReport {
        outer_verdict,
        retract_verdict: Some(retract_verdict),
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bridge::sphere_mapping_space_model;
    use crate::cdga::{Cdga, CdgaElement, GeneratorSpec, Generators, SullivanAlgebra};
    use std::sync::Arc;

    fn wedge_model() -> Arc<SullivanAlgebra> {
        let gens = Generators::new(vec![
            GeneratorSpec::new("x1", 4),
            GeneratorSpec::new("x2", 4),
            GeneratorSpec::new("y", 7),
        ])
        .unwrap();
        let x1x2 = gens.mul(&gens.generator(0), &gens.generator(1));
        SullivanAlgebra::new(gens, vec![("y".into(), x1x2)]).unwrap()
    }

    #[test]
    fn identity_retract_on_a_formal_algebra_confirms() {
        let c = Cdga::free(wedge_model());
        let id = CdgaMorphism::identity(&c).unwrap();
        let report =
            retract_transfer_check(&id, &id, &FormalityOptions::new(12)).unwrap();
        assert_eq!(report.conclusion, TransferConclusion::Confirmed);
    }

    #[test]
    fn doubled_model_retract_confirms_formality_of_the_base() {
        // the inclusion/projection pair of the doubled model is the dualized
        // evaluation pair of the fibration; both sides are formal
        let m = sphere_mapping_space_model(&wedge_model(), 2).unwrap();
        let f = m.base_inclusion().unwrap();
        let g = m.bar_projection().unwrap();
        let report =
            retract_transfer_check(&f, &g, &FormalityOptions::new(14)).unwrap();
        assert_eq!(report.conclusion, TransferConclusion::Confirmed);
    }

    #[test]
    fn non_retract_pairs_are_rejected() {
        let c = Cdga::free(wedge_model());
        let Cdga::Free(alg) = &c else { unreachable!() };
        let g = alg.gens();
        // swap x1 and x2 one way only: composite is not the identity
        let swap = CdgaMorphism::on_generators(
            c.clone(),
            c.clone(),
            vec![
                CdgaElement::Free(g.generator(1)),
                CdgaElement::Free(g.generator(0)),
                CdgaElement::Free(g.generator(2)),
            ],
        )
        .unwrap();
        let id = CdgaMorphism::identity(&c).unwrap();
        let err = retract_transfer_check(&swap, &id, &FormalityOptions::new(10));
        assert!(matches!(err, Err(FormalityError::NotARetract(_))));
    }
}
