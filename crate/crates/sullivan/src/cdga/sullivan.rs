//! Sullivan algebras: free graded-commutative algebras with a degree +1
//! differential given on generators and extended by the graded Leibniz rule.

use super::free::{Degree, Element, GenId, Generators, Monomial};
use super::CdgaError;
use std::collections::BTreeSet;
use std::sync::Arc;

#[derive(Debug, PartialEq, Eq)]
pub struct SullivanAlgebra {
    gens: Arc<Generators>,
    diff: Vec<Element>,
    minimal: bool,
    /// Generators whose stored differential is truncated (dualization cuts
    /// the linear part above a degree bound). Their d is incomplete and they
    /// are excluded from the d^2 check.
    partial: BTreeSet<GenId>,
}

impl SullivanAlgebra {
    /// Build and validate: every differential must be homogeneous of degree
    /// +1 over its generator (or zero) and d^2 must vanish on every
    /// generator.
    pub fn new(
        gens: Generators,
        differentials: Vec<(String, Element)>,
    ) -> Result<Arc<Self>, CdgaError> {
        let gens = Arc::new(gens);
        let mut diff = vec![Element::zero(); gens.len()];
        for (name, image) in differentials {
            let id = gens
                .id_of(&name)
                .ok_or_else(|| CdgaError::UnknownGenerator(name.clone()))?;
            diff[id as usize] = image;
        }
        Self::from_parts(gens, diff, BTreeSet::new(), BTreeSet::new())
    }

    /// Constructor for truncated outputs: `partial` marks generators whose
    /// differential lost terms to the truncation, `skip_d2` exempts
    /// generators whose d^2 would touch a partial differential.
    pub(crate) fn from_parts(
        gens: Arc<Generators>,
        diff: Vec<Element>,
        partial: BTreeSet<GenId>,
        skip_d2: BTreeSet<GenId>,
    ) -> Result<Arc<Self>, CdgaError> {
        assert_eq!(diff.len(), gens.len());
        for id in gens.ids() {
            let image = &diff[id as usize];
            match gens.element_degree(image) {
                Degree::Zero => {}
                Degree::Homogeneous(d) if d == gens.degree(id) + 1 => {}
                Degree::Homogeneous(d) => {
                    return Err(CdgaError::DifferentialDegree {
                        generator: gens.spec(id).name.clone(),
                        expected: gens.degree(id) + 1,
                        found: d,
                    })
                }
                Degree::Mixed => {
                    return Err(CdgaError::NonHomogeneous(format!(
                        "differential of `{}`",
                        gens.spec(id).name
                    )))
                }
            }
        }
        let minimal = gens
            .ids()
            .all(|id| diff[id as usize].terms().all(|(m, _)| m.word_length() >= 2));
        let alg = SullivanAlgebra {
            gens,
            diff,
            minimal,
            partial,
        };
        for id in alg.gens.ids() {
            if skip_d2.contains(&id) || alg.partial.contains(&id) {
                continue;
            }
            let dd = alg.d(&alg.diff[id as usize]);
            if !dd.is_zero() {
                return Err(CdgaError::DifferentialNotSquareZero {
                    generator: alg.gens.spec(id).name.clone(),
                });
            }
        }
        Ok(Arc::new(alg))
    }

    pub fn gens(&self) -> &Arc<Generators> {
        &self.gens
    }

    pub fn differential_of(&self, id: GenId) -> &Element {
        &self.diff[id as usize]
    }

    /// True iff every generator differential is decomposable.
    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn partial_generators(&self) -> &BTreeSet<GenId> {
        &self.partial
    }

    /// Lowest degree at which cohomology may be affected by truncated
    /// differentials; `None` when the presentation is complete.
    pub fn partial_floor(&self) -> Option<i64> {
        self.partial.iter().map(|&id| self.gens.degree(id)).min()
    }

    pub fn basis_in_degree(&self, n: i64) -> Vec<Monomial> {
        self.gens.monomials_of_degree(n)
    }

    /// Graded Leibniz extension of the generator differentials.
    pub fn d(&self, e: &Element) -> Element {
        self.gens.apply_derivation(e, &self.diff, 1)
    }
}
