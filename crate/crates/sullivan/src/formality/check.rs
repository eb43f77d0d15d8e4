//! The formality pipeline: try the regular-sequence fast path, then search
//! for a quasi-isomorphism from the minimal model onto the cohomology
//! (generator by generator, backtracking over the solution sets of the lower
//! linear systems), then hunt for a triple Massey obstruction.

use super::koszul::{koszul_formality, KoszulOutcome};
use super::massey::massey_triple;
use super::minimal::{minimal_model, MinimalModel};
use super::verdict::{FormalityRoute, FormalityVerdict};
use super::FormalityError;
use crate::cdga::{
    cohomology_algebra, Cdga, CdgaElement, CdgaMorphism, Element, FiniteCdga, FiniteElement,
    GenId,
};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct FormalityOptions {
    pub max_degree: i64,
    /// Number of alternative lower-degree solution branches explored before
    /// giving up with an inconclusive verdict.
    pub backtrack_cap: usize,
}

impl FormalityOptions {
    pub fn new(max_degree: i64) -> Self {
        FormalityOptions {
            max_degree,
            backtrack_cap: 64,
        }
    }
}

/// Bounded-degree formality analysis. Never errors: precondition failures
/// and exhausted searches produce an inconclusive verdict carrying the
/// obstruction snapshot.
pub fn formality_check(input: &Cdga, opts: &FormalityOptions) -> FormalityVerdict {
    match formality_check_inner(input, opts) {
        Ok(v) => v,
        Err(FormalityError::Internal(why)) => {
            panic!("internal invariant violation during formality analysis: {why}")
        }
        Err(e) => FormalityVerdict::Inconclusive {
            bound: opts.max_degree,
            degree_reached: 0,
            obstruction: e.to_string(),
        },
    }
}

fn formality_check_inner(
    input: &Cdga,
    opts: &FormalityOptions,
) -> Result<FormalityVerdict, FormalityError> {
    let bound = opts.max_degree;
    if let Some(floor) = input.reliable_below() {
        if floor <= bound + 1 {
            return Ok(FormalityVerdict::Inconclusive {
                bound,
                degree_reached: floor - 1,
                obstruction: format!(
                    "the input differentials are incomplete from degree {floor}; \
                     analysis at this bound would not be trustworthy"
                ),
            });
        }
    }
    if input.cohomology_dim(0) != 1 {
        return Err(FormalityError::NotConnected);
    }
    if input.cohomology_dim(1) != 0 {
        return Ok(FormalityVerdict::Inconclusive {
            bound,
            degree_reached: 1,
            obstruction: "H^1 is nonzero: the analysis needs a simply connected input".into(),
        });
    }
    // fast path: regular sequence of odd differentials
    if let Cdga::Free(alg) = input {
        if let KoszulOutcome::Certified(v) = koszul_formality(alg, bound)? {
            return Ok(*v);
        }
    }
    // witness search on the minimal model
    let mm = minimal_model(input, bound)?;
    let h = cohomology_algebra(input, bound + 1)?;
    let mut search = PsiSearch {
        mm: &mm,
        input,
        h: h.clone(),
        h_cdga: Cdga::finite(h.clone()),
        bound,
        cap: opts.backtrack_cap,
        branches: 0,
    };
    let psi = search.run()?;
    match psi {
        PsiOutcome::Found(witness) => {
            return Ok(FormalityVerdict::CertifiedFormal {
                witness,
                model_map: Some(mm.quasi_iso.clone()),
                bound,
                route: FormalityRoute::WitnessSearch,
            })
        }
        PsiOutcome::Exhausted | PsiOutcome::Capped => {}
    }
    // Massey scan over cohomology generators
    if let Some(system) = massey_scan(input, &h, bound)? {
        return Ok(FormalityVerdict::CertifiedNonformal {
            witness: system,
            algebra: input.clone(),
            bound,
        });
    }
    let obstruction = match psi {
        PsiOutcome::Capped => format!(
            "witness search exceeded the backtrack cap ({}) and no Massey obstruction \
             was found below the bound",
            opts.backtrack_cap
        ),
        _ => "witness search exhausted without a morphism and no Massey obstruction \
              was found below the bound"
            .to_string(),
    };
    Ok(FormalityVerdict::Inconclusive {
        bound,
        degree_reached: bound,
        obstruction,
    })
}

enum PsiOutcome {
    Found(CdgaMorphism),
    Exhausted,
    Capped,
}

struct PsiSearch<'a> {
    mm: &'a MinimalModel,
    input: &'a Cdga,
    h: Arc<FiniteCdga>,
    h_cdga: Cdga,
    bound: i64,
    cap: usize,
    branches: usize,
}

type Assignment = BTreeMap<GenId, FiniteElement>;

impl<'a> PsiSearch<'a> {
    fn run(&mut self) -> Result<PsiOutcome, FormalityError> {
        let assignment = Assignment::new();
        match self.descend(2, &assignment)? {
            Some(psi) => Ok(PsiOutcome::Found(psi)),
            None if self.branches > self.cap => Ok(PsiOutcome::Capped),
            None => Ok(PsiOutcome::Exhausted),
        }
    }

    /// Apply the partial assignment multiplicatively to an element whose
    /// generators are all assigned.
    fn apply_partial(&self, assignment: &Assignment, e: &Element) -> FiniteElement {
        let mut out = FiniteElement::zero();
        for (m, c) in e.terms() {
            let mut term = self.h.unit();
            for &(id, exp) in m.factors() {
                for _ in 0..exp {
                    term = self.h.mul(&term, &assignment[&id]);
                }
            }
            out = out.add(&term.scale(c));
        }
        out
    }

    fn descend(
        &mut self,
        degree: i64,
        assignment: &Assignment,
    ) -> Result<Option<CdgaMorphism>, FormalityError> {
        if degree > self.bound {
            return self.finish(assignment);
        }
        let model = &self.mm.model;
        let source = Cdga::free(model.clone());
        let gens_here: Vec<GenId> = model
            .gens()
            .ids()
            .filter(|&id| model.gens().degree(id) == degree)
            .collect();
        // the morphism constraint on frozen lower choices: psi(d v) = 0
        for &v in &gens_here {
            let dv = model.differential_of(v);
            if !dv.is_zero() && !self.apply_partial(assignment, dv).is_zero() {
                return Ok(None);
            }
        }
        // cohomology agreement in this degree, linear in the new unknowns
        let hm = source.cohomology(degree);
        let h_dim = self.h.dim(degree);
        let n_unknowns = gens_here.len() * h_dim;
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        let input_h = self.input.cohomology(degree);
        for rep in &hm.reps {
            let rep_el = {
                let CdgaElement::Free(e) = source.from_coords(degree, rep) else {
                    unreachable!()
                };
                e
            };
            // split into the generator-linear part and the decomposable rest
            let mut linear: BTreeMap<GenId, Rational> = BTreeMap::new();
            let mut rest = Element::zero();
            for (m, c) in rep_el.terms() {
                if m.word_length() == 1 && gens_here.contains(&m.factors()[0].0) {
                    linear.insert(m.factors()[0].0, c.clone());
                } else {
                    rest = rest.add(&Element::from_monomial(m.clone(), c.clone()));
                }
            }
            let rest_value = self.apply_partial(assignment, &rest);
            // target: class of m(rep) in the input cohomology
            let image = self.mm.quasi_iso.apply(&CdgaElement::Free(rep_el.clone()));
            let target_class = self.input.class_of(&input_h, &image)?;
            for i in 0..h_dim {
                let mut row = vec![Rational::zero(); n_unknowns];
                for (pos, &v) in gens_here.iter().enumerate() {
                    if let Some(lambda) = linear.get(&v) {
                        row[pos * h_dim + i] = lambda.clone();
                    }
                }
                let rest_i = rest_value.coefficient((degree, i));
                rows.push(row);
                rhs.push(&target_class[i] - &rest_i);
            }
        }
        let candidates: Vec<Vec<Rational>> = if n_unknowns == 0 {
            if rhs.iter().any(|c| !c.is_zero()) {
                return Ok(None);
            }
            vec![Vec::new()]
        } else {
            let mat = if rows.is_empty() {
                RationalMatrix::zero(0, n_unknowns)
            } else {
                RationalMatrix::from_rows(rows)
            };
            let Some(particular) = (if mat.rows() == 0 {
                Some(vec![Rational::zero(); n_unknowns])
            } else {
                mat.solve(&rhs)
            }) else {
                return Ok(None);
            };
            let kernel = mat.kernel_basis();
            let mut list = vec![particular.clone()];
            for k in &kernel {
                let plus: Vec<Rational> = particular.iter().zip(k).map(|(a, b)| a + b).collect();
                let minus: Vec<Rational> = particular.iter().zip(k).map(|(a, b)| a - b).collect();
                list.push(plus);
                list.push(minus);
            }
            list
        };
        for candidate in candidates {
            self.branches += 1;
            if self.branches > self.cap {
                return Ok(None);
            }
            let mut next = assignment.clone();
            for (pos, &v) in gens_here.iter().enumerate() {
                let mut val = FiniteElement::zero();
                for i in 0..h_dim {
                    let c = &candidate[pos * h_dim + i];
                    if !c.is_zero() {
                        val = val.add(&FiniteElement::single((degree, i), c.clone()));
                    }
                }
                next.insert(v, val);
            }
            if let Some(psi) = self.descend(degree + 1, &next)? {
                return Ok(Some(psi));
            }
        }
        Ok(None)
    }

    fn finish(&self, assignment: &Assignment) -> Result<Option<CdgaMorphism>, FormalityError> {
        let model = &self.mm.model;
        let images: Vec<CdgaElement> = model
            .gens()
            .ids()
            .map(|id| CdgaElement::Finite(assignment[&id].clone()))
            .collect();
        let psi = match CdgaMorphism::on_generators(
            Cdga::free(model.clone()),
            self.h_cdga.clone(),
            images,
        ) {
            Ok(m) => m,
            Err(_) => return Ok(None),
        };
        // H(psi) must agree with H(m) rank by rank and entry by entry
        for n in 0..=self.bound {
            let (psi_mat, _, _) = psi.induced_map(n)?;
            let (m_mat, _, _) = self.mm.quasi_iso.induced_map(n)?;
            if psi_mat != m_mat {
                return Ok(None);
            }
        }
        Ok(Some(psi))
    }
}

/// Indecomposable generator classes of the cohomology algebra, returned as
/// (degree, basis index) addresses.
fn cohomology_generators(h: &Arc<FiniteCdga>, bound: i64) -> Vec<(i64, usize)> {
    let mut out = Vec::new();
    for n in 1..=bound {
        let dim = h.dim(n);
        if dim == 0 {
            continue;
        }
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for a in 1..n {
            let b = n - a;
            for i in 0..h.dim(a) {
                for j in 0..h.dim(b) {
                    let prod = h.mul(&FiniteElement::basis((a, i)), &FiniteElement::basis((b, j)));
                    if !prod.is_zero() {
                        let mut row = vec![Rational::zero(); dim];
                        for (&(_, k), c) in prod.terms() {
                            row[k] = c.clone();
                        }
                        rows.push(row);
                    }
                }
            }
        }
        for k in 0..dim {
            let mut unit = vec![Rational::zero(); dim];
            unit[k] = Rational::one();
            let old_rank = if rows.is_empty() {
                0
            } else {
                RationalMatrix::from_rows(rows.clone()).rank()
            };
            let mut with = rows.clone();
            with.push(unit.clone());
            if RationalMatrix::from_rows(with).rank() > old_rank {
                out.push((n, k));
                rows.push(unit);
            }
        }
    }
    out
}

fn massey_scan(
    input: &Cdga,
    h: &Arc<FiniteCdga>,
    bound: i64,
) -> Result<Option<super::verdict::MasseySystem>, FormalityError> {
    let gens = cohomology_generators(h, bound);
    // representative cocycles in the input, one per generator class
    let mut reps: BTreeMap<(i64, usize), CdgaElement> = BTreeMap::new();
    for &(n, k) in &gens {
        let space = input.cohomology(n);
        reps.insert((n, k), input.from_coords(n, &space.reps[k]));
    }
    for &(na, ka) in &gens {
        for &(nb, kb) in &gens {
            if h.mul(&FiniteElement::basis((na, ka)), &FiniteElement::basis((nb, kb)))
                != FiniteElement::zero()
            {
                continue;
            }
            for &(nc, kc) in &gens {
                if na + nb + nc - 1 > bound {
                    continue;
                }
                if h.mul(&FiniteElement::basis((nb, kb)), &FiniteElement::basis((nc, kc)))
                    != FiniteElement::zero()
                {
                    continue;
                }
                let sys = massey_triple(
                    input,
                    &reps[&(na, ka)],
                    &reps[&(nb, kb)],
                    &reps[&(nc, kc)],
                    bound,
                )?;
                if sys.avoids_zero {
                    return Ok(Some(sys));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdga::{GeneratorSpec, Generators, SullivanAlgebra};

    fn wedge_model() -> Cdga {
        let gens = Generators::new(vec![
            GeneratorSpec::new("x1", 4),
            GeneratorSpec::new("x2", 4),
            GeneratorSpec::new("y", 7),
        ])
        .unwrap();
        let x1x2 = gens.mul(&gens.generator(0), &gens.generator(1));
        Cdga::free(SullivanAlgebra::new(gens, vec![("y".into(), x1x2)]).unwrap())
    }

    fn nonformal_model() -> Cdga {
        let gens = Generators::new(vec![
            GeneratorSpec::new("x", 3),
            GeneratorSpec::new("y", 3),
            GeneratorSpec::new("z", 5),
        ])
        .unwrap();
        let xy = gens.mul(&gens.generator(0), &gens.generator(1));
        Cdga::free(SullivanAlgebra::new(gens, vec![("z".into(), xy)]).unwrap())
    }

    #[test]
    fn zero_differential_inputs_are_formal_via_witness_search() {
        // (H, 0) for the even sphere: {1, w4} with w^2 = 0
        let gens = Generators::new(vec![GeneratorSpec::new("w", 4)]).unwrap();
        let alg = SullivanAlgebra::new(gens, Vec::new()).unwrap();
        let h = cohomology_algebra(&Cdga::free(alg), 4).unwrap();
        let verdict = formality_check(&Cdga::finite(h), &FormalityOptions::new(10));
        match &verdict {
            FormalityVerdict::CertifiedFormal { route, .. } => {
                assert_eq!(*route, FormalityRoute::WitnessSearch);
            }
            other => panic!("expected a formal certificate, got {}", other.label()),
        }
        assert!(verdict.reverify().unwrap());
    }

    #[test]
    fn wedge_model_is_formal_via_the_fast_path() {
        let verdict = formality_check(&wedge_model(), &FormalityOptions::new(12));
        match &verdict {
            FormalityVerdict::CertifiedFormal { route, .. } => {
                assert_eq!(*route, FormalityRoute::KoszulQuotient);
            }
            other => panic!("expected a formal certificate, got {}", other.label()),
        }
    }

    #[test]
    fn massey_obstruction_certifies_nonformality() {
        let verdict = formality_check(&nonformal_model(), &FormalityOptions::new(10));
        match &verdict {
            FormalityVerdict::CertifiedNonformal { witness, .. } => {
                assert_eq!(witness.degree, 8);
                assert_eq!(witness.indeterminacy_dim(), 0);
                assert!(witness.avoids_zero);
            }
            other => panic!("expected a nonformal certificate, got {}", other.label()),
        }
        assert!(verdict.reverify().unwrap());
    }

    #[test]
    fn fast_path_and_witness_search_agree_on_the_even_sphere() {
        // the sphere model goes through the fast path; its cohomology goes
        // through the witness search; both must certify formality
        let gens = Generators::new(vec![
            GeneratorSpec::new("u", 4),
            GeneratorSpec::new("v", 7),
        ])
        .unwrap();
        let u2 = gens.pow(&gens.generator(0), 2);
        let alg = SullivanAlgebra::new(gens, vec![("v".into(), u2)]).unwrap();
        let via_koszul = formality_check(&Cdga::free(alg.clone()), &FormalityOptions::new(12));
        assert!(matches!(
            via_koszul,
            FormalityVerdict::CertifiedFormal {
                route: FormalityRoute::KoszulQuotient,
                ..
            }
        ));
        let h = cohomology_algebra(&Cdga::free(alg), 12).unwrap();
        let via_search = formality_check(&Cdga::finite(h), &FormalityOptions::new(12));
        assert!(matches!(
            via_search,
            FormalityVerdict::CertifiedFormal {
                route: FormalityRoute::WitnessSearch,
                ..
            }
        ));
    }

    #[test]
    fn exhausted_backtrack_cap_is_inconclusive_never_wrong() {
        // a formal zero-differential input with a zero-branch budget: the
        // witness search cannot even try the particular solution, and the
        // verdict must degrade to inconclusive rather than guess
        let gens = Generators::new(vec![GeneratorSpec::new("w", 4)]).unwrap();
        let alg = SullivanAlgebra::new(gens, Vec::new()).unwrap();
        let h = cohomology_algebra(&Cdga::free(alg), 8).unwrap();
        let opts = FormalityOptions {
            max_degree: 8,
            backtrack_cap: 0,
        };
        let verdict = formality_check(&Cdga::finite(h), &opts);
        match verdict {
            FormalityVerdict::Inconclusive { obstruction, .. } => {
                assert!(obstruction.contains("backtrack cap"), "{obstruction}");
            }
            other => panic!("expected inconclusive, got {}", other.label()),
        }
    }

    #[test]
    fn non_simply_connected_inputs_are_inconclusive_not_errors() {
        let gens = Generators::new(vec![GeneratorSpec::new("t", 1)]).unwrap();
        let alg = SullivanAlgebra::new(gens, Vec::new()).unwrap();
        let verdict = formality_check(&Cdga::free(alg), &FormalityOptions::new(6));
        assert!(matches!(verdict, FormalityVerdict::Inconclusive { .. }));
    }
}
