//! One interface over the two cochain-algebra presentations (free Sullivan
//! and finite basis/table), plus the degree-wise cohomology engine every
//! higher construction relies on.

use super::finite::{FiniteCdga, FiniteElement};
use super::free::{Degree, Element, Monomial};
use super::sullivan::SullivanAlgebra;
use super::CdgaError;
use crate::matrix::{coords_in_rowspace, quotient_representatives, RationalMatrix};
use crate::rational::Rational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::sync::Arc;

/// A commutative cochain algebra in either presentation.
#[derive(Debug, Clone, PartialEq)]
pub enum Cdga {
    Free(Arc<SullivanAlgebra>),
    Finite(Arc<FiniteCdga>),
}

/// Element of a `Cdga`, matching its presentation.
#[derive(Debug, Clone, PartialEq)]
pub enum CdgaElement {
    Free(Element),
    Finite(FiniteElement),
}

impl CdgaElement {
    pub fn is_zero(&self) -> bool {
        match self {
            CdgaElement::Free(e) => e.is_zero(),
            CdgaElement::Finite(e) => e.is_zero(),
        }
    }

    pub fn add(&self, other: &CdgaElement) -> CdgaElement {
        match (self, other) {
            (CdgaElement::Free(a), CdgaElement::Free(b)) => CdgaElement::Free(a.add(b)),
            (CdgaElement::Finite(a), CdgaElement::Finite(b)) => CdgaElement::Finite(a.add(b)),
            _ => panic!("mixed element presentations"),
        }
    }

    pub fn sub(&self, other: &CdgaElement) -> CdgaElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CdgaElement {
        match self {
            CdgaElement::Free(e) => CdgaElement::Free(e.neg()),
            CdgaElement::Finite(e) => CdgaElement::Finite(e.neg()),
        }
    }

    pub fn scale(&self, c: &Rational) -> CdgaElement {
        match self {
            CdgaElement::Free(e) => CdgaElement::Free(e.scale(c)),
            CdgaElement::Finite(e) => CdgaElement::Finite(e.scale(c)),
        }
    }

    pub fn as_free(&self) -> &Element {
        match self {
            CdgaElement::Free(e) => e,
            CdgaElement::Finite(_) => panic!("expected free presentation"),
        }
    }

    pub fn as_finite(&self) -> &FiniteElement {
        match self {
            CdgaElement::Finite(e) => e,
            CdgaElement::Free(_) => panic!("expected finite presentation"),
        }
    }
}

/// Cohomology in one degree: canonical representatives (kernel vectors
/// reduced against the image) plus the boundary row space, kept so classes
/// of arbitrary cocycles can be expressed deterministically.
#[derive(Debug, Clone)]
pub struct CohomologySpace {
    pub degree: i64,
    pub reps: Vec<Vec<Rational>>,
    image: Vec<Vec<Rational>>,
}

impl CohomologySpace {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Class coordinates of a closed vector in the representative basis;
    /// `None` when the vector is not a cycle of this degree.
    pub fn class_coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let mut span: Vec<Vec<Rational>> = self.reps.clone();
        span.extend(self.image.iter().cloned());
        if span.is_empty() {
            return if v.iter().all(Zero::is_zero) {
                Some(Vec::new())
            } else {
                None
            };
        }
        let c = coords_in_rowspace(v, &span)?;
        Some(c[..self.reps.len()].to_vec())
    }
}

impl Cdga {
    pub fn free(a: Arc<SullivanAlgebra>) -> Self {
        Cdga::Free(a)
    }

    pub fn finite(a: Arc<FiniteCdga>) -> Self {
        Cdga::Finite(a)
    }

    pub fn same(&self, other: &Cdga) -> bool {
        match (self, other) {
            (Cdga::Free(a), Cdga::Free(b)) => Arc::ptr_eq(a, b) || a == b,
            (Cdga::Finite(a), Cdga::Finite(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }

    pub fn truncated_above(&self) -> Option<i64> {
        match self {
            Cdga::Free(_) => None,
            Cdga::Finite(a) => a.truncated_above(),
        }
    }

    /// First degree at which stored differentials are incomplete (partial
    /// dualization outputs). Truncated finite algebras are not flagged: they
    /// are honest quotient objects with exact semantics.
    pub fn reliable_below(&self) -> Option<i64> {
        match self {
            Cdga::Free(a) => a.partial_floor(),
            Cdga::Finite(_) => None,
        }
    }

    pub fn dim_in_degree(&self, n: i64) -> usize {
        match self {
            Cdga::Free(a) => a.basis_in_degree(n).len(),
            Cdga::Finite(a) => a.dim(n),
        }
    }

    pub fn basis_element(&self, n: i64, idx: usize) -> CdgaElement {
        match self {
            Cdga::Free(a) => CdgaElement::Free(Element::from_monomial(
                a.basis_in_degree(n)[idx].clone(),
                num_traits::One::one(),
            )),
            Cdga::Finite(_) => CdgaElement::Finite(FiniteElement::basis((n, idx))),
        }
    }

    pub fn basis_labels(&self, n: i64) -> Vec<String> {
        match self {
            Cdga::Free(a) => a
                .basis_in_degree(n)
                .iter()
                .map(|m| {
                    a.gens().format_element(&Element::from_monomial(
                        m.clone(),
                        num_traits::One::one(),
                    ))
                })
                .collect(),
            Cdga::Finite(a) => a.basis().labels(n).to_vec(),
        }
    }

    pub fn unit(&self) -> CdgaElement {
        match self {
            Cdga::Free(_) => CdgaElement::Free(Element::unit()),
            Cdga::Finite(a) => CdgaElement::Finite(a.unit()),
        }
    }

    pub fn zero(&self) -> CdgaElement {
        match self {
            Cdga::Free(_) => CdgaElement::Free(Element::zero()),
            Cdga::Finite(_) => CdgaElement::Finite(FiniteElement::zero()),
        }
    }

    pub fn mul(&self, a: &CdgaElement, b: &CdgaElement) -> CdgaElement {
        match self {
            Cdga::Free(alg) => CdgaElement::Free(alg.gens().mul(a.as_free(), b.as_free())),
            Cdga::Finite(alg) => CdgaElement::Finite(alg.mul(a.as_finite(), b.as_finite())),
        }
    }

    pub fn d(&self, e: &CdgaElement) -> CdgaElement {
        match self {
            Cdga::Free(alg) => CdgaElement::Free(alg.d(e.as_free())),
            Cdga::Finite(alg) => CdgaElement::Finite(alg.d(e.as_finite())),
        }
    }

    /// Homogeneous degree of an element; zero is reported as `None`.
    pub fn degree_of(&self, e: &CdgaElement) -> Result<Option<i64>, CdgaError> {
        match (self, e) {
            (Cdga::Free(alg), CdgaElement::Free(x)) => match alg.gens().element_degree(x) {
                Degree::Zero => Ok(None),
                Degree::Homogeneous(d) => Ok(Some(d)),
                Degree::Mixed => Err(CdgaError::NonHomogeneous("element".into())),
            },
            (Cdga::Finite(_), CdgaElement::Finite(x)) => x.degree(),
            _ => panic!("mixed element presentations"),
        }
    }

    pub fn coords(&self, e: &CdgaElement, n: i64) -> Vec<Rational> {
        match (self, e) {
            (Cdga::Free(alg), CdgaElement::Free(x)) => {
                let basis = alg.basis_in_degree(n);
                let index: BTreeMap<&Monomial, usize> =
                    basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
                let mut v = vec![Rational::zero(); basis.len()];
                for (m, c) in x.terms() {
                    let i = *index
                        .get(m)
                        .unwrap_or_else(|| panic!("monomial outside degree-{n} basis"));
                    v[i] = c.clone();
                }
                v
            }
            (Cdga::Finite(alg), CdgaElement::Finite(x)) => {
                let mut v = vec![Rational::zero(); alg.dim(n)];
                for (&(d, i), c) in x.terms() {
                    assert_eq!(d, n, "element outside degree-{n}");
                    v[i] = c.clone();
                }
                v
            }
            _ => panic!("mixed element presentations"),
        }
    }

    pub fn from_coords(&self, n: i64, v: &[Rational]) -> CdgaElement {
        match self {
            Cdga::Free(alg) => {
                let basis = alg.basis_in_degree(n);
                assert_eq!(basis.len(), v.len());
                let mut e = Element::zero();
                for (i, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        e = e.add(&Element::from_monomial(basis[i].clone(), c.clone()));
                    }
                }
                CdgaElement::Free(e)
            }
            Cdga::Finite(alg) => {
                assert_eq!(alg.dim(n), v.len());
                let mut e = FiniteElement::zero();
                for (i, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        e = e.add(&FiniteElement::single((n, i), c.clone()));
                    }
                }
                CdgaElement::Finite(e)
            }
        }
    }

    /// Matrix of d from degree n to degree n+1 in basis coordinates
    /// (rows: degree n+1 basis, columns: degree n basis).
    pub fn differential_matrix(&self, n: i64) -> RationalMatrix {
        let src = self.dim_in_degree(n);
        let tgt = self.dim_in_degree(n + 1);
        let mut m = RationalMatrix::zero(tgt, src);
        for j in 0..src {
            let img = self.d(&self.basis_element(n, j));
            if img.is_zero() {
                continue;
            }
            let col = self.coords(&img, n + 1);
            for (i, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    *m.at_mut(i, j) = c;
                }
            }
        }
        m
    }

    /// Degree-n cohomology with canonical representatives. The dimension is
    /// cross-checked against rank-nullity bookkeeping.
    pub fn cohomology(&self, n: i64) -> CohomologySpace {
        let d_out = self.differential_matrix(n);
        let cycles = d_out.kernel_basis();
        let image: Vec<Vec<Rational>> = if n == 0 {
            Vec::new()
        } else {
            let d_in = self.differential_matrix(n - 1);
            (0..d_in.cols())
                .map(|j| {
                    (0..d_in.rows())
                        .map(|i| d_in.at(i, j).clone())
                        .collect::<Vec<_>>()
                })
                .filter(|v| v.iter().any(|c| !c.is_zero()))
                .collect()
        };
        let reps = quotient_representatives(&cycles, &image);
        // rank-nullity cross-check: dim H = nullity(d_n) - rank(d_{n-1})
        let rank_in = RationalMatrix::from_rows(image.clone()).rank();
        assert_eq!(
            reps.len(),
            cycles.len() - rank_in,
            "cohomology dimension bookkeeping failed in degree {n}"
        );
        CohomologySpace {
            degree: n,
            reps,
            image,
        }
    }

    pub fn cohomology_dim(&self, n: i64) -> usize {
        self.cohomology(n).dim()
    }

    pub fn cohomology_representatives(&self, n: i64) -> Vec<CdgaElement> {
        self.cohomology(n)
            .reps
            .iter()
            .map(|v| self.from_coords(n, v))
            .collect()
    }

    /// Class of a closed element in the canonical representatives of its
    /// degree.
    pub fn class_of(
        &self,
        space: &CohomologySpace,
        e: &CdgaElement,
    ) -> Result<Vec<Rational>, CdgaError> {
        if e.is_zero() {
            return Ok(vec![Rational::zero(); space.dim()]);
        }
        let v = self.coords(e, space.degree);
        space
            .class_coords(&v)
            .ok_or_else(|| CdgaError::Internal("element is not a cocycle".into()))
    }
}

/// The cohomology of a cochain algebra as a finite algebra with zero
/// differential, computed degree by degree up to `bound`.
///
/// Products of representatives are reduced back to representative
/// coordinates, so the result is a genuine (truncated) commutative algebra;
/// `truncated_above` records the bound unless the input was already an
/// untruncated finite algebra whose top degree fits under it.
pub fn cohomology_algebra(c: &Cdga, bound: i64) -> Result<Arc<FiniteCdga>, CdgaError> {
    let mut spaces = BTreeMap::new();
    for n in 0..=bound {
        spaces.insert(n, c.cohomology(n));
    }
    if spaces[&0].dim() != 1 {
        return Err(CdgaError::InvalidAlgebra(
            "cohomology is not connected".into(),
        ));
    }
    let mut basis = crate::graded::GradedBasis::new();
    basis.push(0, "1".to_string());
    for n in 1..=bound {
        for i in 0..spaces[&n].dim() {
            basis.push(n, format!("h{n}_{i}"));
        }
    }
    let mut products = BTreeMap::new();
    for a in 1..=bound {
        for b in 1..=bound {
            if a + b > bound {
                continue;
            }
            for i in 0..spaces[&a].dim() {
                for j in 0..spaces[&b].dim() {
                    let ra = c.from_coords(a, &spaces[&a].reps[i]);
                    let rb = c.from_coords(b, &spaces[&b].reps[j]);
                    let prod = c.mul(&ra, &rb);
                    let class = c.class_of(&spaces[&(a + b)], &prod)?;
                    let mut v = FiniteElement::zero();
                    for (k, coeff) in class.into_iter().enumerate() {
                        if !coeff.is_zero() {
                            v = v.add(&FiniteElement::single((a + b, k), coeff));
                        }
                    }
                    if !v.is_zero() {
                        products.insert(((a, i), (b, j)), v);
                    }
                }
            }
        }
    }
    let truncated = match c {
        Cdga::Finite(f) if f.truncated_above().is_none() && f.top_degree() <= bound => None,
        _ => Some(bound),
    };
    FiniteCdga::new(basis, products, BTreeMap::new(), truncated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdga::{GeneratorSpec, Generators};

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

    #[test]
    fn wedge_cohomology_matches_polynomial_quotient() {
        // H = Q[x1,x2]/(x1 x2): dims 1 in degree 0, 2 in degrees 4k (k >= 1)
        let c = wedge_model();
        let expected = |n: i64| -> usize {
            if n == 0 {
                1
            } else if n % 4 == 0 {
                2
            } else {
                0
            }
        };
        for n in 0..=16 {
            assert_eq!(c.cohomology_dim(n), expected(n), "degree {n}");
        }
    }

    #[test]
    fn degree_eight_loses_the_product_class() {
        // independent check via raw linear algebra on the monomial basis
        let c = wedge_model();
        let d8 = c.differential_matrix(8);
        let d7 = c.differential_matrix(7);
        let nullity = d8.kernel_basis().len();
        let rank7 = d7.rank();
        assert_eq!(nullity - rank7, 2);
        assert_eq!(c.cohomology_dim(8), 2);
    }

    #[test]
    fn connectedness_in_degree_zero() {
        let c = wedge_model();
        assert_eq!(c.cohomology_dim(0), 1);
    }

    #[test]
    fn cohomology_algebra_reproduces_quotient_products() {
        let c = wedge_model();
        let h = cohomology_algebra(&c, 12).unwrap();
        assert_eq!(h.dim(4), 2);
        assert_eq!(h.dim(8), 2);
        // the two degree-4 classes multiply to zero (x1 x2 is exact) while
        // their squares survive
        let a = FiniteElement::basis((4, 0));
        let b = FiniteElement::basis((4, 1));
        assert!(h.mul(&a, &b).is_zero());
        assert!(!h.mul(&a, &a).is_zero());
        assert!(!h.mul(&b, &b).is_zero());
    }
}
