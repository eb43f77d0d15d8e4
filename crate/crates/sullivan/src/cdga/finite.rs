//! Finite-dimensional commutative cochain algebras presented by a graded
//! basis, a multiplication table and a differential matrix per degree.

use super::CdgaError;
use crate::graded::GradedBasis;
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Basis element address: (degree, index within the degree).
pub type BasisId = (i64, usize);

/// Sparse vector over the graded basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FiniteElement(BTreeMap<BasisId, Rational>);

#[derive(Debug, PartialEq, Eq)]
pub struct FiniteCdga {
    basis: GradedBasis<String>,
    /// Products of positive-degree basis pairs; absent entries are zero.
    products: BTreeMap<(BasisId, BasisId), FiniteElement>,
    differential: BTreeMap<BasisId, FiniteElement>,
    /// `Some(b)` when degrees above `b` were cut off (a truncated quotient);
    /// `None` for an honestly finite algebra.
    truncated_above: Option<i64>,
}

impl FiniteElement {
    pub fn zero() -> Self {
        FiniteElement(BTreeMap::new())
    }

    pub fn basis(id: BasisId) -> Self {
        Self::single(id, Rational::one())
    }

    pub fn single(id: BasisId, c: Rational) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(id, c);
        }
        FiniteElement(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisId, &Rational)> {
        self.0.iter()
    }

    pub fn coefficient(&self, id: BasisId) -> Rational {
        self.0.get(&id).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.0.clone();
        for (id, c) in &other.0 {
            let e = out.entry(*id).or_insert_with(Rational::zero);
            *e += c;
        }
        out.retain(|_, c| !c.is_zero());
        FiniteElement(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        FiniteElement(self.0.iter().map(|(id, c)| (*id, -c.clone())).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FiniteElement(self.0.iter().map(|(id, x)| (*id, x * c)).collect())
    }

    /// Homogeneity: `None` for zero, `Some(d)` when concentrated in degree d.
    pub fn degree(&self) -> Result<Option<i64>, CdgaError> {
        let mut deg = None;
        for id in self.0.keys() {
            match deg {
                None => deg = Some(id.0),
                Some(d) if d != id.0 => {
                    return Err(CdgaError::NonHomogeneous("finite element".into()))
                }
                _ => {}
            }
        }
        Ok(deg)
    }
}

impl FiniteCdga {
    pub fn new(
        basis: GradedBasis<String>,
        products: BTreeMap<(BasisId, BasisId), FiniteElement>,
        differential: BTreeMap<BasisId, FiniteElement>,
        truncated_above: Option<i64>,
    ) -> Result<Arc<Self>, CdgaError> {
        if basis.dim(0) != 1 {
            return Err(CdgaError::InvalidAlgebra(
                "degree 0 must be exactly the unit".into(),
            ));
        }
        if basis.degrees().any(|d| d < 0) {
            return Err(CdgaError::InvalidAlgebra("negative degree basis".into()));
        }
        let alg = FiniteCdga {
            basis,
            products,
            differential,
            truncated_above,
        };
        alg.validate()?;
        Ok(Arc::new(alg))
    }

    fn representable(&self, n: i64) -> bool {
        self.truncated_above.is_none_or(|b| n <= b)
    }

    fn validate(&self) -> Result<(), CdgaError> {
        let ids: Vec<BasisId> = self.basis_ids().collect();
        // product table sanity + graded commutativity
        for ((a, b), v) in &self.products {
            if a.0 < 1 || b.0 < 1 {
                return Err(CdgaError::InvalidAlgebra(
                    "product table addresses degree 0".into(),
                ));
            }
            if let Some(d) = v.degree()? {
                if d != a.0 + b.0 {
                    return Err(CdgaError::InvalidAlgebra(format!(
                        "product of degrees {} and {} lands in degree {}",
                        a.0, b.0, d
                    )));
                }
            }
        }
        for &a in &ids {
            for &b in &ids {
                if a.0 < 1 || b.0 < 1 {
                    continue;
                }
                if !self.representable(a.0 + b.0) {
                    continue;
                }
                let ab = self.mul_basis(a, b);
                let ba = self.mul_basis(b, a);
                let sign = if (a.0 * b.0) % 2 == 0 { 1 } else { -1 };
                let expect = if sign == 1 { ba.clone() } else { ba.neg() };
                if ab != expect {
                    return Err(CdgaError::InvalidAlgebra(format!(
                        "graded commutativity fails on basis pair ({:?}, {:?})",
                        a, b
                    )));
                }
            }
        }
        // associativity on basis triples that stay representable
        for &a in &ids {
            for &b in &ids {
                for &c in &ids {
                    let total = a.0 + b.0 + c.0;
                    if a.0 < 1 || b.0 < 1 || c.0 < 1 || !self.representable(total) {
                        continue;
                    }
                    let left = self.mul(&self.mul_basis(a, b), &FiniteElement::basis(c));
                    let right = self.mul(&FiniteElement::basis(a), &self.mul_basis(b, c));
                    if left != right {
                        return Err(CdgaError::InvalidAlgebra(format!(
                            "associativity fails on ({:?}, {:?}, {:?})",
                            a, b, c
                        )));
                    }
                }
            }
        }
        // differential: degree +1, d^2 = 0, Leibniz
        for (id, v) in &self.differential {
            if let Some(d) = v.degree()? {
                if d != id.0 + 1 {
                    return Err(CdgaError::InvalidAlgebra(format!(
                        "differential of degree-{} basis element lands in degree {}",
                        id.0, d
                    )));
                }
            }
        }
        for &a in &ids {
            if !self.representable(a.0 + 2) {
                continue;
            }
            if !self.d(&self.d(&FiniteElement::basis(a))).is_zero() {
                return Err(CdgaError::DifferentialNotSquareZero {
                    generator: format!("{:?}", a),
                });
            }
        }
        for &a in &ids {
            for &b in &ids {
                if a.0 < 1 || b.0 < 1 || !self.representable(a.0 + b.0 + 1) {
                    continue;
                }
                let lhs = self.d(&self.mul_basis(a, b));
                let sign = if a.0 % 2 == 0 { 1 } else { -1 };
                let mut rhs = self.mul(&self.d(&FiniteElement::basis(a)), &FiniteElement::basis(b));
                let second = self.mul(&FiniteElement::basis(a), &self.d(&FiniteElement::basis(b)));
                rhs = if sign == 1 {
                    rhs.add(&second)
                } else {
                    rhs.sub(&second)
                };
                if lhs != rhs {
                    return Err(CdgaError::InvalidAlgebra(format!(
                        "Leibniz fails on ({:?}, {:?})",
                        a, b
                    )));
                }
            }
        }
        Ok(())
    }

    /// Exterior algebra on one odd generator, as a finite algebra {1, t}.
    pub fn exterior_on_odd(name: &str, degree: i64) -> Result<Arc<Self>, CdgaError> {
        if degree < 1 || degree % 2 == 0 {
            return Err(CdgaError::InvalidDegree {
                name: name.into(),
                degree,
            });
        }
        let mut basis = GradedBasis::new();
        basis.push(0, "1".to_string());
        basis.push(degree, name.to_string());
        // t*t = 0: table stays empty
        Self::new(basis, BTreeMap::new(), BTreeMap::new(), None)
    }

    pub fn basis(&self) -> &GradedBasis<String> {
        &self.basis
    }

    pub fn basis_ids(&self) -> impl Iterator<Item = BasisId> + '_ {
        self.basis
            .degrees()
            .collect::<Vec<_>>()
            .into_iter()
            .flat_map(move |d| (0..self.basis.dim(d)).map(move |i| (d, i)))
    }

    pub fn dim(&self, n: i64) -> usize {
        self.basis.dim(n)
    }

    pub fn total_dim(&self) -> usize {
        self.basis.total_dim()
    }

    pub fn top_degree(&self) -> i64 {
        self.basis.max_degree().unwrap_or(0)
    }

    pub fn truncated_above(&self) -> Option<i64> {
        self.truncated_above
    }

    pub fn unit(&self) -> FiniteElement {
        FiniteElement::basis((0, 0))
    }

    pub fn has_zero_differential(&self) -> bool {
        self.differential.values().all(FiniteElement::is_zero)
    }

    fn mul_basis(&self, a: BasisId, b: BasisId) -> FiniteElement {
        if a.0 == 0 {
            return FiniteElement::basis(b);
        }
        if b.0 == 0 {
            return FiniteElement::basis(a);
        }
        self.products.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn mul(&self, x: &FiniteElement, y: &FiniteElement) -> FiniteElement {
        let mut out = FiniteElement::zero();
        for (&a, ca) in x.terms() {
            for (&b, cb) in y.terms() {
                let prod = self.mul_basis(a, b).scale(&(ca * cb));
                out = out.add(&prod);
            }
        }
        out
    }

    pub fn d(&self, x: &FiniteElement) -> FiniteElement {
        let mut out = FiniteElement::zero();
        for (id, c) in x.terms() {
            if let Some(v) = self.differential.get(id) {
                out = out.add(&v.scale(c));
            }
        }
        out
    }
}
