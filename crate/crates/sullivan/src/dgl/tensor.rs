//! The function-space Lie model: a finite cochain algebra tensor a free
//! graded Lie algebra, with mixed grading |a (x) l| = -|a| + |l|, the twisted
//! bracket and the tensor differential. Structural laws are validated on
//! every basis pair and triple up to a caller-supplied degree bound.

use super::free_dgl::FreeDgl;
use super::lie::{boundary_on_element, bracket_of, word_degree, LieElement, TensorWord};
use super::DglError;
use crate::cdga::{BasisId, CdgaElement, CdgaMorphism, FiniteCdga, FiniteElement};
use crate::rational::Rational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Element of the tensor model: sparse combination of (algebra basis id,
/// tensor word) pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorLieElement(BTreeMap<(BasisId, TensorWord), Rational>);

impl TensorLieElement {
    pub fn zero() -> Self {
        TensorLieElement(BTreeMap::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(BasisId, TensorWord), &Rational)> {
        self.0.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.0.clone();
        for (k, c) in &other.0 {
            let e = out.entry(k.clone()).or_insert_with(Rational::zero);
            *e += c;
        }
        out.retain(|_, c| !c.is_zero());
        TensorLieElement(out)
    }

    pub fn neg(&self) -> Self {
        TensorLieElement(self.0.iter().map(|(k, c)| (k.clone(), -c.clone())).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TensorLieElement(self.0.iter().map(|(k, x)| (k.clone(), x * c)).collect())
    }

    fn insert(&mut self, a: BasisId, w: TensorWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (a, w);
        let e = self.0.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if self.0[&key].is_zero() {
            self.0.remove(&key);
        }
    }

    /// `1 (x) l`.
    pub fn from_lie(l: &LieElement) -> Self {
        let mut out = TensorLieElement::zero();
        for (w, c) in l.words() {
            out.insert((0, 0), w.clone(), c.clone());
        }
        out
    }
}

/// `(A (x) L, D)` with the grading, bracket and differential of the
/// function-space model, plus cached degree-wise bases up to `bound`.
#[derive(Debug)]
pub struct TensorLieModel {
    pub algebra: Arc<FiniteCdga>,
    pub lie: Arc<FreeDgl>,
    pub bound: i64,
    /// Per model degree: (algebra basis id, Lie degree, Lie basis index).
    bases: BTreeMap<i64, Vec<(BasisId, i64, usize)>>,
}

/// Build and validate the model. Fails when the algebra is a truncated
/// quotient, or when basis elements of degree <= 0 would arise (the
/// connectivity requirement).
pub fn mapping_space_lie_model(
    algebra: &Arc<FiniteCdga>,
    lie: &Arc<FreeDgl>,
    bound: i64,
) -> Result<TensorLieModel, DglError> {
    if let Some(b) = algebra.truncated_above() {
        return Err(DglError::TruncatedInput(format!(
            "the cochain algebra is truncated above degree {b}; an honest finite model is required"
        )));
    }
    let top = algebra.top_degree();
    let Some(conn) = lie.min_generator_degree() else {
        return Err(DglError::ConnectivityViolation {
            detail: "the Lie algebra has no generators".into(),
        });
    };
    if conn <= top {
        return Err(DglError::ConnectivityViolation {
            detail: format!(
                "algebra top degree {top} meets Lie connectivity {conn}: \
                 elements of degree <= 0 arise"
            ),
        });
    }
    let mut bases = BTreeMap::new();
    for d in 1..=bound {
        let mut list = Vec::new();
        for k in algebra.basis().degrees().collect::<Vec<_>>() {
            let lie_deg = d + k;
            if lie_deg < 1 {
                continue;
            }
            let lb = lie.basis_in_degree(lie_deg);
            for ai in 0..algebra.dim(k) {
                for li in 0..lb.dim() {
                    list.push(((k, ai), lie_deg, li));
                }
            }
        }
        bases.insert(d, list);
    }
    let model = TensorLieModel {
        algebra: algebra.clone(),
        lie: lie.clone(),
        bound,
        bases,
    };
    model.validate()?;
    Ok(model)
}

impl TensorLieModel {
    pub fn dim_in_degree(&self, d: i64) -> usize {
        self.bases.get(&d).map_or(0, Vec::len)
    }

    pub fn basis_element(&self, d: i64, idx: usize) -> TensorLieElement {
        let (a, lie_deg, li) = self.bases[&d][idx];
        let lb = self.lie.basis_in_degree(lie_deg);
        let le = lb.element(li);
        let mut out = TensorLieElement::zero();
        for (w, c) in le.words() {
            out.insert(a, w.clone(), c.clone());
        }
        out
    }

    pub fn degree_of(&self, e: &TensorLieElement) -> Result<Option<i64>, DglError> {
        let degrees = self.lie.degrees();
        let mut deg = None;
        for ((a, w), _) in e.terms() {
            let d = word_degree(&degrees, w) - a.0;
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => {
                    return Err(DglError::NonHomogeneous(format!(
                        "mixes degrees {prev} and {d}"
                    )))
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    /// `[a (x) l, a' (x) l'] = (-1)^{|a'| |l|} a a' (x) [l, l']`.
    pub fn bracket(&self, x: &TensorLieElement, y: &TensorLieElement) -> TensorLieElement {
        let degrees = self.lie.degrees();
        let mut out = TensorLieElement::zero();
        for ((a, wa), ca) in x.terms() {
            let la = word_degree(&degrees, wa);
            for ((b, wb), cb) in y.terms() {
                let lb = word_degree(&degrees, wb);
                let prod = self
                    .algebra
                    .mul(&FiniteElement::basis(*a), &FiniteElement::basis(*b));
                if prod.is_zero() {
                    continue;
                }
                let br = bracket_of(
                    la,
                    lb,
                    &LieElement::from_word(wa.clone(), num_traits::One::one()),
                    &LieElement::from_word(wb.clone(), num_traits::One::one()),
                );
                if br.is_zero() {
                    continue;
                }
                let mut coeff = ca * cb;
                if (b.0 * la) % 2 != 0 {
                    coeff = -coeff;
                }
                for (&pid, pc) in prod.terms() {
                    for (w, wc) in br.words() {
                        out.insert(pid, w.clone(), &coeff * pc * wc);
                    }
                }
            }
        }
        out
    }

    /// `D(a (x) l) = d_A a (x) l + (-1)^{|a|} a (x) d_L l`.
    pub fn differential(&self, x: &TensorLieElement) -> TensorLieElement {
        let degrees = self.lie.degrees();
        let boundary: Vec<LieElement> = (0..degrees.len())
            .map(|i| self.lie.boundary_of(i as u32).clone())
            .collect();
        let mut out = TensorLieElement::zero();
        for ((a, w), c) in x.terms() {
            let da = self.algebra.d(&FiniteElement::basis(*a));
            for (&bid, bc) in da.terms() {
                out.insert(bid, w.clone(), c * bc);
            }
            let dl = boundary_on_element(
                &degrees,
                &boundary,
                &LieElement::from_word(w.clone(), num_traits::One::one()),
            );
            let sign = if a.0 % 2 == 0 { c.clone() } else { -c.clone() };
            for (w2, wc) in dl.words() {
                out.insert(*a, w2.clone(), &sign * wc);
            }
        }
        out
    }

    pub fn coords(&self, e: &TensorLieElement, d: i64) -> Option<Vec<Rational>> {
        let layout = self.bases.get(&d)?;
        // group words per algebra basis id
        let mut grouped: BTreeMap<BasisId, LieElement> = BTreeMap::new();
        for ((a, w), c) in e.terms() {
            let entry = grouped.entry(*a).or_insert_with(LieElement::zero);
            *entry = entry.add(&LieElement::from_word(w.clone(), c.clone()));
        }
        let mut out = vec![Rational::zero(); layout.len()];
        // per block (a, lie_deg): solve Lie coordinates
        let mut pos = 0usize;
        let mut seen: Vec<BasisId> = Vec::new();
        let mut idx = 0usize;
        while idx < layout.len() {
            let (a, lie_deg, _) = layout[idx];
            let lb = self.lie.basis_in_degree(lie_deg);
            let block = lb.dim();
            if let Some(le) = grouped.get(&a) {
                let coords = lb.coords(le)?;
                out[pos..pos + block].clone_from_slice(&coords);
            }
            seen.push(a);
            pos += block;
            idx += block;
        }
        // anything grouped under an id not present in the layout is outside
        for a in grouped.keys() {
            if !seen.contains(a) && !grouped[a].is_zero() {
                return None;
            }
        }
        Some(out)
    }

    /// D^2 = 0, graded antisymmetry, graded Jacobi and D as a bracket
    /// derivation, on all basis elements/pairs/triples up to the bound.
    pub fn validate(&self) -> Result<(), DglError> {
        for d in 1..=self.bound {
            for i in 0..self.dim_in_degree(d) {
                let x = self.basis_element(d, i);
                let dd = self.differential(&self.differential(&x));
                if !dd.is_zero() {
                    return Err(DglError::StructuralCheckFailed(format!(
                        "D^2 != 0 on basis element {i} of degree {d}"
                    )));
                }
                if d == 1 && !self.differential(&x).is_zero() {
                    return Err(DglError::StructuralCheckFailed(format!(
                        "D drops below degree 1 on basis element {i}"
                    )));
                }
            }
        }
        for da in 1..=self.bound {
            for db in 1..=(self.bound - da) {
                for i in 0..self.dim_in_degree(da) {
                    for j in 0..self.dim_in_degree(db) {
                        let x = self.basis_element(da, i);
                        let y = self.basis_element(db, j);
                        let xy = self.bracket(&x, &y);
                        let yx = self.bracket(&y, &x);
                        let signed = if (da * db) % 2 == 0 { yx.neg() } else { yx };
                        if xy != signed {
                            return Err(DglError::StructuralCheckFailed(format!(
                                "antisymmetry fails on degrees ({da}, {db})"
                            )));
                        }
                        // derivation: D[x,y] = [Dx,y] + (-1)^{|x|}[x,Dy]
                        let lhs = self.differential(&xy);
                        let mut rhs = self.bracket(&self.differential(&x), &y);
                        let second = self.bracket(&x, &self.differential(&y));
                        rhs = if da % 2 == 0 {
                            rhs.add(&second)
                        } else {
                            rhs.sub(&second)
                        };
                        if lhs != rhs {
                            return Err(DglError::StructuralCheckFailed(format!(
                                "bracket derivation fails on degrees ({da}, {db})"
                            )));
                        }
                    }
                }
            }
        }
        for da in 1..=self.bound {
            for db in 1..=(self.bound - da) {
                for dc in 1..=(self.bound - da - db) {
                    for i in 0..self.dim_in_degree(da) {
                        for j in 0..self.dim_in_degree(db) {
                            for k in 0..self.dim_in_degree(dc) {
                                let x = self.basis_element(da, i);
                                let y = self.basis_element(db, j);
                                let z = self.basis_element(dc, k);
                                // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
                                let lhs = self.bracket(&x, &self.bracket(&y, &z));
                                let mut rhs = self.bracket(&self.bracket(&x, &y), &z);
                                let second = self.bracket(&y, &self.bracket(&x, &z));
                                rhs = if (da * db) % 2 == 0 {
                                    rhs.add(&second)
                                } else {
                                    rhs.sub(&second)
                                };
                                if lhs != rhs {
                                    return Err(DglError::StructuralCheckFailed(format!(
                                        "Jacobi fails on degrees ({da}, {db}, {dc})"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The fibration pair: projection induced by the augmentation of A and the
/// section induced by its unit, both verified to commute with the
/// differentials and brackets on the cached bases.
pub struct EvaluationMaps<'m> {
    model: &'m TensorLieModel,
}

impl TensorLieModel {
    pub fn evaluation_maps(&self) -> Result<EvaluationMaps<'_>, DglError> {
        let maps = EvaluationMaps { model: self };
        maps.verify()?;
        Ok(maps)
    }
}

impl<'m> EvaluationMaps<'m> {
    /// `a (x) l -> eps(a) l`.
    pub fn project(&self, e: &TensorLieElement) -> LieElement {
        let mut out = LieElement::zero();
        for ((a, w), c) in e.terms() {
            if a.0 == 0 {
                out = out.add(&LieElement::from_word(w.clone(), c.clone()));
            }
        }
        out
    }

    /// `l -> 1 (x) l`.
    pub fn include(&self, l: &LieElement) -> TensorLieElement {
        TensorLieElement::from_lie(l)
    }

    fn verify(&self) -> Result<(), DglError> {
        let m = self.model;
        // projection after section is the identity on generators
        for (i, _) in m.lie.generators().iter().enumerate() {
            let l = m.lie.generator(i as u32);
            if self.project(&self.include(&l)) != l {
                return Err(DglError::Internal(
                    "projection after section is not the identity".into(),
                ));
            }
        }
        // chain maps and bracket maps on the cached bases
        for d in 1..=m.bound {
            for i in 0..m.dim_in_degree(d) {
                let x = m.basis_element(d, i);
                let lhs = self.project(&m.differential(&x));
                let rhs = m.lie.boundary(&self.project(&x));
                if lhs != rhs {
                    return Err(DglError::StructuralCheckFailed(
                        "projection does not commute with the differentials".into(),
                    ));
                }
            }
            let lb = m.lie.basis_in_degree(d);
            for i in 0..lb.dim() {
                let l = lb.element(i);
                let lhs = m.differential(&self.include(&l));
                let rhs = self.include(&m.lie.boundary(&l));
                if lhs != rhs {
                    return Err(DglError::StructuralCheckFailed(
                        "section does not commute with the differentials".into(),
                    ));
                }
            }
        }
        for da in 1..=m.bound {
            for db in 1..=(m.bound - da) {
                for i in 0..m.dim_in_degree(da) {
                    for j in 0..m.dim_in_degree(db) {
                        let x = m.basis_element(da, i);
                        let y = m.basis_element(db, j);
                        let lhs = self.project(&m.bracket(&x, &y));
                        let (px, py) = (self.project(&x), self.project(&y));
                        let rhs = bracket_of(da, db, &px, &py);
                        if lhs != rhs {
                            return Err(DglError::StructuralCheckFailed(
                                "projection does not respect the bracket".into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Map of tensor models induced by a cochain-algebra morphism on the left
/// factor (`f (x) id`).
pub struct TensorModelMap<'s, 't> {
    pub source: &'s TensorLieModel,
    pub target: &'t TensorLieModel,
    pub cdga_map: CdgaMorphism,
}

impl<'s, 't> TensorModelMap<'s, 't> {
    pub fn apply(&self, e: &TensorLieElement) -> TensorLieElement {
        let mut out = TensorLieElement::zero();
        for ((a, w), c) in e.terms() {
            let img = self
                .cdga_map
                .apply(&CdgaElement::Finite(FiniteElement::basis(*a)));
            let CdgaElement::Finite(img) = img else {
                panic!("tensor model maps require finite targets")
            };
            for (&bid, bc) in img.terms() {
                out.insert(bid, w.clone(), c * bc);
            }
        }
        out
    }

    fn verify(&self, bound: i64) -> Result<(), DglError> {
        for d in 1..=bound {
            for i in 0..self.source.dim_in_degree(d) {
                let x = self.source.basis_element(d, i);
                let lhs = self.apply(&self.source.differential(&x));
                let rhs = self.target.differential(&self.apply(&x));
                if lhs != rhs {
                    return Err(DglError::StructuralCheckFailed(
                        "induced map does not commute with D".into(),
                    ));
                }
            }
        }
        for da in 1..=bound {
            for db in 1..=(bound - da) {
                for i in 0..self.source.dim_in_degree(da) {
                    for j in 0..self.source.dim_in_degree(db) {
                        let x = self.source.basis_element(da, i);
                        let y = self.source.basis_element(db, j);
                        let lhs = self.apply(&self.source.bracket(&x, &y));
                        let rhs = self.target.bracket(&self.apply(&x), &self.apply(&y));
                        if lhs != rhs {
                            return Err(DglError::StructuralCheckFailed(
                                "induced map does not respect the bracket".into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The retract pair `i (x) id`, `q (x) id` between the tensor model over an
/// exterior sphere algebra and the tensor model over A.
pub struct TensorRetract<'t> {
    pub sphere_model: TensorLieModel,
    pub target: &'t TensorLieModel,
    pub inclusion_map: CdgaMorphism,
    pub retraction_map: CdgaMorphism,
}

impl TensorLieModel {
    /// Build `I = i (x) id` and `Q = q (x) id` from a CDGA retract pair
    /// `q o i = id` between a finite sphere algebra and this model's algebra,
    /// verifying `Q o I = id` on the sphere-side basis up to the bound.
    pub fn tensor_retract(
        &self,
        sphere: &Arc<FiniteCdga>,
        inclusion: &CdgaMorphism,
        retraction: &CdgaMorphism,
    ) -> Result<TensorRetract<'_>, DglError> {
        let composite = CdgaMorphism::compose(retraction, inclusion)
            .map_err(|e| DglError::NotARetract(e.to_string()))?;
        if !composite.is_identity() {
            return Err(DglError::NotARetract(
                "the retraction composed with the inclusion is not the identity".into(),
            ));
        }
        let sphere_model = mapping_space_lie_model(sphere, &self.lie, self.bound)?;
        {
            let into = TensorModelMap {
                source: &sphere_model,
                target: self,
                cdga_map: inclusion.clone(),
            };
            let onto = TensorModelMap {
                source: self,
                target: &sphere_model,
                cdga_map: retraction.clone(),
            };
            into.verify(self.bound)?;
            onto.verify(self.bound)?;
            for d in 1..=self.bound {
                for i in 0..sphere_model.dim_in_degree(d) {
                    let x = sphere_model.basis_element(d, i);
                    if onto.apply(&into.apply(&x)) != x {
                        return Err(DglError::NotARetract(
                            "tensor retract composite is not the identity".into(),
                        ));
                    }
                }
            }
        }
        Ok(TensorRetract {
            sphere_model,
            target: self,
            inclusion_map: inclusion.clone(),
            retraction_map: retraction.clone(),
        })
    }
}
