//! Cochain dualization of a finite-type differential graded Lie algebra
//! into a Sullivan algebra with d = d0 + d1: generators in degree n are dual
//! to the degree n-1 part of the Lie algebra, d0 transposes the boundary and
//! d1 transposes the bracket.
//!
//! Sign convention: for basis elements x_i, x_j, x_g with [x_i, x_j] having
//! coefficient c on x_g, the quadratic part receives
//!
//! ```text
//! d1 v_g  +=  -(1/2) * (-1)^{|x_i|} * c * v_i v_j
//! ```
//!
//! summed over ordered pairs, and d0 v_g = -(transpose of the boundary).
//! This makes d^2 = 0 hold identically (it is also machine-verified on every
//! fully visible generator). With the canonical row-reduced bases the free
//! Lie algebra on one odd degree-3 generator dualizes to the classical
//! even-sphere shape with dw = x^2 exactly (constant c = 1).

use super::BridgeError;
use crate::cdga::{
    Cdga, CdgaElement, CdgaMorphism, Element, GenId, GeneratorSpec, Generators, SullivanAlgebra,
};
use crate::dgl::{FreeDgl, TensorLieModel};
use crate::matrix::RationalMatrix;
use crate::rational::{ratio, Rational};
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// What the dualization needs from a differential graded Lie algebra:
/// degree-wise dimensions, boundary matrices and bracket coordinates.
pub trait DglLike {
    fn dim(&self, n: i64) -> usize;
    /// Matrix of the boundary from degree n to n-1 (rows: degree n-1).
    fn boundary_matrix(&self, n: i64) -> RationalMatrix;
    /// Coordinates of [basis_i of degree m, basis_j of degree k] in the
    /// degree m+k basis.
    fn bracket_coords(&self, m: i64, i: usize, k: i64, j: usize) -> Vec<Rational>;
    /// Human-readable label for a degree-n basis element.
    fn basis_label(&self, n: i64, i: usize) -> String;
}

impl DglLike for Arc<FreeDgl> {
    fn dim(&self, n: i64) -> usize {
        if n < 1 {
            0
        } else {
            self.basis_in_degree(n).dim()
        }
    }

    fn boundary_matrix(&self, n: i64) -> RationalMatrix {
        FreeDgl::boundary_matrix(self, n)
    }

    fn bracket_coords(&self, m: i64, i: usize, k: i64, j: usize) -> Vec<Rational> {
        let bm = self.basis_in_degree(m);
        let bk = self.basis_in_degree(k);
        let target = self.basis_in_degree(m + k);
        let br = self
            .bracket(&bm.element(i), &bk.element(j))
            .expect("homogeneous basis elements");
        target
            .coords(&br)
            .expect("brackets stay in the Lie subspace")
    }

    fn basis_label(&self, n: i64, i: usize) -> String {
        self.format_element(&self.basis_in_degree(n).element(i))
    }
}

impl DglLike for TensorLieModel {
    fn dim(&self, n: i64) -> usize {
        if n < 1 {
            0
        } else {
            self.dim_in_degree(n)
        }
    }

    fn boundary_matrix(&self, n: i64) -> RationalMatrix {
        let src = self.dim(n);
        let tgt = self.dim(n - 1);
        let mut m = RationalMatrix::zero(tgt, src);
        for j in 0..src {
            let img = self.differential(&self.basis_element(n, j));
            if img.is_zero() {
                continue;
            }
            let col = self
                .coords(&img, n - 1)
                .expect("differential stays in the model");
            for (i, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    *m.at_mut(i, j) = c;
                }
            }
        }
        m
    }

    fn bracket_coords(&self, m: i64, i: usize, k: i64, j: usize) -> Vec<Rational> {
        let x = self.basis_element(m, i);
        let y = self.basis_element(k, j);
        let br = self.bracket(&x, &y);
        if br.is_zero() {
            return vec![Rational::zero(); self.dim(m + k)];
        }
        self.coords(&br, m + k)
            .expect("brackets stay in the model")
    }

    fn basis_label(&self, n: i64, i: usize) -> String {
        format!("e{n}_{i}")
    }
}

/// The dualized Sullivan algebra together with the generator correspondence
/// needed to dualize morphisms.
pub struct CeModel {
    pub algebra: Arc<SullivanAlgebra>,
    pub max_degree: i64,
    /// Generator id per (Lie degree, basis index); generator degree is the
    /// Lie degree + 1.
    gen_ids: BTreeMap<(i64, usize), GenId>,
    /// Names of generators whose linear differential was cut at the bound.
    pub partial_generators: Vec<String>,
}

impl CeModel {
    pub fn generator_id(&self, lie_degree: i64, index: usize) -> Option<GenId> {
        self.gen_ids.get(&(lie_degree, index)).copied()
    }

    pub fn dual_dim(&self, generator_degree: i64) -> usize {
        self.gen_ids
            .keys()
            .filter(|(d, _)| d + 1 == generator_degree)
            .count()
    }
}

/// Dualize a finite-type DGL up to `max_degree`. Generators are created for
/// every degree 2..=max_degree; the d0 part of a degree-max generator cannot
/// be represented and such generators are flagged partial. The d0+d1 shape
/// and d^2 = 0 are asserted on every generator with a fully visible
/// differential.
pub fn chevalley_eilenberg(dgl: &impl DglLike, max_degree: i64) -> Result<CeModel, BridgeError> {
    assert!(max_degree >= 2, "dualization needs max_degree >= 2");
    let mut specs = Vec::new();
    let mut names: BTreeMap<(i64, usize), String> = BTreeMap::new();
    for n in 2..=max_degree {
        let dim = dgl.dim(n - 1);
        for i in 0..dim {
            let name = format!("v{n}_{i:03}");
            specs.push(GeneratorSpec::new(name.clone(), n));
            names.insert((n - 1, i), name);
        }
    }
    let gens = Generators::new(specs)?;
    let gen_ids: BTreeMap<(i64, usize), GenId> = names
        .iter()
        .map(|(&key, name)| (key, gens.id_of(name).expect("just constructed")))
        .collect();

    let mut diff = vec![Element::zero(); gens.len()];
    let mut partial_ids = BTreeSet::new();
    for (&(lie_deg, idx), &gid) in &gen_ids {
        let gen_degree = lie_deg + 1;
        let mut image = Element::zero();
        // d0: minus the transpose of the boundary L_{lie_deg + 1} -> L_{lie_deg}
        let boundary = dgl.boundary_matrix(lie_deg + 1);
        let mut dropped = false;
        for beta in 0..boundary.cols() {
            let coeff = boundary.at(idx, beta);
            if coeff.is_zero() {
                continue;
            }
            match gen_ids.get(&(lie_deg + 1, beta)) {
                Some(&target) => {
                    image = image.add(&gens.generator(target).scale(&-coeff.clone()));
                }
                None => dropped = true,
            }
        }
        if dropped {
            partial_ids.insert(gid);
        }
        // d1: minus one half of the bracket transpose with the parity sign of
        // the first argument, over all ordered basis pairs
        for m in 1..lie_deg {
            let k = lie_deg - m;
            if gen_ids.keys().all(|&(d, _)| d != m) && dgl.dim(m) == 0 {
                continue;
            }
            for i in 0..dgl.dim(m) {
                for j in 0..dgl.dim(k) {
                    let coords = dgl.bracket_coords(m, i, k, j);
                    let c = &coords[idx];
                    if c.is_zero() {
                        continue;
                    }
                    let (Some(&vi), Some(&vj)) =
                        (gen_ids.get(&(m, i)), gen_ids.get(&(k, j)))
                    else {
                        // factors of a quadratic term have degree <= lie_deg - 1 + 1
                        // <= max_degree, so they always exist
                        return Err(BridgeError::Internal(
                            "quadratic dual term lost to truncation".into(),
                        ));
                    };
                    let mut mu = ratio(-1, 2);
                    if m % 2 != 0 {
                        mu = -mu;
                    }
                    let prod = gens.mul(&gens.generator(vi), &gens.generator(vj));
                    image = image.add(&prod.scale(&(mu * c)));
                }
            }
        }
        let _ = gen_degree;
        diff[gid as usize] = image;
    }

    // d^2 can only be evaluated where d is complete one degree out
    let skip_d2: BTreeSet<GenId> = gens
        .ids()
        .filter(|&id| gens.degree(id) >= max_degree - 1)
        .collect();
    let algebra = SullivanAlgebra::from_parts(Arc::new(gens), diff, partial_ids.clone(), skip_d2)?;

    // the d0 + d1 shape: every term of every differential has word length 1 or 2
    for id in algebra.gens().ids() {
        for (m, _) in algebra.differential_of(id).terms() {
            let len = m.word_length();
            if len != 1 && len != 2 {
                return Err(BridgeError::Internal(format!(
                    "differential of `{}` has a term of word length {len}",
                    algebra.gens().spec(id).name
                )));
            }
        }
    }
    let partial_generators = partial_ids
        .iter()
        .map(|&id| algebra.gens().spec(id).name.clone())
        .collect();
    Ok(CeModel {
        algebra,
        max_degree,
        gen_ids,
        partial_generators,
    })
}

/// Dualize a degree-zero DGL map `phi: M -> M'` into a morphism
/// `C*(M') -> C*(M)`: the transpose of `phi` on generators, extended
/// multiplicatively. `phi_matrix(n)` must give the matrix of `phi` on degree
/// n (rows: M' basis, columns: M basis).
pub fn ce_dual_morphism(
    phi_matrix: &dyn Fn(i64) -> RationalMatrix,
    ce_source: &CeModel,
    ce_target: &CeModel,
) -> Result<CdgaMorphism, BridgeError> {
    let src = &ce_source.algebra;
    let tgt = &ce_target.algebra;
    let mut images = vec![CdgaElement::Free(Element::zero()); src.gens().len()];
    for (&(lie_deg, idx), &gid) in &ce_source.gen_ids {
        let m = phi_matrix(lie_deg);
        let mut image = Element::zero();
        for col in 0..m.cols() {
            let c = m.at(idx, col);
            if c.is_zero() {
                continue;
            }
            let target_gid = ce_target.generator_id(lie_deg, col).ok_or_else(|| {
                BridgeError::Internal("dual morphism target generator missing".into())
            })?;
            image = image.add(&tgt.gens().generator(target_gid).scale(c));
        }
        images[gid as usize] = CdgaElement::Free(image);
    }
    Ok(CdgaMorphism::on_generators(
        Cdga::free(src.clone()),
        Cdga::free(tgt.clone()),
        images,
    )?)
}

/// Dualize the evaluation fibration of a tensor model: the projection
/// `A (x) L -> L` dualizes to `f: C*(L) -> C*(A (x) L)` and the section
/// `L -> A (x) L` to `g` backwards, with `g o f = id`.
pub fn ce_evaluation_pair(
    model: &TensorLieModel,
    ce_tensor: &CeModel,
    ce_lie: &CeModel,
) -> Result<(CdgaMorphism, CdgaMorphism), BridgeError> {
    let maps = model.evaluation_maps()?;
    let projection_matrix = |n: i64| -> RationalMatrix {
        let lb = model.lie.basis_in_degree(n);
        let mut m = RationalMatrix::zero(lb.dim(), model.dim_in_degree(n));
        for j in 0..model.dim_in_degree(n) {
            let img = maps.project(&model.basis_element(n, j));
            if img.is_zero() {
                continue;
            }
            let col = lb.coords(&img).expect("projection lands in the Lie algebra");
            for (i, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    *m.at_mut(i, j) = c;
                }
            }
        }
        m
    };
    let section_matrix = |n: i64| -> RationalMatrix {
        let lb = model.lie.basis_in_degree(n);
        let mut m = RationalMatrix::zero(model.dim_in_degree(n), lb.dim());
        for j in 0..lb.dim() {
            let img = maps.include(&lb.element(j));
            let col = model.coords(&img, n).expect("section lands in the model");
            for (i, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    *m.at_mut(i, j) = c;
                }
            }
        }
        m
    };
    let f = ce_dual_morphism(&projection_matrix, ce_lie, ce_tensor)?;
    let g = ce_dual_morphism(&section_matrix, ce_tensor, ce_lie)?;
    let composite = CdgaMorphism::compose(&g, &f)?;
    if !composite.is_identity() {
        return Err(BridgeError::Internal(
            "dualized evaluation pair failed to compose to the identity".into(),
        ));
    }
    Ok((f, g))
}
