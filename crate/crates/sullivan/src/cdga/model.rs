//! Finite-dimensional quotient models, odd spherical retracts and freeness
//! analysis of cohomology algebras.

use super::algebra::{Cdga, CdgaElement};
use super::finite::{BasisId, FiniteCdga, FiniteElement};
use super::free::{Element, GeneratorSpec, Generators, Monomial};
use super::morphism::{check_morphism, CdgaMorphism};
use super::sullivan::SullivanAlgebra;
use super::CdgaError;
use crate::graded::GradedBasis;
use crate::matrix::RationalMatrix;
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Projection of a degree-p vector onto the span of the (rref'd) kernel
/// basis along the complement spanned by non-pivot coordinates.
fn kernel_projection(kernel_rref_rows: &[Vec<Rational>], pivots: &[usize], v: &[Rational]) -> Vec<Rational> {
    let _ = kernel_rref_rows;
    pivots.iter().map(|&p| v[p].clone()).collect()
}

/// Quotient by the acyclic differential ideal concentrated at and above the
/// top cohomological degree: returns a finite-dimensional algebra together
/// with the projection, which is verified to induce isomorphisms on
/// cohomology for all degrees up to `check_bound`.
pub fn finite_dimensional_model(
    alg: &Arc<SullivanAlgebra>,
    check_bound: i64,
) -> Result<(Arc<FiniteCdga>, CdgaMorphism), CdgaError> {
    let c = Cdga::free(alg.clone());
    let dims: Vec<usize> = (0..=check_bound).map(|n| c.cohomology_dim(n)).collect();
    let top = (1..=check_bound).rev().find(|&n| dims[n as usize] > 0);
    let p = match top {
        Some(t) if t == check_bound => {
            return Err(CdgaError::TopDegreeNotFound {
                checked_to: check_bound,
            })
        }
        Some(t) => t,
        None => 0,
    };

    // kernel of d in degree p, row-reduced; basis of A^p
    let dp = c.differential_matrix(p);
    let kernel = dp.kernel_basis();
    let kernel_mat = if kernel.is_empty() {
        RationalMatrix::zero(0, c.dim_in_degree(p))
    } else {
        RationalMatrix::from_rows(kernel.clone())
    };
    let ech = kernel_mat.rref();
    let kernel_rows: Vec<Vec<Rational>> = (0..ech.pivots.len())
        .map(|r| ech.matrix.row(r).to_vec())
        .collect();
    let pivots = ech.pivots.clone();

    let mut basis = GradedBasis::new();
    basis.push(0, "1".to_string());
    let gens = alg.gens();
    let mut monomial_index: BTreeMap<(i64, Monomial), usize> = BTreeMap::new();
    for n in 1..p {
        for (i, m) in alg.basis_in_degree(n).iter().enumerate() {
            basis.push(
                n,
                gens.format_element(&Element::from_monomial(m.clone(), Rational::one())),
            );
            monomial_index.insert((n, m.clone()), i);
        }
    }
    for (i, _) in kernel_rows.iter().enumerate() {
        basis.push(p, format!("k{p}_{i}"));
        let _ = i;
    }

    // express a homogeneous element of the free algebra in the quotient basis
    let express = |e: &Element, n: i64| -> FiniteElement {
        if n == 0 {
            let coeff = e.coefficient(&Monomial::unit());
            return FiniteElement::single((0, 0), coeff);
        }
        if n > p {
            return FiniteElement::zero();
        }
        if n < p {
            let mut out = FiniteElement::zero();
            for (m, coeff) in e.terms() {
                let idx = monomial_index[&(n, m.clone())];
                out = out.add(&FiniteElement::single((n, idx), coeff.clone()));
            }
            return out;
        }
        let v = c.coords(&CdgaElement::Free(e.clone()), p);
        let class = kernel_projection(&kernel_rows, &pivots, &v);
        let mut out = FiniteElement::zero();
        for (i, coeff) in class.into_iter().enumerate() {
            if !coeff.is_zero() {
                out = out.add(&FiniteElement::single((p, i), coeff));
            }
        }
        out
    };
    let lift = |id: BasisId| -> Element {
        if id.0 == 0 {
            Element::unit()
        } else if id.0 < p {
            Element::from_monomial(
                alg.basis_in_degree(id.0)[id.1].clone(),
                Rational::one(),
            )
        } else {
            let CdgaElement::Free(e) = c.from_coords(p, &kernel_rows[id.1]) else {
                unreachable!()
            };
            e
        }
    };

    let ids: Vec<BasisId> = basis
        .degrees()
        .collect::<Vec<_>>()
        .into_iter()
        .flat_map(|d| (0..basis.dim(d)).map(move |i| (d, i)))
        .collect();
    let mut products = BTreeMap::new();
    for &a in &ids {
        for &b in &ids {
            if a.0 < 1 || b.0 < 1 || a.0 + b.0 > p {
                continue;
            }
            let prod = gens.mul(&lift(a), &lift(b));
            let v = express(&prod, a.0 + b.0);
            if !v.is_zero() {
                products.insert((a, b), v);
            }
        }
    }
    let mut differential = BTreeMap::new();
    for &a in &ids {
        if a.0 >= p {
            continue; // d vanishes on ker d^p and above
        }
        let img = alg.d(&lift(a));
        let v = express(&img, a.0 + 1);
        if !v.is_zero() {
            differential.insert(a, v);
        }
    }
    let quotient = FiniteCdga::new(basis, products, differential, None)?;

    let images = gens
        .ids()
        .map(|id| {
            let n = gens.degree(id);
            CdgaElement::Finite(express(&gens.generator(id), n))
        })
        .collect();
    let projection = CdgaMorphism::on_generators(
        Cdga::free(alg.clone()),
        Cdga::finite(quotient.clone()),
        images,
    )?;
    let report = check_morphism(&projection, check_bound)?;
    if !report.all_isomorphisms() {
        return Err(CdgaError::Internal(
            "quotient projection failed to be a quasi-isomorphism".into(),
        ));
    }
    Ok((quotient, projection))
}

/// An odd closed generator together with the section/retraction pair onto
/// its exterior algebra.
#[derive(Debug, Clone)]
pub struct SphericalRetract {
    pub generator: GeneratorSpec,
    pub sphere: Arc<SullivanAlgebra>,
    pub inclusion: CdgaMorphism,
    pub retraction: CdgaMorphism,
}

/// Find an odd-degree closed generator `t` of a minimal Sullivan algebra and
/// build the inclusion of the exterior algebra on `t` alongside the
/// multiplicative retraction killing every other generator. Returns `None`
/// when no odd generator is closed.
pub fn odd_spherical_retract(
    alg: &Arc<SullivanAlgebra>,
) -> Result<Option<SphericalRetract>, CdgaError> {
    if !alg.is_minimal() {
        return Err(CdgaError::NotMinimal(
            "odd spherical retract requires a minimal algebra".into(),
        ));
    }
    let gens = alg.gens();
    let t = gens
        .ids()
        .find(|&id| gens.is_odd(id) && alg.differential_of(id).is_zero());
    let Some(t) = t else {
        return Ok(None);
    };
    let spec = gens.spec(t).clone();
    let sphere = SullivanAlgebra::new(
        Generators::new(vec![spec.clone()])?,
        Vec::new(),
    )?;
    let sphere_c = Cdga::free(sphere.clone());
    let alg_c = Cdga::free(alg.clone());
    let inclusion = CdgaMorphism::on_generators(
        sphere_c.clone(),
        alg_c.clone(),
        vec![CdgaElement::Free(gens.generator(t))],
    )?;
    let s_gens = sphere.gens();
    let retraction_images = gens
        .ids()
        .map(|id| {
            if id == t {
                CdgaElement::Free(s_gens.generator(0))
            } else {
                CdgaElement::Free(Element::zero())
            }
        })
        .collect();
    let retraction = CdgaMorphism::on_generators(alg_c, sphere_c, retraction_images)?;
    let composite = CdgaMorphism::compose(&retraction, &inclusion)?;
    if !composite.is_identity() {
        return Err(CdgaError::Internal(
            "retraction composed with inclusion is not the identity".into(),
        ));
    }
    Ok(Some(SphericalRetract {
        generator: spec,
        sphere,
        inclusion,
        retraction,
    }))
}

/// Factor a morphism out of a free algebra through a quotient projection:
/// given q0 on the free algebra and the projection onto the finite quotient,
/// produce the map on the quotient with q = q0 on any projection preimage.
/// Well-defined exactly when q0 kills the projection kernel, which the
/// morphism checks confirm.
pub fn factor_through_quotient(
    q0: &CdgaMorphism,
    projection: &CdgaMorphism,
    quotient: &Arc<FiniteCdga>,
) -> Result<CdgaMorphism, CdgaError> {
    if !projection.source().same(q0.source()) {
        return Err(CdgaError::NotAMorphism(
            "factorization requires q0 and the projection to share their source".into(),
        ));
    }
    let free = projection.source().clone();
    let mut images = BTreeMap::new();
    for id in quotient.basis_ids() {
        if id.0 == 0 {
            continue;
        }
        let n = id.0;
        // canonical preimage: solve projection(x) = e_id in degree n
        let dim_free = free.dim_in_degree(n);
        let mut mat = RationalMatrix::zero(quotient.dim(n), dim_free);
        for j in 0..dim_free {
            let img = projection.apply(&free.basis_element(n, j));
            let CdgaElement::Finite(f) = img else {
                return Err(CdgaError::NotAMorphism(
                    "projection target must be the quotient".into(),
                ));
            };
            for (&(d, i), c) in f.terms() {
                debug_assert_eq!(d, n);
                *mat.at_mut(i, j) = c.clone();
            }
        }
        let mut rhs = vec![Rational::zero(); quotient.dim(n)];
        rhs[id.1] = Rational::one();
        let x = mat.solve(&rhs).ok_or_else(|| {
            CdgaError::Internal("projection is not surjective onto the quotient".into())
        })?;
        images.insert(id, q0.apply(&free.from_coords(n, &x)));
    }
    CdgaMorphism::on_basis(
        Cdga::finite(quotient.clone()),
        q0.target().clone(),
        images,
    )
}

/// Outcome of the freeness analysis of a zero-differential algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FreenessVerdict {
    /// Free on the listed generator degrees, in every degree (finite case).
    Free { generator_degrees: Vec<i64> },
    /// Free in all checked degrees; nothing claimed above the bound.
    FreeUpToBound {
        bound: i64,
        generator_degrees: Vec<i64>,
    },
    /// First degree where the free algebra on the indecomposables and the
    /// input disagree.
    NotFree {
        degree: i64,
        free_dim: usize,
        actual_dim: usize,
    },
}

/// Compare a zero-differential finite algebra against the free
/// graded-commutative algebra on its indecomposables, degree by degree.
pub fn is_free_graded_commutative(
    h: &Arc<FiniteCdga>,
    max_degree: i64,
) -> Result<FreenessVerdict, CdgaError> {
    if !h.has_zero_differential() {
        return Err(CdgaError::ZeroDifferentialRequired(
            "freeness analysis".into(),
        ));
    }
    if let Some(b) = h.truncated_above() {
        if max_degree > b {
            return Err(CdgaError::InvalidAlgebra(format!(
                "the algebra is truncated above degree {b}; a freeness verdict at \
                 bound {max_degree} would compare against cut-off degrees"
            )));
        }
    }
    // indecomposables per degree: dim H^n minus the rank of products of
    // positive-degree elements
    let mut generator_degrees = Vec::new();
    for n in 1..=max_degree {
        let dim = h.dim(n);
        if dim == 0 {
            continue;
        }
        let mut product_rows = Vec::new();
        for a in 1..n {
            let b = n - a;
            for i in 0..h.dim(a) {
                for j in 0..h.dim(b) {
                    let prod = h.mul(&FiniteElement::basis((a, i)), &FiniteElement::basis((b, j)));
                    if !prod.is_zero() {
                        let mut row = vec![Rational::zero(); dim];
                        for (&(d, k), c) in prod.terms() {
                            debug_assert_eq!(d, n);
                            row[k] = c.clone();
                        }
                        product_rows.push(row);
                    }
                }
            }
        }
        let decomposable_rank = if product_rows.is_empty() {
            0
        } else {
            RationalMatrix::from_rows(product_rows).rank()
        };
        for _ in 0..dim - decomposable_rank {
            generator_degrees.push(n);
        }
    }
    let free_gens = Generators::new(
        generator_degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| GeneratorSpec::new(format!("g{d}_{i}"), d))
            .collect(),
    )?;
    for n in 1..=max_degree {
        let free_dim = free_gens.monomials_of_degree(n).len();
        let actual_dim = h.dim(n);
        if free_dim != actual_dim {
            return Ok(FreenessVerdict::NotFree {
                degree: n,
                free_dim,
                actual_dim,
            });
        }
    }
    let all_odd = generator_degrees.iter().all(|d| d % 2 != 0);
    let degree_sum: i64 = generator_degrees.iter().sum();
    if h.truncated_above().is_none()
        && all_odd
        && degree_sum <= max_degree
        && h.top_degree() <= max_degree
    {
        Ok(FreenessVerdict::Free { generator_degrees })
    } else {
        Ok(FreenessVerdict::FreeUpToBound {
            bound: max_degree,
            generator_degrees,
        })
    }
}

/// Recognize the minimal model of a sphere: a single closed odd generator
/// (odd spheres), or an even generator with the odd generator killing its
/// square (even spheres). Returns the sphere dimension.
pub fn sphere_dimension_of(alg: &Arc<SullivanAlgebra>) -> Option<i64> {
    let gens = alg.gens();
    match gens.len() {
        1 => {
            let id = 0;
            (gens.is_odd(id) && alg.differential_of(id).is_zero()).then(|| gens.degree(id))
        }
        2 => {
            let (u, v) = (0, 1);
            if gens.is_odd(u) || !gens.is_odd(v) {
                return None;
            }
            if gens.degree(v) != 2 * gens.degree(u) - 1 {
                return None;
            }
            if !alg.differential_of(u).is_zero() {
                return None;
            }
            let u2 = gens.pow(&gens.generator(u), 2);
            let dv = alg.differential_of(v);
            // dv must be a nonzero multiple of u^2
            let coeff = dv.terms().next().map(|(_, c)| c.clone())?;
            (dv == &u2.scale(&coeff) && !coeff.is_zero()).then(|| gens.degree(u))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere_even(u_deg: i64) -> Arc<SullivanAlgebra> {
        let gens = Generators::new(vec![
            GeneratorSpec::new("u", u_deg),
            GeneratorSpec::new("v", 2 * u_deg - 1),
        ])
        .unwrap();
        let u2 = gens.pow(&gens.generator(0), 2);
        SullivanAlgebra::new(gens, vec![("v".into(), u2)]).unwrap()
    }

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
    fn finite_model_of_even_sphere_is_truncated_polynomial() {
        // recipe applied by hand: H vanishes above 2, the ideal eats degree 3
        // and up plus a complement of ker d in degree 2; the quotient basis
        // is {1, u} with u^2 = 0
        let alg = sphere_even(2);
        let (quotient, projection) = finite_dimensional_model(&alg, 12).unwrap();
        assert_eq!(quotient.total_dim(), 2);
        assert_eq!(quotient.dim(2), 1);
        let u = FiniteElement::basis((2, 0));
        assert!(quotient.mul(&u, &u).is_zero());
        assert!(check_morphism(&projection, 12).unwrap().all_isomorphisms());
    }

    #[test]
    fn single_odd_generator_is_already_finite() {
        let alg = SullivanAlgebra::new(
            Generators::new(vec![GeneratorSpec::new("t", 3)]).unwrap(),
            Vec::new(),
        )
        .unwrap();
        let (quotient, _) = finite_dimensional_model(&alg, 10).unwrap();
        assert_eq!(quotient.total_dim(), 2);
        assert_eq!(quotient.dim(3), 1);
    }

    #[test]
    fn wedge_model_has_no_top_degree() {
        // its cohomology is nonzero in every degree 4k, detected by the
        // cohomology scan
        let alg = wedge_model();
        let err = finite_dimensional_model(&alg, 12);
        assert_eq!(err.err(), Some(CdgaError::TopDegreeNotFound { checked_to: 12 }));
    }

    #[test]
    fn odd_retract_on_exterior_pair_picks_first_generator() {
        let gens = Generators::new(vec![
            GeneratorSpec::new("t1", 1),
            GeneratorSpec::new("t2", 1),
        ])
        .unwrap();
        let alg = SullivanAlgebra::new(gens, Vec::new()).unwrap();
        let r = odd_spherical_retract(&alg).unwrap().unwrap();
        assert_eq!(r.generator.name, "t1");
        let composite = CdgaMorphism::compose(&r.retraction, &r.inclusion).unwrap();
        assert!(composite.is_identity());
        // the retraction is a valid morphism of rank 1 on first cohomology
        let report = check_morphism(&r.retraction, 1).unwrap();
        let h1 = &report.degrees[1];
        assert_eq!((h1.dim_source, h1.dim_target, h1.rank), (2, 1, 1));
    }

    #[test]
    fn purely_odd_cohomology_is_free_exactly() {
        // from a free presentation the verdict stays bounded (vanishing
        // above the bound is unknowable); from the honest finite model the
        // verdict upgrades to exact freeness
        let gens = Generators::new(vec![
            GeneratorSpec::new("t", 3),
            GeneratorSpec::new("s", 5),
        ])
        .unwrap();
        let alg = SullivanAlgebra::new(gens, Vec::new()).unwrap();
        let h_bounded = crate::cdga::cohomology_algebra(&Cdga::free(alg.clone()), 10).unwrap();
        assert_eq!(
            is_free_graded_commutative(&h_bounded, 10).unwrap(),
            FreenessVerdict::FreeUpToBound {
                bound: 10,
                generator_degrees: vec![3, 5]
            }
        );
        let (finite, _) = finite_dimensional_model(&alg, 12).unwrap();
        let h_exact = crate::cdga::cohomology_algebra(&Cdga::finite(finite), 10).unwrap();
        assert_eq!(
            is_free_graded_commutative(&h_exact, 10).unwrap(),
            FreenessVerdict::Free {
                generator_degrees: vec![3, 5]
            }
        );
    }

    #[test]
    fn even_sphere_model_has_no_odd_retract() {
        let alg = sphere_even(2);
        assert!(odd_spherical_retract(&alg).unwrap().is_none());
    }

    #[test]
    fn single_odd_generator_retracts_onto_itself() {
        let alg = SullivanAlgebra::new(
            Generators::new(vec![GeneratorSpec::new("t", 3)]).unwrap(),
            Vec::new(),
        )
        .unwrap();
        let r = odd_spherical_retract(&alg).unwrap().unwrap();
        assert_eq!(r.generator.degree, 3);
        assert!(CdgaMorphism::compose(&r.retraction, &r.inclusion)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn freeness_of_wedge_cohomology_fails_at_degree_eight() {
        let c = Cdga::free(wedge_model());
        let h = crate::cdga::cohomology_algebra(&c, 12).unwrap();
        let verdict = is_free_graded_commutative(&h, 12).unwrap();
        assert_eq!(
            verdict,
            FreenessVerdict::NotFree {
                degree: 8,
                free_dim: 3,
                actual_dim: 2
            }
        );
    }

    #[test]
    fn free_polynomial_times_exterior_is_free_up_to_bound() {
        // Q[u] (x) /\(t): present via its model with zero differential
        let gens = Generators::new(vec![
            GeneratorSpec::new("u", 2),
            GeneratorSpec::new("t", 3),
        ])
        .unwrap();
        let alg = SullivanAlgebra::new(gens, Vec::new()).unwrap();
        let h = crate::cdga::cohomology_algebra(&Cdga::free(alg), 10).unwrap();
        let verdict = is_free_graded_commutative(&h, 10).unwrap();
        assert_eq!(
            verdict,
            FreenessVerdict::FreeUpToBound {
                bound: 10,
                generator_degrees: vec![2, 3]
            }
        );
    }

    #[test]
    fn truncated_power_is_not_free() {
        // Q[u]/(u^3), |u| = 2: present via /\(u, v; dv = u^3)
        let gens = Generators::new(vec![
            GeneratorSpec::new("u", 2),
            GeneratorSpec::new("v", 5),
        ])
        .unwrap();
        let u3 = gens.pow(&gens.generator(0), 3);
        let alg = SullivanAlgebra::new(gens, vec![("v".into(), u3)]).unwrap();
        let h = crate::cdga::cohomology_algebra(&Cdga::free(alg), 10).unwrap();
        let verdict = is_free_graded_commutative(&h, 10).unwrap();
        assert_eq!(
            verdict,
            FreenessVerdict::NotFree {
                degree: 6,
                free_dim: 1,
                actual_dim: 0
            }
        );
    }

    #[test]
    fn retraction_factors_through_the_finite_model() {
        // two closed odd generators: the retract onto the first factors
        // through the four-dimensional quotient
        let gens = Generators::new(vec![
            GeneratorSpec::new("s", 3),
            GeneratorSpec::new("t", 3),
        ])
        .unwrap();
        let alg = SullivanAlgebra::new(gens, Vec::new()).unwrap();
        let retract = odd_spherical_retract(&alg).unwrap().unwrap();
        let (quotient, projection) = finite_dimensional_model(&alg, 10).unwrap();
        assert_eq!(quotient.total_dim(), 4);
        let q_bar = factor_through_quotient(&retract.retraction, &projection, &quotient).unwrap();
        // q_bar o projection = q0 on generators
        for id in alg.gens().ids() {
            let x = CdgaElement::Free(alg.gens().generator(id));
            assert_eq!(
                q_bar.apply(&projection.apply(&x)),
                retract.retraction.apply(&x)
            );
        }
        // and q_bar is a retraction of the induced inclusion
        let i_bar = CdgaMorphism::compose(&projection, &retract.inclusion).unwrap();
        let composite = CdgaMorphism::compose(&q_bar, &i_bar).unwrap();
        assert!(composite.is_identity());
    }

    #[test]
    fn sphere_shapes_are_recognized() {
        assert_eq!(sphere_dimension_of(&sphere_even(2)), Some(2));
        let odd = SullivanAlgebra::new(
            Generators::new(vec![GeneratorSpec::new("t", 3)]).unwrap(),
            Vec::new(),
        )
        .unwrap();
        assert_eq!(sphere_dimension_of(&odd), Some(3));
        assert_eq!(sphere_dimension_of(&wedge_model()), None);
    }
}
