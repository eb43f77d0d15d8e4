//! The sphere-mapping-space Sullivan model: every generator z of a minimal
//! source model is doubled into a shifted copy with |z bar| = |z| - p, the
//! suspension S sends z to its copy and kills copies, and the differential
//! on copies is d(z bar) = -S(dz).

use super::BridgeError;
use crate::cdga::{
    Cdga, CdgaElement, CdgaMorphism, Element, GenId, Generators, GeneratorSpec, SullivanAlgebra,
};
use std::collections::BTreeSet;
use std::sync::Arc;

/// Generator pairing z -> z bar with the sphere dimension.
#[derive(Debug, Clone)]
pub struct Suspension {
    pub sphere_dim: i64,
    /// (base generator name, shifted copy name) pairs.
    pub pairs: Vec<(String, String)>,
}

/// The degree -p algebra derivation S on the doubled algebra: S(z) = z bar,
/// S(z bar) = 0, extended with the Koszul sign (-1)^{p |a|}.
#[derive(Debug, Clone)]
pub struct SuspensionDerivation {
    gens: Arc<Generators>,
    images: Vec<Element>,
    pub sphere_dim: i64,
}

impl SuspensionDerivation {
    pub fn apply(&self, e: &Element) -> Element {
        self.gens
            .apply_derivation(e, &self.images, self.sphere_dim)
    }
}

#[derive(Debug)]
pub struct SphereMappingModel {
    pub algebra: Arc<SullivanAlgebra>,
    pub source: Arc<SullivanAlgebra>,
    pub sphere_dim: i64,
    pub suspension: SuspensionDerivation,
    pub pairing: Suspension,
    /// Ids (in the doubled table) of base generators and of their copies,
    /// indexed by the source generator id.
    base_ids: Vec<GenId>,
    bar_ids: Vec<GenId>,
}

fn bar_name(name: &str) -> String {
    format!("{name}_bar")
}

/// Double a minimal model along a p-sphere. Every source generator must have
/// degree > p so that the shifted copies stay in positive degrees.
pub fn sphere_mapping_space_model(
    source: &Arc<SullivanAlgebra>,
    p: i64,
) -> Result<SphereMappingModel, BridgeError> {
    if !source.is_minimal() {
        return Err(BridgeError::NotMinimal(
            "the sphere mapping model doubles a minimal model".into(),
        ));
    }
    assert!(p >= 1, "sphere dimension must be >= 1");
    let src_gens = source.gens();
    let mut specs = Vec::new();
    let mut pairs = Vec::new();
    for id in src_gens.ids() {
        let spec = src_gens.spec(id);
        if spec.degree <= p {
            return Err(BridgeError::ConnectivityViolation {
                detail: format!(
                    "generator `{}` has degree {} <= sphere dimension {p}; \
                     its shifted copy would land in degree <= 0",
                    spec.name, spec.degree
                ),
            });
        }
        let barred = bar_name(&spec.name);
        if src_gens.id_of(&barred).is_some() {
            return Err(BridgeError::NameCollision(barred));
        }
        specs.push(spec.clone());
        specs.push(GeneratorSpec::new(barred.clone(), spec.degree - p));
        pairs.push((spec.name.clone(), barred));
    }
    let gens = Arc::new(Generators::new(specs)?);

    let mut base_ids = Vec::new();
    let mut bar_ids = Vec::new();
    for id in src_gens.ids() {
        let name = &src_gens.spec(id).name;
        base_ids.push(gens.id_of(name).expect("just constructed"));
        bar_ids.push(gens.id_of(&bar_name(name)).expect("just constructed"));
    }

    // S on generators of the doubled table
    let mut s_images = vec![Element::zero(); gens.len()];
    for (src_id, (&base, &bar)) in base_ids.iter().zip(&bar_ids).enumerate() {
        let _ = src_id;
        s_images[base as usize] = gens.generator(bar);
        // copies map to zero
        let _ = bar;
    }
    let suspension = SuspensionDerivation {
        gens: gens.clone(),
        images: s_images,
        sphere_dim: p,
    };

    // differentials: base generators keep d, copies get -S(dz)
    let mut diff = vec![Element::zero(); gens.len()];
    for src_id in src_gens.ids() {
        let dz = gens.embed(source.differential_of(src_id), src_gens)?;
        let dbar = suspension.apply(&dz).neg();
        diff[base_ids[src_id as usize] as usize] = dz;
        diff[bar_ids[src_id as usize] as usize] = dbar;
    }
    let algebra =
        SullivanAlgebra::from_parts(gens.clone(), diff, BTreeSet::new(), BTreeSet::new())?;
    if !algebra.is_minimal() {
        return Err(BridgeError::Internal(
            "doubled model lost minimality".into(),
        ));
    }

    let model = SphereMappingModel {
        algebra,
        source: source.clone(),
        sphere_dim: p,
        suspension,
        pairing: Suspension {
            sphere_dim: p,
            pairs,
        },
        base_ids,
        bar_ids,
    };
    model.verify()?;
    Ok(model)
}

impl SphereMappingModel {
    pub fn base_id(&self, src: GenId) -> GenId {
        self.base_ids[src as usize]
    }

    pub fn bar_id(&self, src: GenId) -> GenId {
        self.bar_ids[src as usize]
    }

    fn verify(&self) -> Result<(), BridgeError> {
        let alg = &self.algebra;
        let gens = alg.gens();
        let s = &self.suspension;
        for src_id in self.source.gens().ids() {
            let base = self.base_ids[src_id as usize];
            let bar = self.bar_ids[src_id as usize];
            // S(z) = z bar, S(z bar) = 0, S^2 = 0 on generators
            let sz = s.apply(&gens.generator(base));
            if sz != gens.generator(bar) {
                return Err(BridgeError::Internal("S(z) != z bar".into()));
            }
            if !s.apply(&sz).is_zero() {
                return Err(BridgeError::Internal("S^2 != 0 on a generator".into()));
            }
            // d(z bar) + S(dz) = 0, the defining identity
            let lhs = alg
                .differential_of(bar)
                .add(&s.apply(alg.differential_of(base)));
            if !lhs.is_zero() {
                return Err(BridgeError::Internal(
                    "d on a shifted copy is not -S(d base)".into(),
                ));
            }
        }
        // For odd p the suspension squares to zero everywhere (it is an odd
        // derivation); spot-check on generator products. For even p only the
        // generator-level identity holds.
        if self.sphere_dim % 2 != 0 {
            for a in gens.ids() {
                for b in gens.ids() {
                    let prod = gens.mul(&gens.generator(a), &gens.generator(b));
                    if !s.apply(&s.apply(&prod)).is_zero() {
                        return Err(BridgeError::Internal(
                            "S^2 != 0 on a product with odd sphere dimension".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// The relative-model inclusion of the source into the doubled algebra.
    pub fn base_inclusion(&self) -> Result<CdgaMorphism, BridgeError> {
        let images = self
            .source
            .gens()
            .ids()
            .map(|id| {
                CdgaElement::Free(self.algebra.gens().generator(self.base_ids[id as usize]))
            })
            .collect();
        Ok(CdgaMorphism::on_generators(
            Cdga::free(self.source.clone()),
            Cdga::free(self.algebra.clone()),
            images,
        )?)
    }

    /// The retraction that kills every shifted copy; dual to the evaluation
    /// section of the fibration.
    pub fn bar_projection(&self) -> Result<CdgaMorphism, BridgeError> {
        let mut images = vec![CdgaElement::Free(Element::zero()); self.algebra.gens().len()];
        for src_id in self.source.gens().ids() {
            images[self.base_ids[src_id as usize] as usize] =
                CdgaElement::Free(self.source.gens().generator(src_id));
        }
        Ok(CdgaMorphism::on_generators(
            Cdga::free(self.algebra.clone()),
            Cdga::free(self.source.clone()),
            images,
        )?)
    }

    /// Doubled lower grading: a shifted copy inherits the lower grading of
    /// its base generator. Metadata only; no universal property is verified.
    pub fn doubled_lower_grading(&self, source_grading: &[u32]) -> Vec<(String, u32)> {
        let mut out = Vec::new();
        for src_id in self.source.gens().ids() {
            let g = source_grading[src_id as usize];
            out.push((self.source.gens().spec(src_id).name.clone(), g));
            out.push((bar_name(&self.source.gens().spec(src_id).name), g));
        }
        out
    }
}
