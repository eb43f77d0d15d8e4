//! Three inputs through the formality pipeline: the regular-sequence fast
//! path, the witness search on a zero-differential input, and a Massey
//! obstruction certifying nonformality.
//!
//! ```bash
//! cargo run -p sullivan --example formality_pipeline
//! ```

use sullivan::cdga::{cohomology_algebra, Cdga, GeneratorSpec, Generators, SullivanAlgebra};
use sullivan::formality::{formality_check, FormalityOptions, FormalityVerdict};

fn describe(name: &str, verdict: &FormalityVerdict) {
    match verdict {
        FormalityVerdict::CertifiedFormal { route, bound, .. } => {
            println!("{name}: CERTIFIED_FORMAL via {} at bound {bound}", route.label());
        }
        FormalityVerdict::CertifiedNonformal { witness, .. } => {
            println!(
                "{name}: CERTIFIED_NONFORMAL, obstruction in degree {} with indeterminacy \
                 dimension {}",
                witness.degree,
                witness.indeterminacy_dim()
            );
        }
        FormalityVerdict::Inconclusive { obstruction, .. } => {
            println!("{name}: INCONCLUSIVE ({obstruction})");
        }
    }
    assert!(verdict.reverify().unwrap(), "certificates must re-verify");
}

fn main() {
    // the doubled mapping model: even generators closed, odd differentials
    // inside the even polynomial subalgebra, regular sequence
    let path = format!("{}/models/f_s2_y.model", env!("CARGO_MANIFEST_DIR"));
    let file = sullivan::io::ModelFile::parse(&std::fs::read_to_string(path).unwrap()).unwrap();
    let sullivan::io::SectionKind::Algebra(mapping) = &file.sections[0].kind else {
        unreachable!()
    };
    describe(
        "mapping-space model",
        &formality_check(&Cdga::free(mapping.clone()), &FormalityOptions::new(14)),
    );

    // a zero-differential finite algebra goes through the witness search
    let gens = Generators::new(vec![GeneratorSpec::new("w", 4)]).unwrap();
    let point = SullivanAlgebra::new(gens, Vec::new()).unwrap();
    let h = cohomology_algebra(&Cdga::free(point), 8).unwrap();
    describe(
        "zero-differential algebra",
        &formality_check(&Cdga::finite(h), &FormalityOptions::new(10)),
    );

    // the nonformal control
    let gens = Generators::new(vec![
        GeneratorSpec::new("x", 3),
        GeneratorSpec::new("y", 3),
        GeneratorSpec::new("z", 5),
    ])
    .unwrap();
    let xy = gens.mul(&gens.generator(0), &gens.generator(1));
    let nonformal = SullivanAlgebra::new(gens, vec![("z".into(), xy)]).unwrap();
    describe(
        "nonformal control",
        &formality_check(&Cdga::free(nonformal), &FormalityOptions::new(10)),
    );
}
