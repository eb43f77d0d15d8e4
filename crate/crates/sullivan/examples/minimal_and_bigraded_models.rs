//! Minimal model extraction and the bigraded model of a formal cohomology,
//! including the power witness for even generators of positive lower
//! grading.
//!
//! ```bash
//! cargo run -p sullivan --example minimal_and_bigraded_models
//! ```

use std::collections::BTreeMap;
use sullivan::cdga::{cohomology_algebra, Cdga, FiniteCdga, GeneratorSpec, Generators, SullivanAlgebra};
use sullivan::formality::{bigraded_model, minimal_model, power_coboundary_witness};

fn main() {
    // minimal model of the polynomial quotient cohomology: generators in
    // degrees 4, 4 and a killer in degree 7
    let gens = Generators::new(vec![
        GeneratorSpec::new("x1", 4),
        GeneratorSpec::new("x2", 4),
        GeneratorSpec::new("y", 7),
    ])
    .unwrap();
    let x1x2 = gens.mul(&gens.generator(0), &gens.generator(1));
    let wedge = SullivanAlgebra::new(gens, vec![("y".into(), x1x2)]).unwrap();
    let h = cohomology_algebra(&Cdga::free(wedge), 16).unwrap();
    let mm = minimal_model(&Cdga::finite(h.clone()), 16).unwrap();
    let degrees: Vec<i64> = mm
        .model
        .gens()
        .ids()
        .map(|i| mm.model.gens().degree(i))
        .collect();
    println!("minimal model generator degrees: {degrees:?}");

    // its bigraded model: grading 0 realizes the algebra generators, grading
    // 1 kills the relation
    let model = bigraded_model(&h, 12).unwrap();
    println!("bigraded strata:");
    for id in model.algebra.gens().ids() {
        let s = model.algebra.gens().spec(id);
        println!(
            "  {} : degree {}, lower grading {}",
            s.name,
            s.degree,
            model.grading_of(id)
        );
    }
    println!();

    // a wedge of two even classes grows even generators of positive grading;
    // each of those has a power hit by the differential
    let mut basis = sullivan::graded::GradedBasis::new();
    basis.push(0, "1".into());
    basis.push(2, "s1".into());
    basis.push(2, "s2".into());
    let two_spheres = FiniteCdga::new(basis, BTreeMap::new(), BTreeMap::new(), None).unwrap();
    let model = bigraded_model(&two_spheres, 7).unwrap();
    let even = model
        .algebra
        .gens()
        .ids()
        .find(|&id| model.algebra.gens().degree(id) % 2 == 0 && model.grading_of(id) >= 1)
        .expect("an even positive-grading generator exists");
    let name = model.algebra.gens().spec(even).name.clone();
    let witness = power_coboundary_witness(&model, &name, 8).unwrap();
    println!(
        "power witness for `{name}` (degree {}, grading {}): exponent {}, cogenerator {}",
        model.algebra.gens().degree(even),
        model.grading_of(even),
        witness.exponent,
        model.algebra.gens().format_element(&witness.cogenerator)
    );
}
