//! Double a minimal model along a sphere: every generator z gets a shifted
//! copy with |z_bar| = |z| - p, the suspension derivation S sends z to z_bar,
//! and d(z_bar) = -S(dz).
//!
//! ```bash
//! cargo run -p sullivan --example sphere_mapping_model
//! ```

use sullivan::bridge::sphere_mapping_space_model;
use sullivan::cdga::{GeneratorSpec, Generators, SullivanAlgebra};

fn main() {
    let gens = Generators::new(vec![
        GeneratorSpec::new("x1", 4),
        GeneratorSpec::new("x2", 4),
        GeneratorSpec::new("y", 7),
    ])
    .unwrap();
    let x1x2 = gens.mul(&gens.generator(0), &gens.generator(1));
    let wedge = SullivanAlgebra::new(gens, vec![("y".into(), x1x2)]).unwrap();

    for p in [2i64, 3] {
        let model = sphere_mapping_space_model(&wedge, p).expect("connectivity holds");
        let gens = model.algebra.gens();
        println!("maps from the {p}-sphere: doubled model");
        for id in gens.ids() {
            let s = gens.spec(id);
            println!(
                "  {} : degree {}, d = {}",
                s.name,
                s.degree,
                gens.format_element(model.algebra.differential_of(id))
            );
        }
        // the suspension is a two-term derivation on the product x1 x2
        let x1 = gens.generator(gens.id_of("x1").unwrap());
        let x2 = gens.generator(gens.id_of("x2").unwrap());
        let s_of_product = model.suspension.apply(&gens.mul(&x1, &x2));
        println!(
            "  S(x1*x2) = {} (degree -{p} derivation)",
            gens.format_element(&s_of_product)
        );
        println!("  minimal: {}", model.algebra.is_minimal());
        println!();
    }
}
