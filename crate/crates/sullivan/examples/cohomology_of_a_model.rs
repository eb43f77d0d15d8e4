//! Load the wedge model from its file and print its cohomology table with
//! canonical representatives: two polynomial classes whose product is exact.
//!
//! ```bash
//! cargo run -p sullivan --example cohomology_of_a_model
//! ```

use sullivan::cdga::Cdga;
use sullivan::io::{ModelFile, SectionKind};

fn main() {
    let path = format!("{}/models/y_k4_wedge.model", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(path).expect("shipped model");
    let file = ModelFile::parse(&text).expect("valid model file");
    let section = file.first_algebra().expect("algebra section");
    let SectionKind::Algebra(alg) = &section.kind else {
        unreachable!()
    };
    println!("model `{}`: generators", section.name);
    for id in alg.gens().ids() {
        let s = alg.gens().spec(id);
        println!(
            "  {} : degree {}, d {} = {}",
            s.name,
            s.degree,
            s.name,
            alg.gens().format_element(alg.differential_of(id))
        );
    }
    println!();
    let c = Cdga::free(alg.clone());
    for n in 0..=16 {
        let reps = c.cohomology_representatives(n);
        if reps.is_empty() {
            continue;
        }
        let basis: Vec<String> = reps
            .iter()
            .map(|e| format!("[{}]", alg.gens().format_element(e.as_free())))
            .collect();
        println!("H^{n}: dim {} with basis {}", reps.len(), basis.join(", "));
    }
    println!();
    println!("the product class [x1*x2] dies: it is the differential of y");
}
