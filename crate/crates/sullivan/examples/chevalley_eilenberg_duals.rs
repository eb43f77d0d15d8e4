//! Dualize differential graded Lie algebras into Sullivan algebras: the free
//! Lie algebra on one odd generator becomes the even sphere model, and the
//! evaluation fibration of a tensor model dualizes to a cochain retract.
//!
//! ```bash
//! cargo run -p sullivan --example chevalley_eilenberg_duals
//! ```

use sullivan::bridge::{ce_evaluation_pair, chevalley_eilenberg};
use sullivan::cdga::{finite_dimensional_model, CdgaMorphism, GeneratorSpec, Generators, SullivanAlgebra};
use sullivan::dgl::{mapping_space_lie_model, FreeDgl, LieGenerator};

fn main() {
    // one odd degree-3 generator dualizes to /\(x4, w7) with dw = x^2
    let lie = FreeDgl::abelian_boundary(vec![LieGenerator::new("a", 3)]).unwrap();
    let ce = chevalley_eilenberg(&lie, 12).unwrap();
    println!("dual of the free Lie algebra on one odd degree-3 generator:");
    let g = ce.algebra.gens();
    for id in g.ids() {
        println!(
            "  {} : degree {}, d = {}",
            g.spec(id).name,
            g.degree(id),
            g.format_element(ce.algebra.differential_of(id))
        );
    }
    println!();

    // dualizing the evaluation maps of a tensor model gives a CDGA retract
    let gens = Generators::new(vec![
        GeneratorSpec::new("u", 2),
        GeneratorSpec::new("v", 3),
    ])
    .unwrap();
    let u2 = gens.pow(&gens.generator(0), 2);
    let sphere = SullivanAlgebra::new(gens, vec![("v".into(), u2)]).unwrap();
    let finite = finite_dimensional_model(&sphere, 10).unwrap().0;
    let pair = FreeDgl::abelian_boundary(vec![
        LieGenerator::new("a", 3),
        LieGenerator::new("b", 3),
    ])
    .unwrap();
    let model = mapping_space_lie_model(&finite, &pair, 7).unwrap();
    let ce_tensor = chevalley_eilenberg(&model, 7).unwrap();
    let ce_lie = chevalley_eilenberg(&pair, 7).unwrap();
    let (f, g) = ce_evaluation_pair(&model, &ce_tensor, &ce_lie).unwrap();
    let composite = CdgaMorphism::compose(&g, &f).unwrap();
    println!(
        "dualized evaluation pair composes to the identity: {}",
        composite.is_identity()
    );
    println!(
        "dual of the tensor model has {} generators up to degree 7",
        ce_tensor.algebra.gens().len()
    );
}
