//! Compute a triple Massey product by hand: in /\(x3, y3, z5; dz = xy) the
//! triple <x, x, y> lands on [x z] with zero indeterminacy, obstructing
//! formality.
//!
//! ```bash
//! cargo run -p sullivan --example massey_obstruction
//! ```

use sullivan::cdga::{Cdga, CdgaElement, GeneratorSpec, Generators, SullivanAlgebra};
use sullivan::formality::massey_triple;

fn main() {
    let gens = Generators::new(vec![
        GeneratorSpec::new("x", 3),
        GeneratorSpec::new("y", 3),
        GeneratorSpec::new("z", 5),
    ])
    .unwrap();
    let xy = gens.mul(&gens.generator(0), &gens.generator(1));
    let alg = SullivanAlgebra::new(gens, vec![("z".into(), xy)]).unwrap();
    let c = Cdga::free(alg.clone());
    let g = alg.gens();

    let x = CdgaElement::Free(g.generator(g.id_of("x").unwrap()));
    let y = CdgaElement::Free(g.generator(g.id_of("y").unwrap()));
    let sys = massey_triple(&c, &x, &x, &y, 10).expect("both products vanish");

    println!("triple <x, x, y> in /\\(x3, y3, z5; dz = x*y)");
    println!("  u with du = x*x:     {}", g.format_element(sys.u.as_free()));
    println!("  v with dv = x*y:     {}", g.format_element(sys.v.as_free()));
    println!(
        "  class representative: {}",
        g.format_element(sys.product.as_free())
    );
    println!("  degree:              {}", sys.degree);
    println!("  indeterminacy dim:   {}", sys.indeterminacy_dim());
    println!(
        "  avoids zero:         {} (nonformality certified)",
        sys.avoids_zero
    );
    assert!(sys.reverify(&c).unwrap());
}
