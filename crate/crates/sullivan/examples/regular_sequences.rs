//! Degreewise regular-sequence verification in an even polynomial ring: the
//! two mapping-model differentials pass in both orders, a repeated
//! polynomial fails with a syzygy witness.
//!
//! ```bash
//! cargo run -p sullivan --example regular_sequences
//! ```

use std::sync::Arc;
use sullivan::cdga::{GeneratorSpec, Generators};
use sullivan::formality::{regular_sequence_check, RegularityVerdict};

fn main() {
    let gens = Arc::new(
        Generators::new(vec![
            GeneratorSpec::new("xb1", 2),
            GeneratorSpec::new("xb2", 2),
            GeneratorSpec::new("x1", 4),
            GeneratorSpec::new("x2", 4),
        ])
        .unwrap(),
    );
    let (xb1, xb2) = (gens.generator(0), gens.generator(1));
    let (x1, x2) = (gens.generator(2), gens.generator(3));
    let f1 = gens.mul(&x1, &x2);
    let f2 = gens.mul(&xb1, &x2).add(&gens.mul(&x1, &xb2));

    for (label, order) in [
        ("(x1*x2, xb1*x2 + x1*xb2)", vec![f1.clone(), f2.clone()]),
        ("(xb1*x2 + x1*xb2, x1*x2)", vec![f2.clone(), f1.clone()]),
    ] {
        match regular_sequence_check(&gens, &order, 16).unwrap() {
            RegularityVerdict::RegularUpToBound { bound } => {
                println!("{label}: regular up to degree {bound}");
            }
            RegularityVerdict::NotRegular { index, witness } => {
                println!(
                    "{label}: NOT regular at index {index}, witness {}",
                    gens.format_element(&witness)
                );
            }
        }
    }

    // a repeated polynomial is never regular; the unit witnesses it
    match regular_sequence_check(&gens, &[f1.clone(), f1], 16).unwrap() {
        RegularityVerdict::NotRegular { index, witness } => {
            println!(
                "(x1*x2, x1*x2): NOT regular at index {index}, witness {}",
                gens.format_element(&witness)
            );
        }
        RegularityVerdict::RegularUpToBound { .. } => unreachable!(),
    }
}
