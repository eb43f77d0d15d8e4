//! The full audit workflow through the command layer: check the odd-retract
//! assumption on the domain sphere, build the mapping-space model, analyze
//! its formality and the freeness of the target cohomology, and report
//! whether the observations are consistent.
//!
//! ```bash
//! cargo run -p sullivan --example audit_mapping_spaces
//! ```

use sullivan::io::{run_command, CommandArgs, ModelFile};

fn load(name: &str) -> ModelFile {
    let path = format!("{}/models/{name}", env!("CARGO_MANIFEST_DIR"));
    ModelFile::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn main() {
    let args = CommandArgs {
        max_degree: Some(14),
        format: "text".into(),
        ..CommandArgs::default()
    };

    println!("=== maps from the 2-sphere (assumption fails, formal anyway) ===");
    let report = run_command(
        "audit",
        &args,
        &[load("s2.model"), load("y_k4_wedge.model")],
    )
    .unwrap();
    print!("{report}");

    println!();
    println!("=== maps from the 3-sphere (assumption holds) ===");
    let args = CommandArgs {
        max_degree: Some(12),
        format: "text".into(),
        ..CommandArgs::default()
    };
    let report = run_command(
        "audit",
        &args,
        &[load("s3.model"), load("y_k4_wedge.model")],
    )
    .unwrap();
    print!("{report}");
}
