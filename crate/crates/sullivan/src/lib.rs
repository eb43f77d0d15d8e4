//! Exact-arithmetic computer algebra for rational homotopy theory: Sullivan
//! algebras, differential graded Lie algebras, Chevalley–Eilenberg
//! dualization, function-space models and bounded-degree formality analysis.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere and all outputs are deterministic. Start from the
//! runnable examples:
//!
//! ```bash
//! cargo run -p sullivan --example cohomology_of_a_model
//! cargo run -p sullivan --example sphere_mapping_model
//! cargo run -p sullivan --example formality_pipeline
//! ```
//!
//! or from the thin command-line front end:
//!
//! ```bash
//! cargo run -p sullivan -- cohomology --max-degree 16 crates/sullivan/models/y_k4_wedge.model
//! ```

pub mod bridge;
pub mod cdga;
pub mod dgl;
pub mod formality;
pub mod graded;
pub mod io;
pub mod matrix;
pub mod rational;

pub use cdga::{Cdga, CdgaElement, CdgaError, CdgaMorphism, Element, FiniteCdga, SullivanAlgebra};
pub use rational::{rat, ratio, Rational};
