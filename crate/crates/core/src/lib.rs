//! Exact computer algebra for module-finite Hopf algebras.
//!
//! The crate is organized around a pipeline: parse a finitely presented Hopf
//! algebra with a designated central Hopf subalgebra (`presentation`), build
//! its finite-dimensional fiber algebras at central characters and analyze
//! them (`findim`), form trace matrices and discriminant ideals over the
//! central ring (`cayley`), and assemble Grothendieck-ring level invariants
//! and consistency checks (`grothendieck`). Everything bottoms out in exact
//! cyclotomic arithmetic (`exactmath`).

pub mod cayley;
pub mod exactmath;
pub mod findim;
pub mod grothendieck;
pub mod presentation;

pub use exactmath::{Matrix, Poly, Rational, Scalar};
pub use presentation::{
    CentralCharacter, CentralDescriptor, HopfPresentation, NCPoly, Representation,
};
pub use findim::StructureConstAlgebra;
