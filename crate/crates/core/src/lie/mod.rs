//! Lie algebras, representations, weights and invariant forms.

pub mod algebra;
pub mod classical;
pub mod forms;
pub mod octonion;
pub mod rep;
pub mod weights;

pub use algebra::LieAlgebra;
pub use rep::Representation;
pub use weights::{cartan_and_roots, RootDatum, WeightDecomposition};
