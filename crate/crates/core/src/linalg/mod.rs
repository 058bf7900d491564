//! Exact dense linear algebra over the rationals.

pub mod echelon;
pub mod matrix;
pub mod modular;
pub mod random;
pub mod subspace;

pub use echelon::{
    determinant, image_basis, inverse, kernel_basis, kernel_vectors, left_kernel_vectors, rank,
    rref, solve, CoordinateMap,
};
pub use matrix::Matrix;
pub use random::random_rational_matrix;
pub use subspace::Subspace;
