//! Exact computations on linear spaces of square matrices: generic rank,
//! rank-neutral directions, and certificates of rank-criticality, together
//! with the Lie-theoretic machinery used to build and certify images of
//! representations.

pub mod cli;
pub mod constructions;
pub mod criticality;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod rat;
pub mod space;

pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace};
pub use rat::Rat;
