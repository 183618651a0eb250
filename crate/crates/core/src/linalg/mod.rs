//! Exact linear algebra over the rationals.

pub mod matrix;
pub mod quotient;
pub mod sparse;
pub mod subspace;

pub use matrix::Matrix;
pub use quotient::QuotientSpace;
pub use sparse::SparseVec;
pub use subspace::{Subspace, SubspaceBuilder};
