//! Finite-dimensional unital associative algebras over the rationals.

#[allow(clippy::module_inception)]
mod algebra;
pub mod catalog;
mod morphism;
mod subalgebra;
mod tensor;

pub use algebra::{kron_dense, kron_sparse, Algebra, AlgebraViolation};
pub use morphism::{conjugate_endomorphisms, AlgebraMorphism, MorphismViolation};
pub use subalgebra::Subalgebra;
pub use tensor::tensor_over_central;

#[cfg(test)]
mod tests;
