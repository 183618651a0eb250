//! Bimodules over pairs of algebras and their tensor products.

#[allow(clippy::module_inception)]
mod bimodule;
mod morphism;
mod tensor;

pub use bimodule::{Bimodule, BimoduleViolation};
pub use morphism::{BimoduleMorphism, IntertwinerViolation};
pub use tensor::{
    associator, associator_inverse, left_unitor, left_unitor_inverse, right_unitor, right_unitor_inverse,
    tensor_morphisms_over, tensor_over, tensor_vector,
};

#[cfg(test)]
mod tests;
