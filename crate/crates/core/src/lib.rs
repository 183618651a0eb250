//! Exact computations with commutative algebras, central algebras (defects),
//! bimodules (sectors) and bimodule maps (intertwiners), including the
//! fusion operations between them and machine checks of their coherence.
//!
//! Everything is computed over the rationals with exact arithmetic, so
//! every identity is checked as an equality of matrices.

pub mod algebra;
pub mod bimodule;
pub mod ccn;
pub mod coherence;
pub mod error;
pub mod fusion;
pub mod intervals;
pub mod linalg;
pub mod rational;

pub use algebra::{Algebra, AlgebraMorphism, Subalgebra};
pub use bimodule::{Bimodule, BimoduleMorphism};
pub use error::{Error, Result};
pub use linalg::{Matrix, QuotientSpace, Subspace};
pub use rational::Rational;
