//! Small algebras used throughout tests, examples and random instance
//! generation.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::linalg::sparse::{self, SparseVec};
use crate::rational::Rational;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// The ground field as a one-dimensional algebra.
pub fn ground_field() -> Algebra {
    Algebra::from_products("K", 1, vec![q(1)], vec![sparse::unit(0)]).expect("well-formed")
}

/// Group algebra of Z/2 with basis `{e, g}`, `g² = e`.
pub fn z2_group_algebra() -> Algebra {
    let products = vec![sparse::unit(0), sparse::unit(1), sparse::unit(1), sparse::unit(0)];
    Algebra::from_products("Z2", 2, vec![q(1), q(0)], products).expect("well-formed")
}

/// Dual numbers `K[x]/(x²)` with basis `{1, x}`.
pub fn dual_numbers() -> Algebra {
    let products = vec![sparse::unit(0), sparse::unit(1), sparse::unit(1), Vec::new()];
    Algebra::from_products("Dual", 2, vec![q(1), q(0)], products).expect("well-formed")
}

/// 2×2 matrices, basis `E11, E12, E21, E22`.
pub fn matrix_algebra_2() -> Algebra {
    Algebra::endomorphisms(2).with_name("M2")
}

/// Upper-triangular 2×2 matrices, basis `E11, E12, E22`.
pub fn upper_triangular_2() -> Algebra {
    let e = |i: usize| -> SparseVec { sparse::unit(i) };
    let z = Vec::new;
    let products = vec![
        e(0),
        e(1),
        z(), // E11 * (E11, E12, E22)
        z(),
        z(),
        e(1), // E12 * ...
        z(),
        z(),
        e(2), // E22 * ...
    ];
    Algebra::from_products("UT2", 3, vec![q(1), q(0), q(1)], products).expect("well-formed")
}

/// The five catalog algebras in a fixed order.
pub fn all() -> Vec<Arc<Algebra>> {
    vec![
        Arc::new(ground_field()),
        Arc::new(z2_group_algebra()),
        Arc::new(dual_numbers()),
        Arc::new(matrix_algebra_2()),
        Arc::new(upper_triangular_2()),
    ]
}

/// The commutative members of [`all`].
pub fn commutative() -> Vec<Arc<Algebra>> {
    all().into_iter().filter(|a| a.is_commutative()).collect()
}

pub fn by_name(name: &str) -> Option<Algebra> {
    match name {
        "K" => Some(ground_field()),
        "Z2" => Some(z2_group_algebra()),
        "Dual" => Some(dual_numbers()),
        "M2" => Some(matrix_algebra_2()),
        "UT2" => Some(upper_triangular_2()),
        _ => None,
    }
}
