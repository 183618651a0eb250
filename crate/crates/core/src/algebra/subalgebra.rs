use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{sparse, Subspace};
use crate::rational::Rational;

/// A unital subalgebra, given as a subspace of its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    parent: Arc<Algebra>,
    space: Subspace,
}

impl Subalgebra {
    /// Checks that the subspace contains the unit and is closed under products.
    pub fn new(parent: Arc<Algebra>, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != parent.dim() {
            return Err(Error::DimensionMismatch { expected: parent.dim(), found: space.ambient_dim() });
        }
        if parent.dim() > 0 && !space.contains(parent.unit()) {
            return Err(Error::InvalidAlgebra("subspace does not contain the unit".into()));
        }
        let basis = space.basis_vectors();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                if !space.contains(&parent.mul(x, y)) {
                    return Err(Error::InvalidAlgebra(format!(
                        "subspace not closed: product of basis vectors {i} and {j} escapes"
                    )));
                }
            }
        }
        Ok(Subalgebra { parent, space })
    }

    pub(crate) fn new_unchecked(parent: Arc<Algebra>, space: Subspace) -> Self {
        Subalgebra { parent, space }
    }

    pub fn parent(&self) -> &Arc<Algebra> {
        &self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.space.contains(x)
    }

    /// The subalgebra as an algebra in its own right, in the RREF basis of
    /// the subspace. Coordinates of a member are its pivot entries.
    pub fn to_algebra(&self, name: impl Into<String>) -> Result<Algebra> {
        let basis = self.space.basis_vectors();
        let pivots = self.space.pivots();
        let coords = |v: &[Rational]| -> Vec<Rational> { pivots.iter().map(|&p| v[p].clone()).collect() };
        let mut products = Vec::with_capacity(basis.len() * basis.len());
        for x in &basis {
            for y in &basis {
                products.push(sparse::from_dense(&coords(&self.parent.mul(x, y))));
            }
        }
        Algebra::from_products(name, basis.len(), coords(self.parent.unit()), products)
    }
}
