use std::sync::Arc;

use crate::algebra::{kron_dense, tensor_over_central, Algebra, AlgebraMorphism};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, QuotientSpace};
use crate::rational::Rational;

/// A locally constant net, determined by one commutative algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Net {
    algebra: Arc<Algebra>,
}

impl Net {
    /// Rejects invalid and noncommutative algebras; the error carries a
    /// noncommuting basis pair.
    pub fn new(algebra: Arc<Algebra>) -> Result<Net> {
        if let Some(v) = algebra.validate().first() {
            return Err(Error::InvalidAlgebra(format!("{}: {v}", algebra.name())));
        }
        if let Some((i, j)) = algebra.noncommuting_pair() {
            return Err(Error::NonCommutative(algebra.name().to_string(), i, j));
        }
        Ok(Net { algebra })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }
}

/// A defect between nets `A` and `B`: an algebra `D` with a homomorphism
/// `φ: A ⊗ B → Z(D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defect {
    left: Net,
    right: Net,
    algebra: Arc<Algebra>,
    phi: AlgebraMorphism,
}

impl Defect {
    pub fn new(left: Net, right: Net, algebra: Arc<Algebra>, phi: AlgebraMorphism) -> Result<Defect> {
        if let Some(v) = algebra.validate().first() {
            return Err(Error::InvalidAlgebra(format!("{}: {v}", algebra.name())));
        }
        let ab = Algebra::tensor(left.algebra(), right.algebra());
        if phi.source().as_ref() != &ab || phi.target() != &algebra {
            return Err(Error::InvalidMorphism(format!(
                "phi must map {}⊗{} to {}",
                left.algebra().name(),
                right.algebra().name(),
                algebra.name()
            )));
        }
        if let Some((element, witness)) = phi.first_noncentral() {
            return Err(Error::NotCentral { element, witness });
        }
        if let Some(v) = phi.check().first() {
            return Err(Error::InvalidMorphism(format!("phi: {v}")));
        }
        Ok(Defect { left, right, algebra, phi })
    }

    /// Builds `φ` from its matrix.
    pub fn from_matrix(left: Net, right: Net, algebra: Arc<Algebra>, phi: Matrix) -> Result<Defect> {
        let ab = Arc::new(Algebra::tensor(left.algebra(), right.algebra()));
        let phi = AlgebraMorphism::new(ab, algebra.clone(), phi)?;
        Self::new(left, right, algebra, phi)
    }

    pub fn left(&self) -> &Net {
        &self.left
    }

    pub fn right(&self) -> &Net {
        &self.right
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn phi(&self) -> &AlgebraMorphism {
        &self.phi
    }

    /// `φ(e_a ⊗ e_b)`.
    pub fn phi_basis(&self, a: usize, b: usize) -> Vec<Rational> {
        self.phi.image_of(a * self.right.algebra().dim() + b)
    }

    /// `a ↦ φ(a ⊗ 1)`.
    pub fn left_embedding(&self) -> AlgebraMorphism {
        let a = self.left.algebra();
        let one = self.right.algebra().unit();
        let cols: Vec<_> = (0..a.dim()).map(|i| self.phi.apply(&kron_dense(&a.basis_vector(i), one))).collect();
        AlgebraMorphism::new(a.clone(), self.algebra.clone(), Matrix::from_columns(self.algebra.dim(), &cols))
            .expect("shapes agree")
    }

    /// `b ↦ φ(1 ⊗ b)`.
    pub fn right_embedding(&self) -> AlgebraMorphism {
        let b = self.right.algebra();
        let one = self.left.algebra().unit();
        let cols: Vec<_> = (0..b.dim()).map(|j| self.phi.apply(&kron_dense(one, &b.basis_vector(j)))).collect();
        AlgebraMorphism::new(b.clone(), self.algebra.clone(), Matrix::from_columns(self.algebra.dim(), &cols))
            .expect("shapes agree")
    }
}

/// `(A, A, A, μ)` with `μ` the multiplication of `A`.
pub fn identity_defect(net: &Net) -> Defect {
    let a = net.algebra();
    let n = a.dim();
    let cols: Vec<Vec<Rational>> =
        (0..n * n).map(|ij| crate::linalg::sparse::to_dense(&a.basis_product(ij / n, ij % n), n)).collect();
    Defect::from_matrix(net.clone(), net.clone(), a.clone(), Matrix::from_columns(n, &cols))
        .expect("multiplication of a commutative algebra is a central homomorphism")
}

/// `D ⊗_B E` for an `A`–`B` defect `D` and a `B`–`C` defect `E`, with the
/// quotient of `D ⊗ E` it is built on.
pub fn fuse_defects_with_witness(d: &Defect, e: &Defect) -> Result<(Defect, QuotientSpace)> {
    if d.right != e.left {
        return Err(Error::NetMismatch(format!(
            "right net {} differs from left net {}",
            d.right.algebra().name(),
            e.left.algebra().name()
        )));
    }
    let b = d.right.algebra();
    let (t, q) = tensor_over_central(&d.algebra, &e.algebra, b, &d.right_embedding(), &e.left_embedding())?;
    let t = Arc::new(t);
    let (a, c) = (d.left.algebra(), e.right.algebra());
    let (left, right) = (d.left_embedding(), e.right_embedding());
    let mut cols = Vec::with_capacity(a.dim() * c.dim());
    for i in 0..a.dim() {
        let x = left.image_of(i);
        for j in 0..c.dim() {
            cols.push(q.project(&kron_dense(&x, &right.image_of(j))));
        }
    }
    let fused = Defect::from_matrix(d.left.clone(), e.right.clone(), t.clone(), Matrix::from_columns(t.dim(), &cols))?;
    Ok((fused, q))
}

pub fn fuse_defects(d: &Defect, e: &Defect) -> Result<Defect> {
    fuse_defects_with_witness(d, e).map(|(f, _)| f)
}
