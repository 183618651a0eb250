use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};
use crate::linalg::{Matrix, QuotientSpace, Subspace, SubspaceBuilder};
use crate::rational::Rational;

/// A `D`–`E` bimodule: a left action of `D` and a right action of `E` on
/// `Q^dim`, one matrix per basis vector.
///
/// Right actions are antimorphisms, `R(e_i·e_j) = R(e_j)·R(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    dim: usize,
    left_action: Vec<Matrix>,
    right_action: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BimoduleViolation {
    LeftUnit,
    RightUnit,
    LeftMultiplicativity { i: usize, j: usize },
    RightMultiplicativity { i: usize, j: usize },
    Commutation { left: usize, right: usize },
}

impl fmt::Display for BimoduleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BimoduleViolation::LeftUnit => write!(f, "left unit does not act as the identity"),
            BimoduleViolation::RightUnit => write!(f, "right unit does not act as the identity"),
            BimoduleViolation::LeftMultiplicativity { i, j } => {
                write!(f, "left action not multiplicative on basis pair ({i},{j})")
            }
            BimoduleViolation::RightMultiplicativity { i, j } => {
                write!(f, "right action not antimultiplicative on basis pair ({i},{j})")
            }
            BimoduleViolation::Commutation { left, right } => {
                write!(f, "left basis {left} and right basis {right} actions do not commute")
            }
        }
    }
}

/// `Σ c_i · mats[i]` for a sparse coefficient vector.
fn combine(mats: &[Matrix], coeffs: &SparseVec, n: usize) -> Matrix {
    let mut out = Matrix::zeros(n, n);
    for (i, c) in coeffs {
        out = &out + &mats[*i].scale(c);
    }
    out
}

impl Bimodule {
    /// Checks shapes only; see [`Bimodule::validate`].
    pub fn new(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        dim: usize,
        left_action: Vec<Matrix>,
        right_action: Vec<Matrix>,
    ) -> Result<Self> {
        if left_action.len() != left.dim() {
            return Err(Error::InvalidBimodule(format!(
                "{} left action matrices for an algebra of dimension {}",
                left_action.len(),
                left.dim()
            )));
        }
        if right_action.len() != right.dim() {
            return Err(Error::InvalidBimodule(format!(
                "{} right action matrices for an algebra of dimension {}",
                right_action.len(),
                right.dim()
            )));
        }
        if let Some(m) = left_action.iter().chain(&right_action).find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::InvalidBimodule(format!(
                "action matrix is {}x{}, expected {dim}x{dim}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(Bimodule { left, right, dim, left_action, right_action })
    }

    pub fn checked(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        dim: usize,
        left_action: Vec<Matrix>,
        right_action: Vec<Matrix>,
    ) -> Result<Self> {
        let m = Self::new(left, right, dim, left_action, right_action)?;
        if let Some(v) = m.validate().first() {
            return Err(Error::InvalidBimodule(v.to_string()));
        }
        Ok(m)
    }

    /// `d` acting on itself by left and right multiplication.
    pub fn regular(d: &Arc<Algebra>) -> Self {
        let n = d.dim();
        let left = (0..n).map(|i| d.left_mult_matrix(&d.basis_vector(i))).collect();
        let right = (0..n).map(|i| d.right_mult_matrix(&d.basis_vector(i))).collect();
        Bimodule { left: d.clone(), right: d.clone(), dim: n, left_action: left, right_action: right }
    }

    /// The free bimodule `d ⊗ e` with basis `(i, j) ↦ i * dim(e) + j`.
    pub fn free(d: &Arc<Algebra>, e: &Arc<Algebra>) -> Self {
        let (dd, de) = (d.dim(), e.dim());
        let left = (0..dd).map(|i| d.left_mult_matrix(&d.basis_vector(i)).kron(&Matrix::identity(de))).collect();
        let right = (0..de).map(|j| Matrix::identity(dd).kron(&e.right_mult_matrix(&e.basis_vector(j)))).collect();
        Bimodule { left: d.clone(), right: e.clone(), dim: dd * de, left_action: left, right_action: right }
    }

    pub fn zero(left: &Arc<Algebra>, right: &Arc<Algebra>) -> Self {
        Bimodule {
            left: left.clone(),
            right: right.clone(),
            dim: 0,
            left_action: vec![Matrix::zeros(0, 0); left.dim()],
            right_action: vec![Matrix::zeros(0, 0); right.dim()],
        }
    }

    pub fn left_alg(&self) -> &Arc<Algebra> {
        &self.left
    }

    pub fn right_alg(&self) -> &Arc<Algebra> {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_action(&self, i: usize) -> &Matrix {
        &self.left_action[i]
    }

    pub fn right_action(&self, j: usize) -> &Matrix {
        &self.right_action[j]
    }

    pub fn left_actions(&self) -> &[Matrix] {
        &self.left_action
    }

    pub fn right_actions(&self) -> &[Matrix] {
        &self.right_action
    }

    /// `L(x)` for an arbitrary element `x` of the left algebra.
    pub fn act_left(&self, x: &[Rational]) -> Matrix {
        combine(&self.left_action, &sparse::from_dense(x), self.dim)
    }

    /// `R(y)` for an arbitrary element `y` of the right algebra.
    pub fn act_right(&self, y: &[Rational]) -> Matrix {
        combine(&self.right_action, &sparse::from_dense(y), self.dim)
    }

    /// Lists every violated axiom; empty iff the bimodule is valid.
    pub fn validate(&self) -> Vec<BimoduleViolation> {
        let mut out = Vec::new();
        let n = self.dim;
        if !self.act_left(self.left.unit()).is_identity() {
            out.push(BimoduleViolation::LeftUnit);
        }
        if !self.act_right(self.right.unit()).is_identity() {
            out.push(BimoduleViolation::RightUnit);
        }
        let (dl, dr) = (self.left.dim(), self.right.dim());
        for i in 0..dl {
            for j in 0..dl {
                let lhs = combine(&self.left_action, &self.left.basis_product(i, j), n);
                if lhs != &self.left_action[i] * &self.left_action[j] {
                    out.push(BimoduleViolation::LeftMultiplicativity { i, j });
                }
            }
        }
        for i in 0..dr {
            for j in 0..dr {
                let lhs = combine(&self.right_action, &self.right.basis_product(i, j), n);
                if lhs != &self.right_action[j] * &self.right_action[i] {
                    out.push(BimoduleViolation::RightMultiplicativity { i, j });
                }
            }
        }
        for (l, a) in self.left_action.iter().enumerate() {
            for (r, b) in self.right_action.iter().enumerate() {
                if !a.commutator(b).is_zero() {
                    out.push(BimoduleViolation::Commutation { left: l, right: r });
                }
            }
        }
        out
    }

    /// Smallest sub-bimodule containing the given vectors.
    pub fn generated_submodule(&self, vectors: &[Vec<Rational>]) -> Subspace {
        let mut builder = SubspaceBuilder::new(self.dim);
        let mut queue = VecDeque::new();
        for v in vectors {
            let s = sparse::from_dense(v);
            if builder.insert(s.clone()) {
                queue.push_back(s);
            }
        }
        let actions: Vec<&Matrix> = self
            .left
            .generator_indices()
            .iter()
            .map(|&i| &self.left_action[i])
            .chain(self.right.generator_indices().iter().map(|&j| &self.right_action[j]))
            .collect();
        while let Some(v) = queue.pop_front() {
            for a in &actions {
                let w = a.mul_sparse(&v);
                if builder.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        builder.finish()
    }

    /// Whether `sub` is stable under both actions.
    pub fn is_submodule(&self, sub: &Subspace) -> bool {
        sub.ambient_dim() == self.dim
            && sub.sparse_rows().iter().all(|v| {
                self.left_action.iter().chain(&self.right_action).all(|a| sub.contains_sparse(&a.mul_sparse(v)))
            })
    }

    /// The quotient bimodule by a sub-bimodule.
    pub fn quotient(&self, sub: &Subspace) -> Result<(Bimodule, QuotientSpace)> {
        if !self.is_submodule(sub) {
            return Err(Error::InvalidBimodule("subspace is not a sub-bimodule".into()));
        }
        let q = QuotientSpace::new(self.dim, sub.clone())?;
        let induce = |a: &Matrix| q.induced(&q, |i| a.mul_sparse(&sparse::unit(i)));
        let left = self.left_action.iter().map(induce).collect();
        let right = self.right_action.iter().map(induce).collect();
        let m = Bimodule {
            left: self.left.clone(),
            right: self.right.clone(),
            dim: q.dim(),
            left_action: left,
            right_action: right,
        };
        Ok((m, q))
    }
}
