use std::fmt;
use std::sync::Arc;

use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A linear map between two bimodules over the same algebra pair.
///
/// Construction checks shapes and algebras only; see
/// [`BimoduleMorphism::is_intertwiner`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleMorphism {
    source: Arc<Bimodule>,
    target: Arc<Bimodule>,
    matrix: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntertwinerViolation {
    Left(usize),
    Right(usize),
}

impl fmt::Display for IntertwinerViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntertwinerViolation::Left(i) => write!(f, "does not commute with left basis element {i}"),
            IntertwinerViolation::Right(j) => write!(f, "does not commute with right basis element {j}"),
        }
    }
}

fn same(a: &Arc<Bimodule>, b: &Arc<Bimodule>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl BimoduleMorphism {
    pub fn new(source: Arc<Bimodule>, target: Arc<Bimodule>, matrix: Matrix) -> Result<Self> {
        if source.left_alg() != target.left_alg() || source.right_alg() != target.right_alg() {
            return Err(Error::AlgebraMismatch(format!(
                "{}-{} bimodule cannot map to a {}-{} bimodule",
                source.left_alg().name(),
                source.right_alg().name(),
                target.left_alg().name(),
                target.right_alg().name()
            )));
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim() * source.dim(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        Ok(BimoduleMorphism { source, target, matrix })
    }

    /// Like [`BimoduleMorphism::new`] but rejects maps that do not intertwine.
    pub fn checked(source: Arc<Bimodule>, target: Arc<Bimodule>, matrix: Matrix) -> Result<Self> {
        let m = Self::new(source, target, matrix)?;
        if let Some(v) = m.intertwiner_violation() {
            return Err(Error::InvalidMorphism(v.to_string()));
        }
        Ok(m)
    }

    pub fn identity(m: &Arc<Bimodule>) -> Self {
        BimoduleMorphism { source: m.clone(), target: m.clone(), matrix: Matrix::identity(m.dim()) }
    }

    pub fn zero(source: &Arc<Bimodule>, target: &Arc<Bimodule>) -> Result<Self> {
        Self::new(source.clone(), target.clone(), Matrix::zeros(target.dim(), source.dim()))
    }

    pub fn source(&self) -> &Arc<Bimodule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Bimodule> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// First basis element of either algebra whose action the map fails to
    /// commute with.
    pub fn intertwiner_violation(&self) -> Option<IntertwinerViolation> {
        let (s, t, f) = (&self.source, &self.target, &self.matrix);
        for i in 0..s.left_alg().dim() {
            if f * s.left_action(i) != t.left_action(i) * f {
                return Some(IntertwinerViolation::Left(i));
            }
        }
        for j in 0..s.right_alg().dim() {
            if f * s.right_action(j) != t.right_action(j) * f {
                return Some(IntertwinerViolation::Right(j));
            }
        }
        None
    }

    pub fn is_intertwiner(&self) -> bool {
        self.intertwiner_violation().is_none()
    }

    /// `ψ ∘ φ`.
    pub fn compose(psi: &BimoduleMorphism, phi: &BimoduleMorphism) -> Result<BimoduleMorphism> {
        if !same(&phi.target, &psi.source) {
            return Err(Error::InvalidMorphism("cannot compose: target and source bimodules differ".into()));
        }
        Ok(BimoduleMorphism {
            source: phi.source.clone(),
            target: psi.target.clone(),
            matrix: &psi.matrix * &phi.matrix,
        })
    }

    pub fn inverse(&self) -> Result<BimoduleMorphism> {
        let inv = self.matrix.inverse()?;
        Ok(BimoduleMorphism { source: self.target.clone(), target: self.source.clone(), matrix: inv })
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible()
    }
}
