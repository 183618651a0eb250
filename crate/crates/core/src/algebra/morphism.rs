use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rational::Rational;

/// A linear map between algebras, intended to be a unital homomorphism.
///
/// Construction checks shapes only; [`AlgebraMorphism::check`] reports
/// failures of the homomorphism laws.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismViolation {
    Unit,
    Multiplicativity { i: usize, j: usize },
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismViolation::Unit => write!(f, "unit is not preserved"),
            MorphismViolation::Multiplicativity { i, j } => {
                write!(f, "multiplicativity fails on basis pair ({i},{j})")
            }
        }
    }
}

impl AlgebraMorphism {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::InvalidMorphism(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(AlgebraMorphism { source, target, matrix })
    }

    /// Like [`AlgebraMorphism::new`] but rejects non-homomorphisms.
    pub fn checked(source: Arc<Algebra>, target: Arc<Algebra>, matrix: Matrix) -> Result<Self> {
        let m = Self::new(source, target, matrix)?;
        if let Some(v) = m.check().first() {
            return Err(Error::InvalidMorphism(v.to_string()));
        }
        Ok(m)
    }

    pub fn identity(a: &Arc<Algebra>) -> Self {
        AlgebraMorphism { source: a.clone(), target: a.clone(), matrix: Matrix::identity(a.dim()) }
    }

    /// The structure map `K → a`, `1 ↦ unit`.
    pub fn unit_map(field: &Arc<Algebra>, a: &Arc<Algebra>) -> Result<Self> {
        if field.dim() != 1 {
            return Err(Error::InvalidMorphism("unit map must start at a one-dimensional algebra".into()));
        }
        Self::new(field.clone(), a.clone(), Matrix::from_columns(a.dim(), &[a.unit().to_vec()]))
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(x)
    }

    /// Image of basis vector `i`.
    pub fn image_of(&self, i: usize) -> Vec<Rational> {
        self.matrix.column(i)
    }

    pub fn image(&self) -> Subspace {
        self.matrix.transpose().row_space()
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn check(&self) -> Vec<MorphismViolation> {
        let mut out = Vec::new();
        if self.apply(self.source.unit()) != self.target.unit() {
            out.push(MorphismViolation::Unit);
        }
        let d = self.source.dim();
        let images: Vec<Vec<Rational>> = (0..d).map(|i| self.image_of(i)).collect();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.apply(&self.source.mul(&self.source.basis_vector(i), &self.source.basis_vector(j)));
                let rhs = self.target.mul(&images[i], &images[j]);
                if lhs != rhs {
                    out.push(MorphismViolation::Multiplicativity { i, j });
                }
            }
        }
        out
    }

    /// `g ∘ f`.
    pub fn compose(g: &AlgebraMorphism, f: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        if f.target.as_ref() != g.source.as_ref() {
            return Err(Error::AlgebraMismatch(format!(
                "cannot compose: target {} differs from source {}",
                f.target.name(),
                g.source.name()
            )));
        }
        Ok(AlgebraMorphism { source: f.source.clone(), target: g.target.clone(), matrix: &g.matrix * &f.matrix })
    }

    /// First basis element whose image fails to commute with some basis
    /// element of the target: `(element, witness)`.
    pub fn first_noncentral(&self) -> Option<(usize, usize)> {
        let t = &self.target;
        for i in 0..self.source.dim() {
            let x = self.image_of(i);
            for w in 0..t.dim() {
                let e = t.basis_vector(w);
                if t.mul(&x, &e) != t.mul(&e, &x) {
                    return Some((i, w));
                }
            }
        }
        None
    }
}

/// The algebra isomorphism `End(n) → End(n)`, `φ ↦ f φ f⁻¹`.
pub fn conjugate_endomorphisms(f: &Matrix) -> Result<AlgebraMorphism> {
    if !f.is_square() {
        return Err(Error::DimensionMismatch { expected: f.rows(), found: f.cols() });
    }
    let n = f.rows();
    let finv = f.inverse()?;
    let end = Arc::new(Algebra::endomorphisms(n));
    let mut m = Matrix::zeros(n * n, n * n);
    // f E_pq f⁻¹ has (i, j) entry f[i][p] * finv[q][j]
    for p in 0..n {
        for q in 0..n {
            for i in 0..n {
                for j in 0..n {
                    m.set(i * n + j, p * n + q, f.get(i, p) * finv.get(q, j));
                }
            }
        }
    }
    AlgebraMorphism::new(end.clone(), end, m)
}
