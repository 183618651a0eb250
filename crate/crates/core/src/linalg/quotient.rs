use crate::error::{Error, Result};
use crate::linalg::matrix::Matrix;
use crate::linalg::sparse::SparseVec;
use crate::linalg::subspace::Subspace;
use crate::rational::Rational;

/// The quotient `Q^n / R` with an explicit projection and section.
///
/// The quotient basis is indexed by the non-pivot columns of the canonical
/// RREF of `R`: the section sends quotient basis vector `k` to the ambient
/// basis vector `e_{free[k]}`, and the projection reduces modulo `R` and
/// reads off the free coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientSpace {
    relations: Subspace,
    free: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(ambient_dim: usize, relations: Subspace) -> Result<Self> {
        if relations.ambient_dim() != ambient_dim {
            return Err(Error::DimensionMismatch { expected: ambient_dim, found: relations.ambient_dim() });
        }
        let mut is_pivot = vec![false; ambient_dim];
        for &p in relations.pivots() {
            is_pivot[p] = true;
        }
        let free = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
        Ok(QuotientSpace { relations, free })
    }

    pub fn identity(ambient_dim: usize) -> Self {
        QuotientSpace { relations: Subspace::zero(ambient_dim), free: (0..ambient_dim).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Ambient index that quotient basis vector `k` lifts to.
    pub fn section_index(&self, k: usize) -> usize {
        self.free[k]
    }

    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    pub fn project(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim(), "vector length mismatch");
        let mut w = v.to_vec();
        self.relations.reduce(&mut w);
        self.free.iter().map(|&c| std::mem::take(&mut w[c])).collect()
    }

    pub fn project_sparse(&self, v: &SparseVec) -> Vec<Rational> {
        let mut w = vec![Rational::zero(); self.ambient_dim()];
        for (i, x) in v {
            w[*i] = x.clone();
        }
        self.relations.reduce(&mut w);
        self.free.iter().map(|&c| std::mem::take(&mut w[c])).collect()
    }

    pub fn lift(&self, q: &[Rational]) -> Vec<Rational> {
        assert_eq!(q.len(), self.dim(), "vector length mismatch");
        let mut v = vec![Rational::zero(); self.ambient_dim()];
        for (k, x) in q.iter().enumerate() {
            v[self.free[k]] = x.clone();
        }
        v
    }

    /// Projection matrix, `dim × ambient_dim`.
    pub fn projection(&self) -> Matrix {
        let n = self.ambient_dim();
        let mut p = Matrix::zeros(self.dim(), n);
        let mut pos = vec![usize::MAX; n];
        for (k, &c) in self.free.iter().enumerate() {
            pos[c] = k;
            p.set(k, c, Rational::one());
        }
        for (row, &piv) in self.relations.sparse_rows().iter().zip(self.relations.pivots()) {
            for (j, x) in row {
                if *j != piv {
                    p.set(pos[*j], piv, -x);
                }
            }
        }
        p
    }

    /// Matrix of the map `self → dst` induced by an ambient linear map,
    /// given by the images `f(i)` of ambient basis vectors. The map is
    /// evaluated on section representatives only; it is the caller's job to
    /// know that the ambient map sends relations into relations.
    pub fn induced(&self, dst: &QuotientSpace, f: impl Fn(usize) -> SparseVec) -> Matrix {
        let cols: Vec<Vec<Rational>> = self.free.iter().map(|&i| dst.project_sparse(&f(i))).collect();
        Matrix::from_columns(dst.dim(), &cols)
    }

    /// Section matrix, `ambient_dim × dim`.
    pub fn section(&self) -> Matrix {
        let mut s = Matrix::zeros(self.ambient_dim(), self.dim());
        for (k, &c) in self.free.iter().enumerate() {
            s.set(c, k, Rational::one());
        }
        s
    }
}
