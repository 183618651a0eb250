use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::matrix::Matrix;
use crate::linalg::sparse::{self, SparseVec};
use crate::rational::Rational;

/// A linear subspace of `Q^n`, stored by its canonical RREF basis.
///
/// Rows are kept sparse: an RREF row is nonzero only at its pivot and at
/// non-pivot columns, which keeps relation spaces of balanced tensor
/// products cheap to hold.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, rows: (0..ambient_dim).map(sparse::unit).collect(), pivots: (0..ambient_dim).collect() }
    }

    pub fn span<'a>(ambient_dim: usize, vectors: impl IntoIterator<Item = &'a [Rational]>) -> Result<Self> {
        let mut b = SubspaceBuilder::new(ambient_dim);
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: v.len() });
            }
            b.insert_dense(v);
        }
        Ok(b.finish())
    }

    pub fn span_sparse(ambient_dim: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut b = SubspaceBuilder::new(ambient_dim);
        for v in vectors {
            b.insert(v);
        }
        b.finish()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn sparse_rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Basis vectors as rows of a dense matrix (canonical RREF).
    pub fn basis(&self) -> Matrix {
        let rows = self.rows.iter().map(|r| sparse::to_dense(r, self.ambient_dim)).collect();
        Matrix::from_rows(self.ambient_dim, rows).expect("rows have ambient length")
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|r| sparse::to_dense(r, self.ambient_dim)).collect()
    }

    /// Reduces `v` in place modulo the subspace; afterwards `v` vanishes on
    /// every pivot column.
    pub fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (j, x) in row {
                v[*j] -= &(&f * x);
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Rational::is_zero)
    }

    pub fn contains_sparse(&self, v: &SparseVec) -> bool {
        self.contains(&sparse::to_dense(v, self.ambient_dim))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.rows.iter().all(|r| other.contains_sparse(r))
    }

    fn check_same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        Ok(())
    }

    /// `a + b`.
    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        let mut b = SubspaceBuilder::from_subspace(self);
        for r in &other.rows {
            b.insert(r.clone());
        }
        Ok(b.finish())
    }

    /// `a ∩ b`, from the kernel of the map `(x, y) ↦ Σ x_i a_i − Σ y_j b_j`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        let (da, db) = (self.dim(), other.dim());
        let mut stacked = Matrix::zeros(self.ambient_dim, da + db);
        for (i, r) in self.rows.iter().enumerate() {
            for (k, x) in r {
                stacked.set(*k, i, x.clone());
            }
        }
        for (j, r) in other.rows.iter().enumerate() {
            for (k, x) in r {
                stacked.set(*k, da + j, -x);
            }
        }
        let kernel = stacked.kernel();
        let mut b = SubspaceBuilder::new(self.ambient_dim);
        for coeffs in kernel.sparse_rows() {
            let mut v = Vec::new();
            for (i, c) in coeffs.iter().filter(|(i, _)| *i < da) {
                v = sparse::axpy(&v, c, &self.rows[*i]);
            }
            b.insert(v);
        }
        Ok(b.finish())
    }
}

/// Incremental RREF construction.
#[derive(Clone, Debug)]
pub struct SubspaceBuilder {
    ambient_dim: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl SubspaceBuilder {
    pub fn new(ambient_dim: usize) -> Self {
        SubspaceBuilder { ambient_dim, rows: BTreeMap::new() }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        SubspaceBuilder {
            ambient_dim: s.ambient_dim,
            rows: s.pivots.iter().copied().zip(s.rows.iter().cloned()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    fn reduce_sparse(&self, mut v: SparseVec) -> SparseVec {
        // Subtracting a row only touches its own pivot and non-pivot columns,
        // so pivots present in `v` can be cleared in one ascending sweep.
        let mut k = 0;
        while k < v.len() {
            let col = v[k].0;
            if let Some(row) = self.rows.get(&col) {
                let f = -v[k].1.clone();
                v = sparse::axpy(&v, &f, row);
                // v[k] is now gone; entries before k are unchanged
            } else {
                k += 1;
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_sparse(v.clone()).is_empty()
    }

    /// Adds `v` to the span; returns `true` when the dimension grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.iter().all(|(i, _)| *i < self.ambient_dim));
        let v = self.reduce_sparse(v);
        let Some((p, lead)) = v.first().cloned() else {
            return false;
        };
        let v = sparse::scale(&v, &lead.recip());
        for row in self.rows.values_mut() {
            if let Some(x) = sparse::get(row, p) {
                let f = -x.clone();
                *row = sparse::axpy(row, &f, &v);
            }
        }
        self.rows.insert(p, v);
        true
    }

    pub fn insert_dense(&mut self, v: &[Rational]) -> bool {
        self.insert(sparse::from_dense(v))
    }

    pub fn finish(self) -> Subspace {
        let (pivots, rows) = self.rows.into_iter().unzip();
        Subspace { ambient_dim: self.ambient_dim, rows, pivots }
    }

    pub fn snapshot(&self) -> Subspace {
        self.clone().finish()
    }
}
