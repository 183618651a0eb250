use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::subalgebra::Subalgebra;
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};
use crate::linalg::{Matrix, Subspace, SubspaceBuilder};
use crate::rational::Rational;

#[derive(Clone, Debug)]
enum MulTable {
    /// Products of basis pairs, indexed `i * dim + j`.
    Table(Vec<SparseVec>),
    /// Full matrix algebra on `n` points with matrix units `E_pq` at `p * n + q`.
    MatrixUnits(usize),
}

/// A finite-dimensional unital associative algebra given by structure
/// constants over the rationals.
///
/// Construction only checks shapes; use [`Algebra::validate`] (or
/// [`Algebra::checked`]) for the associativity and unit axioms.
#[derive(Debug)]
pub struct Algebra {
    name: String,
    dim: usize,
    unit: Vec<Rational>,
    table: MulTable,
    generators: OnceLock<Vec<usize>>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra {
            name: self.name.clone(),
            dim: self.dim,
            unit: self.unit.clone(),
            table: self.table.clone(),
            generators: self.generators.clone(),
        }
    }
}

/// Structural equality: same dimension, unit and products. Names are labels
/// and do not participate.
impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        if self.dim != other.dim || self.unit != other.unit {
            return false;
        }
        match (&self.table, &other.table) {
            (MulTable::MatrixUnits(n), MulTable::MatrixUnits(m)) => n == m,
            (MulTable::Table(a), MulTable::Table(b)) => a == b,
            _ => (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == other.basis_product(i, j))),
        }
    }
}

impl Eq for Algebra {}

/// One violated axiom found by [`Algebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraViolation {
    /// `(e_i e_j) e_k != e_i (e_j e_k)`.
    Associativity { i: usize, j: usize, k: usize },
    /// `unit * e_i != e_i`.
    LeftUnit { i: usize },
    /// `e_i * unit != e_i`.
    RightUnit { i: usize },
}

impl fmt::Display for AlgebraViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraViolation::Associativity { i, j, k } => write!(f, "associativity fails at triple ({i},{j},{k})"),
            AlgebraViolation::LeftUnit { i } => write!(f, "left unit law fails at e{i}"),
            AlgebraViolation::RightUnit { i } => write!(f, "right unit law fails at e{i}"),
        }
    }
}

/// Above this dimension, matrix-unit algebras skip the cubic associativity
/// scan; their products are associative by construction.
const MATRIX_UNIT_SCAN_LIMIT: usize = 16;

impl Algebra {
    /// Builds an algebra from the products `e_i * e_j`, listed row-major.
    pub fn from_products(
        name: impl Into<String>,
        dim: usize,
        unit: Vec<Rational>,
        products: Vec<SparseVec>,
    ) -> Result<Algebra> {
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: unit.len() });
        }
        if products.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: products.len() });
        }
        if let Some(bad) = products.iter().flatten().find(|(k, _)| *k >= dim) {
            return Err(Error::InvalidAlgebra(format!("product index {} out of range", bad.0)));
        }
        Ok(Algebra { name: name.into(), dim, unit, table: MulTable::Table(products), generators: OnceLock::new() })
    }

    /// Like [`Algebra::from_products`], additionally rejecting anything that
    /// fails [`Algebra::validate`].
    pub fn checked(
        name: impl Into<String>,
        dim: usize,
        unit: Vec<Rational>,
        products: Vec<SparseVec>,
    ) -> Result<Algebra> {
        let a = Self::from_products(name, dim, unit, products)?;
        if let Some(v) = a.validate().first() {
            return Err(Error::InvalidAlgebra(format!("{}: {v}", a.name)));
        }
        Ok(a)
    }

    /// The full matrix algebra `End(Q^n)` with matrix-unit basis in row-major
    /// order. `n = 0` gives the zero algebra (the only dimension-zero algebra).
    pub fn endomorphisms(n: usize) -> Algebra {
        let mut unit = vec![Rational::zero(); n * n];
        for p in 0..n {
            unit[p * n + p] = Rational::one();
        }
        Algebra {
            name: format!("End({n})"),
            dim: n * n,
            unit,
            table: MulTable::MatrixUnits(n),
            generators: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::one();
        v
    }

    /// `Some(n)` if this is the matrix-unit presentation of `End(Q^n)`.
    pub fn matrix_size(&self) -> Option<usize> {
        match self.table {
            MulTable::MatrixUnits(n) => Some(n),
            MulTable::Table(_) => None,
        }
    }

    /// `e_i * e_j` as a sparse coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> SparseVec {
        match &self.table {
            MulTable::Table(t) => t[i * self.dim + j].clone(),
            MulTable::MatrixUnits(n) => {
                let (p, q) = (i / n, i % n);
                let (r, s) = (j / n, j % n);
                if q == r {
                    sparse::unit(p * n + s)
                } else {
                    Vec::new()
                }
            }
        }
    }

    /// Structure constant `c[i][j][k]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        sparse::get(&self.basis_product(i, j), k).cloned().unwrap_or_default()
    }

    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
            }
        }
        Ok(self.mul(x, y))
    }

    /// Unchecked product; panics on length mismatch.
    pub(crate) fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        match self.table {
            MulTable::MatrixUnits(n) => {
                let a = Matrix::from_vec(n, n, x.to_vec()).expect("length n*n");
                let b = Matrix::from_vec(n, n, y.to_vec()).expect("length n*n");
                (&a * &b).entries().to_vec()
            }
            MulTable::Table(_) => {
                let mut out = vec![Rational::zero(); self.dim];
                for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                    for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                        let ab = a * b;
                        for (k, c) in self.basis_product(i, j) {
                            out[k] += &(&ab * &c);
                        }
                    }
                }
                out
            }
        }
    }

    pub(crate) fn mul_sparse(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = a * b;
                for (k, c) in self.basis_product(*i, *j) {
                    terms.push((k, &ab * &c));
                }
            }
        }
        sparse::collect(terms)
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult_matrix(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult_matrix(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Lists every violated axiom; empty iff the algebra is valid.
    pub fn validate(&self) -> Vec<AlgebraViolation> {
        let mut out = Vec::new();
        let d = self.dim;
        for i in 0..d {
            let e = sparse::unit(i);
            let u = sparse::from_dense(&self.unit);
            if self.mul_sparse(&u, &e) != e {
                out.push(AlgebraViolation::LeftUnit { i });
            }
            if self.mul_sparse(&e, &u) != e {
                out.push(AlgebraViolation::RightUnit { i });
            }
        }
        if matches!(self.table, MulTable::MatrixUnits(n) if n * n > MATRIX_UNIT_SCAN_LIMIT) {
            return out;
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let left = self.mul_sparse(&ij, &sparse::unit(k));
                    let right = self.mul_sparse(&sparse::unit(i), &self.basis_product(j, k));
                    if left != right {
                        out.push(AlgebraViolation::Associativity { i, j, k });
                    }
                }
            }
        }
        out
    }

    pub fn opposite(&self) -> Algebra {
        let d = self.dim;
        let products = (0..d * d).map(|ij| self.basis_product(ij % d, ij / d)).collect();
        Algebra {
            name: format!("{}^op", self.name),
            dim: d,
            unit: self.unit.clone(),
            table: MulTable::Table(products),
            generators: OnceLock::new(),
        }
    }

    /// First basis pair `(i, j)` with `e_i e_j != e_j e_i`, if any.
    pub fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        (0..self.dim)
            .flat_map(|i| (i + 1..self.dim).map(move |j| (i, j)))
            .find(|&(i, j)| self.basis_product(i, j) != self.basis_product(j, i))
    }

    pub fn is_commutative(&self) -> bool {
        self.noncommuting_pair().is_none()
    }

    /// `{x : x v = v x for every v in s}`.
    pub fn commutant(self: &Arc<Self>, s: &Subspace) -> Result<Subalgebra> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: s.ambient_dim() });
        }
        let mut system = Matrix::zeros(0, self.dim);
        for v in s.basis_vectors() {
            let block = &self.right_mult_matrix(&v) - &self.left_mult_matrix(&v);
            system = system.vstack(&block)?;
        }
        Ok(Subalgebra::new_unchecked(self.clone(), system.kernel()))
    }

    pub fn center(self: &Arc<Self>) -> Subalgebra {
        self.commutant(&Subspace::full(self.dim)).expect("ambient dims agree")
    }

    /// Smallest unital subalgebra containing every part.
    ///
    /// Closes `span{unit}` under left multiplication by the basis vectors
    /// of the parts; the span of all words in the generators is reached this
    /// way and is already closed under multiplication.
    pub fn generated_subalgebra(self: &Arc<Self>, parts: &[Subspace]) -> Result<Subalgebra> {
        let mut generators: Vec<Vec<Rational>> = Vec::new();
        for p in parts {
            if p.ambient_dim() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: p.ambient_dim() });
            }
            generators.extend(p.basis_vectors());
        }
        Ok(Subalgebra::new_unchecked(self.clone(), self.closure(&generators)))
    }

    pub(crate) fn closure(&self, generators: &[Vec<Rational>]) -> Subspace {
        let mut space = SubspaceBuilder::new(self.dim);
        if self.dim == 0 {
            return space.finish();
        }
        let mut queue = vec![self.unit.clone()];
        space.insert_dense(&self.unit);
        while let Some(w) = queue.pop() {
            for g in generators {
                let gw = self.mul(g, &w);
                if space.insert_dense(&gw) {
                    queue.push(gw);
                }
            }
            if space.dim() == self.dim {
                break;
            }
        }
        space.finish()
    }

    /// Indices of a subset of basis vectors generating the algebra, chosen
    /// greedily in index order. Cached.
    pub fn generator_indices(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let mut gens: Vec<usize> = Vec::new();
            let mut vecs: Vec<Vec<Rational>> = Vec::new();
            let mut current = self.closure(&vecs);
            for i in 0..self.dim {
                if current.dim() == self.dim {
                    break;
                }
                let e = self.basis_vector(i);
                if !current.contains(&e) {
                    gens.push(i);
                    vecs.push(e);
                    current = self.closure(&vecs);
                }
            }
            gens
        })
    }

    /// `a ⊗ b` with basis `(i, j) ↦ i * dim(b) + j`.
    pub fn tensor(a: &Algebra, b: &Algebra) -> Algebra {
        let (da, db) = (a.dim, b.dim);
        let d = da * db;
        let mut products = Vec::with_capacity(d * d);
        for x in 0..d {
            for y in 0..d {
                let pa = a.basis_product(x / db, y / db);
                let pb = b.basis_product(x % db, y % db);
                products.push(kron_sparse(&pa, &pb, db));
            }
        }
        Algebra {
            name: format!("{}⊗{}", a.name, b.name),
            dim: d,
            unit: kron_dense(&a.unit, &b.unit),
            table: MulTable::Table(products),
            generators: OnceLock::new(),
        }
    }
}

/// Lexicographic tensor product of sparse vectors; the right factor has
/// dimension `db`.
pub fn kron_sparse(u: &SparseVec, v: &SparseVec, db: usize) -> SparseVec {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for (i, a) in u {
        for (j, b) in v {
            out.push((i * db + j, a * b));
        }
    }
    out
}

pub fn kron_dense(u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    u.iter().flat_map(|a| v.iter().map(move |b| a * b)).collect()
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {})", self.name, self.dim)
    }
}
