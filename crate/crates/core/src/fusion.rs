//! Fusion of algebras over a third algebra, and the locally constant case
//! where the fusion is the balanced tensor product acting on itself.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{kron_sparse, tensor_over_central, Algebra, AlgebraMorphism, Subalgebra};
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};
use crate::linalg::{Matrix, QuotientSpace, Subspace, SubspaceBuilder};
use crate::rational::Rational;

/// Data for `a ⊛_c b`: maps `j_a: c^op → a` and `j_b: c → b`.
#[derive(Clone, Debug)]
pub struct FusionInput {
    pub a: Arc<Algebra>,
    pub b: Arc<Algebra>,
    pub c: Arc<Algebra>,
    pub j_a: AlgebraMorphism,
    pub j_b: AlgebraMorphism,
}

impl FusionInput {
    /// Checks that the maps go `c^op → a` and `c → b` and are homomorphisms.
    pub fn new(
        a: Arc<Algebra>,
        b: Arc<Algebra>,
        c: Arc<Algebra>,
        j_a: AlgebraMorphism,
        j_b: AlgebraMorphism,
    ) -> Result<Self> {
        if j_a.source().as_ref() != &c.opposite() || j_a.target() != &a {
            return Err(Error::InvalidMorphism(format!("j_a must map {}^op to {}", c.name(), a.name())));
        }
        if j_b.source() != &c || j_b.target() != &b {
            return Err(Error::InvalidMorphism(format!("j_b must map {} to {}", c.name(), b.name())));
        }
        for (name, j) in [("j_a", &j_a), ("j_b", &j_b)] {
            if let Some(v) = j.check().first() {
                return Err(Error::InvalidMorphism(format!("{name}: {v}")));
            }
        }
        for alg in [&a, &b, &c] {
            if let Some(v) = alg.validate().first() {
                return Err(Error::InvalidAlgebra(format!("{}: {v}", alg.name())));
            }
        }
        Ok(FusionInput { a, b, c, j_a, j_b })
    }

    /// The locally constant setting: a commutative `b` mapping centrally
    /// into `d` and `e`. The map into `d` is reread as a map out of `b^op`,
    /// which equals `b`.
    pub fn central(
        d: &Arc<Algebra>,
        b: &Arc<Algebra>,
        e: &Arc<Algebra>,
        i_d: &AlgebraMorphism,
        i_e: &AlgebraMorphism,
    ) -> Result<Self> {
        check_central_data(d, b, e, i_d, i_e)?;
        let j_a = AlgebraMorphism::new(Arc::new(b.opposite()), d.clone(), i_d.matrix().clone())?;
        Self::new(d.clone(), e.clone(), b.clone(), j_a, i_e.clone())
    }
}

fn check_central_data(
    d: &Arc<Algebra>,
    b: &Arc<Algebra>,
    e: &Arc<Algebra>,
    i_d: &AlgebraMorphism,
    i_e: &AlgebraMorphism,
) -> Result<()> {
    if let Some((i, j)) = b.noncommuting_pair() {
        return Err(Error::NonCommutative(b.name().to_string(), i, j));
    }
    for (map, tgt) in [(i_d, d), (i_e, e)] {
        if map.source() != b || map.target() != tgt {
            return Err(Error::AlgebraMismatch(format!("central map must go from {} to {}", b.name(), tgt.name())));
        }
        if let Some((element, witness)) = map.first_noncentral() {
            return Err(Error::NotCentral { element, witness });
        }
    }
    Ok(())
}

/// Quotient of `a ⊗ b` by `x·j_a(c_k) ⊗ y − x ⊗ j_b(c_k)·y` over all basis
/// elements `c_k` of `c`.
pub fn balanced_carrier(input: &FusionInput) -> QuotientSpace {
    let (a, b) = (&input.a, &input.b);
    let (da, db) = (a.dim(), b.dim());
    let mut rel = SubspaceBuilder::new(da * db);
    for k in 0..input.c.dim() {
        let left = sparse::from_dense(&input.j_a.image_of(k));
        let right = sparse::from_dense(&input.j_b.image_of(k));
        let gy: Vec<SparseVec> = (0..db).map(|y| b.mul_sparse(&right, &sparse::unit(y))).collect();
        for x in 0..da {
            let xg = a.mul_sparse(&sparse::unit(x), &left);
            for (y, gy) in gy.iter().enumerate() {
                rel.insert(sparse::sub(
                    &kron_sparse(&xg, &sparse::unit(y), db),
                    &kron_sparse(&sparse::unit(x), gy, db),
                ));
            }
        }
    }
    QuotientSpace::new(da * db, rel.finish()).expect("ambient dims agree")
}

/// Vectorizes a square matrix as an element of `End(n)` (row-major matrix units).
pub fn end_element(m: &Matrix) -> Vec<Rational> {
    m.entries().to_vec()
}

/// Reads an element of `End(n)` back as a matrix.
pub fn end_matrix(v: &[Rational], n: usize) -> Matrix {
    Matrix::from_vec(n, n, v.to_vec()).expect("vector of length n²")
}

/// The fusion `(a ∩ (c^op)′) ∨ (c′ ∩ b)` inside `End(a ⊗_c b)`.
#[derive(Clone, Debug)]
pub struct FusionResult {
    pub input: FusionInput,
    pub carrier: QuotientSpace,
    pub end_algebra: Arc<Algebra>,
    pub fused: Subalgebra,
    /// `a ∩ (c^op)′`, a subalgebra of `a`.
    pub left_commutant: Subalgebra,
    /// `c′ ∩ b`, a subalgebra of `b`.
    pub right_commutant: Subalgebra,
}

/// Matrix on the carrier of `δ ⊗ ε ↦ xδ ⊗ yε`, after checking that it
/// preserves the relations.
fn descended(input: &FusionInput, q: &QuotientSpace, x: &SparseVec, y: &SparseVec) -> Result<Matrix> {
    let (a, b) = (&input.a, &input.b);
    let db = b.dim();
    let f =
        |i: usize| kron_sparse(&a.mul_sparse(x, &sparse::unit(i / db)), &b.mul_sparse(y, &sparse::unit(i % db)), db);
    for r in q.relations().sparse_rows() {
        if !q.relations().contains_sparse(&sparse::apply_linear(r, f)) {
            return Err(Error::NotWellDefined(
                "left multiplication does not descend to the balanced tensor product".into(),
            ));
        }
    }
    Ok(q.induced(q, f))
}

impl FusionResult {
    /// Left multiplication by `x` on the carrier; `x` must lie in `a ∩ (c^op)′`.
    pub fn left_rep(&self, x: &[Rational]) -> Result<Matrix> {
        if !self.left_commutant.contains(x) {
            return Err(Error::InvalidArgument("element is not in the relative commutant".into()));
        }
        descended(&self.input, &self.carrier, &sparse::from_dense(x), &sparse::from_dense(self.input.b.unit()))
    }

    /// Left multiplication by `y` on the second factor; `y` must lie in `c′ ∩ b`.
    pub fn right_rep(&self, y: &[Rational]) -> Result<Matrix> {
        if !self.right_commutant.contains(y) {
            return Err(Error::InvalidArgument("element is not in the relative commutant".into()));
        }
        descended(&self.input, &self.carrier, &sparse::from_dense(self.input.a.unit()), &sparse::from_dense(y))
    }
}

/// Computes the fusion of `a` and `b` over `c`. Both relative commutants act
/// on the carrier by left multiplication on their factor.
pub fn fusion_algebra(input: &FusionInput) -> Result<FusionResult> {
    let carrier = balanced_carrier(input);
    let n = carrier.dim();
    let end_algebra = Arc::new(Algebra::endomorphisms(n));
    let left_commutant = input.a.commutant(&input.j_a.image())?;
    let right_commutant = input.b.commutant(&input.j_b.image())?;
    let one_a = sparse::from_dense(input.a.unit());
    let one_b = sparse::from_dense(input.b.unit());
    let mut gens: Vec<Vec<Rational>> = Vec::new();
    for x in left_commutant.space().sparse_rows() {
        gens.push(end_element(&descended(input, &carrier, x, &one_b)?));
    }
    for y in right_commutant.space().sparse_rows() {
        gens.push(end_element(&descended(input, &carrier, &one_a, y)?));
    }
    let span = Subspace::span(n * n, gens.iter().map(|g| g.as_slice()))?;
    let fused = end_algebra.generated_subalgebra(&[span])?;
    Ok(FusionResult { input: input.clone(), carrier, end_algebra, fused, left_commutant, right_commutant })
}

/// `ρ: d ⊗_b e → End(d ⊗_b e)`, `ρ_(x,y)(δ ⊗ ε) = xδ ⊗ yε`.
///
/// Returns the quotient algebra, its carrier, and `ρ`, which is checked to be
/// a unital homomorphism.
pub fn rho_iso(
    d: &Arc<Algebra>,
    b: &Arc<Algebra>,
    e: &Arc<Algebra>,
    i_d: &AlgebraMorphism,
    i_e: &AlgebraMorphism,
) -> Result<(Arc<Algebra>, QuotientSpace, AlgebraMorphism)> {
    check_central_data(d, b, e, i_d, i_e)?;
    let (t, q) = tensor_over_central(d, e, b, i_d, i_e)?;
    let t = Arc::new(t);
    let input = FusionInput::central(d, b, e, i_d, i_e)?;
    let n = q.dim();
    let de = e.dim();
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let xy = q.section_index(k);
        let m = descended(&input, &q, &sparse::unit(xy / de), &sparse::unit(xy % de))?;
        cols.push(end_element(&m));
    }
    let end = Arc::new(Algebra::endomorphisms(n));
    let rho = AlgebraMorphism::new(t.clone(), end, Matrix::from_columns(n * n, &cols))?;
    if let Some(v) = rho.check().first() {
        return Err(Error::InvalidMorphism(format!("rho: {v}")));
    }
    Ok((t, q, rho))
}

/// Outcome of [`verify_fusion_theorem`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionReport {
    pub tensor_dim: usize,
    pub fused_dim: usize,
    /// The image of `ρ` equals the fusion algebra inside `End(carrier)`.
    pub image_is_fusion: bool,
    pub injective: bool,
    pub homomorphism: bool,
    /// `ρ_ξ(1 ⊗ 1) = ξ` for every basis vector `ξ`.
    pub recovers_vectors: bool,
}

impl FusionReport {
    pub fn passed(&self) -> bool {
        self.image_is_fusion
            && self.injective
            && self.homomorphism
            && self.recovers_vectors
            && self.tensor_dim == self.fused_dim
    }
}

impl fmt::Display for FusionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = |ok: bool| if ok { "OK" } else { "FAIL" };
        writeln!(
            f,
            "{} image-is-fusion tensor_dim={} fused_dim={}",
            tag(self.image_is_fusion),
            self.tensor_dim,
            self.fused_dim
        )?;
        writeln!(f, "{} rho-injective", tag(self.injective))?;
        writeln!(f, "{} rho-homomorphism", tag(self.homomorphism))?;
        writeln!(f, "{} rho-recovers-vectors", tag(self.recovers_vectors))
    }
}

/// Checks that `ρ` is an isomorphism from `d ⊗_b e` onto `d ∨ e`.
pub fn verify_fusion_theorem(
    d: &Arc<Algebra>,
    b: &Arc<Algebra>,
    e: &Arc<Algebra>,
    i_d: &AlgebraMorphism,
    i_e: &AlgebraMorphism,
) -> Result<FusionReport> {
    let input = FusionInput::central(d, b, e, i_d, i_e)?;
    let fusion = fusion_algebra(&input)?;
    let (t, q, rho) = rho_iso(d, b, e, i_d, i_e)?;
    let n = q.dim();
    let image = rho.image();
    let unit_vec = q.project(&crate::algebra::kron_dense(d.unit(), e.unit()));
    let recovers_vectors =
        (0..t.dim()).all(|k| end_matrix(&rho.image_of(k), n).mul_vec(&unit_vec) == t.basis_vector(k));
    Ok(FusionReport {
        tensor_dim: t.dim(),
        fused_dim: fusion.fused.dim(),
        image_is_fusion: fusion.carrier == q && &image == fusion.fused.space(),
        injective: rho.is_injective(),
        homomorphism: rho.check().is_empty(),
        recovers_vectors,
    })
}
