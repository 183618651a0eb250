use std::sync::Arc;

use crate::algebra::algebra::{kron_dense, kron_sparse};
use crate::algebra::{Algebra, AlgebraMorphism};
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};
use crate::linalg::{QuotientSpace, SubspaceBuilder};

/// `a ⊗_c b` for a commutative `c` acting centrally on both sides.
///
/// The relation space is spanned by `x·ja(g) ⊗ y − x ⊗ jb(g)·y` for basis
/// vectors `x`, `y` and algebra generators `g` of `c`; generators suffice
/// because `ja` and `jb` are homomorphisms. Products descend because the
/// images are central, so the relations span a two-sided ideal.
pub fn tensor_over_central(
    a: &Arc<Algebra>,
    b: &Arc<Algebra>,
    c: &Arc<Algebra>,
    ja: &AlgebraMorphism,
    jb: &AlgebraMorphism,
) -> Result<(Algebra, QuotientSpace)> {
    if let Some((i, j)) = c.noncommuting_pair() {
        return Err(Error::NonCommutative(c.name().to_string(), i, j));
    }
    for (j, tgt) in [(ja, a), (jb, b)] {
        if j.source().as_ref() != c.as_ref() || j.target().as_ref() != tgt.as_ref() {
            return Err(Error::AlgebraMismatch(format!("central map must go from {} to {}", c.name(), tgt.name())));
        }
        if let Some((element, witness)) = j.first_noncentral() {
            return Err(Error::NotCentral { element, witness });
        }
    }
    let quotient = balanced_quotient(a, b, c.generator_indices(), ja, jb);
    let algebra = quotient_algebra(a, b, &quotient, format!("{}⊗_{}{}", a.name(), c.name(), b.name()))?;
    Ok((algebra, quotient))
}

/// Quotient of `a ⊗ b` by `x·ja(c_g) ⊗ y − x ⊗ jb(c_g)·y` over the listed
/// basis indices `g` of the source of `ja`/`jb`.
pub(crate) fn balanced_quotient(
    a: &Algebra,
    b: &Algebra,
    c_indices: &[usize],
    ja: &AlgebraMorphism,
    jb: &AlgebraMorphism,
) -> QuotientSpace {
    let (da, db) = (a.dim(), b.dim());
    let mut rel = SubspaceBuilder::new(da * db);
    for &g in c_indices {
        let left = sparse::from_dense(&ja.image_of(g));
        let right = sparse::from_dense(&jb.image_of(g));
        for x in 0..da {
            let xg = a.mul_sparse(&sparse::unit(x), &left);
            for y in 0..db {
                let gy = b.mul_sparse(&right, &sparse::unit(y));
                let r = sparse::sub(&kron_sparse(&xg, &sparse::unit(y), db), &kron_sparse(&sparse::unit(x), &gy, db));
                rel.insert(r);
            }
        }
    }
    QuotientSpace::new(da * db, rel.finish()).expect("ambient dims agree")
}

/// The algebra structure on a quotient of `a ⊗ b` by an ideal.
pub(crate) fn quotient_algebra(a: &Algebra, b: &Algebra, q: &QuotientSpace, name: String) -> Result<Algebra> {
    let db = b.dim();
    let n = q.dim();
    if n == 0 {
        return Err(Error::InvalidAlgebra(format!("{name} is the zero algebra")));
    }
    let lifts: Vec<(usize, usize)> = (0..n).map(|k| (q.section_index(k) / db, q.section_index(k) % db)).collect();
    let mut products: Vec<SparseVec> = Vec::with_capacity(n * n);
    for &(x, y) in &lifts {
        for &(x2, y2) in &lifts {
            let p = kron_sparse(&a.basis_product(x, x2), &b.basis_product(y, y2), db);
            products.push(sparse::from_dense(&q.project_sparse(&p)));
        }
    }
    let unit = q.project(&kron_dense(a.unit(), b.unit()));
    Algebra::from_products(name, n, unit, products)
}
