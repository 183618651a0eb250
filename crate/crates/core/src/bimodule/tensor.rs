use std::sync::Arc;

use crate::algebra::{kron_dense, kron_sparse};
use crate::bimodule::{Bimodule, BimoduleMorphism};
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};
use crate::linalg::{Matrix, QuotientSpace, SubspaceBuilder};
use crate::rational::Rational;

/// `m ⊗_E n` for a `D`–`E` bimodule `m` and an `E`–`F` bimodule `n`.
///
/// The ambient space `m ⊗ n` has basis `(x, y) ↦ x * dim(n) + y`, and the
/// relations `x·e ⊗ y − x ⊗ e·y` range over algebra generators `e` of `E`.
pub fn tensor_over(m: &Bimodule, n: &Bimodule) -> Result<(Bimodule, QuotientSpace)> {
    if m.right_alg() != n.left_alg() {
        return Err(Error::AlgebraMismatch(format!(
            "right algebra {} differs from left algebra {}",
            m.right_alg().name(),
            n.left_alg().name()
        )));
    }
    let (dm, dn) = (m.dim(), n.dim());
    let mut rel = SubspaceBuilder::new(dm * dn);
    for &g in n.left_alg().generator_indices() {
        let (r, l) = (m.right_action(g), n.left_action(g));
        let ly: Vec<SparseVec> = (0..dn).map(|y| l.mul_sparse(&sparse::unit(y))).collect();
        for x in 0..dm {
            let rx = r.mul_sparse(&sparse::unit(x));
            for (y, ly) in ly.iter().enumerate() {
                rel.insert(sparse::sub(
                    &kron_sparse(&rx, &sparse::unit(y), dn),
                    &kron_sparse(&sparse::unit(x), ly, dn),
                ));
            }
        }
    }
    let q = QuotientSpace::new(dm * dn, rel.finish())?;
    let left = m
        .left_actions()
        .iter()
        .map(|a| q.induced(&q, |i| kron_sparse(&a.mul_sparse(&sparse::unit(i / dn)), &sparse::unit(i % dn), dn)))
        .collect();
    let right = n
        .right_actions()
        .iter()
        .map(|a| q.induced(&q, |i| kron_sparse(&sparse::unit(i / dn), &a.mul_sparse(&sparse::unit(i % dn)), dn)))
        .collect();
    let t = Bimodule::new(m.left_alg().clone(), n.right_alg().clone(), q.dim(), left, right)?;
    Ok((t, q))
}

/// Class of `u ⊗ v` in a tensor quotient.
pub fn tensor_vector(q: &QuotientSpace, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    q.project(&kron_dense(u, v))
}

/// Images of ambient basis vectors under `f ⊗ g`.
fn kron_columns<'a>(f: &'a Matrix, g: &'a Matrix) -> impl Fn(usize) -> SparseVec + 'a {
    let (dn, dn2) = (g.cols(), g.rows());
    move |i| kron_sparse(&f.mul_sparse(&sparse::unit(i / dn)), &g.mul_sparse(&sparse::unit(i % dn)), dn2)
}

/// `φ ⊗_E ψ`, after checking that `φ ⊗ ψ` maps relations to relations.
pub fn tensor_morphisms_over(phi: &BimoduleMorphism, psi: &BimoduleMorphism) -> Result<BimoduleMorphism> {
    let (src, qs) = tensor_over(phi.source(), psi.source())?;
    let (tgt, qt) = tensor_over(phi.target(), psi.target())?;
    let f = kron_columns(phi.matrix(), psi.matrix());
    for r in qs.relations().sparse_rows() {
        if !qt.relations().contains_sparse(&sparse::apply_linear(r, &f)) {
            return Err(Error::NotWellDefined("tensor of morphisms does not preserve the balancing relations".into()));
        }
    }
    let matrix = qs.induced(&qt, f);
    BimoduleMorphism::new(Arc::new(src), Arc::new(tgt), matrix)
}

/// `(m ⊗ n) ⊗ p → m ⊗ (n ⊗ p)`.
pub fn associator(m: &Bimodule, n: &Bimodule, p: &Bimodule) -> Result<BimoduleMorphism> {
    let (mn, q_mn) = tensor_over(m, n)?;
    let (np, q_np) = tensor_over(n, p)?;
    let (left, q_l) = tensor_over(&mn, p)?;
    let (right, q_r) = tensor_over(m, &np)?;
    let (dn, dp, dnp) = (n.dim(), p.dim(), np.dim());
    let matrix = q_l.induced(&q_r, |i| {
        let xy = q_mn.section_index(i / dp);
        let w = sparse::from_dense(&q_np.project_sparse(&sparse::unit((xy % dn) * dp + i % dp)));
        kron_sparse(&sparse::unit(xy / dn), &w, dnp)
    });
    BimoduleMorphism::new(Arc::new(left), Arc::new(right), matrix)
}

/// `m ⊗ (n ⊗ p) → (m ⊗ n) ⊗ p`.
pub fn associator_inverse(m: &Bimodule, n: &Bimodule, p: &Bimodule) -> Result<BimoduleMorphism> {
    let (mn, q_mn) = tensor_over(m, n)?;
    let (np, q_np) = tensor_over(n, p)?;
    let (left, q_l) = tensor_over(&mn, p)?;
    let (right, q_r) = tensor_over(m, &np)?;
    let (dn, dp, dnp) = (n.dim(), p.dim(), np.dim());
    let matrix = q_r.induced(&q_l, |i| {
        let yz = q_np.section_index(i % dnp);
        let u = sparse::from_dense(&q_mn.project_sparse(&sparse::unit((i / dnp) * dn + yz / dp)));
        kron_sparse(&u, &sparse::unit(yz % dp), dp)
    });
    BimoduleMorphism::new(Arc::new(right), Arc::new(left), matrix)
}

/// `m → D ⊗_D m`, `h ↦ 1 ⊗ h`.
pub fn left_unitor(m: &Arc<Bimodule>) -> Result<BimoduleMorphism> {
    let reg = Bimodule::regular(m.left_alg());
    let (t, q) = tensor_over(&reg, m)?;
    let one = sparse::from_dense(m.left_alg().unit());
    let dm = m.dim();
    let matrix = QuotientSpace::identity(dm).induced(&q, |h| kron_sparse(&one, &sparse::unit(h), dm));
    BimoduleMorphism::new(m.clone(), Arc::new(t), matrix)
}

/// `D ⊗_D m → m`, `d ⊗ h ↦ d·h`.
pub fn left_unitor_inverse(m: &Arc<Bimodule>) -> Result<BimoduleMorphism> {
    let reg = Bimodule::regular(m.left_alg());
    let (t, q) = tensor_over(&reg, m)?;
    let dm = m.dim();
    let matrix = q.induced(&QuotientSpace::identity(dm), |i| m.left_action(i / dm).mul_sparse(&sparse::unit(i % dm)));
    BimoduleMorphism::new(Arc::new(t), m.clone(), matrix)
}

/// `m → m ⊗_E E`, `h ↦ h ⊗ 1`.
pub fn right_unitor(m: &Arc<Bimodule>) -> Result<BimoduleMorphism> {
    let e = m.right_alg();
    let reg = Bimodule::regular(e);
    let (t, q) = tensor_over(m, &reg)?;
    let one = sparse::from_dense(e.unit());
    let de = e.dim();
    let matrix = QuotientSpace::identity(m.dim()).induced(&q, |h| kron_sparse(&sparse::unit(h), &one, de));
    BimoduleMorphism::new(m.clone(), Arc::new(t), matrix)
}

/// `m ⊗_E E → m`, `h ⊗ e ↦ h·e`.
pub fn right_unitor_inverse(m: &Arc<Bimodule>) -> Result<BimoduleMorphism> {
    let reg = Bimodule::regular(m.right_alg());
    let (t, q) = tensor_over(m, &reg)?;
    let de = m.right_alg().dim();
    let matrix =
        q.induced(&QuotientSpace::identity(m.dim()), |i| m.right_action(i % de).mul_sparse(&sparse::unit(i / de)));
    BimoduleMorphism::new(Arc::new(t), m.clone(), matrix)
}
