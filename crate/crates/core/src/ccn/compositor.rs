use std::sync::Arc;

use crate::algebra::{kron_sparse, AlgebraMorphism};
use crate::bimodule::{tensor_over, Bimodule};
use crate::ccn::{fuse_defects_with_witness, horizontal_fusion_with_witness, Defect, Intertwiner, Sector};
use crate::error::{Error, Result};
use crate::linalg::sparse;
use crate::linalg::{Matrix, QuotientSpace};

/// The algebra isomorphism `(D ⊛ E) ⊛ F → D ⊛ (E ⊛ F)`.
pub fn defect_associator(d: &Defect, e: &Defect, f: &Defect) -> Result<AlgebraMorphism> {
    let (de, q_de) = fuse_defects_with_witness(d, e)?;
    let (ef, q_ef) = fuse_defects_with_witness(e, f)?;
    let (left, q_l) = fuse_defects_with_witness(&de, f)?;
    let (right, q_r) = fuse_defects_with_witness(d, &ef)?;
    let (de_, df, def) = (e.algebra().dim(), f.algebra().dim(), ef.algebra().dim());
    let matrix = q_l.induced(&q_r, |i| {
        let xy = q_de.section_index(i / df);
        let w = sparse::from_dense(&q_ef.project_sparse(&sparse::unit((xy % de_) * df + i % df)));
        kron_sparse(&sparse::unit(xy / de_), &w, def)
    });
    AlgebraMorphism::new(left.algebra().clone(), right.algebra().clone(), matrix)
}

/// The map `D ⊛ E → D′ ⊛ E′` induced by algebra maps `f: D → D′` and
/// `g: E → E′`, after checking that `f ⊗ g` respects the balancing.
pub fn fuse_algebra_maps(
    (d, d2): (&Defect, &Defect),
    f: &Matrix,
    (e, e2): (&Defect, &Defect),
    g: &Matrix,
) -> Result<AlgebraMorphism> {
    let (src, q_s) = fuse_defects_with_witness(d, e)?;
    let (tgt, q_t) = fuse_defects_with_witness(d2, e2)?;
    let (de, de2) = (e.algebra().dim(), e2.algebra().dim());
    let map = |i: usize| kron_sparse(&f.mul_sparse(&sparse::unit(i / de)), &g.mul_sparse(&sparse::unit(i % de)), de2);
    for r in q_s.relations().sparse_rows() {
        if !q_t.relations().contains_sparse(&sparse::apply_linear(r, map)) {
            return Err(Error::NotWellDefined("fused algebra map does not respect the balancing".into()));
        }
    }
    AlgebraMorphism::checked(src.algebra().clone(), tgt.algebra().clone(), q_s.induced(&q_t, map))
}

/// The sector `Q` over `(top, bottom)` for an algebra map `α: P → Q`, with
/// `P` acting on the left through `α` and `Q` on the right.
pub fn twisted_sector(alpha: &AlgebraMorphism, top: &Defect, bottom: &Defect) -> Result<Sector> {
    let q = alpha.target();
    let left = (0..alpha.source().dim()).map(|i| q.left_mult_matrix(&alpha.image_of(i))).collect();
    let right = (0..q.dim()).map(|j| q.right_mult_matrix(&q.basis_vector(j))).collect();
    let m = Bimodule::new(alpha.source().clone(), q.clone(), q.dim(), left, right)?;
    Sector::new(top.clone(), bottom.clone(), Arc::new(m))
}

/// The compositor `a_{D,E,F}` between `(D ⊛ E) ⊛ F` and `D ⊛ (E ⊛ F)`.
pub fn compositor(d: &Defect, e: &Defect, f: &Defect) -> Result<Sector> {
    let alpha = defect_associator(d, e, f)?;
    let top = fuse_defects_with_witness(&fuse_defects_with_witness(d, e)?.0, f)?.0;
    let bottom = fuse_defects_with_witness(d, &fuse_defects_with_witness(e, f)?.0)?.0;
    twisted_sector(&alpha, &top, &bottom)
}

/// `S_α ⊗ S_β → S_{β∘α}`, `x ⊗ y ↦ β(x)·y`, for twisted sectors.
pub fn collapse_twisted(h: &Sector, k: &Sector, beta: &AlgebraMorphism, composite: &Sector) -> Result<Intertwiner> {
    let (m, q) = tensor_over(h.bimodule(), k.bimodule())?;
    let r = beta.target();
    let dr = r.dim();
    let matrix = q.induced(&QuotientSpace::identity(dr), |i| {
        sparse::from_dense(&r.mul(&beta.image_of(i / dr), &r.basis_vector(i % dr)))
    });
    let source = Sector::new(h.top().clone(), k.bottom().clone(), Arc::new(m))?;
    Intertwiner::new(source, composite.clone(), matrix)
}

/// The linear isomorphism `(H ⊠ H′) ⊠ H″ → H ⊠ (H′ ⊠ H″)` between
/// iterated horizontal fusions, with both sectors.
pub fn horizontal_rebracketing(h: &Sector, h2: &Sector, h3: &Sector) -> Result<(Sector, Sector, Matrix)> {
    let inner_l = horizontal_fusion_with_witness(h, h2)?;
    let inner_r = horizontal_fusion_with_witness(h2, h3)?;
    let left = horizontal_fusion_with_witness(&inner_l.sector, h3)?;
    let right = horizontal_fusion_with_witness(h, &inner_r.sector)?;
    let (d2, d3, d23) = (h2.dim(), h3.dim(), inner_r.sector.dim());
    let matrix = left.quotient.induced(&right.quotient, |i| {
        let xy = inner_l.quotient.section_index(i / d3);
        let w = sparse::from_dense(&inner_r.quotient.project_sparse(&sparse::unit((xy % d2) * d3 + i % d3)));
        kron_sparse(&sparse::unit(xy / d2), &w, d23)
    });
    Ok((left.sector, right.sector, matrix))
}
