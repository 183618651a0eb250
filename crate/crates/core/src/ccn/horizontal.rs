use std::sync::Arc;

use crate::algebra::kron_sparse;
use crate::bimodule::{tensor_over, Bimodule};
use crate::ccn::{fuse_defects_with_witness, Intertwiner, Sector};
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};
use crate::linalg::{Matrix, QuotientSpace, SubspaceBuilder};

/// A horizontal fusion together with the quotient of `H ⊗ K` it lives on.
#[derive(Clone, Debug)]
pub struct HorizontalFusion {
    pub sector: Sector,
    pub quotient: QuotientSpace,
}

/// Action of the middle net `B` on `H` through its top defect, checked
/// against the action through its bottom defect.
fn middle_action(h: &Sector, net_on_right: bool) -> Result<Vec<Matrix>> {
    let (top, bottom) = if net_on_right {
        (h.top().right_embedding(), h.bottom().right_embedding())
    } else {
        (h.top().left_embedding(), h.bottom().left_embedding())
    };
    let m = h.bimodule();
    (0..top.source().dim())
        .map(|b| {
            let l = m.act_left(&top.image_of(b));
            if l != m.act_right(&bottom.image_of(b)) {
                return Err(Error::NotWellDefined(format!("middle net element {b} acts differently on the two sides")));
            }
            Ok(l)
        })
        .collect()
}

fn column(m: &Matrix, i: usize) -> SparseVec {
    m.mul_sparse(&sparse::unit(i))
}

/// `H ⊗_B K` for an `A`–`B` sector `H` (between `D` and `D′`) and a
/// `B`–`C` sector `K` (between `E` and `E′`); it is a sector between
/// `D ⊗_B E` and `D′ ⊗_B E′`.
pub fn horizontal_fusion_with_witness(h: &Sector, k: &Sector) -> Result<HorizontalFusion> {
    if h.top().right() != k.top().left() {
        return Err(Error::NetMismatch("sectors do not share a middle net".into()));
    }
    let bh = middle_action(h, true)?;
    let bk = middle_action(k, false)?;
    let b = h.top().right().algebra();
    let (dh, dk) = (h.dim(), k.dim());
    let mut rel = SubspaceBuilder::new(dh * dk);
    for &g in b.generator_indices() {
        let gk: Vec<SparseVec> = (0..dk).map(|y| column(&bk[g], y)).collect();
        for x in 0..dh {
            let gh = column(&bh[g], x);
            for (y, gk) in gk.iter().enumerate() {
                rel.insert(sparse::sub(
                    &kron_sparse(&gh, &sparse::unit(y), dk),
                    &kron_sparse(&sparse::unit(x), gk, dk),
                ));
            }
        }
    }
    let q = QuotientSpace::new(dh * dk, rel.finish())?;
    let (top, q_top) = fuse_defects_with_witness(h.top(), k.top())?;
    let (bottom, q_bottom) = fuse_defects_with_witness(h.bottom(), k.bottom())?;
    let (hm, km) = (h.bimodule(), k.bimodule());
    let act = |qd: &QuotientSpace, de: usize, f: &dyn Fn(usize, usize) -> (Matrix, Matrix)| -> Vec<Matrix> {
        (0..qd.dim())
            .map(|u| {
                let s = qd.section_index(u);
                let (x, y) = f(s / de, s % de);
                q.induced(&q, |i| kron_sparse(&column(&x, i / dk), &column(&y, i % dk), dk))
            })
            .collect()
    };
    let left = act(&q_top, k.top().algebra().dim(), &|i, j| (hm.left_action(i).clone(), km.left_action(j).clone()));
    let right =
        act(&q_bottom, k.bottom().algebra().dim(), &|i, j| (hm.right_action(i).clone(), km.right_action(j).clone()));
    let m = Bimodule::new(top.algebra().clone(), bottom.algebra().clone(), q.dim(), left, right)?;
    let sector = Sector::new(top, bottom, Arc::new(m))?;
    Ok(HorizontalFusion { sector, quotient: q })
}

pub fn horizontal_fusion(h: &Sector, k: &Sector) -> Result<Sector> {
    horizontal_fusion_with_witness(h, k).map(|f| f.sector)
}

/// `φ ⊗_B ψ` between horizontal fusions.
pub fn horizontal_fusion_intertwiners(phi: &Intertwiner, psi: &Intertwiner) -> Result<Intertwiner> {
    let src = horizontal_fusion_with_witness(phi.source(), psi.source())?;
    let tgt = horizontal_fusion_with_witness(phi.target(), psi.target())?;
    let (f, g) = (phi.matrix(), psi.matrix());
    let (dk, dk1) = (g.cols(), g.rows());
    let map = |i: usize| kron_sparse(&column(f, i / dk), &column(g, i % dk), dk1);
    for r in src.quotient.relations().sparse_rows() {
        if !tgt.quotient.relations().contains_sparse(&sparse::apply_linear(r, map)) {
            return Err(Error::NotWellDefined("horizontal fusion of intertwiners does not preserve relations".into()));
        }
    }
    let matrix = src.quotient.induced(&tgt.quotient, map);
    Intertwiner::new(src.sector, tgt.sector, matrix)
}

/// `Φ: (H ⊗_B K) ⊗_{D′⊗_B E′} (H′ ⊗_B K′) → (H ⊗_{D′} H′) ⊗_B (K ⊗_{E′} K′)`,
/// `(h ⊗ k) ⊗ (h′ ⊗ k′) ↦ (h ⊗ h′) ⊗ (k ⊗ k′)`.
pub fn interchanger(h: &Sector, k: &Sector, h2: &Sector, k2: &Sector) -> Result<Intertwiner> {
    let x = horizontal_fusion_with_witness(h, k)?;
    let y = horizontal_fusion_with_witness(h2, k2)?;
    let (l, q_l) = tensor_over(x.sector.bimodule(), y.sector.bimodule())?;
    let l = Sector::new(x.sector.top().clone(), y.sector.bottom().clone(), Arc::new(l))?;
    let (v, q_v) = tensor_over(h.bimodule(), h2.bimodule())?;
    let (w, q_w) = tensor_over(k.bimodule(), k2.bimodule())?;
    let v = Sector::new(h.top().clone(), h2.bottom().clone(), Arc::new(v))?;
    let w = Sector::new(k.top().clone(), k2.bottom().clone(), Arc::new(w))?;
    let r = horizontal_fusion_with_witness(&v, &w)?;
    let (dk, dh2, dk2, dy, dw) = (k.dim(), h2.dim(), k2.dim(), y.sector.dim(), w.dim());
    let matrix = q_l.induced(&r.quotient, |i| {
        let hk = x.quotient.section_index(i / dy);
        let hk2 = y.quotient.section_index(i % dy);
        let a = sparse::from_dense(&q_v.project_sparse(&sparse::unit((hk / dk) * dh2 + hk2 / dk2)));
        let b = sparse::from_dense(&q_w.project_sparse(&sparse::unit((hk % dk) * dk2 + hk2 % dk2)));
        kron_sparse(&a, &b, dw)
    });
    Intertwiner::new(l, r.sector, matrix)
}
