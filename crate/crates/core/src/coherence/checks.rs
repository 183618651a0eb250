use std::sync::Arc;

use crate::algebra::AlgebraMorphism;
use crate::bimodule::{
    associator, associator_inverse, left_unitor, left_unitor_inverse, right_unitor, right_unitor_inverse,
    tensor_morphisms_over, tensor_over, Bimodule, BimoduleMorphism,
};
use crate::ccn::{
    collapse_twisted, compositor, defect_associator, fuse_algebra_maps, fuse_defects, horizontal_fusion,
    horizontal_fusion_intertwiners, horizontal_rebracketing, interchanger, twisted_sector, vertical_fusion,
    vertical_fusion_intertwiners, Defect, Intertwiner, Sector,
};
use crate::coherence::{CaseKind, InstanceGenerator};
use crate::error::{Error, Result};
use crate::linalg::sparse;
use crate::linalg::Matrix;

/// The two composites of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub lhs: Matrix,
    pub rhs: Matrix,
}

impl Diagram {
    pub fn new(lhs: &Matrix, rhs: &Matrix) -> Self {
        Diagram { lhs: lhs.clone(), rhs: rhs.clone() }
    }

    pub fn commutes(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn first_difference(&self) -> Option<(usize, usize)> {
        self.lhs.first_difference(&self.rhs)
    }
}

fn compose(g: &BimoduleMorphism, f: &BimoduleMorphism) -> Result<BimoduleMorphism> {
    BimoduleMorphism::compose(g, f)
}

fn intertwiner(m: BimoduleMorphism) -> Result<BimoduleMorphism> {
    match m.intertwiner_violation() {
        None => Ok(m),
        Some(v) => Err(Error::InvalidMorphism(format!("structure map is not an intertwiner: {v:?}"))),
    }
}

fn inverse_pair(f: &BimoduleMorphism, g: &BimoduleMorphism) -> Result<[Diagram; 2]> {
    let (gf, fg) = (compose(g, f)?, compose(f, g)?);
    Ok([
        Diagram::new(gf.matrix(), &Matrix::identity(f.source().dim())),
        Diagram::new(fg.matrix(), &Matrix::identity(f.target().dim())),
    ])
}

/// `a ∘ a` against `(id ⊗ a) ∘ a ∘ (a ⊗ id)` on `((H ⊗ H′) ⊗ H″) ⊗ H‴`.
pub fn pentagon_check(
    h: &Arc<Bimodule>,
    h2: &Arc<Bimodule>,
    h3: &Arc<Bimodule>,
    h4: &Arc<Bimodule>,
) -> Result<Diagram> {
    let h12 = tensor_over(h, h2)?.0;
    let h23 = tensor_over(h2, h3)?.0;
    let h34 = tensor_over(h3, h4)?.0;
    let lhs = compose(&associator(h, h2, &h34)?, &associator(&h12, h3, h4)?)?;
    let a_left = tensor_morphisms_over(&associator(h, h2, h3)?, &BimoduleMorphism::identity(h4))?;
    let a_right = tensor_morphisms_over(&BimoduleMorphism::identity(h), &associator(h2, h3, h4)?)?;
    let rhs = compose(&a_right, &compose(&associator(h, &h23, h4)?, &a_left)?)?;
    Ok(Diagram::new(lhs.matrix(), rhs.matrix()))
}

/// `(id ⊗ l) ∘ a` against `r ⊗ id` on `(H ⊗ D′) ⊗ H′`.
pub fn triangle_check(h: &Arc<Bimodule>, h2: &Arc<Bimodule>) -> Result<Diagram> {
    let reg = Bimodule::regular(h.right_alg());
    let lhs = compose(
        &tensor_morphisms_over(&BimoduleMorphism::identity(h), &left_unitor_inverse(h2)?)?,
        &associator(h, &reg, h2)?,
    )?;
    let rhs = tensor_morphisms_over(&right_unitor_inverse(h)?, &BimoduleMorphism::identity(h2))?;
    Ok(Diagram::new(lhs.matrix(), rhs.matrix()))
}

/// Associator and unitors of `M ⊗ N ⊗ P` are mutually inverse intertwiners
/// and natural in the endomorphisms `f`, `g`, `k`.
pub fn unitors_check(
    (m, n, p): (&Arc<Bimodule>, &Arc<Bimodule>, &Arc<Bimodule>),
    (f, g, k): (&BimoduleMorphism, &BimoduleMorphism, &BimoduleMorphism),
) -> Result<Vec<Diagram>> {
    let a = intertwiner(associator(m, n, p)?)?;
    let ai = intertwiner(associator_inverse(m, n, p)?)?;
    let l = intertwiner(left_unitor(m)?)?;
    let li = intertwiner(left_unitor_inverse(m)?)?;
    let r = intertwiner(right_unitor(m)?)?;
    let ri = intertwiner(right_unitor_inverse(m)?)?;
    let mut out = Vec::new();
    for (x, y) in [(&a, &ai), (&l, &li), (&r, &ri)] {
        out.extend(inverse_pair(x, y)?);
    }
    let fgk = tensor_morphisms_over(&tensor_morphisms_over(f, g)?, k)?;
    let f_gk = tensor_morphisms_over(f, &tensor_morphisms_over(g, k)?)?;
    out.push(Diagram::new(compose(&a, &fgk)?.matrix(), compose(&f_gk, &a)?.matrix()));
    let id_d = BimoduleMorphism::identity(&Arc::new(Bimodule::regular(m.left_alg())));
    let id_e = BimoduleMorphism::identity(&Arc::new(Bimodule::regular(m.right_alg())));
    out.push(Diagram::new(compose(&l, f)?.matrix(), compose(&tensor_morphisms_over(&id_d, f)?, &l)?.matrix()));
    out.push(Diagram::new(compose(&r, f)?.matrix(), compose(&tensor_morphisms_over(f, &id_e)?, &r)?.matrix()));
    Ok(out)
}

/// `H ⊗_{D′} D′ → H` as an intertwiner of sectors.
fn sector_right_unitor(h: &Sector) -> Result<Intertwiner> {
    let source = vertical_fusion(h, &Sector::identity(h.bottom()))?;
    Intertwiner::new(source, h.clone(), right_unitor_inverse(h.bimodule())?.matrix().clone())
}

/// `(X ⊗ Y) ⊗ Z → X ⊗ (Y ⊗ Z)` as an intertwiner of sectors.
fn sector_associator(x: &Sector, y: &Sector, z: &Sector) -> Result<Intertwiner> {
    let source = vertical_fusion(&vertical_fusion(x, y)?, z)?;
    let target = vertical_fusion(x, &vertical_fusion(y, z)?)?;
    Intertwiner::new(source, target, associator(x.bimodule(), y.bimodule(), z.bimodule())?.matrix().clone())
}

fn then(g: &Intertwiner, f: &Intertwiner) -> Result<Intertwiner> {
    Intertwiner::compose(g, f)
}

/// `(r ⊠ r) ∘ Φ` against `r` on `(H ⊠ K) ⊗ (D′ ⊠ E′)`.
pub fn square_check(h: &Sector, k: &Sector) -> Result<Diagram> {
    let (unit_h, unit_k) = (Sector::identity(h.bottom()), Sector::identity(k.bottom()));
    let phi = interchanger(h, k, &unit_h, &unit_k)?;
    let lhs = then(&horizontal_fusion_intertwiners(&sector_right_unitor(h)?, &sector_right_unitor(k)?)?, &phi)?;
    let rhs = sector_right_unitor(&horizontal_fusion(h, k)?)?;
    if lhs.source() != rhs.source() {
        return Err(Error::NotWellDefined("fused unit sector differs from the unit of the fused defect".into()));
    }
    Ok(Diagram::new(lhs.matrix(), rhs.matrix()))
}

/// `(a ⊠ a) ∘ Φ ∘ (Φ ⊗ id)` against `Φ ∘ (id ⊗ Φ) ∘ a` on
/// `((H ⊠ K) ⊗ (H′ ⊠ K′)) ⊗ (H″ ⊠ K″)`.
pub fn hexagon_check(hs: [&Sector; 3], ks: [&Sector; 3]) -> Result<Diagram> {
    let ([h, h2, h3], [k, k2, k3]) = (hs, ks);
    let x: Vec<Sector> =
        [(h, k), (h2, k2), (h3, k3)].into_iter().map(|(a, b)| horizontal_fusion(a, b)).collect::<Result<_>>()?;
    let (hh, kk) = (vertical_fusion(h, h2)?, vertical_fusion(k, k2)?);
    let (hh2, kk2) = (vertical_fusion(h2, h3)?, vertical_fusion(k2, k3)?);

    let step1 = vertical_fusion_intertwiners(&interchanger(h, k, h2, k2)?, &Intertwiner::identity(&x[2]))?;
    let step2 = interchanger(&hh, &kk, h3, k3)?;
    let step3 = horizontal_fusion_intertwiners(&sector_associator(h, h2, h3)?, &sector_associator(k, k2, k3)?)?;
    let lhs = then(&step3, &then(&step2, &step1)?)?;

    let a = sector_associator(&x[0], &x[1], &x[2])?;
    let s2 = vertical_fusion_intertwiners(&Intertwiner::identity(&x[0]), &interchanger(h2, k2, h3, k3)?)?;
    let s3 = interchanger(h, k, &hh2, &kk2)?;
    let rhs = then(&s3, &then(&s2, &a)?)?;
    Ok(Diagram::new(lhs.matrix(), rhs.matrix()))
}

/// The pentagon of defect associators, compared as algebra isomorphisms
/// `((D ⊛ E) ⊛ F) ⊛ G → D ⊛ (E ⊛ (F ⊛ G))`. The pentagonator is then
/// assembled from the compositor sectors and must be an invertible
/// intertwiner between the two composites.
pub fn pentagonator_check(d: &Defect, e: &Defect, f: &Defect, g: &Defect) -> Result<Diagram> {
    let (de, ef, fg) = (fuse_defects(d, e)?, fuse_defects(e, f)?, fuse_defects(f, g)?);
    let (def_l, def_r) = (fuse_defects(&de, f)?, fuse_defects(d, &ef)?);
    let (efg_l, efg_r) = (fuse_defects(&ef, g)?, fuse_defects(e, &fg)?);

    let a1 = defect_associator(d, e, f)?;
    let a2 = defect_associator(d, &ef, g)?;
    let a3 = defect_associator(e, f, g)?;
    let a4 = defect_associator(&de, f, g)?;
    let a5 = defect_associator(d, e, &fg)?;
    let id = |x: &Defect| Matrix::identity(x.algebra().dim());
    let lift1 = fuse_algebra_maps((&def_l, &def_r), a1.matrix(), (g, g), &id(g))?;
    let lift3 = fuse_algebra_maps((d, d), &id(d), (&efg_l, &efg_r), a3.matrix())?;
    let a21 = AlgebraMorphism::compose(&a2, &lift1)?;
    let gamma1 = AlgebraMorphism::compose(&lift3, &a21)?;
    let gamma2 = AlgebraMorphism::compose(&a5, &a4)?;
    let diagram = Diagram::new(gamma1.matrix(), gamma2.matrix());
    if !diagram.commutes() {
        return Ok(diagram);
    }

    let x1 = horizontal_fusion(&compositor(d, e, f)?, &Sector::identity(g))?;
    let y1 = twisted_sector(&lift1, x1.top(), x1.bottom())?;
    let s2 = twisted_sector(&a2, y1.bottom(), &fuse_defects(d, &efg_l)?)?;
    let x3 = horizontal_fusion(&Sector::identity(d), &compositor(e, f, g)?)?;
    let y3 = twisted_sector(&lift3, x3.top(), x3.bottom())?;
    let s21 = twisted_sector(&a21, y1.top(), s2.bottom())?;
    let target = twisted_sector(&gamma1, y1.top(), y3.bottom())?;

    let retwist = vertical_fusion_intertwiners(
        &vertical_fusion_intertwiners(
            &Intertwiner::new(x1.clone(), y1.clone(), Matrix::identity(x1.dim()))?,
            &Intertwiner::identity(&s2),
        )?,
        &Intertwiner::new(x3.clone(), y3.clone(), Matrix::identity(x3.dim()))?,
    )?;
    let m12 = vertical_fusion_intertwiners(&collapse_twisted(&y1, &s2, &a2, &s21)?, &Intertwiner::identity(&y3))?;
    let g1 = then(&collapse_twisted(&s21, &y3, &lift3, &target)?, &then(&m12, &retwist)?)?;

    let (s4, s5) = (compositor(&de, f, g)?, compositor(d, e, &fg)?);
    let g2 = collapse_twisted(&s4, &s5, &a5, &target)?;
    let pi = then(&g2.inverse()?, &g1)?;
    pi.inverse()?;
    Ok(diagram)
}

/// The modification `a_{D′,E′,F′} ∘ (H ⊠ H′ ⊠ H″)_L ⇒ (H ⊠ H′ ⊠ H″)_R ∘ a_{D,E,F}`
/// and its partner are mutually inverse and natural in endomorphisms of the
/// three sectors.
pub fn associator_modification_check(hs: [&Sector; 3], fs: [&Intertwiner; 3]) -> Result<Vec<Diagram>> {
    let [h, h2, h3] = hs;
    let [f, f2, f3] = fs;
    let (hl, hr, rebracket) = horizontal_rebracketing(h, h2, h3)?;
    let s_top = compositor(h.top(), h2.top(), h3.top())?;
    let s_bot = compositor(h.bottom(), h2.bottom(), h3.bottom())?;
    let source = vertical_fusion(&hl, &s_bot)?;
    let target = vertical_fusion(&s_top, &hr)?;
    let (_, q1) = tensor_over(hl.bimodule(), s_bot.bimodule())?;
    let (_, q2) = tensor_over(s_top.bimodule(), hr.bimodule())?;
    let (dq, dr) = (s_bot.dim(), hr.dim());
    let one_top = sparse::from_dense(s_top.bimodule().right_alg().unit());
    let one_bot = sparse::from_dense(s_bot.bimodule().right_alg().unit());
    let hrm = hr.bimodule();
    let forward = q1.induced(&q2, |i| {
        let w = hrm.right_action(i % dq).mul_vec(&rebracket.column(i / dq));
        crate::algebra::kron_sparse(&one_top, &sparse::from_dense(&w), dr)
    });
    let back_rebracket = rebracket.inverse()?;
    let backward = q2.induced(&q1, |i| {
        let w = back_rebracket.mul_vec(&hrm.left_action(i / dr).column(i % dr));
        crate::algebra::kron_sparse(&sparse::from_dense(&w), &one_bot, dq)
    });
    let a = Intertwiner::new(source.clone(), target.clone(), forward)?;
    let ai = Intertwiner::new(target, source, backward)?;
    let mut out = inverse_pair(a.morphism(), ai.morphism())?.to_vec();

    let fl = horizontal_fusion_intertwiners(&horizontal_fusion_intertwiners(f, f2)?, f3)?;
    let fr = horizontal_fusion_intertwiners(f, &horizontal_fusion_intertwiners(f2, f3)?)?;
    let lhs = then(&a, &vertical_fusion_intertwiners(&fl, &Intertwiner::identity(&s_bot))?)?;
    let rhs = then(&vertical_fusion_intertwiners(&Intertwiner::identity(&s_top), &fr)?, &a)?;
    out.push(Diagram::new(lhs.matrix(), rhs.matrix()));
    Ok(out)
}

pub(crate) fn run(kind: CaseKind, gen: &mut InstanceGenerator) -> Result<Vec<Diagram>> {
    match kind {
        CaseKind::Pentagon => {
            let c = gen.bimodule_chain(4)?;
            Ok(vec![pentagon_check(&c[0], &c[1], &c[2], &c[3])?])
        }
        CaseKind::Triangle => {
            let c = gen.bimodule_chain(2)?;
            Ok(vec![triangle_check(&c[0], &c[1])?])
        }
        CaseKind::Unitors => {
            let c = gen.bimodule_chain(3)?;
            let (f, g, k) = (gen.endomorphism(&c[0]), gen.endomorphism(&c[1]), gen.endomorphism(&c[2]));
            unitors_check((&c[0], &c[1], &c[2]), (&f, &g, &k))
        }
        CaseKind::InterchangerSquare => {
            let nets = gen.nets(3);
            let g = gen.sector_grid(&nets, 1)?;
            Ok(vec![square_check(&g[0][0], &g[1][0])?])
        }
        CaseKind::InterchangerHexagon => {
            let nets = gen.nets(3);
            let g = gen.sector_grid(&nets, 3)?;
            let (h, k) = (&g[0], &g[1]);
            Ok(vec![hexagon_check([&h[0], &h[1], &h[2]], [&k[0], &k[1], &k[2]])?])
        }
        CaseKind::Pentagonator => {
            let cap = gen.max_dim();
            let nets = gen.nets(5);
            let d = gen.fusable_defects(&nets, cap)?;
            Ok(vec![pentagonator_check(&d[0], &d[1], &d[2], &d[3])?])
        }
        CaseKind::AssociatorModification => {
            let nets = gen.nets(4);
            let hs: Vec<Sector> = gen.sector_grid(&nets, 1)?.into_iter().map(|mut c| c.remove(0)).collect();
            let fs: Vec<Intertwiner> = hs.iter().map(|h| gen.sector_endomorphism(h)).collect::<Result<_>>()?;
            associator_modification_check([&hs[0], &hs[1], &hs[2]], [&fs[0], &fs[1], &fs[2]])
        }
    }
}
