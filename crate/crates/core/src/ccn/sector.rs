use std::sync::Arc;

use crate::bimodule::{tensor_morphisms_over, tensor_over, Bimodule, BimoduleMorphism};
use crate::ccn::Defect;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A `D`–`E` bimodule on which the two induced `A ⊗ B` actions agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sector {
    top: Defect,
    bottom: Defect,
    bimodule: Arc<Bimodule>,
}

impl Sector {
    pub fn new(top: Defect, bottom: Defect, bimodule: Arc<Bimodule>) -> Result<Sector> {
        if top.left() != bottom.left() || top.right() != bottom.right() {
            return Err(Error::NetMismatch("top and bottom defects connect different nets".into()));
        }
        if bimodule.left_alg() != top.algebra() || bimodule.right_alg() != bottom.algebra() {
            return Err(Error::AlgebraMismatch(format!(
                "bimodule is over {}-{}, defects are {} and {}",
                bimodule.left_alg().name(),
                bimodule.right_alg().name(),
                top.algebra().name(),
                bottom.algebra().name()
            )));
        }
        if let Some(v) = bimodule.validate().first() {
            return Err(Error::InvalidBimodule(v.to_string()));
        }
        let (da, db) = (top.left().algebra().dim(), top.right().algebra().dim());
        for a in 0..da {
            for b in 0..db {
                let l = bimodule.act_left(&top.phi_basis(a, b));
                let r = bimodule.act_right(&bottom.phi_basis(a, b));
                if l != r {
                    return Err(Error::ActionMismatch { left: a, right: b });
                }
            }
        }
        Ok(Sector { top, bottom, bimodule })
    }

    /// The regular bimodule of a defect's algebra.
    pub fn identity(d: &Defect) -> Sector {
        let reg = Arc::new(Bimodule::regular(d.algebra()));
        Sector::new(d.clone(), d.clone(), reg).expect("central actions agree on the regular bimodule")
    }

    pub fn top(&self) -> &Defect {
        &self.top
    }

    pub fn bottom(&self) -> &Defect {
        &self.bottom
    }

    pub fn bimodule(&self) -> &Arc<Bimodule> {
        &self.bimodule
    }

    pub fn dim(&self) -> usize {
        self.bimodule.dim()
    }
}

/// A bimodule map between sectors over the same pair of defects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwiner {
    source: Sector,
    target: Sector,
    morphism: BimoduleMorphism,
}

impl Intertwiner {
    pub fn new(source: Sector, target: Sector, matrix: Matrix) -> Result<Intertwiner> {
        if source.top != target.top || source.bottom != target.bottom {
            return Err(Error::DefectMismatch("intertwiners connect sectors over the same defects".into()));
        }
        let morphism = BimoduleMorphism::checked(source.bimodule.clone(), target.bimodule.clone(), matrix)?;
        Ok(Intertwiner { source, target, morphism })
    }

    pub fn identity(h: &Sector) -> Intertwiner {
        Intertwiner { source: h.clone(), target: h.clone(), morphism: BimoduleMorphism::identity(&h.bimodule) }
    }

    pub fn source(&self) -> &Sector {
        &self.source
    }

    pub fn target(&self) -> &Sector {
        &self.target
    }

    pub fn morphism(&self) -> &BimoduleMorphism {
        &self.morphism
    }

    pub fn matrix(&self) -> &Matrix {
        self.morphism.matrix()
    }

    /// Transversal fusion `ψ ∘ φ`.
    pub fn compose(psi: &Intertwiner, phi: &Intertwiner) -> Result<Intertwiner> {
        if phi.target != psi.source {
            return Err(Error::InvalidMorphism("cannot compose: target and source sectors differ".into()));
        }
        let morphism = BimoduleMorphism::compose(&psi.morphism, &phi.morphism)?;
        Ok(Intertwiner { source: phi.source.clone(), target: psi.target.clone(), morphism })
    }

    pub fn inverse(&self) -> Result<Intertwiner> {
        Ok(Intertwiner { source: self.target.clone(), target: self.source.clone(), morphism: self.morphism.inverse()? })
    }
}

/// `H ⊗_E K` for a `D`–`E` sector `H` and an `E`–`F` sector `K`.
pub fn vertical_fusion(h: &Sector, k: &Sector) -> Result<Sector> {
    if h.bottom != k.top {
        return Err(Error::DefectMismatch("bottom defect of the first sector differs from top of the second".into()));
    }
    let (m, _) = tensor_over(&h.bimodule, &k.bimodule)?;
    Sector::new(h.top.clone(), k.bottom.clone(), Arc::new(m))
}

/// `φ ⊗_E ψ` between vertical fusions.
pub fn vertical_fusion_intertwiners(phi: &Intertwiner, psi: &Intertwiner) -> Result<Intertwiner> {
    let source = vertical_fusion(&phi.source, &psi.source)?;
    let target = vertical_fusion(&phi.target, &psi.target)?;
    let m = tensor_morphisms_over(&phi.morphism, &psi.morphism)?;
    Intertwiner::new(source, target, m.matrix().clone())
}
