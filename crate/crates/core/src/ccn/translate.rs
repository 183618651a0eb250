use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::bimodule::Bimodule;
use crate::ccn::{Defect, Intertwiner, Net, Sector};
use crate::error::{Error, Result};
use crate::intervals::{evaluate_defect, evaluate_embedding, CircleInterval, CirclePoint, Orientation};
use crate::linalg::Matrix;
use crate::rational::Rational;

/// A record of the algebraic view.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum ComAlgRecord {
    Net(Net),
    Defect(Defect),
    Sector(Sector),
    Intertwiner(Intertwiner),
}

/// A record of the net view, stored as interval evaluations.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum CcnRecord {
    Net(CcnNet),
    Defect(CcnDefect),
    Sector(CcnSector),
    Intertwiner(CcnIntertwiner),
}

/// A locally constant net: its value on every interval and the (identity)
/// involution relating opposite orientations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcnNet {
    pub algebra: Arc<Algebra>,
    pub involution: Matrix,
}

/// A locally constant defect, evaluated on a white, a black and a
/// genuinely bicolored probe interval, with the two inclusions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcnDefect {
    pub white: CcnNet,
    pub black: CcnNet,
    pub bicolored: Arc<Algebra>,
    pub white_embedding: AlgebraMorphism,
    pub black_embedding: AlgebraMorphism,
    pub white_probe: CircleInterval,
    pub black_probe: CircleInterval,
    pub bicolored_probe: CircleInterval,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcnSector {
    pub top: CcnDefect,
    pub bottom: CcnDefect,
    pub bimodule: Arc<Bimodule>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcnIntertwiner {
    pub source: CcnSector,
    pub target: CcnSector,
    pub matrix: Matrix,
}

fn arc(s: CirclePoint, e: CirclePoint) -> CircleInterval {
    CircleInterval::new(s, e, Orientation::Positive).expect("probe endpoints are distinct unmarked points")
}

fn probes() -> (CircleInterval, CircleInterval, CircleInterval) {
    let q = |n: i64| Rational::from_int(n);
    (
        arc(CirclePoint::White(q(-2)), CirclePoint::White(q(-1))),
        arc(CirclePoint::Black(q(1)), CirclePoint::Black(q(2))),
        arc(CirclePoint::Black(q(0)), CirclePoint::White(q(0))),
    )
}

fn net_to_ccn(n: &Net) -> CcnNet {
    CcnNet { algebra: n.algebra().clone(), involution: Matrix::identity(n.algebra().dim()) }
}

fn net_from_ccn(n: &CcnNet) -> Result<Net> {
    if !n.involution.is_identity() || n.involution.rows() != n.algebra.dim() {
        return Err(Error::InvalidArgument("only the unoriented case (identity involution) is supported".into()));
    }
    Net::new(n.algebra.clone())
}

fn defect_to_ccn(d: &Defect) -> Result<CcnDefect> {
    let (white_probe, black_probe, bicolored_probe) = probes();
    Ok(CcnDefect {
        white: net_to_ccn(d.left()),
        black: net_to_ccn(d.right()),
        bicolored: evaluate_defect(d, &bicolored_probe)?,
        white_embedding: evaluate_embedding(d, &white_probe, &bicolored_probe)?,
        black_embedding: evaluate_embedding(d, &black_probe, &bicolored_probe)?,
        white_probe,
        black_probe,
        bicolored_probe,
    })
}

/// Rebuilds `φ(a ⊗ b) = w(a)·k(b)` from the two inclusions.
fn defect_from_ccn(d: &CcnDefect) -> Result<Defect> {
    let (a, b, alg) = (&d.white.algebra, &d.black.algebra, &d.bicolored);
    for (f, src) in [(&d.white_embedding, a), (&d.black_embedding, b)] {
        if f.source() != src || f.target() != alg {
            return Err(Error::AlgebraMismatch("embedding does not match the evaluated algebras".into()));
        }
    }
    let mut cols = Vec::with_capacity(a.dim() * b.dim());
    for i in 0..a.dim() {
        let w = d.white_embedding.image_of(i);
        for j in 0..b.dim() {
            cols.push(alg.multiply(&w, &d.black_embedding.image_of(j))?);
        }
    }
    Defect::from_matrix(
        net_from_ccn(&d.white)?,
        net_from_ccn(&d.black)?,
        alg.clone(),
        Matrix::from_columns(alg.dim(), &cols),
    )
}

fn sector_to_ccn(h: &Sector) -> Result<CcnSector> {
    Ok(CcnSector { top: defect_to_ccn(h.top())?, bottom: defect_to_ccn(h.bottom())?, bimodule: h.bimodule().clone() })
}

fn sector_from_ccn(h: &CcnSector) -> Result<Sector> {
    Sector::new(defect_from_ccn(&h.top)?, defect_from_ccn(&h.bottom)?, h.bimodule.clone())
}

pub fn comalg_to_ccn(x: &ComAlgRecord) -> Result<CcnRecord> {
    Ok(match x {
        ComAlgRecord::Net(n) => CcnRecord::Net(net_to_ccn(n)),
        ComAlgRecord::Defect(d) => CcnRecord::Defect(defect_to_ccn(d)?),
        ComAlgRecord::Sector(h) => CcnRecord::Sector(sector_to_ccn(h)?),
        ComAlgRecord::Intertwiner(f) => CcnRecord::Intertwiner(CcnIntertwiner {
            source: sector_to_ccn(f.source())?,
            target: sector_to_ccn(f.target())?,
            matrix: f.matrix().clone(),
        }),
    })
}

pub fn ccn_to_comalg(x: &CcnRecord) -> Result<ComAlgRecord> {
    Ok(match x {
        CcnRecord::Net(n) => ComAlgRecord::Net(net_from_ccn(n)?),
        CcnRecord::Defect(d) => ComAlgRecord::Defect(defect_from_ccn(d)?),
        CcnRecord::Sector(h) => ComAlgRecord::Sector(sector_from_ccn(h)?),
        CcnRecord::Intertwiner(f) => ComAlgRecord::Intertwiner(Intertwiner::new(
            sector_from_ccn(&f.source)?,
            sector_from_ccn(&f.target)?,
            f.matrix.clone(),
        )?),
    })
}
