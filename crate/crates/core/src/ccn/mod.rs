//! Locally constant nets, defects, sectors and intertwiners, with their
//! fusions and the translation between the net-level and algebra-level views.

mod compositor;
mod defect;
mod horizontal;
mod sector;
mod translate;

pub use compositor::{
    collapse_twisted, compositor, defect_associator, fuse_algebra_maps, horizontal_rebracketing, twisted_sector,
};
pub use defect::{fuse_defects, fuse_defects_with_witness, identity_defect, Defect, Net};
pub use horizontal::{
    horizontal_fusion, horizontal_fusion_intertwiners, horizontal_fusion_with_witness, interchanger, HorizontalFusion,
};
pub use sector::{vertical_fusion, vertical_fusion_intertwiners, Intertwiner, Sector};
pub use translate::{
    ccn_to_comalg, comalg_to_ccn, CcnDefect, CcnIntertwiner, CcnNet, CcnRecord, CcnSector, ComAlgRecord,
};

#[cfg(test)]
mod tests;
