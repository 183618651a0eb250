use std::sync::Arc;

use super::*;
use crate::algebra::catalog::*;
use crate::algebra::{Algebra, AlgebraMorphism};
use crate::bimodule::{left_unitor, Bimodule};
use crate::error::Error;
use crate::linalg::Matrix;
use crate::rational::Rational;

fn arc(a: Algebra) -> Arc<Algebra> {
    Arc::new(a)
}

fn net(a: Algebra) -> Net {
    Net::new(arc(a)).unwrap()
}

fn unit_defect(d: Algebra) -> Defect {
    let k = net(ground_field());
    let d = arc(d);
    let phi = Matrix::from_columns(d.dim(), &[d.unit().to_vec()]);
    Defect::from_matrix(k.clone(), k, d, phi).unwrap()
}

fn z2_identity() -> Defect {
    identity_defect(&net(z2_group_algebra()))
}

/// A sector of the identity Z2 defect on which `g` acts by `sign` on both sides.
fn z2_character(sign: i64) -> Sector {
    let d = z2_identity();
    let a = d.algebra().clone();
    let g = Matrix::from_i64(&[&[sign]]);
    let m =
        Bimodule::checked(a.clone(), a, 1, vec![Matrix::identity(1), g.clone()], vec![Matrix::identity(1), g]).unwrap();
    Sector::new(d.clone(), d, Arc::new(m)).unwrap()
}

fn z2_swap(h: &Sector) -> Intertwiner {
    let g = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
    Intertwiner::new(h.clone(), h.clone(), g).unwrap()
}

#[test]
fn nets_require_commutative_algebras() {
    assert!(Net::new(arc(z2_group_algebra())).is_ok());
    assert!(Net::new(arc(ground_field())).is_ok());
    assert!(matches!(Net::new(arc(matrix_algebra_2())), Err(Error::NonCommutative(..))));
}

#[test]
fn identity_defects() {
    let k = identity_defect(&net(ground_field()));
    assert_eq!(k.phi().matrix(), &Matrix::identity(1));

    let z = z2_identity();
    assert_eq!(z.phi().matrix(), &Matrix::from_i64(&[&[1, 0, 0, 1], &[0, 1, 1, 0]]));
    assert_eq!(z.phi().image().dim(), z.algebra().center().dim());
}

#[test]
fn defect_construction() {
    let d = unit_defect(matrix_algebra_2());
    assert_eq!(d.algebra().dim(), 4);

    let z = net(z2_group_algebra());
    let k = net(ground_field());
    let a = z.algebra().clone();
    assert!(Defect::from_matrix(z, k.clone(), a, Matrix::identity(2)).is_ok());

    // a "unit" that lands on E11 is not central; E12 witnesses it
    let m2 = arc(matrix_algebra_2());
    let ab = arc(Algebra::tensor(k.algebra(), k.algebra()));
    let e11 = AlgebraMorphism::new(ab, m2.clone(), Matrix::from_i64(&[&[1], &[0], &[0], &[0]])).unwrap();
    assert_eq!(e11.first_noncentral(), Some((0, 1)));
    let err = Defect::new(k.clone(), k, m2, e11).unwrap_err();
    assert_eq!(err, Error::NotCentral { element: 0, witness: 1 });
}

#[test]
fn defect_fusion() {
    let d = unit_defect(matrix_algebra_2());
    assert_eq!(fuse_defects(&d, &d).unwrap().algebra().dim(), 16);

    let z = z2_identity();
    let zz = fuse_defects(&z, &z).unwrap();
    assert_eq!(zz.algebra().dim(), 2);
    assert!(zz.algebra().is_commutative());

    let other = identity_defect(&net(dual_numbers()));
    assert!(matches!(fuse_defects(&z, &other), Err(Error::NetMismatch(_))));
}

#[test]
fn fusing_with_an_identity_defect_preserves_dimension() {
    for d in [unit_defect(matrix_algebra_2()), z2_identity(), identity_defect(&net(dual_numbers()))] {
        let id = identity_defect(d.right());
        let f = fuse_defects(&d, &id).unwrap();
        assert_eq!(f.algebra().dim(), d.algebra().dim());
        let id = identity_defect(d.left());
        assert_eq!(fuse_defects(&id, &d).unwrap().algebra().dim(), d.algebra().dim());
    }
}

#[test]
fn sector_examples() {
    for d in [unit_defect(matrix_algebra_2()), z2_identity(), unit_defect(upper_triangular_2())] {
        let s = Sector::identity(&d);
        assert!(s.bimodule().validate().is_empty());
        let z = Bimodule::zero(d.algebra(), d.algebra());
        assert!(Sector::new(d.clone(), d, Arc::new(z)).is_ok());
    }
    assert_eq!(Sector::identity(&identity_defect(&net(ground_field()))).dim(), 1);

    // any M2-M2 bimodule is a sector over K, K
    let d = unit_defect(matrix_algebra_2());
    let free = Bimodule::free(d.algebra(), d.algebra());
    assert!(Sector::new(d.clone(), d, Arc::new(free)).is_ok());

    // g acting by +1 on the left but -1 on the right breaks the sector condition
    let z = z2_identity();
    let a = z.algebra().clone();
    let (p, n) = (Matrix::from_i64(&[&[1]]), Matrix::from_i64(&[&[-1]]));
    let m = Bimodule::checked(a.clone(), a, 1, vec![Matrix::identity(1), p], vec![Matrix::identity(1), n]).unwrap();
    assert!(matches!(Sector::new(z.clone(), z, Arc::new(m)), Err(Error::ActionMismatch { .. })));
}

#[test]
fn vertical_fusion_examples() {
    let z = Sector::identity(&z2_identity());
    assert_eq!(vertical_fusion(&z, &z).unwrap().dim(), 2);

    let d = unit_defect(matrix_algebra_2());
    let h = Sector::identity(&d);
    let v = vertical_fusion(&h, &h).unwrap();
    assert_eq!(v.dim(), 4);

    let lu = left_unitor(h.bimodule()).unwrap();
    assert!(lu.is_invertible());
    assert_eq!(lu.source().dim(), h.dim());

    assert!(matches!(vertical_fusion(&z, &h), Err(Error::DefectMismatch(_))));
}

#[test]
fn horizontal_fusion_examples() {
    let z = Sector::identity(&z2_identity());
    let f = horizontal_fusion(&z, &z).unwrap();
    assert_eq!(f.dim(), 2);
    assert_eq!(f.top().algebra().dim(), 2);

    let (plus, minus) = (z2_character(1), z2_character(-1));
    assert_eq!(horizontal_fusion(&plus, &plus).unwrap().dim(), 1);
    assert_eq!(horizontal_fusion(&minus, &minus).unwrap().dim(), 1);
    assert_eq!(horizontal_fusion(&plus, &minus).unwrap().dim(), 0);

    // over K the dimensions multiply
    let d = unit_defect(upper_triangular_2());
    let e = unit_defect(dual_numbers());
    let (h, k) = (Sector::identity(&d), Sector::identity(&e));
    let f = horizontal_fusion(&h, &k).unwrap();
    assert_eq!(f.dim(), 6);
    assert!(f.bimodule().validate().is_empty());
}

#[test]
fn horizontal_unit_preserves_dimension() {
    let b = net(z2_group_algebra());
    let unit = Sector::identity(&identity_defect(&b));
    for h in [z2_character(1), z2_character(-1), Sector::identity(&z2_identity())] {
        assert_eq!(horizontal_fusion(&unit, &h).unwrap().dim(), h.dim());
        assert_eq!(horizontal_fusion(&h, &unit).unwrap().dim(), h.dim());
    }
}

#[test]
fn horizontal_fusion_of_intertwiners() {
    let z = Sector::identity(&z2_identity());
    let id = Intertwiner::identity(&z);
    let f = horizontal_fusion_intertwiners(&id, &id).unwrap();
    assert!(f.matrix().is_identity());

    let s = z2_swap(&z);
    let two = Intertwiner::new(z.clone(), z.clone(), Matrix::identity(2).scale(&Rational::from_int(2))).unwrap();
    let lhs = horizontal_fusion_intertwiners(&Intertwiner::compose(&s, &two).unwrap(), &s).unwrap();
    let rhs = horizontal_fusion_intertwiners(&s, &s).unwrap();
    assert_eq!(lhs.matrix(), &rhs.matrix().scale(&Rational::from_int(2)));

    // interchange with transversal composition
    let comp = |a: &Intertwiner, b: &Intertwiner| Intertwiner::compose(a, b).unwrap();
    let a = horizontal_fusion_intertwiners(&comp(&s, &two), &comp(&two, &s)).unwrap();
    let b =
        comp(&horizontal_fusion_intertwiners(&s, &two).unwrap(), &horizontal_fusion_intertwiners(&two, &s).unwrap());
    assert_eq!(a.matrix(), b.matrix());
}

#[test]
fn interchanger_over_the_ground_field() {
    let d = unit_defect(upper_triangular_2());
    let e = unit_defect(dual_numbers());
    let (h, k) = (Sector::identity(&d), Sector::identity(&e));
    let phi = interchanger(&h, &k, &h, &k).unwrap();
    assert!(phi.morphism().is_invertible());
    assert_eq!(phi.source().dim(), 6);
}

#[test]
fn interchanger_is_invertible_and_natural() {
    let z = Sector::identity(&z2_identity());
    let (plus, minus) = (z2_character(1), z2_character(-1));
    for (h, k, h2, k2) in
        [(&z, &z, &z, &z), (&plus, &plus, &z, &z), (&z, &minus, &minus, &z), (&minus, &minus, &plus, &plus)]
    {
        let phi = interchanger(h, k, h2, k2).unwrap();
        assert_eq!(phi.source().dim(), phi.target().dim());
        assert!(phi.morphism().is_invertible(), "dim {}", phi.source().dim());
    }

    let s = z2_swap(&z);
    let id = Intertwiner::identity(&z);
    let phi = interchanger(&z, &z, &z, &z).unwrap();
    let hf = horizontal_fusion_intertwiners;
    let vf = vertical_fusion_intertwiners;
    let left = vf(&hf(&s, &id).unwrap(), &hf(&id, &s).unwrap()).unwrap();
    let right = hf(&vf(&s, &id).unwrap(), &vf(&id, &s).unwrap()).unwrap();
    let a = Intertwiner::compose(&phi, &left).unwrap();
    let b = Intertwiner::compose(&right, &phi).unwrap();
    assert_eq!(a.matrix(), b.matrix());
}

fn round_trip(x: ComAlgRecord) {
    let y = comalg_to_ccn(&x).unwrap();
    let back = ccn_to_comalg(&y).unwrap();
    assert_eq!(back, x);
    assert_eq!(comalg_to_ccn(&back).unwrap(), y);
}

#[test]
fn translation_round_trips() {
    round_trip(ComAlgRecord::Net(net(z2_group_algebra())));
    round_trip(ComAlgRecord::Defect(unit_defect(matrix_algebra_2())));
    round_trip(ComAlgRecord::Defect(z2_identity()));
    let z = Sector::identity(&z2_identity());
    round_trip(ComAlgRecord::Sector(horizontal_fusion(&z, &z).unwrap()));
    round_trip(ComAlgRecord::Intertwiner(z2_swap(&z)));
}

#[test]
fn translated_defects_carry_interval_data() {
    let CcnRecord::Defect(d) = comalg_to_ccn(&ComAlgRecord::Defect(z2_identity())).unwrap() else {
        panic!("expected a defect record");
    };
    assert!(d.bicolored_probe.contains(&d.white_probe));
    assert!(d.bicolored_probe.contains(&d.black_probe));
    assert_eq!(d.white_embedding.matrix(), &Matrix::identity(2));
    assert!(d.white.involution.is_identity());

    let mut bad = d.clone();
    bad.white.involution = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
    assert!(ccn_to_comalg(&CcnRecord::Defect(bad)).is_err());
}
