use std::sync::Arc;

use super::*;
use crate::algebra::catalog::*;
use crate::algebra::Algebra;
use crate::linalg::{Matrix, Subspace};
use crate::rational::Rational;

fn arc(a: Algebra) -> Arc<Algebra> {
    Arc::new(a)
}

fn k_module(n: usize) -> Arc<Bimodule> {
    let k = arc(ground_field());
    Arc::new(Bimodule::new(k.clone(), k, n, vec![Matrix::identity(n)], vec![Matrix::identity(n)]).unwrap())
}

/// `M2` acting on column vectors `Q^2` on the left, `K` on the right.
fn column_module() -> Arc<Bimodule> {
    let m2 = arc(matrix_algebra_2());
    let k = arc(ground_field());
    let units = (0..4)
        .map(|pq| {
            let mut e = Matrix::zeros(2, 2);
            e.set(pq / 2, pq % 2, Rational::one());
            e
        })
        .collect();
    Arc::new(Bimodule::checked(m2, k, 2, units, vec![Matrix::identity(2)]).unwrap())
}

#[test]
fn regular_bimodules_validate() {
    for a in all() {
        let r = Bimodule::regular(&a);
        assert!(r.validate().is_empty(), "{}", a.name());
        assert_eq!(r.dim(), a.dim());
    }
    let k = Bimodule::regular(&arc(ground_field()));
    assert_eq!(k.dim(), 1);
    assert!(k.left_action(0).is_identity() && k.right_action(0).is_identity());
    let z = Bimodule::regular(&arc(z2_group_algebra()));
    assert_eq!(z.left_action(1), &Matrix::from_i64(&[&[0, 1], &[1, 0]]));
}

#[test]
fn validate_reports_constructed_failures() {
    let k = arc(ground_field());
    let bad_unit =
        Bimodule::new(k.clone(), k.clone(), 1, vec![Matrix::from_i64(&[&[2]])], vec![Matrix::identity(1)]).unwrap();
    assert!(bad_unit.validate().contains(&BimoduleViolation::LeftUnit));

    let z2 = arc(z2_group_algebra());
    let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
    let diag = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
    let m = Bimodule::new(z2.clone(), z2.clone(), 2, vec![Matrix::identity(2), swap], vec![Matrix::identity(2), diag])
        .unwrap();
    assert_eq!(m.validate(), vec![BimoduleViolation::Commutation { left: 1, right: 1 }]);
    assert!(Bimodule::checked(z2.clone(), z2, 2, vec![Matrix::identity(2)], vec![]).is_err());
}

#[test]
fn tensor_over_examples() {
    let z2 = arc(z2_group_algebra());
    let r = Bimodule::regular(&z2);
    let (t, q) = tensor_over(&r, &r).unwrap();
    assert_eq!(t.dim(), 2);
    assert_eq!(q.relations().dim(), 2);
    assert!(t.validate().is_empty());

    let (a, b) = (k_module(2), k_module(3));
    let (t, q) = tensor_over(&a, &b).unwrap();
    assert_eq!(t.dim(), 6);
    assert_eq!(q.relations().dim(), 0);

    let col = column_module();
    let err = tensor_over(&col, &col);
    assert!(matches!(err, Err(crate::Error::AlgebraMismatch(_))));
}

#[test]
fn left_identity_iso() {
    let col = column_module();
    let l = left_unitor(&col).unwrap();
    let li = left_unitor_inverse(&col).unwrap();
    assert_eq!(l.target().dim(), 2);
    assert!(l.is_intertwiner() && li.is_intertwiner());
    assert!(BimoduleMorphism::compose(&li, &l).unwrap().matrix().is_identity());
    assert!(BimoduleMorphism::compose(&l, &li).unwrap().matrix().is_identity());
    assert_eq!(l.inverse().unwrap().matrix(), li.matrix());
}

#[test]
fn unitors_on_small_cases() {
    let k = Arc::new(Bimodule::regular(&arc(ground_field())));
    assert!(left_unitor(&k).unwrap().matrix().is_identity());
    assert!(right_unitor(&k).unwrap().matrix().is_identity());
    let m2 = Arc::new(Bimodule::regular(&arc(matrix_algebra_2())));
    for u in [left_unitor(&m2).unwrap(), right_unitor(&m2).unwrap()] {
        assert!(u.is_invertible());
        assert!(u.is_intertwiner());
        assert!(u.inverse().unwrap().is_intertwiner());
    }
    let r = right_unitor(&m2).unwrap();
    let ri = right_unitor_inverse(&m2).unwrap();
    assert_eq!(r.inverse().unwrap().matrix(), ri.matrix());
}

#[test]
fn associator_examples() {
    let (a, b, c) = (k_module(2), k_module(1), k_module(3));
    let assoc = associator(&a, &b, &c).unwrap();
    assert!(assoc.matrix().is_identity());
    let assoc = associator(&a, &c, &a).unwrap();
    assert!(assoc.matrix().is_identity());

    let r = Bimodule::regular(&arc(z2_group_algebra()));
    let assoc = associator(&r, &r, &r).unwrap();
    assert_eq!(assoc.matrix().rows(), 2);
    assert!(assoc.is_intertwiner());
    let inv = associator_inverse(&r, &r, &r).unwrap();
    assert!(BimoduleMorphism::compose(&inv, &assoc).unwrap().matrix().is_identity());
    assert!(BimoduleMorphism::compose(&assoc, &inv).unwrap().matrix().is_identity());
}

#[test]
fn intertwiner_examples() {
    let m2 = arc(matrix_algebra_2());
    let reg = Arc::new(Bimodule::regular(&m2));
    assert!(BimoduleMorphism::identity(&reg).is_intertwiner());
    let central =
        BimoduleMorphism::new(reg.clone(), reg.clone(), reg.act_left(&[3.into(), 0.into(), 0.into(), 3.into()]))
            .unwrap();
    assert!(central.is_intertwiner());
    let e11 = BimoduleMorphism::new(reg.clone(), reg.clone(), reg.left_action(0).clone()).unwrap();
    // left and right multiplications always commute, so the witness is on the left
    assert_eq!(e11.intertwiner_violation(), Some(IntertwinerViolation::Left(1)));
    assert!(reg.left_action(0) * reg.left_action(1) != reg.left_action(1) * reg.left_action(0));
    assert!(reg.left_action(0) * reg.right_action(1) == reg.right_action(1) * reg.left_action(0));
}

#[test]
fn morphism_functoriality() {
    let z2 = arc(z2_group_algebra());
    let r = Arc::new(Bimodule::regular(&z2));
    let id = BimoduleMorphism::identity(&r);
    let t = tensor_morphisms_over(&id, &id).unwrap();
    assert!(t.matrix().is_identity());
    let zero = BimoduleMorphism::zero(&r, &r).unwrap();
    assert!(tensor_morphisms_over(&zero, &id).unwrap().matrix().is_zero());

    // central elements act by intertwiners
    let f = BimoduleMorphism::new(r.clone(), r.clone(), r.act_left(&[1.into(), 2.into()])).unwrap();
    let g = BimoduleMorphism::new(r.clone(), r.clone(), r.act_left(&[(-1).into(), 3.into()])).unwrap();
    let fg = BimoduleMorphism::compose(&f, &g).unwrap();
    let lhs = tensor_morphisms_over(&fg, &fg).unwrap();
    let rhs =
        BimoduleMorphism::compose(&tensor_morphisms_over(&f, &f).unwrap(), &tensor_morphisms_over(&g, &g).unwrap())
            .unwrap();
    assert_eq!(lhs.matrix(), rhs.matrix());
    assert_eq!(BimoduleMorphism::compose(&f, &id).unwrap(), f);
    assert_eq!(BimoduleMorphism::compose(&id, &f).unwrap(), f);
}

#[test]
fn tensor_of_non_balanced_maps_is_rejected() {
    let z2 = arc(z2_group_algebra());
    let r = Arc::new(Bimodule::regular(&z2));
    // swapping basis vectors of the left factor only intertwines the left action
    let sw = BimoduleMorphism::new(r.clone(), r.clone(), Matrix::from_i64(&[&[2, 0], &[0, 1]])).unwrap();
    let id = BimoduleMorphism::identity(&r);
    assert!(matches!(tensor_morphisms_over(&sw, &id), Err(crate::Error::NotWellDefined(_))));
}

#[test]
fn quotients_and_submodules() {
    let z2 = arc(z2_group_algebra());
    let free = Bimodule::free(&z2, &z2);
    assert!(free.validate().is_empty());
    let e = |i: i64, j: i64, k: i64, l: i64| vec![Rational::from(i), j.into(), k.into(), l.into()];
    let sub = free.generated_submodule(&[e(1, 0, 0, 0)]);
    assert_eq!(sub.dim(), 4);
    // g⊗e − e⊗g generates the balancing submodule
    let sub = free.generated_submodule(&[e(0, -1, 1, 0)]);
    assert_eq!(sub.dim(), 2);
    let (q, _) = free.quotient(&sub).unwrap();
    assert_eq!(q.dim(), 2);
    assert!(q.validate().is_empty());
    assert!(free.quotient(&Subspace::span(4, [e(1, 0, 0, 0).as_slice()]).unwrap()).is_err());
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    /// A random quotient of the free bimodule `d ⊗ e`.
    fn random_bimodule(d: usize, e: usize, seeds: Vec<Vec<i64>>) -> Arc<Bimodule> {
        let cat = all();
        let free = Bimodule::free(&cat[d], &cat[e]);
        let n = free.dim();
        let vecs: Vec<Vec<Rational>> =
            seeds.iter().map(|s| (0..n).map(|i| Rational::from(s[i % s.len()])).collect()).collect();
        let sub = free.generated_submodule(&vecs);
        Arc::new(free.quotient(&sub).unwrap().0)
    }

    fn arb_chain() -> impl Strategy<Value = (Arc<Bimodule>, Arc<Bimodule>, Arc<Bimodule>)> {
        let seeds = || prop::collection::vec(prop::collection::vec(-1i64..2, 1..5), 0..3);
        (0usize..3, 0usize..3, 0usize..3, 0usize..3, seeds(), seeds(), seeds()).prop_map(|(a, b, c, d, s1, s2, s3)| {
            // restrict to the commutative-friendly small algebras K, Z2, Dual
            (random_bimodule(a, b, s1), random_bimodule(b, c, s2), random_bimodule(c, d, s3))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn tensor_products_validate((m, n, p) in arb_chain()) {
            let (mn, q) = tensor_over(&m, &n).unwrap();
            prop_assert!(mn.validate().is_empty());
            prop_assert_eq!(mn.dim(), m.dim() * n.dim() - q.relations().dim());
            let (mnp, _) = tensor_over(&mn, &p).unwrap();
            prop_assert!(mnp.validate().is_empty());
        }

        #[test]
        fn structural_isos_are_invertible_intertwiners((m, n, p) in arb_chain()) {
            let a = associator(&m, &n, &p).unwrap();
            let ai = associator_inverse(&m, &n, &p).unwrap();
            prop_assert!(a.is_intertwiner() && ai.is_intertwiner());
            prop_assert!(BimoduleMorphism::compose(&ai, &a).unwrap().matrix().is_identity());
            prop_assert!(BimoduleMorphism::compose(&a, &ai).unwrap().matrix().is_identity());
            for (u, ui) in [(left_unitor(&m).unwrap(), left_unitor_inverse(&m).unwrap()),
                            (right_unitor(&m).unwrap(), right_unitor_inverse(&m).unwrap())] {
                prop_assert!(u.is_intertwiner() && ui.is_intertwiner());
                prop_assert!(BimoduleMorphism::compose(&ui, &u).unwrap().matrix().is_identity());
                prop_assert!(BimoduleMorphism::compose(&u, &ui).unwrap().matrix().is_identity());
            }
        }
    }
}
