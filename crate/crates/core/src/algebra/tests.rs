use std::sync::Arc;

use super::catalog::*;
use super::*;
use crate::linalg::{sparse, Matrix, Subspace};
use crate::rational::Rational;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| q(x)).collect()
}

fn span(n: usize, rows: &[&[i64]]) -> Subspace {
    if rows.is_empty() {
        return Subspace::zero(n);
    }
    Matrix::from_i64(rows).row_space()
}

#[test]
fn catalog_algebras_validate() {
    for a in all() {
        assert!(a.validate().is_empty(), "{}", a.name());
    }
}

#[test]
fn unit_law_violation_is_reported() {
    // unit e0 with e0*e1 = 0 and e1*e1 = e1
    let products = vec![sparse::unit(0), Vec::new(), Vec::new(), sparse::unit(1)];
    let a = Algebra::from_products("bad", 2, v(&[1, 0]), products).unwrap();
    let report = a.validate();
    assert!(report.contains(&AlgebraViolation::LeftUnit { i: 1 }));
    assert!(report.contains(&AlgebraViolation::RightUnit { i: 1 }));
    assert!(Algebra::checked("bad", 2, v(&[1, 0]), vec![sparse::unit(0), vec![], vec![], sparse::unit(1)]).is_err());
}

#[test]
fn nonassociative_table_reports_a_triple() {
    // x*x = 1 + x
    let products = vec![sparse::unit(0), sparse::unit(1), sparse::unit(1), sparse::from_dense(&v(&[1, 1]))];
    let ok = Algebra::from_products("fib", 2, v(&[1, 0]), products).unwrap();
    assert!(ok.validate().is_empty(), "commutative and generated by one element, so associative");

    let mut products = vec![Vec::new(); 9];
    products[0] = sparse::unit(0);
    products[1] = sparse::unit(1);
    products[2] = sparse::unit(2);
    products[3] = sparse::unit(1);
    products[6] = sparse::unit(2);
    products[4] = sparse::unit(2); // x*x = y
    products[5] = Vec::new(); // x*y = 0
    products[7] = sparse::unit(0); // y*x = 1
    let bad = Algebra::from_products("bad", 3, v(&[1, 0, 0]), products).unwrap();
    assert!(bad.validate().iter().any(|e| matches!(e, AlgebraViolation::Associativity { .. })));
}

#[test]
fn multiply_examples() {
    let z2 = z2_group_algebra();
    assert_eq!(z2.multiply(&v(&[0, 1]), &v(&[0, 1])).unwrap(), v(&[1, 0]));
    let x = v(&[3, -2]);
    assert_eq!(z2.multiply(z2.unit(), &x).unwrap(), x);
    let dual = dual_numbers();
    assert_eq!(dual.multiply(&v(&[0, 1]), &v(&[0, 1])).unwrap(), v(&[0, 0]));
    assert!(dual.multiply(&v(&[0, 1, 0]), &v(&[0, 1])).is_err());
}

#[test]
fn opposite_examples() {
    let z2 = z2_group_algebra();
    assert_eq!(z2.opposite(), z2);
    let ut = upper_triangular_2();
    assert_eq!(ut.opposite().opposite(), ut);
    let op = ut.opposite();
    assert_ne!(op, ut);
    assert!(op.validate().is_empty());
    let m2 = matrix_algebra_2();
    assert_eq!(m2.opposite().opposite(), m2);
}

#[test]
fn commutativity_examples() {
    assert!(z2_group_algebra().is_commutative());
    assert!(!matrix_algebra_2().is_commutative());
    assert!(dual_numbers().is_commutative());
    assert!(!upper_triangular_2().is_commutative());
}

#[test]
fn center_examples() {
    let m2 = Arc::new(matrix_algebra_2());
    let z = m2.center();
    assert_eq!(z.dim(), 1);
    assert_eq!(z.space(), &span(4, &[&[1, 0, 0, 1]]));

    let z2 = Arc::new(z2_group_algebra());
    assert_eq!(z2.center().dim(), 2);

    let ut = Arc::new(upper_triangular_2());
    assert_eq!(ut.center().space(), &span(3, &[&[1, 0, 1]]));
}

#[test]
fn commutant_examples() {
    let m2 = Arc::new(matrix_algebra_2());
    assert_eq!(m2.commutant(&Subspace::full(4)).unwrap().dim(), 1);
    let unit_span = Subspace::span(4, [m2.unit()]).unwrap();
    assert_eq!(m2.commutant(&unit_span).unwrap().dim(), 4);
    // diagonal matrices commute with E11
    let c = m2.commutant(&span(4, &[&[1, 0, 0, 0]])).unwrap();
    assert_eq!(c.space(), &span(4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]));
    assert!(m2.commutant(&Subspace::full(3)).is_err());
}

#[test]
fn generated_subalgebra_examples() {
    let m2 = Arc::new(matrix_algebra_2());
    let g = m2.generated_subalgebra(&[span(4, &[&[0, 1, 0, 0]]), span(4, &[&[0, 0, 1, 0]])]).unwrap();
    assert_eq!(g.dim(), 4);
    let g = m2.generated_subalgebra(&[]).unwrap();
    assert_eq!(g.space(), &Subspace::span(4, [m2.unit()]).unwrap());
    let g = m2.generated_subalgebra(&[Subspace::full(4)]).unwrap();
    assert_eq!(g.dim(), 4);
    // E12 alone generates span{1, E12}
    let g = m2.generated_subalgebra(&[span(4, &[&[0, 1, 0, 0]])]).unwrap();
    assert_eq!(g.dim(), 2);
    assert!(Subalgebra::new(m2.clone(), g.space().clone()).is_ok());
}

#[test]
fn tensor_examples() {
    let k = ground_field();
    let z2 = z2_group_algebra();
    let kz = Algebra::tensor(&k, &z2);
    assert_eq!(kz, z2);
    let m2 = matrix_algebra_2();
    assert_eq!(Algebra::tensor(&m2, &m2).dim(), 16);
    let zz = Algebra::tensor(&z2, &z2);
    assert_eq!(zz.dim(), 4);
    assert!(zz.is_commutative());
    assert!(zz.validate().is_empty());
}

#[test]
fn tensor_over_central_examples() {
    let z2 = Arc::new(z2_group_algebra());
    let id = AlgebraMorphism::identity(&z2);
    let (t, q) = tensor_over_central(&z2, &z2, &z2, &id, &id).unwrap();
    assert_eq!(t.dim(), 2);
    assert_eq!(q.ambient_dim(), 4);
    assert!(t.validate().is_empty());
    // isomorphic to Z2 via the class of e ⊗ (·)
    assert!(t.is_commutative());

    let k = Arc::new(ground_field());
    let m2 = Arc::new(matrix_algebra_2());
    let um = AlgebraMorphism::unit_map(&k, &m2).unwrap();
    let (t, q) = tensor_over_central(&m2, &m2, &k, &um, &um).unwrap();
    assert_eq!(t, Algebra::tensor(&m2, &m2));
    assert_eq!(q.relations().dim(), 0);

    let dual = Arc::new(dual_numbers());
    let id = AlgebraMorphism::identity(&dual);
    let (t, _) = tensor_over_central(&dual, &dual, &dual, &id, &id).unwrap();
    assert_eq!(t.dim(), 2);
}

#[test]
fn tensor_over_central_rejects_bad_input() {
    let m2 = Arc::new(matrix_algebra_2());
    let k = Arc::new(ground_field());
    let um = AlgebraMorphism::unit_map(&k, &m2).unwrap();
    // noncommutative middle
    let id = AlgebraMorphism::identity(&m2);
    assert!(matches!(tensor_over_central(&m2, &m2, &m2, &id, &id), Err(crate::Error::NonCommutative(..))));
    // non-central image: Z2 -> M2 sending g to diag(1,-1)
    let z2 = Arc::new(z2_group_algebra());
    let j =
        AlgebraMorphism::new(z2.clone(), m2.clone(), Matrix::from_i64(&[&[1, 1], &[0, 0], &[0, 0], &[1, -1]])).unwrap();
    assert!(j.check().is_empty());
    let r = tensor_over_central(&m2, &m2, &z2, &j, &j);
    assert!(matches!(r, Err(crate::Error::NotCentral { element: 1, .. })));
    let _ = um;
}

#[test]
fn endomorphism_algebra_examples() {
    let k = Algebra::endomorphisms(1);
    assert_eq!(k, ground_field());
    let m2 = Arc::new(Algebra::endomorphisms(2));
    assert_eq!(m2.dim(), 4);
    assert_eq!(m2.center().dim(), 1);
    let zero = Algebra::endomorphisms(0);
    assert_eq!(zero.dim(), 0);
    assert!(zero.unit().is_empty());
    assert!(Algebra::from_products("z", 0, vec![], vec![]).is_err());
}

#[test]
fn conjugation_examples() {
    let id = conjugate_endomorphisms(&Matrix::identity(2)).unwrap();
    assert!(id.matrix().is_identity());
    let f = Matrix::from_i64(&[&[1, 0], &[0, 2]]);
    let c = conjugate_endomorphisms(&f).unwrap();
    assert!(c.check().is_empty());
    assert_eq!(c.apply(c.source().unit()), c.target().unit());
    // E12 ↦ (1/2) E12
    assert_eq!(c.image_of(1), vec![q(0), Rational::new(1, 2), q(0), q(0)]);
    assert_eq!(conjugate_endomorphisms(&Matrix::from_i64(&[&[1, 1], &[1, 1]])), Err(crate::Error::Singular));
}

#[test]
fn morphism_checks() {
    let z2 = Arc::new(z2_group_algebra());
    assert!(AlgebraMorphism::identity(&z2).check().is_empty());
    let k = Arc::new(ground_field());
    assert!(AlgebraMorphism::unit_map(&k, &z2).unwrap().check().is_empty());
    let swap = AlgebraMorphism::new(z2.clone(), z2.clone(), Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
    let report = swap.check();
    assert!(report.contains(&MorphismViolation::Unit));
    assert!(report.contains(&MorphismViolation::Multiplicativity { i: 1, j: 1 }));

    let m2 = Arc::new(matrix_algebra_2());
    let u = AlgebraMorphism::unit_map(&k, &m2).unwrap();
    let c = conjugate_endomorphisms(&Matrix::from_i64(&[&[1, 1], &[0, 1]])).unwrap();
    let c = AlgebraMorphism::new(m2.clone(), m2.clone(), c.matrix().clone()).unwrap();
    let comp = AlgebraMorphism::compose(&c, &u).unwrap();
    assert!(comp.check().is_empty());
    assert!(AlgebraMorphism::compose(&u, &c).is_err());
}

#[test]
fn generator_indices_generate() {
    for a in all() {
        let gens = a.generator_indices().to_vec();
        let parts: Vec<Subspace> =
            gens.iter().map(|&i| Subspace::span(a.dim(), [a.basis_vector(i).as_slice()]).unwrap()).collect();
        assert_eq!(a.generated_subalgebra(&parts).unwrap().dim(), a.dim(), "{}", a.name());
    }
    let m2 = matrix_algebra_2();
    assert_eq!(m2.generator_indices(), &[0, 1, 2]);
}

#[test]
fn subalgebra_to_algebra() {
    let m2 = Arc::new(matrix_algebra_2());
    let diag = m2.commutant(&span(4, &[&[1, 0, 0, 0]])).unwrap();
    let d = diag.to_algebra("Diag").unwrap();
    assert!(d.validate().is_empty());
    assert!(d.is_commutative());
    assert_eq!(d.dim(), 2);
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn arb_subspace(n: usize) -> impl Strategy<Value = Subspace> {
        prop::collection::vec(prop::collection::vec(-2i64..3, n), 0..4).prop_map(move |rows| {
            let rows: Vec<Vec<Rational>> = rows.iter().map(|r| v(r)).collect();
            Matrix::from_rows(n, rows).unwrap().row_space()
        })
    }

    fn arb_catalog() -> impl Strategy<Value = Arc<Algebra>> {
        (0usize..5).prop_map(|i| all()[i].clone())
    }

    proptest! {
        #[test]
        fn center_is_self_commutant(a in arb_catalog()) {
            let full = Subspace::full(a.dim());
            prop_assert_eq!(a.center(), a.commutant(&full).unwrap());
            let op = Arc::new(a.opposite());
            prop_assert_eq!(op.center().space().clone(), a.center().space().clone());
            if a.is_commutative() {
                prop_assert_eq!(a.opposite(), (*a).clone());
            }
        }

        #[test]
        fn commutant_is_antitone(s in arb_subspace(4), t in arb_subspace(4)) {
            let m2 = Arc::new(matrix_algebra_2());
            let big = s.join(&t).unwrap();
            let cs = m2.commutant(&s).unwrap();
            let cb = m2.commutant(&big).unwrap();
            prop_assert!(cb.space().is_subspace_of(cs.space()));
            prop_assert!(cs.contains(m2.unit()));
        }

        #[test]
        fn generation_is_a_closure_operator(s in arb_subspace(3), t in arb_subspace(3)) {
            let ut = Arc::new(upper_triangular_2());
            let gs = ut.generated_subalgebra(std::slice::from_ref(&s)).unwrap();
            prop_assert!(s.is_subspace_of(gs.space()));
            let gst = ut.generated_subalgebra(&[s.join(&t).unwrap()]).unwrap();
            prop_assert!(gs.space().is_subspace_of(gst.space()));
            let again = ut.generated_subalgebra(&[gs.space().clone()]).unwrap();
            prop_assert_eq!(again.space(), gs.space());
            prop_assert!(Subalgebra::new(ut.clone(), gs.space().clone()).is_ok());
        }

        #[test]
        fn tensor_over_field_is_plain_tensor(a in arb_catalog(), b in arb_catalog()) {
            let k = Arc::new(ground_field());
            let ja = AlgebraMorphism::unit_map(&k, &a).unwrap();
            let jb = AlgebraMorphism::unit_map(&k, &b).unwrap();
            let (t, q) = tensor_over_central(&a, &b, &k, &ja, &jb).unwrap();
            prop_assert!(q.projection().is_identity());
            prop_assert_eq!(t, Algebra::tensor(&a, &b));
        }
    }
}
