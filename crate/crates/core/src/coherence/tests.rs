use std::sync::Arc;

use super::*;
use crate::algebra::catalog::*;
use crate::algebra::Algebra;
use crate::bimodule::{associator, tensor_morphisms_over, Bimodule, BimoduleMorphism};
use crate::ccn::{fuse_defects, identity_defect, Defect, Intertwiner, Net, Sector};
use crate::rational::Rational;

fn regular(a: Algebra) -> Arc<Bimodule> {
    Arc::new(Bimodule::regular(&Arc::new(a)))
}

fn z2_defect() -> Defect {
    identity_defect(&Net::new(Arc::new(z2_group_algebra())).unwrap())
}

fn k_defect() -> Defect {
    identity_defect(&Net::new(Arc::new(ground_field())).unwrap())
}

#[test]
fn splitmix_stream_matches_reference_values() {
    assert_eq!(case_seeds(0, 3), vec![0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]);
}

#[test]
fn kinds_parse_and_print() {
    for k in CaseKind::ALL {
        assert_eq!(k.name().parse::<CaseKind>().unwrap(), k);
    }
    assert!("hexagon".parse::<CaseKind>().is_err());
    assert_eq!(CaseKind::InterchangerHexagon.default_cases(), 25);
    assert_eq!(CaseKind::Pentagon.default_cases(), 100);
}

#[test]
fn report_lines() {
    let pass = CheckReport { kind: CaseKind::Triangle, case: 3, seed: 17, outcome: Outcome::Pass };
    assert_eq!(pass.to_string(), "OK triangle case=3 seed=17");
    let lhs = Matrix::from_i64(&[&[1, 0], &[0, 1]]);
    let rhs = Matrix::from_i64(&[&[1, 0], &[2, 1]]);
    let d = Diagram::new(&lhs, &rhs);
    let fail = CheckReport {
        kind: CaseKind::Pentagon,
        case: 0,
        seed: 5,
        outcome: Outcome::Mismatch { entry: d.first_difference().unwrap(), lhs, rhs },
    };
    assert_eq!(fail.to_string(), "FAIL pentagon case=0 seed=5 entry=(1,0) lhs=0 rhs=2");
    assert!(!fail.passed());
}

#[test]
fn bimodule_diagrams_on_small_cases() {
    for a in [ground_field(), z2_group_algebra(), matrix_algebra_2()] {
        let r = regular(a);
        assert!(pentagon_check(&r, &r, &r, &r).unwrap().commutes());
        assert!(triangle_check(&r, &r).unwrap().commutes());
        let f = BimoduleMorphism::identity(&r);
        assert!(unitors_check((&r, &r, &r), (&f, &f, &f)).unwrap().iter().all(Diagram::commutes));
    }
}

#[test]
fn broken_diagrams_are_detected() {
    let r = regular(z2_group_algebra());
    let swap = BimoduleMorphism::checked(r.clone(), r.clone(), Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
    let id = BimoduleMorphism::identity(&r);
    let a = associator(&r, &r, &r).unwrap();
    let twisted = tensor_morphisms_over(&tensor_morphisms_over(&swap, &id).unwrap(), &id).unwrap();
    let lhs = BimoduleMorphism::compose(&a, &twisted).unwrap();
    let d = Diagram::new(lhs.matrix(), a.matrix());
    assert!(!d.commutes());
    assert!(d.first_difference().is_some());
}

#[test]
fn sector_diagrams_on_small_cases() {
    for d in [k_defect(), z2_defect()] {
        let s = Sector::identity(&d);
        assert!(square_check(&s, &s).unwrap().commutes());
        assert!(hexagon_check([&s, &s, &s], [&s, &s, &s]).unwrap().commutes());
        let f = Intertwiner::identity(&s);
        assert!(associator_modification_check([&s, &s, &s], [&f, &f, &f]).unwrap().iter().all(Diagram::commutes));
        assert!(pentagonator_check(&d, &d, &d, &d).unwrap().commutes());
    }
}

#[test]
fn modification_is_natural_in_nontrivial_endomorphisms() {
    let s = Sector::identity(&z2_defect());
    let swap = Intertwiner::new(s.clone(), s.clone(), Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
    let two = Intertwiner::new(s.clone(), s.clone(), Matrix::identity(2).scale(&Rational::from_int(2))).unwrap();
    let diagrams = associator_modification_check([&s, &s, &s], [&swap, &two, &swap]).unwrap();
    assert!(diagrams.iter().all(Diagram::commutes));
}

#[test]
fn pentagonator_on_mixed_defects() {
    let z = Net::new(Arc::new(z2_group_algebra())).unwrap();
    let k = Net::new(Arc::new(ground_field())).unwrap();
    let t = Arc::new(Algebra::tensor(z.algebra(), k.algebra()));
    let zk = Defect::from_matrix(z.clone(), k.clone(), t, Matrix::identity(2)).unwrap();
    let kz = Defect::from_matrix(k.clone(), z.clone(), z.algebra().clone(), Matrix::identity(2)).unwrap();
    assert_eq!(fuse_defects(&zk, &kz).unwrap().algebra().dim(), 4);
    assert!(pentagonator_check(&zk, &kz, &z2_defect(), &zk).unwrap().commutes());
}

#[test]
fn suites_are_deterministic() {
    let a = run_suite(CaseKind::Pentagon, 42, 10, 2).unwrap();
    let b = run_suite(CaseKind::Pentagon, 42, 10, 2).unwrap();
    assert_eq!(render(&a), render(&b));
    assert_eq!(a.len(), 10);
    assert!(a.iter().all(CheckReport::passed));
    assert!(render(&a).lines().all(|l| l.starts_with("OK pentagon case=")));
    assert_ne!(render(&a), render(&run_suite(CaseKind::Pentagon, 43, 10, 2).unwrap()));
}

#[test]
fn empty_suites_are_rejected() {
    assert!(run_suite(CaseKind::Triangle, 0, 0, 2).is_err());
    assert!(run_suite(CaseKind::Triangle, 0, 1, 0).is_err());
}

#[test]
fn a_case_depends_only_on_its_seed() {
    let seeds = case_seeds(7, 4);
    let suite = run_suite(CaseKind::InterchangerSquare, 7, 4, 3).unwrap();
    for (n, s) in seeds.iter().enumerate() {
        assert_eq!(run_case(CaseKind::InterchangerSquare, n, *s, 3), suite[n]);
    }
}

#[test]
fn short_sweeps_pass() {
    for kind in CaseKind::ALL {
        for r in run_suite(kind, 1, 3, kind.default_max_dim()).unwrap() {
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn generated_instances_respect_max_dim() {
    for s in case_seeds(3, 20) {
        let mut g = InstanceGenerator::new(s, 2);
        for m in g.bimodule_chain(3).unwrap() {
            assert!((1..=2).contains(&m.dim()));
            assert!(m.validate().is_empty());
        }
        let nets = g.nets(3);
        for column in g.sector_grid(&nets, 2).unwrap() {
            for s in column {
                assert!((1..=2).contains(&s.dim()));
            }
        }
    }
}
