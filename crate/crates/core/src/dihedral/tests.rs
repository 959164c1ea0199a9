use super::*;
use crate::algebra::Measuring;
use crate::corpus::{bundled, group_algebra_z2, group_algebra_z2_signed, rationals, trivial_coalgebra};
use crate::cyclic::CyclicModule;
use crate::error::Error;
use crate::linalg::{q, Matrix, SparseVec};
use crate::report::{Checks, Status};
use std::sync::Arc;

fn action(a: &crate::algebra::AlgebraSpec, n: usize) -> (CyclicModule, DihedralAction) {
    let cm = CyclicModule::new(Arc::new(a.clone()), n, 5000).unwrap();
    let act = DihedralAction::new(&cm, a.involution.as_ref().unwrap(), n);
    (cm, act)
}

#[test]
fn degree_zero_action() {
    let a = group_algebra_z2_signed();
    let (_, act) = action(&a, 0);
    assert_eq!(act.u, Matrix::identity(2));
    assert_eq!(&act.v, a.involution.as_ref().unwrap());
}

#[test]
fn v_in_degree_one_is_negated_conjugation() {
    let a = group_algebra_z2_signed();
    let (_, act) = action(&a, 1);
    // v₁(1, g) = -(1, ĝ) = (1, g); v₁(g, g) = -(ĝ, ĝ) = -(g, g).
    assert_eq!(act.v.column(1), &SparseVec::single(1, q(1)));
    assert_eq!(act.v.column(3), &SparseVec::single(3, q(-1)));
    assert_eq!(act.v.column(0), &SparseVec::single(0, q(-1)));
}

#[test]
fn rotation_is_the_cyclic_operator() {
    for a in [group_algebra_z2(), group_algebra_z2_signed()] {
        for n in 0..=3 {
            let (cm, act) = action(&a, n);
            assert_eq!(act.u.first_difference(&cm.cyclic_op(n)), None);
        }
    }
}

#[test]
fn dihedral_relations_hold() {
    let c = bundled();
    for a in c.algebras.iter().filter(|a| a.involution.is_some()) {
        for n in 0..=3 {
            let (_, act) = action(a, n);
            assert_eq!(act.relation_defect(n), None, "{} n={n}", a.name);
        }
    }
    let (_, act) = action(&group_algebra_z2_signed(), 2);
    assert_eq!(act.relation_defect(2), None);
}

#[test]
fn dihedral_homology_of_rationals() {
    let d = DihedralComplex::new(Arc::new(rationals()), 6, 5000).unwrap();
    assert_eq!((0..=5).map(|n| d.dim(n)).collect::<Vec<_>>(), vec![1, 0, 0, 0, 1, 0]);
    assert_eq!(dihedral_homology_dims(&Arc::new(rationals()), 6, 5000).unwrap(), vec![1, 0, 0, 0, 1, 0]);
}

#[test]
fn degree_zero_coinvariants() {
    assert_eq!(DihedralComplex::new(Arc::new(group_algebra_z2()), 1, 5000).unwrap().dim(0), 2);
    assert_eq!(DihedralComplex::new(Arc::new(group_algebra_z2_signed()), 1, 5000).unwrap().dim(0), 1);
}

#[test]
fn projection_commutes_with_b() {
    let d = DihedralComplex::new(Arc::new(group_algebra_z2_signed()), 3, 5000).unwrap();
    let b = d.cm.hochschild_b(2);
    assert_eq!(d.quots[1].proj().mul(&b).first_difference(&d.complex.d(2).mul(d.quots[2].proj())), None);
    assert!(d.complex.square_zero_defect().is_none());
}

#[test]
fn missing_involution_is_rejected() {
    let ut = bundled().algebra("ut2").unwrap().clone();
    assert!(matches!(DihedralComplex::new(ut, 2, 5000), Err(Error::NotInvolutive(_))));
}

fn bad_measuring() -> Measuring {
    let k = Arc::new(trivial_coalgebra());
    let mut m = Measuring::new(
        "bad",
        k,
        Arc::new(group_algebra_z2()),
        Arc::new(group_algebra_z2_signed()),
        vec![Matrix::identity(2)],
    )
    .unwrap();
    m.involutive = true;
    m
}

#[test]
fn conjugation_violation_is_rejected() {
    let m = bad_measuring();
    assert!(matches!(require_involutive(&m), Err(Error::NotInvolutive(_))));
    let s = DihedralComplex::new(m.source.clone(), 2, 5000).unwrap();
    let d = DihedralComplex::new(m.target.clone(), 2, 5000).unwrap();
    assert!(DihedralMaps::new(&m, &SparseVec::unit(0), &s, &d, 5000).is_err());
    let c = verify_dihedral_maps(&m, 2, 5000);
    assert!(c.failures() > 0);
}

#[test]
fn classical_dimensions() {
    let qq = rationals();
    assert_eq!(Classical::skew(&qq, 1).unwrap().algebra.dim(), 0);
    assert_eq!(Classical::skew(&qq, 2).unwrap().algebra.dim(), 1);
    assert_eq!(Classical::symplectic(&qq, 1).unwrap().algebra.dim(), 3);
    assert_eq!(Classical::skew(&group_algebra_z2_signed(), 1).unwrap().algebra.dim(), 1);
    // sp_2(Q) = sl_2(Q).
    let sp = Classical::symplectic(&qq, 1).unwrap();
    for k in 0..3 {
        let col = sp.span.basis().column(k);
        assert_eq!(col.coeff(0) + col.coeff(3), q(0));
    }
}

#[test]
fn transposes_are_involutions() {
    let a = group_algebra_z2_signed();
    for r in 1..=2 {
        let t = conjugate_transpose(&a, r).unwrap();
        assert_eq!(t.mul(&t).first_difference(&Matrix::identity(t.rows())), None);
    }
    let t = symplectic_transpose(&a, 1).unwrap();
    assert_eq!(t.mul(&t).first_difference(&Matrix::identity(t.rows())), None);
}

#[test]
fn identity_restricts_to_identity() {
    let c = bundled();
    let m = c.measuring("id-dualnum").unwrap();
    for (fam, r) in LADDER_CASES {
        let s = fam.build(&m.source, r).unwrap();
        let lm = restrict_measuring(m, &s, &s).unwrap();
        assert_eq!(lm.phi[0], Matrix::identity(s.algebra.dim()));
    }
}

fn assert_suite(c: Checks) {
    let bad: Vec<_> = c.records.iter().filter(|r| r.status == Status::Fail).collect();
    assert!(bad.is_empty(), "{} {}: {:?}", c.suite, c.subjects, bad);
    assert!(c.records.iter().any(|r| r.status == Status::Pass), "{}", c.suite);
}

#[test]
fn dihedral_suites_pass() {
    let c = bundled();
    for name in ["id-z2", "aug-z2", "euler-dualnum", "swap-sqzero2", "inner-m2", "flip-z2sign"] {
        let m = c.measuring(name).unwrap();
        assert_suite(verify_dihedral_maps(m, 3, 5000));
        assert_suite(verify_sk_sp_restriction(m, 3, 5000));
    }
}

#[test]
fn ladder_suite_passes() {
    let c = bundled();
    for name in ["aug-z2", "euler-dualnum", "flip-z2sign"] {
        assert_suite(verify_sk_sp_ladder(c.measuring(name).unwrap(), 2, 5000));
    }
}

