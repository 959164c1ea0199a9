use super::*;
use crate::complex::{chain_map_defect, ChainComplex};
use crate::corpus::bundled;
use crate::linalg::{q, Matrix, SparseVec};

fn module(name: &str, top: usize) -> CyclicModule {
    let c = bundled();
    CyclicModule::new(c.algebra(name).unwrap().clone(), top, 5000).unwrap()
}

fn dims(c: &ChainComplex, upto: usize) -> Vec<usize> {
    (0..=upto).map(|n| c.homology(n).unwrap().dim()).collect()
}

#[test]
fn simplicial_and_cyclic_identities() {
    for name in ["dualnum", "ut2", "z2"] {
        let cm = module(name, 3);
        for n in 1..=3 {
            for j in 1..=n {
                for i in 0..j {
                    if n < 2 {
                        continue;
                    }
                    let lhs = cm.face(n - 1, i).mul(&cm.face(n, j));
                    let rhs = cm.face(n - 1, j - 1).mul(&cm.face(n, i));
                    assert!(lhs.first_difference(&rhs).is_none(), "{name} d_{i} d_{j} in degree {n}");
                }
            }
            let t = cm.cyclic_op(n);
            for i in 1..=n {
                let lhs = cm.face(n, i).mul(&t);
                let rhs = cm.cyclic_op(n - 1).mul(&cm.face(n, i - 1)).neg();
                assert_eq!(lhs.first_difference(&rhs), None, "{name} d_{i} t in degree {n}");
            }
            let sign = if n % 2 == 0 { q(1) } else { q(-1) };
            assert_eq!(cm.face(n, 0).mul(&t).first_difference(&cm.face(n, n).scaled(&sign)), None);
        }
        for n in 0..=3 {
            let t = cm.cyclic_op(n);
            let mut p = Matrix::identity(cm.dim(n));
            for _ in 0..=n {
                p = t.mul(&p);
            }
            assert!(p.first_difference(&Matrix::identity(cm.dim(n))).is_none());
        }
        for n in 0..2 {
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = cm.degeneracy(n + 1, i).mul(&cm.degeneracy(n, j));
                    let rhs = cm.degeneracy(n + 1, j + 1).mul(&cm.degeneracy(n, i));
                    assert!(lhs.first_difference(&rhs).is_none());
                }
            }
            for j in 0..=n {
                // d_j s_j = d_{j+1} s_j = id
                let id = Matrix::identity(cm.dim(n));
                assert!(cm.face(n + 1, j).mul(&cm.degeneracy(n, j)).first_difference(&id).is_none());
                assert!(cm.face(n + 1, j + 1).mul(&cm.degeneracy(n, j)).first_difference(&id).is_none());
            }
        }
    }
}

#[test]
fn face_and_cyclic_examples() {
    let cm = module("dualnum", 2);
    // t_1(1, x) = -(x, 1)
    let t = cm.cyclic_op(1);
    assert_eq!(t.get(2, 1), q(-1));
    // d_2(x, 1, 1) = (x, 1), word (x,1,1) has index 4

    assert_eq!(cm.face(2, 2).get(2, 4), q(1));
}

#[test]
fn connes_operator_closed_form() {
    for name in ["dualnum", "ut2", "Q", "z2"] {
        let cm = module(name, 3);
        for n in 0..3 {
            assert_eq!(cm.connes_b(n).first_difference(&cm.connes_b_closed(n)), None, "{name} degree {n}");
        }
    }
}

#[test]
fn hochschild_of_dual_numbers() {
    let cm = module("dualnum", 5);
    let h = hochschild_complex(&cm).unwrap();
    assert_eq!(dims(&h, 3), vec![2, 1, 1, 1]);
}

#[test]
fn three_routes_agree() {
    for name in ["Q", "dualnum", "trunc3", "z2", "ut2"] {
        let cm = module(name, 4);
        let tot = cyclic_bicomplex(&cm, None).unwrap();
        let norm = Normalization::new(&cm);
        let mixed = normalized_mixed(&cm, &norm);
        assert!(mixed.identity_defect().is_none(), "{name}");
        assert!(unnormalized_mixed(&cm).identity_defect().is_none(), "{name}");
        let mt = mixed.tot().unwrap();
        let quots = connes_quotients(&cm);
        let ct = connes_complex(&cm, &quots).unwrap();
        let a = dims(&tot.complex, 2);
        assert_eq!(a, dims(&mt.complex, 2), "{name}");
        assert_eq!(a, dims(&ct, 2), "{name}");
        if name == "Q" {
            assert_eq!(dims(&tot.complex, 3), vec![1, 0, 1, 0]);
        }
    }
}

#[test]
fn sbi_sequence_is_exact() {
    for name in ["Q", "dualnum", "ut2"] {
        let cm = module(name, 4);
        let hoch = hochschild_complex(&cm).unwrap();
        let tot = cyclic_bicomplex(&cm, None).unwrap();
        let two = cyclic_bicomplex(&cm, Some(2)).unwrap();
        let sbi = sbi_sequence(&hoch, &tot, &two, 2).unwrap();
        assert!(sbi.exactness_defects().is_empty(), "{name}: {:?}", sbi.exactness_defects());
    }
}

#[test]
fn measuring_maps_commute_with_structure() {
    let c = bundled();
    for name in ["euler-dualnum", "aug-dualnum", "tangent-dualnum", "inner-m2"] {
        let m = c.measuring(name).unwrap();
        let top = if name == "inner-m2" { 2 } else { 3 };
        let src = CyclicModule::new(m.source.clone(), top, 5000).unwrap();
        let dst = CyclicModule::new(m.target.clone(), top, 5000).unwrap();
        for x in 0..m.coalgebra.dim() {
            let f = cyclic_maps(m, &SparseVec::unit(x), top, 5000).unwrap();
            assert_eq!(cyclic_morphism_defect(&src, &dst, &f), None, "{name} x={x}");
            let hs = hochschild_complex(&src).unwrap();
            let hd = hochschild_complex(&dst).unwrap();
            assert!(chain_map_defect(&f, &hs, &hd).is_none());
        }
    }
}

#[test]
fn derivation_example_in_degree_one() {
    let c = bundled();
    let m = c.measuring("euler-dualnum").unwrap();
    let f = cyclic_maps(m, &SparseVec::unit(1), 1, 5000).unwrap();
    // d(x, x) = (Dx, x) + (x, Dx) = 2 (x, x)
    assert_eq!(f[1].get(3, 3), q(2));
    // d(1, x) = (1, x)
    assert_eq!(f[1].get(1, 1), q(1));
    assert_eq!(f[1].column(0).nnz(), 0);
}

#[test]
fn measuring_suites_pass() {
    use crate::report::Status;
    let corpus = crate::corpus::bundled();
    for name in ["id-Q", "aug-dualnum", "euler-dualnum", "tangent-dualnum", "inner-m2", "unit-ut2"] {
        let m = corpus.measuring(name).unwrap();
        let top = if name == "inner-m2" { 3 } else { 4 };
        for c in [verify_sbi_compatibility(m, top, 5000), verify_normalized_quotient(m, top, 5000)] {
            let bad: Vec<_> = c.records.iter().filter(|r| r.status != Status::Pass).collect();
            assert!(bad.is_empty(), "{name} {}: {bad:?}", c.suite);
            assert!(c.records.len() > 3);
        }
    }
}
