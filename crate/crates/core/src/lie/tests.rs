use super::*;
use crate::algebra::{matrix_algebra, AlgebraSpec};
use crate::corpus::{bundled, matrices_2x2};
use crate::cyclic::{connes_complex, connes_quotients, CyclicModule};
use crate::linalg::{inverse, q, Matrix, SparseVec};
use crate::report::{Checks, Status};
use std::sync::Arc;

fn gl(name: &str, r: usize) -> Arc<LieAlgebra> {
    Arc::new(LieAlgebra::gl(bundled().algebra(name).unwrap(), r))
}

fn homology_dims(c: &crate::complex::ChainComplex) -> Vec<usize> {
    c.homologies().unwrap().iter().map(|h| h.dim()).collect()
}

#[test]
fn gl_brackets_are_lie() {
    for name in ["Q", "dualnum", "ut2", "z2"] {
        for r in [1, 2] {
            let g = gl(name, r);
            assert!(validate_lie(&g).is_ok(), "{}", g.name);
        }
    }
    assert!(gl("dualnum", 1).is_abelian());
    assert!(!gl("ut2", 1).is_abelian());
}

#[test]
fn wedge_dimensions() {
    let ce = CeComplex::new(gl("Q", 2), 4, 5000).unwrap();
    assert_eq!((0..=4).map(|n| ce.dim(n)).collect::<Vec<_>>(), vec![1, 4, 6, 4, 1]);
}

#[test]
fn abelian_differentials_vanish() {
    let g = gl("trunc3", 1);
    let ce = CeComplex::new(g.clone(), 3, 5000).unwrap();
    let cl = ClComplex::new(g, 3, 5000).unwrap();
    for n in 1..=3 {
        assert!(ce.complex.d(n).is_zero());
        assert!(cl.complex.d(n).is_zero());
    }
}

/// `gl_2(Q) = sl_2 ⊕ Q` and `H(sl_2) = Λ(e_3)`, so `H(gl_2) = Λ(e_1, e_3)`.
#[test]
fn chevalley_eilenberg_of_gl2() {
    let ce = CeComplex::new(gl("Q", 2), 5, 5000).unwrap();
    assert!(ce.complex.square_zero_defect().is_none());
    assert_eq!(homology_dims(&ce.complex)[..5], [1, 1, 0, 1, 1]);
}

/// Independent dense oracle: `d_CE` on `Λ^2 gl_2(Q)` from literal 2×2 matrices.
#[test]
fn ce_degree_two_against_dense_matrices() {
    let units: Vec<[[i64; 2]; 2]> = (0..4)
        .map(|k| {
            let mut m = [[0; 2]; 2];
            m[k / 2][k % 2] = 1;
            m
        })
        .collect();
    let mul = |a: &[[i64; 2]; 2], b: &[[i64; 2]; 2]| {
        let mut c = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                c[i][j] = (0..2).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        c
    };
    let ce = CeComplex::new(gl("Q", 2), 2, 5000).unwrap();
    for (k, c) in ce.wedges[2].combos.iter().enumerate() {
        let (x, y) = (&units[c[0]], &units[c[1]]);
        let (xy, yx) = (mul(x, y), mul(y, x));
        // d(x ∧ y) = [x, y]
        for t in 0..4 {
            let v = xy[t / 2][t % 2] - yx[t / 2][t % 2];
            assert_eq!(ce.complex.d(2).get(t, k), q(v), "{c:?} entry {t}");
        }
    }
}

#[test]
fn leibniz_of_abelian_is_tensor_algebra() {
    let cl = ClComplex::new(gl("dualnum", 1), 4, 5000).unwrap();
    assert_eq!(homology_dims(&cl.complex)[..4], [1, 2, 4, 8]);
}

#[test]
fn leibniz_differential_squares_to_zero_off_lie() {
    let g = Arc::new(non_lie_leibniz());
    assert!(validate_leibniz(&g).is_ok());
    assert!(!validate_lie(&g).is_ok());
    let cl = ClComplex::new(g, 4, 5000).unwrap();
    assert!(cl.complex.square_zero_defect().is_none());
}

#[test]
fn leibniz_homology_of_gl2() {
    // HL_1 = g/[g,g] = Q (trace) and HL_0 = Q.
    let cl = ClComplex::new(gl("Q", 2), 3, 5000).unwrap();
    assert!(cl.complex.square_zero_defect().is_none());
    assert_eq!(homology_dims(&cl.complex)[..2], [1, 1]);
}

#[test]
fn theta_in_degree_one() {
    let tt = ThetaTrace::new(bundled().algebra("Q").unwrap().clone(), 2, 1, 5000).unwrap();
    // θ(α₀ ∧ α₁) = (α₀, α₁) in C̃_1.
    let e12 = 1;
    let e21 = 2;
    let w = tt.theta_on_word(&[e12, e21]);
    let direct = tt.matrices.quots[1].project(&SparseVec::unit(e12 * 4 + e21));
    assert_eq!(w, direct);
    assert!(!w.is_zero());
}

#[test]
fn trace_of_one_by_one_is_identity() {
    let a = bundled().algebra("dualnum").unwrap().clone();
    let tt = ThetaTrace::new(a, 1, 2, 5000).unwrap();
    for n in 0..=2 {
        assert_eq!(tt.trace_chain[n].first_difference(&Matrix::identity(tt.base.cm.dim(n))), None);
    }
}

#[test]
fn trace_in_degree_zero_is_matrix_trace() {
    let a = bundled().algebra("dualnum").unwrap().clone();
    let tt = ThetaTrace::new(a, 2, 0, 5000).unwrap();
    let t = &tt.trace_chain[0];
    // E11:x ↦ x, E22:1 ↦ 1, E12:1 ↦ 0
    assert_eq!(t.get(1, 1), q(1));
    assert_eq!(t.get(0, 6), q(1));
    assert!(t.column(2).is_zero());
}

#[test]
fn morita_in_degree_zero() {
    let qq = Arc::new(crate::corpus::rationals());
    let m2 = Arc::new(matrix_algebra(&qq, 2));
    let cm = CyclicModule::new(m2, 1, 5000).unwrap();
    let qs = connes_quotients(&cm);
    let hc = connes_complex(&cm, &qs).unwrap();
    assert_eq!(hc.homology(0).unwrap().dim(), 1);
    let tt = ThetaTrace::new(qq, 2, 1, 5000).unwrap();
    let h = tt.matrices.complex.homology(0).unwrap();
    let hb = tt.base.complex.homology(0).unwrap();
    let f = crate::complex::induced_maps(&tt.trace[..1], &[h], &[hb]).unwrap();
    assert_eq!(f[0].shape(), (1, 1));
    assert!(inverse(&f[0]).is_ok());
}

#[test]
fn cyclic_words_of_size_three() {
    let u = CyclicWords::new(3);
    assert_eq!(u.len(), 2);
    assert!(u.defect().is_none());
    let cycles: Vec<_> = (0..2).map(|s| u.cycle(s)).collect();
    assert!(cycles.contains(&vec![1, 2, 0]));
    assert!(cycles.contains(&vec![2, 0, 1]));
    assert_eq!(CyclicWords::new(4).len(), 6);
}

#[test]
fn v_complex_retracts_onto_hochschild() {
    let v = VComplex::new(bundled().algebra("dualnum").unwrap().clone(), 3, 5000).unwrap();
    for n in 0..=3 {
        assert_eq!(v.zeta(n).mul(&v.iota(n)).first_difference(&Matrix::identity(v.cm.dim(n))), None);
    }
    let c = v.complex().unwrap();
    assert!(c.square_zero_defect().is_none());
    assert_eq!(v.dim(2), 2 * 8);
}

#[test]
fn v_homology_of_rationals() {
    let v = VComplex::new(Arc::new(crate::corpus::rationals()), 3, 5000).unwrap();
    let dims = homology_dims(&v.complex().unwrap());
    assert_eq!(dims[..3], [1, 0, 0]);
}

#[test]
fn coinvariants_of_gl2_rationals() {
    let qq = crate::corpus::rationals();
    let g = Arc::new(LieAlgebra::gl(&qq, 2));
    let ads = adjoint_matrices(&g, &scalar_matrices(&qq, 2));
    let ce = CeComplex::new(g, 4, 5000).unwrap();
    let co = Coinvariants::of_ce(&ce, &ads).unwrap();
    // Invariant theory: (Λ gl_2)_{gl_2} ≅ Λ(e_1, e_3).
    assert_eq!((0..=4).map(|n| co.dim(n)).collect::<Vec<_>>(), vec![1, 1, 0, 1, 1]);
    for n in 1..=4 {
        assert!(co.complex.d(n).is_zero());
    }
}

#[test]
fn lie_measuring_rejects_non_morphism() {
    let c = bundled();
    let m = c.measuring("inner-m2").unwrap();
    assert!(LieMeasuring::gl(m, 1).require_lie_measuring().is_ok());
    // A non-multiplicative linear map fails the bracket rule.
    let m2: AlgebraSpec = matrices_2x2();
    let m2 = Arc::new(m2);
    let k = c.coalgebra("K").unwrap().clone();
    let transpose = Matrix::from_i64_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
    let bad = crate::algebra::Measuring::new("transpose-m2", k, m2.clone(), m2, vec![transpose]).unwrap();
    let lm = LieMeasuring::gl(&bad, 1);
    assert!(!validate_lie_measuring(&lm).is_ok());
}

fn assert_suite(c: Checks) {
    let bad: Vec<_> = c.records.iter().filter(|r| r.status == Status::Fail).collect();
    assert!(bad.is_empty(), "{} {}: {:?}", c.suite, c.subjects, bad);
    assert!(c.records.iter().any(|r| r.status == Status::Pass), "{}", c.suite);
}

#[test]
fn ce_and_leibniz_suites_pass() {
    let c = bundled();
    for name in ["euler-dualnum", "aug-z2", "id-ut2", "tangent-dualnum"] {
        let m = c.measuring(name).unwrap();
        assert_suite(verify_ce_coproduct(m, 3, 5000));
        assert_suite(verify_leibniz_coproduct(m, 3, 5000));
    }
}

#[test]
fn theta_trace_suite_passes() {
    let c = bundled();
    for name in ["euler-dualnum", "aug-dualnum", "der-Q"] {
        assert_suite(verify_theta_trace(c.measuring(name).unwrap(), 2, 5000));
    }
}

#[test]
fn v_complex_suite_passes() {
    let c = bundled();
    for name in ["euler-dualnum", "aug-z2", "swap-sqzero2"] {
        assert_suite(verify_v_complex(c.measuring(name).unwrap(), 3, 5000));
    }
}

#[test]
fn coinvariant_suites_pass() {
    let c = bundled();
    for name in ["euler-dualnum", "aug-dualnum", "der-Q"] {
        let m = c.measuring(name).unwrap();
        assert_suite(verify_coinvariants(m, 2, 5000));
        assert_suite(verify_ce_coinvariant_products(m, 2, 5000));
        assert_suite(verify_cl_coinvariant_products(m, 2, 5000));
    }
}
