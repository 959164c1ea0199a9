use super::*;
use crate::algebra::words::{pow, word_index, word_of};
use crate::corpus::bundled;
use crate::linalg::{q, rank, Matrix, Rational, SparseVec};
use num_traits::One;

/// `Σ_σ sgn(σ) σ / n!` on `A^{⊗n}` from a direct permutation sum.
fn antisymmetrizer(d: usize, n: usize) -> Matrix {
    let perms = all_perms(n);
    let mut fact = Rational::one();
    for k in 1..=n {
        fact *= Rational::from_integer((k as i64).into());
    }
    Matrix::from_fn(pow(d, n), pow(d, n), |j| {
        let w = word_of(j, d, n);
        let mut acc = crate::linalg::SparseAcc::new();
        for (p, s) in &perms {
            acc.add(word_index(&permute_word(&w, p), d), Rational::from_integer((*s).into()) / &fact);
        }
        acc.finish()
    })
}

fn all_perms(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in all_perms(n - 1) {
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            // inserting the largest element at `pos` adds `len - pos` inversions
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((v, sign));
        }
    }
    out
}

#[test]
fn convolution_unit_and_degree_two_square() {
    let d = 2;
    let id = GradedEnd::identity(d, 3);
    let unit = GradedEnd::unit(d, 3);
    assert_eq!(id.convolve(&unit), id);
    assert_eq!(unit.convolve(&id), id);
    let f = id.sub(&unit);
    let ff = f.convolve(&f);
    // (f⊙f)(a, b) = (a, b) - (b, a)
    let w = word_index(&[0, 1], d);
    let col = ff.parts[2].column(w);
    assert_eq!(col.coeff(w), q(1));
    assert_eq!(col.coeff(word_index(&[1, 0], d)), q(-1));
    // On degree one the convolution of maps killing H_0 is additive.
    assert_eq!(f.convolve(&f).parts[1], Matrix::zeros(2, 2));
}

#[test]
fn convolution_is_associative() {
    let d = 2;
    let id = GradedEnd::identity(d, 3);
    let f = id.sub(&GradedEnd::unit(d, 3));
    let g = GradedEnd { d, parts: f.parts.iter().enumerate().map(|(n, m)| m.scaled(&q(n as i64 + 1))).collect() };
    let h = f.convolve(&g);
    assert_eq!(h.convolve(&f), f.convolve(&g.convolve(&f)));
}

#[test]
fn eulerian_family_is_a_partition_of_unity() {
    for d in [1, 2, 3] {
        let e = eulerian_idempotents(d, 4, 5000).unwrap();
        assert_eq!(e.defect(), None, "d = {d}");
        assert_eq!(e.get(1, 1), Matrix::identity(d));
        for n in 0..=4 {
            assert_eq!(e.get(n, n), antisymmetrizer(d, n), "top idempotent in degree {n}");
        }
    }
}

#[test]
fn lambda_splits_hochschild_and_mixed_complexes() {
    let c = bundled();
    for name in ["Q", "dualnum", "trunc3", "z2"] {
        let l = Lambda::new(c.algebra(name).unwrap().clone(), 4, 5000).unwrap();
        assert_eq!(l.splitting_defect(), None, "{name}");
        assert_eq!(l.mixed_splitting_defect(), None, "{name}");
        let hh = l.hh(3).unwrap();
        let p = l.hh_idempotents(&hh).unwrap();
        for (n, row) in summand_dims(&p).iter().enumerate() {
            assert_eq!(row.iter().sum::<usize>(), hh[n].dim(), "{name} HH_{n}");
        }
        for i in 0..=3 {
            let sc = l.summand_complex(i).unwrap();
            for n in 0..=3 {
                let want = if i <= n { rank(&p[n][i]) } else { 0 };
                assert_eq!(sc.homology(n).unwrap().dim(), want, "{name} HH_{n}^({i})");
            }
        }
        let hc = l.hc(2).unwrap();
        let pc = l.hc_idempotents(&hc).unwrap();
        for (n, row) in summand_dims(&pc).iter().enumerate() {
            assert_eq!(row.iter().sum::<usize>(), hc[n].dim(), "{name} HC_{n}");
        }
    }
}

#[test]
fn hh_one_is_its_first_summand() {
    let c = bundled();
    let l = Lambda::new(c.algebra("dualnum").unwrap().clone(), 3, 5000).unwrap();
    let hh = l.hh(2).unwrap();
    let p = l.hh_idempotents(&hh).unwrap();
    assert_eq!(rank(&p[1][1]), hh[1].dim());
}

#[test]
fn shuffle_leibniz_rule() {
    let c = bundled();
    let a = c.algebra("trunc3").unwrap();
    let cm = crate::cyclic::CyclicModule::new(a.clone(), 3, 5000).unwrap();
    for (p, qq) in [(1, 1), (1, 2), (0, 2), (2, 1)] {
        for i in 0..cm.dim(p) {
            for j in 0..cm.dim(qq) {
                let (u, v) = (SparseVec::unit(i), SparseVec::unit(j));
                let lhs = cm.apply_b(p + qq, &shuffle_product(a, p, &u, qq, &v));
                let mut rhs = SparseVec::new();
                if p > 0 {
                    rhs = rhs.add(&shuffle_product(a, p - 1, &cm.apply_b(p, &u), qq, &v));
                }
                if qq > 0 {
                    let s = if p % 2 == 0 { q(1) } else { q(-1) };
                    rhs = rhs.add(&shuffle_product(a, p, &u, qq - 1, &cm.apply_b(qq, &v)).scaled(&s));
                }
                assert_eq!(lhs, rhs, "({p},{qq}) basis {i} {j}");
            }
        }
    }
}

mod measuring {
    use super::super::*;
    use crate::corpus::bundled;
    use crate::report::Status;

    fn all_pass(c: crate::report::Checks) {
        let fails: Vec<_> = c.records.iter().filter(|r| r.status == Status::Fail).collect();
        assert!(fails.is_empty(), "{}: {:?}", c.suite, fails);
        assert!(c.records.iter().any(|r| r.status == Status::Pass), "{}", c.suite);
    }

    #[test]
    fn measuring_suites_pass_on_corpus() {
        let corpus = bundled();
        for name in ["euler-dualnum", "tangent-dualnum", "aug-dualnum", "der-z2"] {
            let m = corpus.measuring(name).unwrap();
            all_pass(verify_star_measuring(m, 4, 5000));
            all_pass(verify_comodule_measuring(m, 4, 5000));
            all_pass(verify_eulerian_commute(m, 4, 5000));
            all_pass(verify_hh_summands(m, 4, 5000));
            all_pass(verify_hc_summands(m, 4, 5000));
            all_pass(verify_lambda_ladder(m, 5, 5000));
        }
    }
}

mod corrupted {
    use super::super::*;
    use crate::algebra::Measuring;
    use crate::corpus::bundled;
    use crate::linalg::Matrix;
    use crate::report::Status;

    #[test]
    fn perturbed_measuring_fails_star_suite_with_witness() {
        let corpus = bundled();
        let m = corpus.measuring("euler-dualnum").unwrap();
        let d = Matrix::from_i64_rows(&[&[0, 0], &[1, 1]]);
        let bad = Measuring::new("bad", m.coalgebra.clone(), m.source.clone(), m.target.clone(), vec![m.phi[0].clone(), d]).unwrap();
        let c = verify_star_measuring(&bad, 3, 5000);
        let f = c.records.iter().find(|r| r.status == Status::Fail).expect("a failing record");
        assert!(f.witness.as_deref().is_some_and(|w| !w.is_empty()));
    }
}
