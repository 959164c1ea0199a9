use super::*;
use crate::algebra::words::{pow, word_index, word_of};
use crate::algebra::AlgebraSpec;
use crate::corpus::bundled;
use crate::cyclic::{hochschild_complex, CyclicModule};
use crate::linalg::{rank, solve, Matrix, Quotient, Rational, SparseAcc, SparseVec};
use crate::report::Status;
use num_traits::One;

/// `Ω^p` presented as `C_p(A)` modulo the Leibniz rule in the first
/// differential slot and antisymmetry of adjacent differential slots.
fn forms_oracle_dim(a: &AlgebraSpec, p: usize) -> usize {
    let d = a.dim();
    let total = pow(d, p + 1);
    let mut rel = Vec::new();
    for j in 0..total {
        let w = word_of(j, d, p + 1);
        for i in 1..p {
            let mut v = w.clone();
            v.swap(i, i + 1);
            rel.push(SparseVec::unit(j).add(&SparseVec::unit(word_index(&v, d))));
        }
    }
    // Leibniz: (a₀, xy, ...) - (a₀x, y, ...) - (a₀y, x, ...).
    if p >= 1 {
        for a0 in 0..d {
            for x in 0..d {
                for y in 0..d {
                    for rest in 0..pow(d, p - 1) {
                        let tail = word_of(rest, d, p - 1);
                        let mut acc = SparseAcc::new();
                        let word = |h: usize, s: usize| {
                            let mut v = vec![h, s];
                            v.extend_from_slice(&tail);
                            word_index(&v, d)
                        };
                        for (t, c) in a.mul_basis(x, y).iter() {
                            acc.add(word(a0, t), c.clone());
                        }
                        for (t, c) in a.mul_basis(a0, x).iter() {
                            acc.add(word(t, y), -c.clone());
                        }
                        for (t, c) in a.mul_basis(a0, y).iter() {
                            acc.add(word(t, x), -c.clone());
                        }
                        rel.push(acc.finish());
                    }
                }
            }
        }
    }
    Quotient::by_span(total, rel).dim()
}

#[test]
fn kahler_dimensions_match_presentation_oracle() {
    let c = bundled();
    let expected = [("Q", vec![1, 0, 0]), ("dualnum", vec![2, 1, 0]), ("trunc3", vec![3, 2, 0]), ("z2", vec![2, 0, 0]), ("sqzero2", vec![3, 3, 1])];
    for (name, dims) in expected {
        let a = c.algebra(name).unwrap();
        let f = Forms::new(a.clone(), 2, 5000).unwrap();
        let oracle: Vec<usize> = (0..=2).map(|p| forms_oracle_dim(a, p)).collect();
        assert_eq!(oracle, dims, "{name} oracle");
        assert_eq!(f.dims(), dims, "{name}");
    }
}

#[test]
fn universal_derivation_is_a_derivation() {
    let c = bundled();
    for name in ["dualnum", "trunc3", "sqzero2", "z2"] {
        let k = Kahler::new(c.algebra(name).unwrap().clone()).unwrap();
        let a = &k.algebra;
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = k.d.apply(a.mul_basis(i, j));
                let rhs = k.generator(i, j).add(&k.generator(j, i));
                assert_eq!(lhs, rhs, "{name} ({i}, {j})");
            }
        }
    }
    assert!(Kahler::new(c.algebra("ut2").unwrap().clone()).is_err());
}

#[test]
fn de_rham_complex() {
    let c = bundled();
    for name in ["Q", "dualnum", "trunc3", "sqzero2"] {
        let f = Forms::new(c.algebra(name).unwrap().clone(), 3, 5000).unwrap();
        for p in 1..3 {
            assert!(f.d[p].mul(&f.d[p - 1]).is_zero(), "{name} d² in degree {p}");
        }
        // Truncated polynomial algebras have the cohomology of a point.
        assert_eq!(f.de_rham(0).unwrap().dim(), 1, "{name}");
        assert_eq!(f.de_rham(1).unwrap().dim(), 0, "{name}");
    }
}

#[test]
fn pi_after_eps_is_factorial() {
    let c = bundled();
    let f = Forms::new(c.algebra("sqzero2").unwrap().clone(), 2, 5000).unwrap();
    let lhs = f.pi[2].mul(&antisymmetrizer(3, 2)).mul(&f.section[2]);
    assert_eq!(lhs, Matrix::scalar(1, Rational::from_integer(2.into())));
    assert_eq!(f.pi[1].mul(&antisymmetrizer(3, 1)).mul(&f.section[1]), Matrix::identity(3));
}

/// `δ` with the signs `(-1)^i` and `(-1)^{i+j-1}`, expanded term by term.
fn literal_delta(a: &AlgebraSpec, e: &LieTypeComplex, n: usize) -> Matrix {
    let d = a.dim();
    let sign = |k: usize| if k % 2 == 0 { Rational::one() } else { -Rational::one() };
    let cols = e.wedges[n].len().max(if n == 0 { 1 } else { 0 });
    Matrix::from_fn(e.dim(n - 1), d * cols, |j| {
        let mut w = vec![j / cols];
        w.extend_from_slice(&e.wedges[n].combos[j % cols]);
        let mut acc = SparseAcc::new();
        for i in 1..=n {
            let br = a.commutator(&SparseVec::unit(w[0]), &SparseVec::unit(w[i]));
            let rest: Vec<usize> = (1..=n).filter(|&k| k != i).map(|k| w[k]).collect();
            for (t, c) in br.iter() {
                let mut v = vec![t];
                v.extend_from_slice(&rest);
                acc.add_vec(&e.proj[n - 1].apply(&SparseVec::unit(word_index(&v, d))), &(c * sign(i)));
            }
            for k in i + 1..=n {
                let br = a.commutator(&SparseVec::unit(w[i]), &SparseVec::unit(w[k]));
                let rest: Vec<usize> = (1..=n).filter(|&l| l != i && l != k).map(|l| w[l]).collect();
                for (t, c) in br.iter() {
                    let mut v = vec![w[0], t];
                    v.extend_from_slice(&rest);
                    acc.add_vec(&e.proj[n - 1].apply(&SparseVec::unit(word_index(&v, d))), &(c * sign(i + k + 1)));
                }
            }
        }
        acc.finish()
    })
}

#[test]
fn lie_type_differential_against_oracles() {
    let c = bundled();
    for name in ["m2", "ut2", "dualnum"] {
        let a = c.algebra(name).unwrap().clone();
        let e = LieTypeComplex::new(a.clone(), 3, 5000).unwrap();
        let h = hochschild_complex(&CyclicModule::new(a.clone(), 3, 5000).unwrap()).unwrap();
        assert!(e.complex.square_zero_defect().is_none());
        for n in 1..=3 {
            // ε is injective, so δ is determined by b ∘ ε = ε ∘ δ.
            let be = h.d(n).mul(&e.eps[n]);
            let solved = Matrix::from_columns(e.dim(n - 1), be.columns().iter().map(|v| solve(&e.eps[n - 1], v).unwrap()).collect());
            assert_eq!(&solved, e.complex.d(n), "{name} n={n}");
            let lit = literal_delta(&a, &e, n);
            assert_eq!(lit, e.complex.d(n).neg(), "{name} n={n}");
            assert_eq!(rank(&lit), rank(e.complex.d(n)));
        }
        if a.commutative {
            assert!(e.complex.d(1).is_zero());
        }
    }
}

#[test]
fn permutation_signs() {
    let p = permutations(3);
    assert_eq!(p.len(), 6);
    assert_eq!(p.iter().filter(|(_, s)| *s == Rational::one()).count(), 3);
}

fn assert_suite(c: crate::report::Checks) {
    let bad: Vec<_> = c.records.iter().filter(|r| r.status == Status::Fail).collect();
    assert!(bad.is_empty(), "{} {}: {:?}", c.suite, c.subjects, bad);
    assert!(c.records.iter().filter(|r| r.status == Status::Pass).count() > 3, "{}", c.suite);
}

#[test]
fn measuring_suites_pass() {
    let c = bundled();
    for name in ["id-m2", "unit-ut2", "inner-m2", "euler-dualnum"] {
        assert_suite(verify_antisymmetrization(c.measuring(name).unwrap(), 3, 5000));
    }
    for name in ["euler-sqzero2", "swap-sqzero2", "aug-sqzero2", "tangent-dualnum", "euler-trunc3", "aug-z2"] {
        let m = c.measuring(name).unwrap();
        assert_suite(verify_eps_pi(m, 4, 5000));
        assert_suite(verify_pibar(m, 4, 5000));
    }
}
