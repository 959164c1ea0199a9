use hhc_core::algebra::AlgebraSpec;
use hhc_core::corpus::bundled;
use hhc_core::cyclic::{cyclic_maps, hochschild_complex, CyclicModule};
use hhc_core::harness::{corpus_doc, parse_workspace};
use hhc_core::lambda::{eulerian_idempotents, shuffle_product};
use hhc_core::lie::{CeComplex, LieAlgebra};
use hhc_core::linalg::{format_rational, inverse, kernel_basis, parse_rational, q, rank, Matrix, Quotient, Rational, SparseVec};
use proptest::prelude::*;
use std::sync::Arc;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n) / q(d))
}

fn vector(dim: usize) -> impl Strategy<Value = SparseVec> {
    proptest::collection::vec(rational(), dim).prop_map(|v| SparseVec::from_dense(&v))
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(rational(), c), r).prop_map(|rows| Matrix::from_rows(&rows))
    })
}

fn commutative_names() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just("Q"), Just("dualnum"), Just("trunc3"), Just("z2"), Just("sqzero2")]
}

fn algebra(name: &str) -> Arc<AlgebraSpec> {
    bundled().algebra(name).expect("bundled algebra").clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rationals_round_trip(r in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn rank_nullity(m in matrix(6)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.cols(), m.cols());
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(rank(&k), k.cols());
    }

    #[test]
    fn inverse_is_two_sided(m in (1usize..=5).prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(rational(), n), n))) {
        let m = Matrix::from_rows(&m);
        let n = m.rows();
        match inverse(&m) {
            Ok(inv) => {
                prop_assert_eq!(m.mul(&inv), Matrix::identity(n));
                prop_assert_eq!(inv.mul(&m), Matrix::identity(n));
            }
            Err(_) => prop_assert!(rank(&m) < n),
        }
    }

    #[test]
    fn quotient_projection_splits(m in matrix(5)) {
        let quot = Quotient::by_span(m.rows(), m.columns().to_vec());
        prop_assert_eq!(quot.dim() + rank(&m), m.rows());
        prop_assert!(quot.proj().mul(&m).is_zero());
        prop_assert_eq!(quot.proj().mul(&quot.lift()), Matrix::identity(quot.dim()));
    }

    #[test]
    fn shuffle_is_graded_commutative((name, p, u, v) in commutative_names().prop_flat_map(|n| (0usize..=2).prop_flat_map(move |p| {
        let d = algebra(n).dim();
        (Just(n), Just(p), vector(d.pow(p as u32 + 1)), vector(d.pow(3 - p as u32)))
    }))) {
        let a = algebra(name);
        let qd = 2 - p;
        let sign = if (p * qd) % 2 == 0 { q(1) } else { q(-1) };
        prop_assert_eq!(shuffle_product(&a, p, &u, qd, &v), shuffle_product(&a, qd, &v, p, &u).scaled(&sign));
    }

    #[test]
    fn b_is_a_derivation_of_the_shuffle_product((name, u, v) in commutative_names().prop_flat_map(|n| {
        let d = algebra(n).dim();
        (Just(n), vector(d * d), vector(d * d))
    })) {
        let a = algebra(name);
        let cm = CyclicModule::new(a.clone(), 2, 5000).unwrap();
        let lhs = cm.hochschild_b(2).apply(&shuffle_product(&a, 1, &u, 1, &v));
        let rhs = shuffle_product(&a, 0, &cm.hochschild_b(1).apply(&u), 1, &v)
            .sub(&shuffle_product(&a, 1, &u, 0, &cm.hochschild_b(1).apply(&v)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn eulerian_idempotents_partition_vectors(d in 1usize..=3, n in 1usize..=3, seed in proptest::collection::vec(rational(), 27)) {
        let e = eulerian_idempotents(d, 3, 5000).unwrap();
        let v = SparseVec::from_dense(&seed[..d.pow(n as u32)]);
        let mut sum = SparseVec::new();
        for i in 0..=n {
            let part = e.get(n, i).apply(&v);
            prop_assert_eq!(e.get(n, i).apply(&part), part.clone());
            sum = sum.add(&part);
        }
        prop_assert_eq!(sum, v);
    }

    #[test]
    fn measuring_maps_are_chain_maps_linear_in_the_coalgebra((idx, x) in (0..bundled().measurings.len()).prop_flat_map(|i| {
        (Just(i), vector(bundled().measurings[i].coalgebra.dim()))
    })) {
        let m = bundled().measurings[idx].clone();
        let f = cyclic_maps(&m, &x, 2, 5000).unwrap();
        let s = hochschild_complex(&CyclicModule::new(m.source.clone(), 2, 5000).unwrap()).unwrap();
        let t = hochschild_complex(&CyclicModule::new(m.target.clone(), 2, 5000).unwrap()).unwrap();
        for n in 1..=2 {
            prop_assert_eq!(t.d(n).mul(&f[n]), f[n - 1].mul(s.d(n)));
        }
        let mut sum = Matrix::zeros(f[2].rows(), f[2].cols());
        for (k, c) in x.iter() {
            sum = sum.add(&cyclic_maps(&m, &SparseVec::unit(k), 2, 5000).unwrap()[2].scaled(c));
        }
        prop_assert_eq!(&f[2], &sum);
    }

    #[test]
    fn jacobi_on_random_gl2_elements((name, x, y, z) in commutative_names().prop_flat_map(|n| {
        let d = 4 * algebra(n).dim();
        (Just(n), vector(d), vector(d), vector(d))
    })) {
        let g = LieAlgebra::gl(&algebra(name), 2);
        let jac = g.bracket(&x, &g.bracket(&y, &z)).add(&g.bracket(&y, &g.bracket(&z, &x))).add(&g.bracket(&z, &g.bracket(&x, &y)));
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn ce_differential_squares_to_zero_on_vectors(name in commutative_names(), entries in proptest::collection::vec((0usize..1000, rational()), 1..8)) {
        let ce = CeComplex::new(Arc::new(LieAlgebra::gl(&algebra(name), 2)), 3, 5000).unwrap();
        let dim = ce.dim(3);
        let v = SparseVec::from_entries(entries.into_iter().map(|(i, c)| (i % dim, c)).collect());
        prop_assert!(ce.complex.d(2).apply(&ce.complex.d(3).apply(&v)).is_zero());
    }

    #[test]
    fn workspace_documents_round_trip(keep in proptest::collection::vec(any::<bool>(), 29)) {
        let mut doc = corpus_doc(&bundled());
        let mut keep = keep.into_iter().cycle();
        doc.measurings.retain(|_| keep.next().unwrap());
        let ws = parse_workspace(&serde_json::to_string(&doc).unwrap()).unwrap();
        prop_assert_eq!(corpus_doc(&ws.corpus), doc);
    }
}
