//! The bundled corpus of small algebras, coalgebras and measurings.

use crate::algebra::{matrix_algebra, AlgebraSpec, CoalgebraSpec, Measuring};
use crate::linalg::{q, Matrix, SparseVec};
use std::sync::Arc;

fn e(i: usize) -> SparseVec {
    SparseVec::unit(i)
}

/// `Q[x]/(x^k)` with basis `1, x, ..., x^{k-1}` and the trivial involution.
pub fn truncated_polynomial(name: &str, k: usize) -> AlgebraSpec {
    let basis = (0..k)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let mult = (0..k).flat_map(|i| (0..k).map(move |j| if i + j < k { e(i + j) } else { SparseVec::new() })).collect();
    AlgebraSpec::new(name, basis, mult, e(0), true).unwrap().with_involution(Matrix::identity(k)).unwrap()
}

pub fn rationals() -> AlgebraSpec {
    truncated_polynomial("Q", 1)
}

/// `Q[Z/2]` with the involution `g ↦ g^{-1}`, which is trivial on the basis.
pub fn group_algebra_z2() -> AlgebraSpec {
    let mult = vec![e(0), e(1), e(1), e(0)];
    AlgebraSpec::new("z2", vec!["1".into(), "g".into()], mult, e(0), true)
        .unwrap()
        .with_involution(Matrix::identity(2))
        .unwrap()
}

/// `Q[Z/2]` with the involution `g ↦ -g`.
pub fn group_algebra_z2_signed() -> AlgebraSpec {
    let inv = Matrix::from_i64_rows(&[&[1, 0], &[0, -1]]);
    let mult = vec![e(0), e(1), e(1), e(0)];
    AlgebraSpec::new("z2sign", vec!["1".into(), "g".into()], mult, e(0), true).unwrap().with_involution(inv).unwrap()
}

/// `Q[x,y]/(x,y)²` with basis `1, x, y`, the smallest algebra here with `Ω² ≠ 0`.
pub fn square_zero_plane() -> AlgebraSpec {
    let z = SparseVec::new;
    let mult = vec![e(0), e(1), e(2), e(1), z(), z(), e(2), z(), z()];
    AlgebraSpec::new("sqzero2", vec!["1".into(), "x".into(), "y".into()], mult, e(0), true)
        .unwrap()
        .with_involution(Matrix::identity(3))
        .unwrap()
}

/// Upper-triangular 2×2 matrices, basis `e11, e12, e22`.
pub fn upper_triangular() -> AlgebraSpec {
    let z = SparseVec::new;
    // Rows e11, e12, e22 times columns e11, e12, e22.
    let mult = vec![e(0), e(1), z(), z(), z(), e(1), z(), z(), e(2)];
    let unit = SparseVec::from_entries(vec![(0, q(1)), (2, q(1))]);
    AlgebraSpec::new("ut2", vec!["e11".into(), "e12".into(), "e22".into()], mult, unit, false).unwrap()
}

/// `M_2(Q)` with the transpose involution.
pub fn matrices_2x2() -> AlgebraSpec {
    let mut m = matrix_algebra(&rationals(), 2);
    m.name = "m2".into();
    m.basis = vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()];
    m
}

/// One-dimensional coalgebra `K` with `Δ1 = 1 ⊗ 1`; measurings from it are algebra maps.
pub fn trivial_coalgebra() -> CoalgebraSpec {
    CoalgebraSpec::new("K", vec!["1".into()], vec![e(0)], e(0), true).unwrap()
}

/// Basis `g, d` with `g` group-like and `Δd = g ⊗ d + d ⊗ g`.
pub fn derivation_coalgebra() -> CoalgebraSpec {
    let comult = vec![e(0), SparseVec::from_entries(vec![(1, q(1)), (2, q(1))])];
    CoalgebraSpec::new("gd", vec!["g".into(), "d".into()], comult, e(0), true).unwrap()
}

/// Dual of upper-triangular matrices: `Δx12 = x11 ⊗ x12 + x12 ⊗ x22`; not cocommutative.
pub fn triangular_coalgebra(claim_cocommutative: bool) -> CoalgebraSpec {
    let comult = vec![e(0), SparseVec::from_entries(vec![(1, q(1)), (5, q(1))]), e(8)];
    let counit = SparseVec::from_entries(vec![(0, q(1)), (2, q(1))]);
    CoalgebraSpec::new("tri", vec!["x11".into(), "x12".into(), "x22".into()], comult, counit, claim_cocommutative)
        .unwrap()
}

/// The bundled objects, in a fixed order.
#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub algebras: Vec<Arc<AlgebraSpec>>,
    pub coalgebras: Vec<Arc<CoalgebraSpec>>,
    pub measurings: Vec<Arc<Measuring>>,
}

impl Corpus {
    pub fn algebra(&self, name: &str) -> Option<&Arc<AlgebraSpec>> {
        self.algebras.iter().find(|a| a.name == name)
    }

    pub fn coalgebra(&self, name: &str) -> Option<&Arc<CoalgebraSpec>> {
        self.coalgebras.iter().find(|a| a.name == name)
    }

    pub fn measuring(&self, name: &str) -> Option<&Arc<Measuring>> {
        self.measurings.iter().find(|a| a.name == name)
    }
}

fn measuring(
    name: &str,
    c: &Arc<CoalgebraSpec>,
    src: &Arc<AlgebraSpec>,
    tgt: &Arc<AlgebraSpec>,
    phi: Vec<Matrix>,
    involutive: bool,
) -> Arc<Measuring> {
    let mut m = Measuring::new(name, c.clone(), src.clone(), tgt.clone(), phi).unwrap();
    m.involutive = involutive;
    Arc::new(m)
}

pub fn bundled() -> Corpus {
    let qq = Arc::new(rationals());
    let dual = Arc::new(truncated_polynomial("dualnum", 2));
    let t3 = Arc::new(truncated_polynomial("trunc3", 3));
    let z2 = Arc::new(group_algebra_z2());
    let z2s = Arc::new(group_algebra_z2_signed());
    let sq = Arc::new(square_zero_plane());
    let ut = Arc::new(upper_triangular());
    let m2 = Arc::new(matrices_2x2());
    let k = Arc::new(trivial_coalgebra());
    let gd = Arc::new(derivation_coalgebra());

    let mut ms = Vec::new();
    for a in [&qq, &dual, &t3, &z2, &z2s, &sq, &ut, &m2] {
        let inv = a.involution.is_some();
        ms.push(measuring(&format!("id-{}", a.name), &k, a, a, vec![Matrix::identity(a.dim())], inv));
    }
    // Augmentations onto Q.
    let aug = |row: &[i64]| Matrix::from_i64_rows(&[row]);
    ms.push(measuring("aug-dualnum", &k, &dual, &qq, vec![aug(&[1, 0])], true));
    ms.push(measuring("aug-trunc3", &k, &t3, &qq, vec![aug(&[1, 0, 0])], true));
    ms.push(measuring("aug-z2", &k, &z2, &qq, vec![aug(&[1, 1])], true));
    ms.push(measuring("aug-sqzero2", &k, &sq, &qq, vec![aug(&[1, 0, 0])], true));
    // Unit inclusions.
    for a in [&dual, &t3, &z2, &sq, &ut, &m2] {
        let col = Matrix::from_columns(a.dim(), vec![a.unit.clone()]);
        ms.push(measuring(&format!("unit-{}", a.name), &k, &qq, a, vec![col], a.involution.is_some()));
    }
    // Algebra endomorphisms.
    ms.push(measuring(
        "scale-dualnum",
        &k,
        &dual,
        &dual,
        vec![Matrix::from_i64_rows(&[&[1, 0], &[0, 2]])],
        true,
    ));
    ms.push(measuring(
        "square-trunc3",
        &k,
        &t3,
        &t3,
        vec![Matrix::from_i64_rows(&[&[1, 0, 0], &[0, 0, 0], &[0, 1, 0]])],
        true,
    ));
    ms.push(measuring(
        "swap-sqzero2",
        &k,
        &sq,
        &sq,
        vec![Matrix::from_i64_rows(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]])],
        true,
    ));
    // Derivation measurings: g ↦ identity, d ↦ a derivation.
    ms.push(measuring("der-Q", &gd, &qq, &qq, vec![Matrix::identity(1), Matrix::zeros(1, 1)], true));
    ms.push(measuring(
        "euler-dualnum",
        &gd,
        &dual,
        &dual,
        vec![Matrix::identity(2), Matrix::from_i64_rows(&[&[0, 0], &[0, 1]])],
        true,
    ));
    ms.push(measuring(
        "euler-trunc3",
        &gd,
        &t3,
        &t3,
        vec![Matrix::identity(3), Matrix::from_i64_rows(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 2]])],
        true,
    ));
    ms.push(measuring(
        "euler-sqzero2",
        &gd,
        &sq,
        &sq,
        vec![Matrix::identity(3), Matrix::from_i64_rows(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1]])],
        true,
    ));
    ms.push(measuring("der-z2", &gd, &z2, &z2, vec![Matrix::identity(2), Matrix::zeros(2, 2)], true));
    // Tangent vector at the augmentation: d(x) = 1.
    ms.push(measuring(
        "tangent-dualnum",
        &gd,
        &dual,
        &qq,
        vec![Matrix::from_i64_rows(&[&[1, 0]]), Matrix::from_i64_rows(&[&[0, 1]])],
        true,
    ));
    // Inner derivation by the skew matrix E12 - E21 on M_2(Q).
    let x = SparseVec::from_entries(vec![(1, q(1)), (2, q(-1))]);
    let ad = {
        let l = m2.left_mult(&x);
        let r = Matrix::from_fn(4, 4, |j| m2.mul(&SparseVec::unit(j), &x));
        l.sub(&r)
    };
    ms.push(measuring("inner-m2", &gd, &m2, &m2, vec![Matrix::identity(4), ad], true));

    // g ↦ -g commutes with the signed involution.
    ms.push(measuring("flip-z2sign", &k, &z2s, &z2s, vec![Matrix::from_i64_rows(&[&[1, 0], &[0, -1]])], true));

    Corpus {
        algebras: vec![qq, dual, t3, z2, z2s, sq, ut, m2],
        coalgebras: vec![k, gd],
        measurings: ms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{validate_algebra, validate_coalgebra, validate_measuring};

    #[test]
    fn bundled_corpus_validates() {
        let c = bundled();
        for a in &c.algebras {
            assert!(validate_algebra(a).is_ok(), "{:?}", validate_algebra(a));
        }
        for k in &c.coalgebras {
            assert!(validate_coalgebra(k).is_ok());
        }
        for m in &c.measurings {
            let r = validate_measuring(m);
            assert!(r.is_ok(), "{r:?}");
        }
    }

    #[test]
    fn negative_controls_are_caught() {
        // x·x = 1 breaks associativity: (x x) x^2 = x^2 but x (x x^2) = 0.
        let base = truncated_polynomial("broken", 3);
        let mult = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| if (i, j) == (1, 1) { e(0) } else { base.mul_basis(i, j).clone() })
            .collect();
        let broken = AlgebraSpec::new("broken", base.basis.clone(), mult, e(0), true).unwrap();
        let r = validate_algebra(&broken);
        assert_eq!(r.violations[0].check, "associativity");

        let tri = triangular_coalgebra(true);
        assert_eq!(validate_coalgebra(&tri).violations[0].check, "cocommutativity");
        assert!(validate_coalgebra(&triangular_coalgebra(false)).is_ok());

        let k = Arc::new(trivial_coalgebra());
        let z2 = Arc::new(group_algebra_z2());
        let z2s = Arc::new(group_algebra_z2_signed());
        assert!(validate_algebra(&z2s).is_ok());
        let m = measuring("bad", &k, &z2, &z2s, vec![Matrix::identity(2)], true);
        let r = validate_measuring(&m);
        assert_eq!(r.violations[0].check, "involution compatibility");
    }
}
