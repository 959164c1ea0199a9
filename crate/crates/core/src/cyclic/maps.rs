//! Chain maps induced by a measuring on the cyclic-type complexes.

use super::{CyclicModule, Normalization};
use crate::algebra::{tensor_power_map, Measuring};
use crate::complex::TotComplex;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Quotient, SparseVec};

/// `x` acting degreewise on `C_n(A) → C_n(A′)` for `n = 0..=top`.
pub fn cyclic_maps(m: &Measuring, x: &SparseVec, top: usize, cap: usize) -> Result<Vec<Matrix>> {
    m.require_cocommutative()?;
    (0..=top).map(|n| tensor_power_map(m, x, n + 1, cap)).collect()
}

/// Degreewise maps on a total complex whose blocks are copies of one graded space.
pub fn tot_maps(src: &TotComplex, dst: &TotComplex, graded: &[Matrix]) -> Vec<Matrix> {
    (0..src.blocks.len()).map(|n| src.block_diagonal(dst, n, |b| graded[b.degree].clone())).collect()
}

/// `π' f σ` on normalized chains; fails if `f` does not preserve degenerate chains.
pub fn normalized_maps(f: &[Matrix], src: &Normalization, dst: &Normalization) -> Result<Vec<Matrix>> {
    f.iter().enumerate().map(|(n, m)| normalized_map(m, n, src, dst)).collect()
}

/// One degree of [`normalized_maps`].
pub fn normalized_map(m: &Matrix, n: usize, src: &Normalization, dst: &Normalization) -> Result<Matrix> {
    let bar = dst.proj[n].mul(m).mul(&src.lift[n]);
    let lhs = dst.proj[n].mul(m);
    let rhs = bar.mul(&src.proj[n]);
    match lhs.first_difference(&rhs) {
        None => Ok(bar),
        Some(d) => Err(Error::RelationNotPreserved(format!("degenerate chains in degree {n}: {d}"))),
    }
}

/// Descends degreewise maps to quotients, checking that relations go to relations.
pub fn quotient_maps(f: &[Matrix], src: &[Quotient], dst: &[Quotient]) -> Result<Vec<Matrix>> {
    f.iter()
        .enumerate()
        .map(|(n, m)| {
            let bar = Quotient::descend(m, &src[n], &dst[n]);
            let lhs = dst[n].proj().mul(m);
            let rhs = bar.mul(src[n].proj());
            match lhs.first_difference(&rhs) {
                None => Ok(bar),
                Some(d) => Err(Error::RelationNotPreserved(format!("quotient relations in degree {n}: {d}"))),
            }
        })
        .collect()
}

/// Checks that `x` commutes with every face, degeneracy and the cyclic operator.
pub fn cyclic_morphism_defect(
    src: &CyclicModule,
    dst: &CyclicModule,
    f: &[Matrix],
) -> Option<String> {
    let top = src.top.min(dst.top).min(f.len() - 1);
    for n in 0..=top {
        if let Some(d) = dst.cyclic_op(n).mul(&f[n]).first_difference(&f[n].mul(&src.cyclic_op(n))) {
            return Some(format!("t_{n}: {d}"));
        }
        if n > 0 {
            for i in 0..=n {
                if let Some(d) = dst.face(n, i).mul(&f[n]).first_difference(&f[n - 1].mul(&src.face(n, i))) {
                    return Some(format!("d_{i} in degree {n}: {d}"));
                }
            }
        }
        if n < top {
            for j in 0..=n {
                if let Some(d) = dst.degeneracy(n, j).mul(&f[n]).first_difference(&f[n + 1].mul(&src.degeneracy(n, j))) {
                    return Some(format!("s_{j} in degree {n}: {d}"));
                }
            }
        }
    }
    None
}
