use super::{AlgebraSpec, Measuring};
use crate::linalg::{Matrix, SparseVec};
use std::sync::Arc;

/// Index of `E_ij ⊗ e_k` in `M_r(A)`.
pub fn mat_index(r: usize, d: usize, i: usize, j: usize, k: usize) -> usize {
    (i * r + j) * d + k
}

/// `M_r(A)` with basis `E_ij ⊗ e_k`; carries the transpose-conjugate
/// involution `(ᵗα)_ij = (α_ji)^` when `A` has an involution.
pub fn matrix_algebra(a: &AlgebraSpec, r: usize) -> AlgebraSpec {
    let d = a.dim();
    let mut basis = Vec::with_capacity(r * r * d);
    for i in 0..r {
        for j in 0..r {
            for l in &a.basis {
                basis.push(format!("E{}{}:{}", i + 1, j + 1, l));
            }
        }
    }
    let n = r * r * d;
    let mut mult = Vec::with_capacity(n * n);
    for (i, j, k) in triples(r, d) {
        for (i2, l, k2) in triples(r, d) {
            if j != i2 {
                mult.push(SparseVec::new());
            } else {
                mult.push(a.mul_basis(k, k2).map_indices(|t| mat_index(r, d, i, l, t)));
            }
        }
    }
    let unit = SparseVec::from_entries(
        (0..r).flat_map(|i| a.unit.iter().map(move |(t, c)| (mat_index(r, d, i, i, t), c.clone()))).collect(),
    );
    let commutative = a.commutative && r == 1;
    let spec = AlgebraSpec::new(format!("M{r}({})", a.name), basis, mult, unit, commutative)
        .expect("matrix algebra structure is well formed");
    match &a.involution {
        None => spec,
        Some(inv) => {
            let cols = triples(r, d)
                .map(|(i, j, k)| inv.column(k).map_indices(|t| mat_index(r, d, j, i, t)))
                .collect();
            spec.with_involution(Matrix::from_columns(n, cols)).expect("shape")
        }
    }
}

fn triples(r: usize, d: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..r).flat_map(move |i| (0..r).flat_map(move |j| (0..d).map(move |k| (i, j, k))))
}

/// Entrywise extension `M_r(Φ)` of a measuring.
pub fn matrix_measuring(m: &Measuring, r: usize) -> Measuring {
    let src = Arc::new(matrix_algebra(&m.source, r));
    let tgt = Arc::new(matrix_algebra(&m.target, r));
    let block = Matrix::identity(r * r);
    let phi = m.phi.iter().map(|p| block.kron(p)).collect();
    let mut out = Measuring::new(format!("M{r}({})", m.name), m.coalgebra.clone(), src, tgt, phi)
        .expect("matrix measuring shape");
    out.involutive = m.involutive;
    out
}
