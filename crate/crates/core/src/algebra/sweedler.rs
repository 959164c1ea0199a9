//! Iterated coproducts and the induced maps `x ↦ Φ^{⊗p}(x)` on tensor powers.

use super::words::{checked_pow, kron_vecs, word_of};
use super::{CoalgebraSpec, Measuring};
use crate::error::Result;
use crate::linalg::{Matrix, Rational, SparseAcc, SparseVec};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Terms of `Δ^{p-1}(x)` in `C^{⊗p}`, sorted by word. For `p = 0` the single
/// term is the empty word with coefficient `ε(x)`.
pub fn iterated_coproduct(c: &CoalgebraSpec, x: &SparseVec, p: usize) -> Vec<(Vec<usize>, Rational)> {
    if p == 0 {
        let e = c.counit_of(x);
        return if e.is_zero() { Vec::new() } else { vec![(Vec::new(), e)] };
    }
    let n = c.dim();
    let mut terms: BTreeMap<Vec<usize>, Rational> = x.iter().map(|(i, a)| (vec![i], a.clone())).collect();
    for _ in 1..p {
        let mut next: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
        for (word, a) in terms {
            let (&last, head) = word.split_last().expect("nonempty word");
            for (yz, b) in c.comult_basis(last).iter() {
                let mut w = head.to_vec();
                w.push(yz / n);
                w.push(yz % n);
                *next.entry(w).or_insert_with(Rational::zero) += &a * b;
            }
        }
        next.retain(|_, v| !v.is_zero());
        terms = next;
    }
    terms.into_iter().collect()
}

/// Image of a tensor `v ∈ A^{⊗p}` under `x`, i.e. `Σ x₍₁₎(a_1) ⊗ ... ⊗ x₍ₚ₎(a_p)`.
pub fn apply_measuring_tensor(m: &Measuring, x: &SparseVec, p: usize, v: &SparseVec) -> SparseVec {
    let terms = iterated_coproduct(&m.coalgebra, x, p);
    apply_terms(m, &terms, p, v)
}

pub(crate) fn apply_terms(m: &Measuring, terms: &[(Vec<usize>, Rational)], p: usize, v: &SparseVec) -> SparseVec {
    let (d, dt) = (m.source.dim(), m.target.dim());
    let mut acc = SparseAcc::new();
    for (idx, a) in v.iter() {
        let word = word_of(idx, d, p);
        for (ys, c) in terms {
            let cols: Vec<&SparseVec> = ys.iter().zip(&word).map(|(&y, &w)| m.phi[y].column(w)).collect();
            acc.add_vec(&kron_vecs(&cols, dt), &(a * c));
        }
    }
    acc.finish()
}

/// The matrix of `x` acting on `A^{⊗p} → A′^{⊗p}`.
pub fn tensor_power_map(m: &Measuring, x: &SparseVec, p: usize, cap: usize) -> Result<Matrix> {
    let cols = checked_pow(m.source.dim(), p, cap, "tensor power of the source")?;
    let rows = checked_pow(m.target.dim(), p, cap, "tensor power of the target")?;
    let terms = iterated_coproduct(&m.coalgebra, x, p);
    Ok(Matrix::from_fn(rows, cols, |j| apply_terms(m, &terms, p, &SparseVec::unit(j))))
}

/// `Σ x₍₁₎(e_{w_1}) ⊗ ... ⊗ x₍ₚ₎(e_{w_p})` expanded into basis words of the target,
/// for the terms of `Δ^{p-1}(x)` and per-element matrices `phi`. Words may repeat.
pub fn expand_word(terms: &[(Vec<usize>, Rational)], phi: &[Matrix], word: &[usize]) -> Vec<(Vec<usize>, Rational)> {
    let mut out = Vec::new();
    for (ys, c) in terms {
        let mut acc: Vec<(Vec<usize>, Rational)> = vec![(Vec::with_capacity(word.len()), c.clone())];
        for (&y, &w) in ys.iter().zip(word) {
            let col = phi[y].column(w);
            let mut next = Vec::with_capacity(acc.len() * col.nnz());
            for (v, a) in &acc {
                for (t, b) in col.iter() {
                    let mut v2 = v.clone();
                    v2.push(t);
                    next.push((v2, a * b));
                }
            }
            acc = next;
            if acc.is_empty() {
                break;
            }
        }
        out.extend(acc);
    }
    out
}
