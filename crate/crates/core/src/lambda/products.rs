//! Shuffle product on normalized chains, the `∗` product on the normalized
//! total complex, and the action `HC'_p ⊗ HH_q → HH_{p+q}`.

use super::shuffle::shuffle_product;
use crate::algebra::AlgebraSpec;
use crate::complex::{MixedComplex, TotComplex};
use crate::cyclic::Normalization;
use crate::linalg::{Rational, SparseAcc, SparseVec};
use num_traits::One;

/// `π(σū × σv̄)` for normalized chains `ū ∈ C̄_p`, `v̄ ∈ C̄_q`.
pub fn shuffle_bar(alg: &AlgebraSpec, norm: &Normalization, p: usize, u: &SparseVec, q: usize, v: &SparseVec) -> SparseVec {
    let lu = norm.lift[p].apply(u);
    let lv = norm.lift[q].apply(v);
    norm.proj[p + q].apply(&shuffle_product(alg, p, &lu, q, &lv))
}

/// `ã ∗ b̃ = (Bã_p × b̃_q, Bã_p × b̃_{q-2}, ...)` in `Tot_{p+q+1}`.
pub fn star(
    alg: &AlgebraSpec,
    norm: &Normalization,
    mixed: &MixedComplex,
    tot: &TotComplex,
    p: usize,
    a: &SparseVec,
    q: usize,
    b: &SparseVec,
) -> SparseVec {
    let top_a = tot.component(p, 0, a);
    let ba = mixed.big_b[p].apply(&top_a);
    let mut acc = SparseAcc::new();
    for blk in &tot.blocks[q] {
        let bj = tot.component(q, blk.index, b);
        let prod = shuffle_bar(alg, norm, p + 1, &ba, blk.degree, &bj);
        acc.add_vec(&tot.embed(p + q + 1, blk.index, &prod), &Rational::one());
    }
    acc.finish()
}

/// `ã ∗ b̃_q = Bã_{p-1} × b̃_q ∈ C̄_{p+q}` for `ã ∈ Tot_{p-1}` and `b̃_q ∈ C̄_q`.
pub fn star_action(
    alg: &AlgebraSpec,
    norm: &Normalization,
    mixed: &MixedComplex,
    tot: &TotComplex,
    pm1: usize,
    a: &SparseVec,
    q: usize,
    b: &SparseVec,
) -> SparseVec {
    let ba = mixed.big_b[pm1].apply(&tot.component(pm1, 0, a));
    shuffle_bar(alg, norm, pm1 + 1, &ba, q, b)
}
