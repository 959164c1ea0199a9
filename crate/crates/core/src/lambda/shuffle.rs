//! Signed shuffles and the shuffle product on Hochschild chains.

use crate::algebra::words::{pow, word_index, word_of};
use crate::algebra::AlgebraSpec;
use crate::linalg::{Matrix, Rational, SparseAcc, SparseVec};
use num_traits::One;

/// A `(p, q)`-shuffle as the list `σ(1), ..., σ(p+q)` (zero based) and its sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shuffle {
    pub image: Vec<usize>,
    pub sign: Rational,
}

/// All `(p, q)`-shuffles, ordered by the positions taken by the first block.
pub fn shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    let n = p + q;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(p);
    fn rec(start: usize, n: usize, p: usize, q: usize, chosen: &mut Vec<usize>, out: &mut Vec<Shuffle>) {
        if chosen.len() == p {
            let rest: Vec<usize> = (0..n).filter(|i| !chosen.contains(i)).collect();
            let mut inversions = 0;
            for &a in chosen.iter() {
                inversions += rest.iter().filter(|&&b| b < a).count();
            }
            let mut image = chosen.clone();
            image.extend(rest);
            let sign = if inversions % 2 == 0 { Rational::one() } else { -Rational::one() };
            out.push(Shuffle { image, sign });
            return;
        }
        for i in start..n {
            chosen.push(i);
            rec(i + 1, n, p, q, chosen, out);
            chosen.pop();
        }
    }
    rec(0, n, p, q, &mut chosen, &mut out);
    out
}

/// `σ·(a_1, ..., a_n) = (a_{σ⁻¹(1)}, ..., a_{σ⁻¹(n)})`: entry `k` moves to slot `σ(k)`.
pub fn permute_word(w: &[usize], image: &[usize]) -> Vec<usize> {
    let mut out = vec![0; w.len()];
    for (k, &s) in image.iter().enumerate() {
        out[s] = w[k];
    }
    out
}

/// Signed shuffle multiplication of the cotensor algebra as a matrix
/// `A^{⊗p} ⊗ A^{⊗q} → A^{⊗p+q}`.
pub fn tensor_shuffle(d: usize, p: usize, q: usize) -> Matrix {
    let sh = shuffles(p, q);
    Matrix::from_fn(pow(d, p + q), pow(d, p + q), |j| {
        let w = word_of(j, d, p + q);
        SparseVec::from_entries(sh.iter().map(|s| (word_index(&permute_word(&w, &s.image), d), s.sign.clone())).collect())
    })
}

/// `(a_0, ..., a_p) × (b_0, ..., b_q)` on basis words of a commutative algebra.
pub fn shuffle_words(alg: &AlgebraSpec, a: &[usize], b: &[usize]) -> SparseVec {
    let (p, q) = (a.len() - 1, b.len() - 1);
    let d = alg.dim();
    let mut tail: Vec<usize> = a[1..].to_vec();
    tail.extend_from_slice(&b[1..]);
    let mut acc = SparseAcc::new();
    let head = alg.mul_basis(a[0], b[0]);
    for s in shuffles(p, q) {
        let t = permute_word(&tail, &s.image);
        for (h, c) in head.iter() {
            let mut w = Vec::with_capacity(p + q + 1);
            w.push(h);
            w.extend_from_slice(&t);
            acc.add(word_index(&w, d), c * &s.sign);
        }
    }
    acc.finish()
}

/// Bilinear extension of [`shuffle_words`] to chains `u ∈ C_p`, `v ∈ C_q`.
pub fn shuffle_product(alg: &AlgebraSpec, p: usize, u: &SparseVec, q: usize, v: &SparseVec) -> SparseVec {
    let d = alg.dim();
    let mut acc = SparseAcc::new();
    for (i, a) in u.iter() {
        let wa = word_of(i, d, p + 1);
        for (j, b) in v.iter() {
            let wb = word_of(j, d, q + 1);
            acc.add_vec(&shuffle_words(alg, &wa, &wb), &(a * b));
        }
    }
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::truncated_polynomial;
    use crate::linalg::q;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn shuffle_counts() {
        for p in 0..4 {
            for qq in 0..4 {
                assert_eq!(shuffles(p, qq).len(), binomial(p + qq, p));
            }
        }
        assert_eq!(shuffles(2, 1).len(), 3);
    }

    #[test]
    fn one_one_product() {
        // (1, x) × (1, x) = (1, x, x) - (1, x, x) = 0; (1, x) × (x, 1) = (x, x, 1) - (x, 1, x)
        let a = truncated_polynomial("t", 3);
        let d = 3;
        let v = shuffle_words(&a, &[0, 1], &[1, 0]);
        assert_eq!(v.coeff(word_index(&[1, 1, 0], d)), q(1));
        assert_eq!(v.coeff(word_index(&[1, 0, 1], d)), q(-1));
        assert_eq!(v.nnz(), 2);
        assert!(shuffle_words(&a, &[0, 1], &[0, 1]).is_zero());
        assert!(shuffle_words(&a, &[1], &[2]).is_zero());
        assert_eq!(shuffle_words(&a, &[1], &[1]), SparseVec::unit(2));
    }
}
