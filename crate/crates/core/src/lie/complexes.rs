//! Chevalley–Eilenberg complex `Λ^• g` and Leibniz complex `g^{⊗•}`, with
//! measuring-induced maps and the splittings used by the diagonal coproducts.

use super::algebra::{LieAlgebra, LieMeasuring};
use crate::algebra::words::{checked_pow, pow, word_index, word_of};
use crate::algebra::{expand_word, iterated_coproduct};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::forms::Wedges;
use crate::linalg::{Matrix, Rational, SparseAcc, SparseVec};
use num_traits::One;
use std::sync::Arc;

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// `(Λ^n g, d_CE)` for `n = 0..=top`, on sorted index tuples.
#[derive(Clone, Debug)]
pub struct CeComplex {
    pub algebra: Arc<LieAlgebra>,
    pub wedges: Vec<Wedges>,
    pub complex: ChainComplex,
}

impl CeComplex {
    pub fn new(g: Arc<LieAlgebra>, top: usize, cap: usize) -> Result<Self> {
        let d = g.dim();
        let big = (0..=top).map(|n| binomial(d, n)).max().unwrap_or(1);
        if big > cap {
            return Err(Error::TruncationTooLarge { what: format!("Λ^{top} {}", g.name), dim: big, cap });
        }
        let wedges: Vec<Wedges> = (0..=top).map(|n| Wedges::new(d, n)).collect();
        let diffs = (0..=top)
            .map(|n| {
                if n == 0 {
                    return Matrix::zeros(0, 1);
                }
                Matrix::from_fn(wedges[n - 1].len(), wedges[n].len(), |k| {
                    let c = &wedges[n].combos[k];
                    let mut acc = SparseAcc::new();
                    for i in 0..n {
                        for j in i + 1..n {
                            // Positions are 1-based in (-1)^{i+j+1}.
                            let s = sign(i + j + 1);
                            for (t, a) in g.bracket_basis(c[i], c[j]).iter() {
                                let mut w = vec![t];
                                w.extend((0..n).filter(|&l| l != i && l != j).map(|l| c[l]));
                                if let Some((idx, e)) = wedges[n - 1].normalize(&w) {
                                    acc.add(idx, a * &s * e);
                                }
                            }
                        }
                    }
                    acc.finish()
                })
            })
            .collect();
        Ok(Self { algebra: g, wedges, complex: ChainComplex::new(diffs)? })
    }

    pub fn top(&self) -> usize {
        self.complex.top()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.complex.dim(n)
    }

    /// Wedge-normalizes a linear combination of (unsorted) words of length `n`.
    pub fn normalize_words(&self, n: usize, words: impl IntoIterator<Item = (Vec<usize>, Rational)>) -> SparseVec {
        let mut acc = SparseAcc::new();
        for (w, c) in words {
            if let Some((idx, e)) = self.wedges[n].normalize(&w) {
                acc.add(idx, c * e);
            }
        }
        acc.finish()
    }

    /// `x(α₁ ∧ ... ∧ α_n) = x₍₁₎(α₁) ∧ ... ∧ x₍ₙ₎(α_n)` in every degree.
    pub fn measuring_maps(m: &LieMeasuring, x: &SparseVec, src: &Self, dst: &Self) -> Result<Vec<Matrix>> {
        m.require_cocommutative()?;
        let top = src.top().min(dst.top());
        Ok((0..=top)
            .map(|n| {
                let terms = iterated_coproduct(&m.coalgebra, x, n);
                Matrix::from_fn(dst.dim(n), src.dim(n), |k| {
                    dst.normalize_words(n, expand_word(&terms, &m.phi, &src.wedges[n].combos[k]))
                })
            })
            .collect())
    }

    /// Component `Λ^n g → Λ^p g ⊗ Λ^{n-p} g` of `Λ^n` of the diagonal followed
    /// by the Künneth splitting: `Σ_S sgn · α_S ⊗ α_{S^c}` over `p`-subsets `S`.
    pub fn coproduct(&self, n: usize, p: usize) -> Matrix {
        let q = n - p;
        let (wp, wq) = (&self.wedges[p], &self.wedges[q]);
        let rows = wp.len() * wq.len();
        Matrix::from_fn(rows, self.dim(n), |k| {
            let c = &self.wedges[n].combos[k];
            let mut acc = SparseAcc::new();
            for s in Wedges::new(n, p).combos {
                let rest: Vec<usize> = (0..n).filter(|i| !s.contains(i)).collect();
                // Sign of the unshuffle moving the positions in `s` to the front.
                let inv: usize = s.iter().enumerate().map(|(k, &i)| i - k).sum();
                let left: Vec<usize> = s.iter().map(|&i| c[i]).collect();
                let right: Vec<usize> = rest.iter().map(|&i| c[i]).collect();
                let (a, _) = wp.normalize(&left).expect("sorted");
                let (b, _) = wq.normalize(&right).expect("sorted");
                acc.add(a * wq.len() + b, sign(inv));
            }
            acc.finish()
        })
    }
}

/// `(g^{⊗n}, d_CL)` for `n = 0..=top`.
#[derive(Clone, Debug)]
pub struct ClComplex {
    pub algebra: Arc<LieAlgebra>,
    pub complex: ChainComplex,
}

impl ClComplex {
    /// `d(α₁,...,α_n) = Σ_{i<j} (-1)^j (α₁, ..., [α_i, α_j], ..., α̂_j, ..., α_n)`.
    pub fn new(g: Arc<LieAlgebra>, top: usize, cap: usize) -> Result<Self> {
        let d = g.dim();
        checked_pow(d, top, cap, &format!("{}^⊗{top}", g.name))?;
        let diffs = (0..=top)
            .map(|n| {
                if n == 0 {
                    return Matrix::zeros(0, 1);
                }
                Matrix::from_fn(pow(d, n - 1), pow(d, n), |k| {
                    let w = word_of(k, d, n);
                    let mut acc = SparseAcc::new();
                    for i in 0..n {
                        for j in i + 1..n {
                            let s = sign(j + 1);
                            for (t, a) in g.bracket_basis(w[i], w[j]).iter() {
                                let v: Vec<usize> =
                                    (0..n).filter(|&l| l != j).map(|l| if l == i { t } else { w[l] }).collect();
                                acc.add(word_index(&v, d), a * &s);
                            }
                        }
                    }
                    acc.finish()
                })
            })
            .collect();
        Ok(Self { algebra: g, complex: ChainComplex::new(diffs)? })
    }

    pub fn top(&self) -> usize {
        self.complex.top()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.complex.dim(n)
    }

    /// `x(α₁,...,α_n) = (x₍₁₎(α₁), ..., x₍ₙ₎(α_n))`.
    pub fn measuring_maps(m: &LieMeasuring, x: &SparseVec, src: &Self, dst: &Self) -> Result<Vec<Matrix>> {
        m.require_cocommutative()?;
        let top = src.top().min(dst.top());
        let (d, dt) = (src.algebra.dim(), dst.algebra.dim());
        Ok((0..=top)
            .map(|n| {
                let terms = iterated_coproduct(&m.coalgebra, x, n);
                Matrix::from_fn(dst.dim(n), src.dim(n), |k| {
                    let mut acc = SparseAcc::new();
                    for (w, c) in expand_word(&terms, &m.phi, &word_of(k, d, n)) {
                        acc.add(word_index(&w, dt), c);
                    }
                    acc.finish()
                })
            })
            .collect())
    }

    /// The tensor split `g^{⊗n} → g^{⊗|S|} ⊗ g^{⊗n-|S|}` picking the slots in `s`
    /// for the first factor, in order; the component of `(g ⊕ g)^{⊗n}` labelled by `s`.
    pub fn split(&self, n: usize, s: &[usize]) -> Matrix {
        let d = self.algebra.dim();
        let q = n - s.len();
        Matrix::from_fn(pow(d, n), pow(d, n), |k| {
            let w = word_of(k, d, n);
            let left: Vec<usize> = s.iter().map(|&i| w[i]).collect();
            let right: Vec<usize> = (0..n).filter(|i| !s.contains(i)).map(|i| w[i]).collect();
            SparseVec::unit(word_index(&left, d) * pow(d, q) + word_index(&right, d))
        })
    }
}
