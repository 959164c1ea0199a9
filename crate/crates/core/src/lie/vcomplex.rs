//! The presimplicial module `V_n(A) = K[U_{n+1}] ⊗ A^{⊗n+1}` on cyclic orderings,
//! with the inclusion `ι: C → V` and the retraction `ζ: V → C`.
//!
//! A cycle `σ ∈ U_{n+1}` is stored through `ω(σ)`, with `ω(σ)(k) = σ^k(0)`
//! (0-based), so `ω(σ)^{-1}·(a_0,...,a_n)` reads the tensor factors in the
//! order `σ` visits them starting from slot 0. The face `d_i` multiplies the
//! factors at reading positions `i, i+1` (or `n, 0`), drops the second slot
//! from the cycle and relabels, with sign `sgn ω(σ) · sgn ω(d_i σ)`.

use crate::algebra::words::{checked_pow, pow, word_index, word_of};
use crate::algebra::{tensor_power_map, AlgebraSpec, Measuring};
use crate::complex::ChainComplex;
use crate::cyclic::CyclicModule;
use crate::error::Result;
use crate::forms::permutations;
use crate::linalg::{Matrix, Rational, SparseAcc, SparseVec};
use std::collections::HashMap;
use std::sync::Arc;

/// The conjugacy class `U_{n+1}` of the long cycle in `S_{n+1}`.
#[derive(Clone, Debug)]
pub struct CyclicWords {
    pub size: usize,
    /// `ω(σ)` as the image vector `k ↦ σ^k(0)`.
    pub omegas: Vec<Vec<usize>>,
    pub signs: Vec<Rational>,
    index: HashMap<Vec<usize>, usize>,
}

impl CyclicWords {
    pub fn new(size: usize) -> Self {
        let mut omegas = Vec::new();
        let mut signs = Vec::new();
        for (p, s) in permutations(size.saturating_sub(1)) {
            let mut w = vec![0];
            w.extend(p.iter().map(|&i| i + 1));
            omegas.push(w);
            signs.push(s);
        }
        let index = omegas.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Self { size, omegas, signs, index }
    }

    pub fn len(&self) -> usize {
        self.omegas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omegas.is_empty()
    }

    pub fn index_of(&self, omega: &[usize]) -> Option<usize> {
        self.index.get(omega).copied()
    }

    /// `σ` as an image vector.
    pub fn cycle(&self, s: usize) -> Vec<usize> {
        let w = &self.omegas[s];
        let mut sigma = vec![0; self.size];
        for k in 0..self.size {
            sigma[w[k]] = w[(k + 1) % self.size];
        }
        sigma
    }

    /// Checks `σ = ω (0 1 ... n) ω^{-1}` and `ω(0) = 0` for every element.
    pub fn defect(&self) -> Option<String> {
        let n = self.size;
        for s in 0..self.len() {
            let (w, sigma) = (&self.omegas[s], self.cycle(s));
            if w[0] != 0 {
                return Some(format!("ω({sigma:?}) does not fix 0"));
            }
            // ω c ω^{-1} (ω(k)) = ω(k+1).
            if (0..n).any(|k| sigma[w[k]] != w[(k + 1) % n]) {
                return Some(format!("{sigma:?} is not conjugate to the long cycle by {w:?}"));
            }
            let mut seen = vec![false; n];
            let mut x = 0;
            for _ in 0..n {
                seen[x] = true;
                x = sigma[x];
            }
            if seen.iter().any(|v| !v) || x != 0 {
                return Some(format!("{sigma:?} is not an {n}-cycle"));
            }
        }
        None
    }
}

/// `V_•(A)` up to degree `top`, basis `(σ, w)` at index `σ · d^{n+1} + w`.
#[derive(Clone, Debug)]
pub struct VComplex {
    pub cm: CyclicModule,
    pub words: Vec<CyclicWords>,
}

impl VComplex {
    pub fn new(algebra: Arc<AlgebraSpec>, top: usize, cap: usize) -> Result<Self> {
        let cm = CyclicModule::new(algebra.clone(), top, cap)?;
        let words: Vec<CyclicWords> = (0..=top).map(|n| CyclicWords::new(n + 1)).collect();
        let d = algebra.dim();
        checked_pow(d, top + 1, cap / words[top].len(), &format!("V_{top}({})", algebra.name))?;
        Ok(Self { cm, words })
    }

    pub fn top(&self) -> usize {
        self.cm.top
    }

    pub fn dim(&self, n: usize) -> usize {
        self.words[n].len() * self.cm.dim(n)
    }

    fn block(&self, n: usize) -> usize {
        self.cm.dim(n)
    }

    /// The face `d_i: V_n → V_{n-1}`.
    pub fn face(&self, n: usize, i: usize) -> Matrix {
        let d = self.cm.d();
        let (u, lower) = (&self.words[n], &self.words[n - 1]);
        Matrix::from_fn(self.dim(n - 1), self.dim(n), |j| {
            let (s, a) = (j / self.block(n), word_of(j % self.block(n), d, n + 1));
            let w = &u.omegas[s];
            let read: Vec<usize> = w.iter().map(|&slot| a[slot]).collect();
            let removed = if i < n { w[i + 1] } else { w[n] };
            let w2: Vec<usize> =
                w.iter().filter(|&&x| x != removed).map(|&x| if x > removed { x - 1 } else { x }).collect();
            let s2 = lower.index_of(&w2).expect("relabelled ω lies in the smaller class");
            let sign = &u.signs[s] * &lower.signs[s2];
            let mut acc = SparseAcc::new();
            for (k, c) in self.cm.face_word(&read, i).iter() {
                let r = word_of(k, d, n);
                let mut placed = vec![0; n];
                for (pos, &slot) in w2.iter().enumerate() {
                    placed[slot] = r[pos];
                }
                acc.add(s2 * self.block(n - 1) + word_index(&placed, d), c * &sign);
            }
            acc.finish()
        })
    }

    /// `b = Σ (-1)^i d_i`.
    pub fn complex(&self) -> Result<ChainComplex> {
        ChainComplex::new(
            (0..=self.top())
                .map(|n| {
                    if n == 0 {
                        return Matrix::zeros(0, self.dim(0));
                    }
                    let mut b = Matrix::zeros(self.dim(n - 1), self.dim(n));
                    for i in 0..=n {
                        let f = self.face(n, i);
                        b = if i % 2 == 0 { b.add(&f) } else { b.sub(&f) };
                    }
                    b
                })
                .collect(),
        )
    }

    /// `ι_n(a) = c ⊗ a` for the standard cycle `c`, whose `ω` is the identity.
    pub fn iota(&self, n: usize) -> Matrix {
        let id: Vec<usize> = (0..=n).collect();
        let s = self.words[n].index_of(&id).expect("standard cycle");
        Matrix::from_fn(self.dim(n), self.cm.dim(n), |j| SparseVec::unit(s * self.block(n) + j))
    }

    /// `ζ_n(σ ⊗ a) = sgn ω(σ) · ω(σ)^{-1}·a`.
    pub fn zeta(&self, n: usize) -> Matrix {
        let d = self.cm.d();
        Matrix::from_fn(self.cm.dim(n), self.dim(n), |j| {
            let (s, a) = (j / self.block(n), word_of(j % self.block(n), d, n + 1));
            let read: Vec<usize> = self.words[n].omegas[s].iter().map(|&slot| a[slot]).collect();
            SparseVec::single(word_index(&read, d), self.words[n].signs[s].clone())
        })
    }

    /// `σ ⊗ a ↦ σ ⊗ x(a)` in every degree.
    pub fn measuring_maps(m: &Measuring, x: &SparseVec, src: &Self, dst: &Self, cap: usize) -> Result<Vec<Matrix>> {
        m.require_cocommutative()?;
        let top = src.top().min(dst.top());
        (0..=top).map(|n| Ok(Matrix::identity(src.words[n].len()).kron(&tensor_power_map(m, x, n + 1, cap)?))).collect()
    }

    /// Number of basis elements of `V_n`, for reporting.
    pub fn size(d: usize, n: usize) -> usize {
        CyclicWords::new(n + 1).len() * pow(d, n + 1)
    }
}
