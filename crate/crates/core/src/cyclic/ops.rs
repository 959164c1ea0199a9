//! Structure maps of the cyclic module `C_n(A) = A^{⊗n+1}`.

use crate::algebra::words::{checked_pow, pow, word_index, word_of};
use crate::algebra::AlgebraSpec;
use crate::error::Result;
use crate::linalg::{Matrix, Rational, SparseAcc, SparseVec};
use num_traits::One;
use std::sync::Arc;

/// Cyclic module of an algebra, with every structure map produced on demand.
#[derive(Clone, Debug)]
pub struct CyclicModule {
    pub algebra: Arc<AlgebraSpec>,
    pub top: usize,
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

impl CyclicModule {
    /// Checks that `C_top` stays within `cap`.
    pub fn new(algebra: Arc<AlgebraSpec>, top: usize, cap: usize) -> Result<Self> {
        checked_pow(algebra.dim(), top + 1, cap, &format!("C_{top}({})", algebra.name))?;
        Ok(Self { algebra, top })
    }

    pub fn d(&self) -> usize {
        self.algebra.dim()
    }

    pub fn dim(&self, n: usize) -> usize {
        pow(self.d(), n + 1)
    }

    pub fn word(&self, n: usize, idx: usize) -> Vec<usize> {
        word_of(idx, self.d(), n + 1)
    }

    /// `d_i(a_0,...,a_n)`: multiply `a_i a_{i+1}` for `i < n`, and `a_n a_0` in front for `i = n`.
    pub fn face_word(&self, w: &[usize], i: usize) -> SparseVec {
        let n = w.len() - 1;
        let d = self.d();
        let mut out = Vec::new();
        if i < n {
            for (t, c) in self.algebra.mul_basis(w[i], w[i + 1]).iter() {
                let mut v = Vec::with_capacity(n);
                v.extend_from_slice(&w[..i]);
                v.push(t);
                v.extend_from_slice(&w[i + 2..]);
                out.push((word_index(&v, d), c.clone()));
            }
        } else {
            for (t, c) in self.algebra.mul_basis(w[n], w[0]).iter() {
                let mut v = Vec::with_capacity(n);
                v.push(t);
                v.extend_from_slice(&w[1..n]);
                out.push((word_index(&v, d), c.clone()));
            }
        }
        SparseVec::from_entries(out)
    }

    /// `s_j`: insert the unit after position `j`.
    pub fn degeneracy_word(&self, w: &[usize], j: usize) -> SparseVec {
        let d = self.d();
        let out = self
            .algebra
            .unit
            .iter()
            .map(|(t, c)| {
                let mut v = w.to_vec();
                v.insert(j + 1, t);
                (word_index(&v, d), c.clone())
            })
            .collect();
        SparseVec::from_entries(out)
    }

    /// Prepends the unit: `(a_0,...,a_n) ↦ (1, a_0, ..., a_n)`.
    pub fn prepend_unit_word(&self, w: &[usize]) -> SparseVec {
        let d = self.d();
        let out = self
            .algebra
            .unit
            .iter()
            .map(|(t, c)| {
                let mut v = vec![t];
                v.extend_from_slice(w);
                (word_index(&v, d), c.clone())
            })
            .collect();
        SparseVec::from_entries(out)
    }

    /// `t_n(a_0,...,a_n) = (-1)^n (a_n, a_0, ..., a_{n-1})`.
    pub fn cyclic_word(&self, w: &[usize]) -> (usize, Rational) {
        let n = w.len() - 1;
        let mut v = Vec::with_capacity(n + 1);
        v.push(w[n]);
        v.extend_from_slice(&w[..n]);
        (word_index(&v, self.d()), sign(n))
    }

    fn on_words(&self, n: usize, rows: usize, f: impl Fn(&[usize]) -> SparseVec + Sync + Send) -> Matrix {
        Matrix::from_fn(rows, self.dim(n), |j| f(&self.word(n, j)))
    }

    pub fn face(&self, n: usize, i: usize) -> Matrix {
        self.on_words(n, self.dim(n - 1), |w| self.face_word(w, i))
    }

    pub fn degeneracy(&self, n: usize, j: usize) -> Matrix {
        self.on_words(n, self.dim(n + 1), |w| self.degeneracy_word(w, j))
    }

    pub fn cyclic_op(&self, n: usize) -> Matrix {
        self.on_words(n, self.dim(n), |w| {
            let (i, c) = self.cyclic_word(w);
            SparseVec::single(i, c)
        })
    }

    /// `b = Σ_{i=0}^{n} (-1)^i d_i`.
    pub fn hochschild_b(&self, n: usize) -> Matrix {
        if n == 0 {
            return Matrix::zeros(0, self.dim(0));
        }
        self.on_words(n, self.dim(n - 1), |w| self.b_word(w, n + 1))
    }

    /// `b' = Σ_{i=0}^{n-1} (-1)^i d_i`.
    pub fn b_prime(&self, n: usize) -> Matrix {
        if n == 0 {
            return Matrix::zeros(0, self.dim(0));
        }
        self.on_words(n, self.dim(n - 1), |w| self.b_word(w, n))
    }

    fn b_word(&self, w: &[usize], faces: usize) -> SparseVec {
        let mut acc = SparseAcc::new();
        for i in 0..faces {
            acc.add_vec(&self.face_word(w, i), &sign(i));
        }
        acc.finish()
    }

    /// Applies `b` to an arbitrary chain in degree `n`.
    pub fn apply_b(&self, n: usize, v: &SparseVec) -> SparseVec {
        let mut acc = SparseAcc::new();
        for (j, c) in v.iter() {
            acc.add_vec(&self.b_word(&self.word(n, j), n + 1), c);
        }
        acc.finish()
    }

    /// `N = 1 + t + ... + t^n`.
    pub fn norm(&self, n: usize) -> Matrix {
        self.on_words(n, self.dim(n), |w| self.norm_word(w))
    }

    fn norm_word(&self, w: &[usize]) -> SparseVec {
        let mut acc = SparseAcc::new();
        let mut cur = w.to_vec();
        let mut s = Rational::one();
        for _ in 0..w.len() {
            acc.add(word_index(&cur, self.d()), s.clone());
            let (_, c) = self.cyclic_word(&cur);
            let last = cur.pop().unwrap();
            cur.insert(0, last);
            s *= c;
        }
        acc.finish()
    }

    /// `1 - t`.
    pub fn one_minus_t(&self, n: usize) -> Matrix {
        Matrix::identity(self.dim(n)).sub(&self.cyclic_op(n))
    }

    /// Connes' operator `B = (-1)^{n+1} (1 - t_{n+1}) t_{n+1} s_n N_n`, assembled
    /// literally from the structure maps.
    pub fn connes_b(&self, n: usize) -> Matrix {
        let t1 = self.cyclic_op(n + 1);
        let lhs = Matrix::identity(self.dim(n + 1)).sub(&t1).mul(&t1);
        lhs.mul(&self.degeneracy(n, n)).mul(&self.norm(n)).scaled(&sign(n + 1))
    }

    /// `B` in the closed form `(1 - t) s N` with `s(a) = (1, a)`; equal to
    /// [`connes_b`](Self::connes_b).
    pub fn connes_b_closed(&self, n: usize) -> Matrix {
        let t1 = self.cyclic_op(n + 1);
        let one_minus_t = Matrix::identity(self.dim(n + 1)).sub(&t1);
        self.on_words(n, self.dim(n + 1), |w| {
            let nw = self.norm_word(w);
            let mut acc = SparseAcc::new();
            for (j, c) in nw.iter() {
                acc.add_vec(&self.prepend_unit_word(&self.word(n, j)), c);
            }
            one_minus_t.apply(&acc.finish())
        })
    }

    /// Extra degeneracy `s(a) = (1, a)` as a matrix `C_n → C_{n+1}`.
    pub fn prepend_unit(&self, n: usize) -> Matrix {
        self.on_words(n, self.dim(n + 1), |w| self.prepend_unit_word(w))
    }
}
