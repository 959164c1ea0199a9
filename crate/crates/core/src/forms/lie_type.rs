//! The complex `E_n(A) = A ⊗ Λ^n A` of `A` viewed as a Lie algebra, and the
//! antisymmetrization map into the Hochschild complex.

use crate::algebra::words::{checked_pow, pow, word_index, word_of};
use crate::algebra::{tensor_power_map, AlgebraSpec, Measuring};
use crate::complex::ChainComplex;
use crate::error::Result;
use crate::linalg::{Matrix, Rational, SparseAcc, SparseVec};
use num_traits::One;
use std::collections::HashMap;
use std::sync::Arc;

use super::kahler::descend_between;

/// All permutations of `0..n` with their signs, in lexicographic order.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, Rational)> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, Rational)>) {
        if cur.len() == n {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| cur[i] > cur[j]).count();
            out.push((cur.clone(), if inv % 2 == 0 { Rational::one() } else { -Rational::one() }));
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    go(n, &mut cur, &mut used, &mut out);
    out
}

/// `ε_n = Σ sgn(σ) σ` acting on the last `n` slots of `C_n(A)`.
pub fn antisymmetrizer(d: usize, n: usize) -> Matrix {
    let perms = permutations(n);
    Matrix::from_fn(pow(d, n + 1), pow(d, n + 1), |j| {
        let w = word_of(j, d, n + 1);
        let mut acc = SparseAcc::new();
        for (s, sign) in &perms {
            let mut v = w.clone();
            for (k, &t) in s.iter().enumerate() {
                v[1 + t] = w[1 + k];
            }
            acc.add(word_index(&v, d), sign.clone());
        }
        acc.finish()
    })
}

/// Strictly increasing index tuples of length `n` from `0..d`.
#[derive(Clone, Debug)]
pub struct Wedges {
    pub combos: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl Wedges {
    pub fn new(d: usize, n: usize) -> Self {
        let mut combos = Vec::new();
        let mut cur = Vec::new();
        fn go(d: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for i in start..d {
                cur.push(i);
                go(d, n, i + 1, cur, out);
                cur.pop();
            }
        }
        go(d, n, 0, &mut cur, &mut combos);
        let index = combos.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        Self { combos, index }
    }

    pub fn len(&self) -> usize {
        self.combos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.combos.is_empty()
    }

    /// Sorts `w`, returning the wedge index and the sign, or `None` on a repeat.
    pub fn normalize(&self, w: &[usize]) -> Option<(usize, Rational)> {
        let mut v = w.to_vec();
        let mut odd = false;
        for i in 0..v.len() {
            for j in 0..v.len() - 1 - i {
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    odd = !odd;
                } else if v[j] == v[j + 1] {
                    return None;
                }
            }
        }
        if v.windows(2).any(|p| p[0] == p[1]) {
            return None;
        }
        Some((self.index[&v], if odd { -Rational::one() } else { Rational::one() }))
    }
}

/// `(E_•(A), δ)` with the projections from and inclusions into `C_•(A)`.
#[derive(Clone, Debug)]
pub struct LieTypeComplex {
    pub algebra: Arc<AlgebraSpec>,
    pub wedges: Vec<Wedges>,
    /// `C_n → E_n`, `a₀ ⊗ a₁ ⊗ ... ↦ a₀ ⊗ a₁ ∧ ...`.
    pub proj: Vec<Matrix>,
    /// `E_n → C_n` sending a basis element to its sorted word.
    pub incl: Vec<Matrix>,
    pub complex: ChainComplex,
    /// `ε_n: E_n → C_n`.
    pub eps: Vec<Matrix>,
}

impl LieTypeComplex {
    pub fn new(algebra: Arc<AlgebraSpec>, top: usize, cap: usize) -> Result<Self> {
        let d = algebra.dim();
        checked_pow(d, top + 1, cap, &format!("C_{top}({})", algebra.name))?;
        let wedges: Vec<Wedges> = (0..=top).map(|n| Wedges::new(d, n)).collect();
        let mut proj = Vec::new();
        let mut incl = Vec::new();
        for (n, wg) in wedges.iter().enumerate() {
            let e = wg.len().max(if n == 0 { 1 } else { 0 });
            proj.push(Matrix::from_fn(d * e, pow(d, n + 1), |j| {
                let w = word_of(j, d, n + 1);
                match wg.normalize(&w[1..]) {
                    Some((k, s)) => SparseVec::single(w[0] * e + k, s),
                    None => SparseVec::new(),
                }
            }));
            incl.push(Matrix::from_fn(pow(d, n + 1), d * e, |j| {
                let mut w = vec![j / e];
                w.extend_from_slice(&wg.combos[j % e]);
                SparseVec::unit(word_index(&w, d))
            }));
        }
        let delta: Vec<Matrix> = (0..=top)
            .map(|n| {
                if n == 0 {
                    Matrix::zeros(0, d)
                } else {
                    proj[n - 1].mul(&delta_on_words(&algebra, n)).mul(&incl[n])
                }
            })
            .collect();
        let complex = ChainComplex::new(delta)?;
        let eps = (0..=top).map(|n| antisymmetrizer(d, n).mul(&incl[n])).collect();
        Ok(Self { algebra, wedges, proj, incl, complex, eps })
    }

    pub fn dim(&self, n: usize) -> usize {
        self.complex.dim(n)
    }

    /// `x(a₀ ⊗ a₁ ∧ ... ∧ a_n) = x₍₁₎(a₀) ⊗ x₍₂₎(a₁) ∧ ... ∧ x₍ₙ₊₁₎(a_n)`.
    pub fn measuring_maps(m: &Measuring, x: &SparseVec, src: &Self, dst: &Self, cap: usize) -> Result<Vec<Matrix>> {
        m.require_cocommutative()?;
        (0..src.proj.len())
            .map(|n| {
                let t = tensor_power_map(m, x, n + 1, cap)?;
                descend_between(&t, &src.proj[n], &src.incl[n], &dst.proj[n])
            })
            .collect()
    }
}

/// `δ` evaluated on unsorted words, as a map `A^{⊗n+1} → A^{⊗n}`:
/// `Σ_i (-1)^{i+1} [a₀,a_i] ⊗ ...â_i... + Σ_{i<j} (-1)^{i+j} a₀ ⊗ [a_i,a_j] ⊗ ...â_i...â_j...`.
/// The overall sign makes `ε` a chain map; with `(-1)^i` and `(-1)^{i+j-1}` it
/// anticommutes with the differentials instead.
fn delta_on_words(a: &AlgebraSpec, n: usize) -> Matrix {
    let d = a.dim();
    let sign = |k: usize| if k % 2 == 0 { Rational::one() } else { -Rational::one() };
    Matrix::from_fn(pow(d, n), pow(d, n + 1), |j| {
        let w = word_of(j, d, n + 1);
        let mut acc = SparseAcc::new();
        for i in 1..=n {
            let br = a.commutator(&SparseVec::unit(w[0]), &SparseVec::unit(w[i]));
            let rest: Vec<usize> = (1..=n).filter(|&k| k != i).map(|k| w[k]).collect();
            for (t, c) in br.iter() {
                let mut v = vec![t];
                v.extend_from_slice(&rest);
                acc.add(word_index(&v, d), c * sign(i + 1));
            }
        }
        for i in 1..=n {
            for k in i + 1..=n {
                let br = a.commutator(&SparseVec::unit(w[i]), &SparseVec::unit(w[k]));
                let rest: Vec<usize> = (1..=n).filter(|&l| l != i && l != k).map(|l| w[l]).collect();
                for (t, c) in br.iter() {
                    let mut v = vec![w[0], t];
                    v.extend_from_slice(&rest);
                    acc.add(word_index(&v, d), c * sign(i + k));
                }
            }
        }
        acc.finish()
    })
}
