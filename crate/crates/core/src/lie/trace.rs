//! `θ: Λ^{n+1} gl_r(A) → C̃_n(M_r(A))` and the generalized trace
//! `C̃_n(M_r(A)) → C̃_n(A)`.

use super::algebra::LieAlgebra;
use super::complexes::CeComplex;
use crate::algebra::words::{word_index, word_of};
use crate::algebra::{matrix_algebra, AlgebraSpec};
use crate::complex::ChainComplex;
use crate::cyclic::{connes_complex, connes_quotients, CyclicModule};
use crate::error::{Error, Result};
use crate::forms::permutations;
use crate::linalg::{Matrix, Quotient, Rational, SparseAcc, SparseVec};
use std::sync::Arc;

/// Connes' complex `C̃_•` of one algebra.
#[derive(Clone, Debug)]
pub struct ConnesData {
    pub cm: CyclicModule,
    pub quots: Vec<Quotient>,
    pub complex: ChainComplex,
}

impl ConnesData {
    pub fn new(a: Arc<AlgebraSpec>, top: usize, cap: usize) -> Result<Self> {
        let cm = CyclicModule::new(a, top, cap)?;
        let quots = connes_quotients(&cm);
        let complex = connes_complex(&cm, &quots)?;
        Ok(Self { cm, quots, complex })
    }
}

/// θ and the trace for one algebra and matrix size, for `n = 0..=top`.
#[derive(Clone, Debug)]
pub struct ThetaTrace {
    pub r: usize,
    pub top: usize,
    pub gl: Arc<LieAlgebra>,
    /// Built to degree `top + 1`.
    pub ce: CeComplex,
    pub matrices: ConnesData,
    pub base: ConnesData,
    /// `theta[n]: Λ^{n+1} gl_r(A) → C̃_n(M_r(A))`.
    pub theta: Vec<Matrix>,
    /// `trace_chain[n]: C_n(M_r(A)) → C_n(A)`.
    pub trace_chain: Vec<Matrix>,
    /// `trace[n]: C̃_n(M_r(A)) → C̃_n(A)`.
    pub trace: Vec<Matrix>,
}

impl ThetaTrace {
    pub fn new(a: Arc<AlgebraSpec>, r: usize, top: usize, cap: usize) -> Result<Self> {
        let gl = Arc::new(LieAlgebra::gl(&a, r));
        let ce = CeComplex::new(gl.clone(), top + 1, cap)?;
        let matrices = ConnesData::new(Arc::new(matrix_algebra(&a, r)), top, cap)?;
        let base = ConnesData::new(a.clone(), top, cap)?;
        let theta = (0..=top)
            .map(|n| {
                Matrix::from_fn(matrices.quots[n].dim(), ce.dim(n + 1), |k| {
                    matrices.quots[n].project(&theta_word(&matrices.cm, &ce.wedges[n + 1].combos[k]))
                })
            })
            .collect();
        let d = a.dim();
        let md = matrices.cm.d();
        let trace_chain: Vec<Matrix> = (0..=top)
            .map(|n| Matrix::from_fn(base.cm.dim(n), matrices.cm.dim(n), |j| trace_word(&word_of(j, md, n + 1), r, d)))
            .collect();
        let trace = (0..=top)
            .map(|n| {
                let bar = Quotient::descend(&trace_chain[n], &matrices.quots[n], &base.quots[n]);
                let lhs = base.quots[n].proj().mul(&trace_chain[n]);
                match lhs.first_difference(&bar.mul(matrices.quots[n].proj())) {
                    None => Ok(bar),
                    Some(e) => Err(Error::RelationNotPreserved(format!("trace on C̃_{n}: {e}"))),
                }
            })
            .collect::<Result<_>>()?;
        Ok(Self { r, top, gl, ce, matrices, base, theta, trace_chain, trace })
    }

    /// `θ` on an arbitrary word, projected to `C̃_n`; used to confirm that the
    /// formula is alternating in all `n + 1` slots.
    pub fn theta_on_word(&self, w: &[usize]) -> SparseVec {
        self.matrices.quots[w.len() - 1].project(&theta_word(&self.matrices.cm, w))
    }
}

/// `Σ_{σ∈S_n} sgn(σ) (α₀, α_{σ(1)}, ..., α_{σ(n)})` in `C_n`.
fn theta_word(cm: &CyclicModule, w: &[usize]) -> SparseVec {
    let n = w.len() - 1;
    let d = cm.d();
    let mut acc = SparseAcc::new();
    for (perm, s) in permutations(n) {
        let mut v = Vec::with_capacity(n + 1);
        v.push(w[0]);
        v.extend(perm.iter().map(|&p| w[1 + p]));
        acc.add(word_index(&v, d), s);
    }
    acc.finish()
}

/// `Σ α_{i₀i₁} ⊗ β_{i₁i₂} ⊗ ... ⊗ η_{i_n i₀}` on a basis word of `M_r(A)`.
fn trace_word(w: &[usize], r: usize, d: usize) -> SparseVec {
    let entry = |x: usize| (x / d / r, (x / d) % r, x % d);
    let n = w.len();
    let closes = (0..n).all(|s| entry(w[s]).1 == entry(w[(s + 1) % n]).0);
    if !closes {
        return SparseVec::new();
    }
    let v: Vec<usize> = w.iter().map(|&x| entry(x).2).collect();
    SparseVec::single(word_index(&v, d), Rational::from_integer(1.into()))
}
