//! The λ-decomposition of Hochschild and cyclic homology.

use super::eulerian::{eulerian_idempotents, Eulerian};
use crate::algebra::AlgebraSpec;
use crate::complex::{ChainComplex, MixedComplex, TotComplex};
use crate::cyclic::{hochschild_complex, normalized_map, normalized_mixed, CyclicModule, Normalization};
use crate::error::{Error, Result};
use crate::linalg::{induced_on_subquotient, rank, Matrix, Span, Subquotient};
use std::sync::Arc;

/// Everything needed to split the Hochschild and cyclic complexes of a
/// commutative algebra by the Eulerian idempotents.
#[derive(Clone, Debug)]
pub struct Lambda {
    pub cm: CyclicModule,
    pub eulerian: Eulerian,
    /// `chain[n][i] = A ⊗ e_n^{(i)}` on `C_n`, `0 ≤ i ≤ n`.
    pub chain: Vec<Vec<Matrix>>,
    pub norm: Normalization,
    /// The same idempotents descended to `C̄_n`.
    pub bar: Vec<Vec<Matrix>>,
    pub hoch: ChainComplex,
    pub mixed: MixedComplex,
    pub tot: TotComplex,
}

impl Lambda {
    pub fn new(algebra: Arc<AlgebraSpec>, top: usize, cap: usize) -> Result<Self> {
        if !algebra.commutative {
            return Err(Error::NotCommutative(algebra.name.clone()));
        }
        let cm = CyclicModule::new(algebra.clone(), top, cap)?;
        let eulerian = eulerian_idempotents(algebra.dim(), top, cap)?;
        let chain: Vec<Vec<Matrix>> = (0..=top).map(|n| (0..=n).map(|i| eulerian.on_chains(n, i)).collect()).collect();
        let norm = Normalization::new(&cm);
        let bar = chain
            .iter()
            .enumerate()
            .map(|(n, row)| row.iter().map(|e| normalized_map(e, n, &norm, &norm)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let hoch = hochschild_complex(&cm)?;
        let mixed = normalized_mixed(&cm, &norm);
        let tot = mixed.tot()?;
        Ok(Self { cm, eulerian, chain, norm, bar, hoch, mixed, tot })
    }

    pub fn top(&self) -> usize {
        self.cm.top
    }

    /// `A ⊗ e_n^{(i)}`, zero for `i > n`.
    pub fn chain_idem(&self, n: usize, i: usize) -> Matrix {
        self.chain[n].get(i).cloned().unwrap_or_else(|| Matrix::zeros(self.cm.dim(n), self.cm.dim(n)))
    }

    pub fn bar_idem(&self, n: usize, i: usize) -> Matrix {
        let d = self.mixed.dim(n);
        self.bar[n].get(i).cloned().unwrap_or_else(|| Matrix::zeros(d, d))
    }

    /// First degree where `b e_n^{(i)} ≠ e_{n-1}^{(i)} b`.
    pub fn splitting_defect(&self) -> Option<String> {
        for n in 1..=self.top() {
            for i in 0..=n {
                let b = self.hoch.d(n);
                if let Some(x) = b.mul(&self.chain_idem(n, i)).first_difference(&self.chain_idem(n - 1, i).mul(b)) {
                    return Some(format!("b e_{n}^({i}): {x}"));
                }
            }
        }
        None
    }

    /// Checks `b̄ ē^{(i)} = ē^{(i)} b̄` and `B̄ ē_n^{(i)} = ē_{n+1}^{(i+1)} B̄`.
    pub fn mixed_splitting_defect(&self) -> Option<String> {
        for n in 0..=self.top() {
            for i in 0..=n + 1 {
                if n > 0 {
                    let b = &self.mixed.b[n];
                    if let Some(x) = b.mul(&self.bar_idem(n, i)).first_difference(&self.bar_idem(n - 1, i).mul(b)) {
                        return Some(format!("b̄ ē_{n}^({i}): {x}"));
                    }
                }
                if n < self.top() {
                    let bb = &self.mixed.big_b[n];
                    let rhs = self.bar_idem(n + 1, i + 1).mul(bb);
                    if let Some(x) = bb.mul(&self.bar_idem(n, i)).first_difference(&rhs) {
                        return Some(format!("B̄ ē_{n}^({i}): {x}"));
                    }
                }
            }
        }
        None
    }

    /// The idempotent of `Tot^{(i)}_n = ⊕_j C̄^{(i-j)}_{n-2j}` on the normalized total complex.
    pub fn tot_idem(&self, n: usize, i: usize) -> Matrix {
        self.tot.block_diagonal(&self.tot, n, |b| if b.index <= i { self.bar_idem(b.degree, i - b.index) } else { Matrix::zeros(b.dim, b.dim) })
    }

    pub fn hh(&self, upto: usize) -> Result<Vec<Subquotient>> {
        (0..=upto).map(|n| self.hoch.homology(n)).collect()
    }

    pub fn hc(&self, upto: usize) -> Result<Vec<Subquotient>> {
        (0..=upto).map(|n| self.tot.complex.homology(n)).collect()
    }

    /// Normalized Hochschild homology, the first row of the λ-refined sequence.
    pub fn hh_bar(&self, upto: usize) -> Result<Vec<Subquotient>> {
        let c = self.mixed.hochschild()?;
        (0..=upto).map(|n| c.homology(n)).collect()
    }

    /// Induced idempotents on `HH_n`, indexed by `i = 0..=n`.
    pub fn hh_idempotents(&self, hh: &[Subquotient]) -> Result<Vec<Vec<Matrix>>> {
        hh.iter()
            .enumerate()
            .map(|(n, h)| (0..=n).map(|i| induced_on_subquotient(&self.chain_idem(n, i), h, h)).collect())
            .collect()
    }

    pub fn hh_bar_idempotents(&self, hh: &[Subquotient]) -> Result<Vec<Vec<Matrix>>> {
        hh.iter()
            .enumerate()
            .map(|(n, h)| (0..=n).map(|i| induced_on_subquotient(&self.bar_idem(n, i), h, h)).collect())
            .collect()
    }

    pub fn hc_idempotents(&self, hc: &[Subquotient]) -> Result<Vec<Vec<Matrix>>> {
        hc.iter()
            .enumerate()
            .map(|(n, h)| (0..=n).map(|i| induced_on_subquotient(&self.tot_idem(n, i), h, h)).collect())
            .collect()
    }

    /// Homology of the subcomplex `Im(A ⊗ e^{(i)})`, an independent route to `HH^{(i)}`.
    pub fn summand_complex(&self, i: usize) -> Result<ChainComplex> {
        let spans: Vec<Span> = (0..=self.top()).map(|n| Span::new(&self.chain_idem(n, i))).collect();
        let d = (0..=self.top())
            .map(|n| if n == 0 { Ok(Matrix::zeros(0, spans[0].dim())) } else { Span::restrict(self.hoch.d(n), &spans[n], &spans[n - 1]) })
            .collect::<Result<Vec<_>>>()?;
        ChainComplex::new(d)
    }
}

/// Dimensions of the images of a family of idempotents.
pub fn summand_dims(idems: &[Vec<Matrix>]) -> Vec<Vec<usize>> {
    idems.iter().map(|row| row.iter().map(rank).collect()).collect()
}
