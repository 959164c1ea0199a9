//! `gl_r(K)`-coinvariants of the Chevalley–Eilenberg and Leibniz complexes of `gl_r(A)`.

use super::complexes::{CeComplex, ClComplex};
use crate::algebra::words::{word_index, word_of};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Quotient, SparseAcc, SparseVec};

/// Quotients `C_n / span{X·c}` with the descended differential.
#[derive(Clone, Debug)]
pub struct Coinvariants {
    pub quotients: Vec<Quotient>,
    pub complex: ChainComplex,
}

impl Coinvariants {
    fn from_relations(ambient: &ChainComplex, quotients: Vec<Quotient>) -> Result<Self> {
        let d = (0..=ambient.top())
            .map(|n| {
                if n == 0 {
                    return Ok(Matrix::zeros(0, quotients[0].dim()));
                }
                let bar = Quotient::descend(ambient.d(n), &quotients[n], &quotients[n - 1]);
                let lhs = quotients[n - 1].proj().mul(ambient.d(n));
                match lhs.first_difference(&bar.mul(quotients[n].proj())) {
                    None => Ok(bar),
                    Some(e) => Err(Error::RelationNotPreserved(format!("differential on coinvariants in degree {n}: {e}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { quotients, complex: ChainComplex::new(d)? })
    }

    pub fn dim(&self, n: usize) -> usize {
        self.quotients[n].dim()
    }

    /// `(Λ^n g)_h` where `ads` are the matrices `ad_X` of a spanning set of `h`.
    pub fn of_ce(ce: &CeComplex, ads: &[Matrix]) -> Result<Self> {
        let quotients = (0..=ce.top())
            .map(|n| {
                let rel = ads.iter().flat_map(|ad| {
                    ce.wedges[n].combos.iter().map(move |c| {
                        let words = (0..n).flat_map(|k| {
                            ad.column(c[k]).iter().map(move |(t, a)| {
                                let mut w = c.clone();
                                w[k] = t;
                                (w, a.clone())
                            })
                        });
                        ce.normalize_words(n, words)
                    })
                });
                Quotient::by_span(ce.dim(n), rel.collect::<Vec<_>>())
            })
            .collect();
        Self::from_relations(&ce.complex, quotients)
    }

    /// `(g^{⊗n})_h` for the diagonal adjoint action.
    pub fn of_cl(cl: &ClComplex, ads: &[Matrix]) -> Result<Self> {
        let d = cl.algebra.dim();
        let quotients = (0..=cl.top())
            .map(|n| {
                let mut rel = Vec::new();
                for ad in ads {
                    for j in 0..cl.dim(n) {
                        let w = word_of(j, d, n);
                        let mut acc = SparseAcc::new();
                        for k in 0..n {
                            for (t, a) in ad.column(w[k]).iter() {
                                let mut v = w.clone();
                                v[k] = t;
                                acc.add(word_index(&v, d), a.clone());
                            }
                        }
                        rel.push(acc.finish());
                    }
                }
                Quotient::by_span(cl.dim(n), rel)
            })
            .collect();
        Self::from_relations(&cl.complex, quotients)
    }
}

/// Adjoint matrices of the given elements.
pub fn adjoint_matrices(g: &super::LieAlgebra, elems: &[SparseVec]) -> Vec<Matrix> {
    elems.iter().map(|x| g.ad(x)).collect()
}
