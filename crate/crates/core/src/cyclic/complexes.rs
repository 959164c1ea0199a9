use super::CyclicModule;
use crate::algebra::words::{kron_vecs, pow};
use crate::complex::{assemble_tot, ChainComplex, MixedComplex, TotComplex};
use crate::error::Result;
use crate::linalg::{Matrix, Quotient, Rational, SparseVec};
use num_traits::One;

/// The Hochschild complex `(C_•, b)` up to the top degree of the module.
pub fn hochschild_complex(cm: &CyclicModule) -> Result<ChainComplex> {
    ChainComplex::new((0..=cm.top).map(|n| cm.hochschild_b(n)).collect())
}

struct Pieces {
    b: Vec<Matrix>,
    bp: Vec<Matrix>,
    omt: Vec<Matrix>,
    norm: Vec<Matrix>,
}

impl Pieces {
    fn new(cm: &CyclicModule, top: usize) -> Self {
        Self {
            b: (0..=top).map(|q| cm.hochschild_b(q)).collect(),
            bp: (0..=top).map(|q| cm.b_prime(q)).collect(),
            omt: (0..=top).map(|q| cm.one_minus_t(q)).collect(),
            norm: (0..=top).map(|q| cm.norm(q)).collect(),
        }
    }
}

/// Total complex of the cyclic bicomplex with `columns` columns (all of them
/// when `None`). Column `p` holds `C_q` with vertical map `b` for even `p`
/// and `-b'` for odd `p`; horizontal maps are `1 - t` out of odd columns and
/// the norm `N` out of even ones.
pub fn cyclic_bicomplex(cm: &CyclicModule, columns: Option<usize>) -> Result<TotComplex> {
    let top = cm.top;
    let pieces = Pieces::new(cm, top);
    let width = columns.unwrap_or(top + 1);
    let layout = (0..=top)
        .map(|n| (0..=n.min(width - 1)).map(|p| (p, n - p, cm.dim(n - p))).collect())
        .collect();
    assemble_tot(layout, |_, src, dst| {
        let (p, q) = (src.index, src.degree);
        if dst.index == p && q > 0 {
            Some(if p % 2 == 0 { pieces.b[q].clone() } else { pieces.bp[q].neg() })
        } else if p > 0 && dst.index == p - 1 {
            Some(if p % 2 == 1 { pieces.omt[q].clone() } else { pieces.norm[q].clone() })
        } else {
            None
        }
    })
}

/// Mixed complex `(C_•, b, B)` on unnormalized chains.
pub fn unnormalized_mixed(cm: &CyclicModule) -> MixedComplex {
    MixedComplex {
        b: (0..=cm.top).map(|n| cm.hochschild_b(n)).collect(),
        big_b: (0..cm.top).map(|n| cm.connes_b_closed(n)).collect(),
    }
}

/// Projections `π_n: C_n → C̄_n = A ⊗ Ā^{⊗n}` and their sections, where `Ā` is
/// the span of the basis vectors other than the unit pivot.
#[derive(Clone, Debug)]
pub struct Normalization {
    pub proj: Vec<Matrix>,
    pub lift: Vec<Matrix>,
}

impl Normalization {
    pub fn new(cm: &CyclicModule) -> Self {
        let a = &cm.algebra;
        let d = a.dim();
        let k = a.unit_pivot();
        let uk = a.unit.coeff(k);
        let pos = |j: usize| if j < k { j } else { j - 1 };
        // Ā-coordinates of each basis vector of A.
        let bar: Vec<SparseVec> = (0..d)
            .map(|j| {
                if j != k {
                    SparseVec::unit(pos(j))
                } else {
                    let s = -Rational::one() / &uk;
                    SparseVec::from_entries(a.unit.iter().filter(|(i, _)| *i != k).map(|(i, c)| (pos(i), c * &s)).collect())
                }
            })
            .collect();
        let e = d - 1;
        let mut proj = Vec::new();
        let mut lift = Vec::new();
        for n in 0..=cm.top {
            let tail = pow(e, n);
            proj.push(Matrix::from_fn(d * tail, cm.dim(n), |j| {
                let w = cm.word(n, j);
                let factors: Vec<&SparseVec> = w[1..].iter().map(|&i| &bar[i]).collect();
                kron_vecs(&factors, e).map_indices(|t| w[0] * tail + t)
            }));
            lift.push(Matrix::from_fn(cm.dim(n), d * tail, |j| {
                let (head, mut rest) = (j / tail.max(1), j % tail.max(1));
                let mut w = vec![0; n + 1];
                w[0] = head;
                for slot in w[1..].iter_mut().rev() {
                    let r = rest % e;
                    rest /= e;
                    *slot = if r < k { r } else { r + 1 };
                }
                SparseVec::unit(crate::algebra::words::word_index(&w, d))
            }));
        }
        Self { proj, lift }
    }

    /// `π f σ` for a map `f: C_n → C_m`.
    pub fn descend(&self, f: &Matrix, n: usize, m: usize) -> Matrix {
        self.proj[m].mul(f).mul(&self.lift[n])
    }
}

/// Normalized mixed complex `(C̄, b̄, B̄)`.
pub fn normalized_mixed(cm: &CyclicModule, norm: &Normalization) -> MixedComplex {
    MixedComplex {
        b: (0..=cm.top)
            .map(|n| if n == 0 { Matrix::zeros(0, norm.proj[0].rows()) } else { norm.descend(&cm.hochschild_b(n), n, n - 1) })
            .collect(),
        big_b: (0..cm.top).map(|n| norm.descend(&cm.connes_b_closed(n), n, n + 1)).collect(),
    }
}

/// Quotients `C̃_n = C_n / (1 - t)`.
pub fn connes_quotients(cm: &CyclicModule) -> Vec<Quotient> {
    (0..=cm.top).map(|n| Quotient::by_operators(cm.dim(n), &[&cm.cyclic_op(n)])).collect()
}

/// Connes' complex `(C̃_•, b̃)`.
pub fn connes_complex(cm: &CyclicModule, quots: &[Quotient]) -> Result<ChainComplex> {
    ChainComplex::new(
        (0..=cm.top)
            .map(|n| {
                if n == 0 {
                    Matrix::zeros(0, quots[0].dim())
                } else {
                    Quotient::descend(&cm.hochschild_b(n), &quots[n], &quots[n - 1])
                }
            })
            .collect(),
    )
}
