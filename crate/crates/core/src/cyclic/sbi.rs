//! The long exact sequence `HH_n → HC_n → HC_{n-2} → HH_{n-1}` computed on
//! the cyclic bicomplex.

use crate::complex::{ChainComplex, TotComplex};
use crate::error::{Error, Result};
use crate::linalg::{induced_on_subquotient, inverse, rank, Matrix, Rational, SparseAcc, SparseVec, Subquotient};
use num_traits::One;

/// Homology groups and connecting maps in degrees `0..=cert`.
#[derive(Clone, Debug)]
pub struct Sbi {
    pub hh: Vec<Subquotient>,
    pub hc: Vec<Subquotient>,
    /// `i[n]: HH_n → HC_n`.
    pub i: Vec<Matrix>,
    /// `s[n]: HC_n → HC_{n-2}` (empty target for `n < 2`).
    pub s: Vec<Matrix>,
    /// `b[n]: HC_{n-2} → HH_{n-1}` (empty source for `n < 2`).
    pub b: Vec<Matrix>,
    /// Chain-level versions of `I` and `S`.
    pub i_chain: Vec<Matrix>,
    pub s_chain: Vec<Matrix>,
}

/// Inclusion of the Hochschild complex as column 0.
pub fn inclusion_chain(tot: &TotComplex, n: usize, dim: usize) -> Matrix {
    Matrix::from_columns(tot.complex.dim(n), (0..dim).map(|j| tot.embed(n, 0, &SparseVec::unit(j))).collect())
}

/// Projection `Tot_n → Tot_{n-2}` forgetting the two leftmost columns.
pub fn periodicity_chain(tot: &TotComplex, n: usize) -> Matrix {
    let rows = if n >= 2 { tot.complex.dim(n - 2) } else { 0 };
    let mut cols = Vec::with_capacity(tot.complex.dim(n));
    for b in &tot.blocks[n] {
        for j in 0..b.dim {
            cols.push(if b.index >= 2 { tot.embed(n - 2, b.index - 2, &SparseVec::unit(j)) } else { SparseVec::new() });
        }
    }
    Matrix::from_columns(rows, cols)
}

/// Builds the sequence. `hoch` is the Hochschild complex, `tot` the full
/// bicomplex and `two` its two leftmost columns.
pub fn sbi_sequence(hoch: &ChainComplex, tot: &TotComplex, two: &TotComplex, cert: usize) -> Result<Sbi> {
    let hh: Vec<Subquotient> = (0..=cert).map(|n| hoch.homology(n)).collect::<Result<_>>()?;
    let hc: Vec<Subquotient> = (0..=cert).map(|n| tot.complex.homology(n)).collect::<Result<_>>()?;
    let two_h: Vec<Subquotient> = (0..cert).map(|n| two.complex.homology(n)).collect::<Result<_>>()?;
    let i_chain: Vec<Matrix> = (0..=cert).map(|n| inclusion_chain(tot, n, hoch.dim(n))).collect();
    let s_chain: Vec<Matrix> = (0..=cert).map(|n| periodicity_chain(tot, n)).collect();
    let mut i = Vec::new();
    let mut s = Vec::new();
    let mut b = Vec::new();
    for n in 0..=cert {
        i.push(induced_on_subquotient(&i_chain[n], &hh[n], &hc[n])?);
        if n < 2 {
            s.push(Matrix::zeros(0, hc[n].dim()));
            b.push(Matrix::zeros(if n >= 1 { hh[n - 1].dim() } else { 0 }, 0));
            continue;
        }
        s.push(induced_on_subquotient(&s_chain[n], &hc[n], &hc[n - 2])?);
        // Inverse of HH_{n-1} → H_{n-1}(two columns), induced by column-0 inclusion.
        let incl = induced_on_subquotient(&inclusion_chain(two, n - 1, hoch.dim(n - 1)), &hh[n - 1], &two_h[n - 1])?;
        let back = inverse(&incl)?;
        let mut cols = Vec::new();
        for y in hc[n - 2].reps().columns() {
            let mut lifted = SparseAcc::new();
            for blk in &tot.blocks[n - 2] {
                let comp = tot.component(n - 2, blk.index, y);
                lifted.add_vec(&tot.embed(n, blk.index + 2, &comp), &Rational::one());
            }
            let z = tot.complex.d(n).apply(&lifted.finish());
            let mut w = SparseAcc::new();
            for blk in &tot.blocks[n - 1] {
                let comp = tot.component(n - 1, blk.index, &z);
                if blk.index >= 2 {
                    if !comp.is_zero() {
                        return Err(Error::NotACycle("lifted cycle leaves the two leftmost columns".into()));
                    }
                } else {
                    w.add_vec(&two.embed(n - 1, blk.index, &comp), &Rational::one());
                }
            }
            let class = two_h[n - 1].classify(&w.finish())?;
            cols.push(back.apply(&class));
        }
        b.push(Matrix::from_columns(hh[n - 1].dim(), cols));
    }
    Ok(Sbi { hh, hc, i, s, b, i_chain, s_chain })
}

/// `im f = ker g` for `f: U → V`, `g: V → W` given as matrices.
pub fn exact_at(f: &Matrix, g: &Matrix, dim_v: usize) -> bool {
    let gf_zero = f.cols() == 0 || g.rows() == 0 || g.mul(f).is_zero();
    gf_zero && rank(f) + rank(g) == dim_v
}

impl Sbi {
    /// Degrees (with the position) where the sequence fails to be exact.
    pub fn exactness_defects(&self) -> Vec<String> {
        let mut out = Vec::new();
        let cert = self.hh.len() - 1;
        for n in 0..=cert {
            // At HC_n: im I_n = ker S_n.
            if !exact_at(&self.i[n], &self.s[n], self.hc[n].dim()) {
                out.push(format!("HC_{n}"));
            }
            if n >= 2 {
                // At HC_{n-2}: im S_n = ker B_n.
                if !exact_at(&self.s[n], &self.b[n], self.hc[n - 2].dim()) {
                    out.push(format!("HC_{}", n - 2));
                }
                // At HH_{n-1}: im B_n = ker I_{n-1}.
                if !exact_at(&self.b[n], &self.i[n - 1], self.hh[n - 1].dim()) {
                    out.push(format!("HH_{}", n - 1));
                }
            }
        }
        out
    }
}
