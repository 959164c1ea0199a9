//! Chain complexes, mixed complexes and their total complexes.

use crate::error::{Error, Result};
use crate::linalg::{induced_on_subquotient, Difference, Matrix, SparseVec, Subquotient};

/// Finite chain complex `C_0 ← C_1 ← ... ← C_top`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    dims: Vec<usize>,
    /// `d[n]: C_n → C_{n-1}`; `d[0]` has zero rows.
    d: Vec<Matrix>,
}

impl ChainComplex {
    /// `d[n]` must map degree `n` to degree `n - 1`; `d[0]` is ignored and replaced by zero.
    pub fn new(mut d: Vec<Matrix>) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::InvalidInput("complex without degrees".into()));
        }
        let dims: Vec<usize> = d.iter().map(Matrix::cols).collect();
        d[0] = Matrix::zeros(0, dims[0]);
        for n in 1..d.len() {
            if d[n].rows() != dims[n - 1] {
                return Err(Error::DimensionMismatch(format!("differential in degree {n}")));
            }
        }
        Ok(Self { dims, d })
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn d(&self, n: usize) -> &Matrix {
        &self.d[n]
    }

    /// First degree where `d_{n-1} d_n ≠ 0`.
    pub fn square_zero_defect(&self) -> Option<(usize, Difference)> {
        (2..=self.top()).find_map(|n| {
            let dd = self.d[n - 1].mul(&self.d[n]);
            dd.first_difference(&Matrix::zeros(dd.rows(), dd.cols())).map(|x| (n, x))
        })
    }

    /// Homology in degree `n`; needs the outgoing differential `d_{n+1}`.
    pub fn homology(&self, n: usize) -> Result<Subquotient> {
        if n >= self.top() {
            return Err(Error::InvalidInput(format!("homology in degree {n} needs degree {} to be built", n + 1)));
        }
        Subquotient::new(&self.d[n], &self.d[n + 1])
    }

    /// Homology in every degree below the top.
    pub fn homologies(&self) -> Result<Vec<Subquotient>> {
        (0..self.top()).map(|n| self.homology(n)).collect()
    }
}

/// First degree where `f` fails to commute with the differentials.
pub fn chain_map_defect(f: &[Matrix], src: &ChainComplex, dst: &ChainComplex) -> Option<(usize, Difference)> {
    (1..f.len().min(src.top() + 1).min(dst.top() + 1)).find_map(|n| {
        let lhs = dst.d(n).mul(&f[n]);
        let rhs = f[n - 1].mul(src.d(n));
        lhs.first_difference(&rhs).map(|x| (n, x))
    })
}

/// Induced maps on homology in degrees `0..count`.
pub fn induced_maps(f: &[Matrix], src: &[Subquotient], dst: &[Subquotient]) -> Result<Vec<Matrix>> {
    src.iter().zip(dst).zip(f).map(|((s, t), m)| induced_on_subquotient(m, s, t)).collect()
}

/// Placement of one summand inside a total-complex degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    /// Column (bicomplex) or power of `u` (mixed complex).
    pub index: usize,
    /// Degree of the summand in the underlying graded space.
    pub degree: usize,
    pub offset: usize,
    pub dim: usize,
}

/// A total complex together with the block layout of every degree.
#[derive(Clone, Debug)]
pub struct TotComplex {
    pub complex: ChainComplex,
    pub blocks: Vec<Vec<Block>>,
}

impl TotComplex {
    pub fn block(&self, n: usize, index: usize) -> Option<Block> {
        self.blocks[n].iter().copied().find(|b| b.index == index)
    }

    /// Embeds `v` living in block `index` of degree `n`.
    pub fn embed(&self, n: usize, index: usize, v: &SparseVec) -> SparseVec {
        let b = self.block(n, index).expect("block exists");
        v.map_indices(|i| i + b.offset)
    }

    /// Component of `v ∈ Tot_n` in block `index`.
    pub fn component(&self, n: usize, index: usize, v: &SparseVec) -> SparseVec {
        match self.block(n, index) {
            None => SparseVec::new(),
            Some(b) => SparseVec::from_entries(
                v.iter().filter(|(i, _)| *i >= b.offset && *i < b.offset + b.dim).map(|(i, c)| (i - b.offset, c.clone())).collect(),
            ),
        }
    }

    /// Block-diagonal map `Tot_n → Tot'_n` with `f(block)` on each block, which
    /// must preserve block indices and degrees.
    pub fn block_diagonal(&self, other: &TotComplex, n: usize, f: impl Fn(&Block) -> Matrix) -> Matrix {
        let mut cols = Vec::with_capacity(self.complex.dim(n));
        for b in &self.blocks[n] {
            let target = other.block(n, b.index).expect("matching block");
            let m = f(b);
            debug_assert_eq!(m.shape(), (target.dim, b.dim));
            for c in m.columns() {
                cols.push(c.map_indices(|i| i + target.offset));
            }
        }
        Matrix::from_columns(other.complex.dim(n), cols)
    }
}

/// Builds a total complex from blocks `(index, degree, dim)` per total degree and
/// a rule giving the matrix from block `src` (degree n) to block `dst` (degree n-1).
pub fn assemble_tot(
    layout: Vec<Vec<(usize, usize, usize)>>,
    piece: impl Fn(usize, &Block, &Block) -> Option<Matrix>,
) -> Result<TotComplex> {
    let blocks: Vec<Vec<Block>> = layout
        .into_iter()
        .map(|row| {
            let mut offset = 0;
            row.into_iter()
                .map(|(index, degree, dim)| {
                    let b = Block { index, degree, offset, dim };
                    offset += dim;
                    b
                })
                .collect()
        })
        .collect();
    let total = |n: usize| blocks[n].iter().map(|b| b.dim).sum::<usize>();
    let mut d = vec![Matrix::zeros(0, total(0))];
    for n in 1..blocks.len() {
        let mut cols = Vec::with_capacity(total(n));
        for src in &blocks[n] {
            let mut parts: Vec<(usize, Matrix)> = Vec::new();
            for dst in &blocks[n - 1] {
                if let Some(m) = piece(n, src, dst) {
                    parts.push((dst.offset, m));
                }
            }
            for j in 0..src.dim {
                let mut entries = Vec::new();
                for (off, m) in &parts {
                    entries.extend(m.column(j).iter().map(|(i, c)| (i + off, c.clone())));
                }
                cols.push(SparseVec::from_entries(entries));
            }
        }
        d.push(Matrix::from_columns(total(n - 1), cols));
    }
    Ok(TotComplex { complex: ChainComplex::new(d)?, blocks })
}

/// Mixed complex `(M, b, B)` truncated at degree `top`.
#[derive(Clone, Debug)]
pub struct MixedComplex {
    /// `b[n]: M_n → M_{n-1}` (`b[0]` has zero rows).
    pub b: Vec<Matrix>,
    /// `big_b[n]: M_n → M_{n+1}` for `n < top`.
    pub big_b: Vec<Matrix>,
}

impl MixedComplex {
    pub fn top(&self) -> usize {
        self.b.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.b[n].cols()
    }

    pub fn hochschild(&self) -> Result<ChainComplex> {
        ChainComplex::new(self.b.clone())
    }

    /// First violation among `b² = 0`, `B² = 0`, `bB + Bb = 0`, as (identity, degree).
    pub fn identity_defect(&self) -> Option<(&'static str, usize, Difference)> {
        let top = self.top();
        for n in 2..=top {
            let m = self.b[n - 1].mul(&self.b[n]);
            if let Some(x) = m.first_difference(&Matrix::zeros(m.rows(), m.cols())) {
                return Some(("b∘b", n, x));
            }
        }
        for n in 0..top.saturating_sub(1) {
            let m = self.big_b[n + 1].mul(&self.big_b[n]);
            if let Some(x) = m.first_difference(&Matrix::zeros(m.rows(), m.cols())) {
                return Some(("B∘B", n, x));
            }
        }
        for n in 0..top {
            // b_{n+1} B_n + B_{n-1} b_n on M_n.
            let mut m = self.b[n + 1].mul(&self.big_b[n]);
            if n > 0 {
                m = m.add(&self.big_b[n - 1].mul(&self.b[n]));
            }
            if let Some(x) = m.first_difference(&Matrix::zeros(m.rows(), m.cols())) {
                return Some(("bB+Bb", n, x));
            }
        }
        None
    }

    /// `Tot_n = M_n ⊕ M_{n-2} ⊕ ...` with `D = b + B`; block index `j` holds `M_{n-2j}`.
    pub fn tot(&self) -> Result<TotComplex> {
        let layout = (0..=self.top())
            .map(|n| (0..=n / 2).map(|j| (j, n - 2 * j, self.dim(n - 2 * j))).collect())
            .collect();
        assemble_tot(layout, |_, src, dst| {
            if dst.index == src.index {
                Some(self.b[src.degree].clone())
            } else if dst.index + 1 == src.index {
                Some(self.big_b[src.degree].clone())
            } else {
                None
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tot_of_trivial_mixed_complex() {
        // M_n = Q for all n, b = 0, B = id: Tot homology is Q in degree 0 only.
        let top = 5;
        let b = (0..=top).map(|n| Matrix::zeros(if n == 0 { 0 } else { 1 }, 1)).collect();
        let big_b = (0..top).map(|_| Matrix::identity(1)).collect();
        let m = MixedComplex { b, big_b };
        let tot = m.tot().unwrap();
        assert!(tot.complex.square_zero_defect().is_some());
        let m2 = MixedComplex {
            b: (0..=top).map(|n| Matrix::zeros(if n == 0 { 0 } else { 1 }, 1)).collect(),
            big_b: (0..top).map(|_| Matrix::zeros(1, 1)).collect(),
        };
        let tot = m2.tot().unwrap();
        assert!(tot.complex.square_zero_defect().is_none());
        let dims: Vec<usize> = tot.complex.homologies().unwrap().iter().map(Subquotient::dim).collect();
        assert_eq!(dims, vec![1, 1, 2, 2, 3]);
    }
}
