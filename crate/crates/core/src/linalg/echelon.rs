use super::{Matrix, Rational, SparseVec};
use crate::error::{Error, Result};
use num_traits::One;

const NONE: usize = usize::MAX;

/// Incremental row-echelon basis of a subspace of `Q^dim`.
///
/// Each stored pivot has a distinct leading index with coefficient 1. When
/// tracking is on, every pivot remembers its expression in the vectors that
/// were inserted (through the caller-supplied tags).
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    slot: Vec<usize>,
    pivots: Vec<SparseVec>,
    tags: Vec<SparseVec>,
    tracked: bool,
}

/// Outcome of [`Echelon::insert`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert {
    /// The vector was new; it became pivot number `.0`.
    Independent(usize),
    /// The vector was already in the span; the payload is the relation
    /// `tag - combination` among tagged generators that sums to zero.
    Dependent(SparseVec),
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Self { dim, slot: vec![NONE; dim], pivots: Vec::new(), tags: Vec::new(), tracked: false }
    }

    pub fn tracked(dim: usize) -> Self {
        Self { tracked: true, ..Self::new(dim) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[SparseVec] {
        &self.pivots
    }

    pub fn is_pivot_index(&self, i: usize) -> bool {
        self.slot[i] != NONE
    }

    /// Subtracts pivots while the leading entry of the remainder is a pivot
    /// index. Returns the remainder and, if tracked, the combination of tags
    /// that was removed.
    pub fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut rem = v.clone();
        let mut combo = SparseVec::new();
        while let Some((i, c)) = rem.leading() {
            let k = self.slot[i];
            if k == NONE {
                break;
            }
            let c = c.clone();
            if self.tracked {
                combo = combo.add_scaled(&self.tags[k], &c);
            }
            rem = rem.add_scaled(&self.pivots[k], &-c);
        }
        (rem, combo)
    }

    /// Like [`reduce`](Self::reduce) but clears every pivot index, so the
    /// remainder is supported on non-pivot coordinates only.
    pub fn reduce_full(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut rem = v.clone();
        let mut combo = SparseVec::new();
        let mut cursor = 0;
        loop {
            let next = rem.iter().find(|(i, _)| *i >= cursor && self.slot[*i] != NONE).map(|(i, c)| (i, c.clone()));
            let Some((i, c)) = next else { break };
            let k = self.slot[i];
            if self.tracked {
                combo = combo.add_scaled(&self.tags[k], &c);
            }
            rem = rem.add_scaled(&self.pivots[k], &-c);
            cursor = i + 1;
        }
        (rem, combo)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).0.is_zero()
    }

    pub fn insert(&mut self, v: &SparseVec, tag: SparseVec) -> Insert {
        let (rem, combo) = self.reduce(v);
        let tag = if self.tracked { tag.sub(&combo) } else { SparseVec::new() };
        match rem.leading() {
            None => Insert::Dependent(tag),
            Some((i, c)) => {
                let inv = Rational::one() / c;
                self.slot[i] = self.pivots.len();
                self.pivots.push(rem.scaled(&inv));
                self.tags.push(tag.scaled(&inv));
                Insert::Independent(self.pivots.len() - 1)
            }
        }
    }
}

pub fn rank(m: &Matrix) -> usize {
    let mut e = Echelon::new(m.rows());
    for c in m.columns() {
        e.insert(c, SparseVec::new());
    }
    e.rank()
}

/// Basis of the null space: one vector per column that depends on earlier
/// columns, with coefficient 1 on that column. This equals the basis read
/// off the reduced row echelon form, so it does not depend on elimination order.
pub fn kernel_basis(m: &Matrix) -> Matrix {
    let mut e = Echelon::tracked(m.rows());
    let mut out = Vec::new();
    for (j, c) in m.columns().iter().enumerate() {
        if let Insert::Dependent(rel) = e.insert(c, SparseVec::unit(j)) {
            out.push(rel);
        }
    }
    Matrix::from_columns(m.cols(), out)
}

/// Indices of the leftmost maximal independent set of columns.
pub fn image_basis(m: &Matrix) -> Vec<usize> {
    let mut e = Echelon::new(m.rows());
    let mut out = Vec::new();
    for (j, c) in m.columns().iter().enumerate() {
        if let Insert::Independent(_) = e.insert(c, SparseVec::new()) {
            out.push(j);
        }
    }
    out
}

/// Some `x` with `m x = v`, if one exists.
pub fn solve(m: &Matrix, v: &SparseVec) -> Option<SparseVec> {
    let mut e = Echelon::tracked(m.rows());
    for (j, c) in m.columns().iter().enumerate() {
        e.insert(c, SparseVec::unit(j));
    }
    let (rem, combo) = e.reduce(v);
    rem.is_zero().then_some(combo)
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.rows();
    if m.cols() != n {
        return Err(Error::DimensionMismatch(format!("inverse of {}x{}", n, m.cols())));
    }
    let mut e = Echelon::tracked(n);
    for (j, c) in m.columns().iter().enumerate() {
        if let Insert::Dependent(_) = e.insert(c, SparseVec::unit(j)) {
            return Err(Error::Singular(format!("column {j} depends on earlier columns")));
        }
    }
    let cols = (0..n).map(|i| e.reduce(&SparseVec::unit(i)).1).collect();
    Ok(Matrix::from_columns(n, cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn rank_and_kernel() {
        let m = Matrix::from_i64_rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        assert_eq!(rank(&m), 2);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
        assert_eq!(image_basis(&m), vec![0, 1]);
    }

    #[test]
    fn solve_and_inverse() {
        let m = Matrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let x = solve(&m, &SparseVec::from_entries(vec![(0, q(3)), (1, q(2))])).unwrap();
        assert_eq!(x, SparseVec::from_entries(vec![(0, q(1)), (1, q(1))]));
        let s = Matrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert!(inverse(&s).is_err());
        assert!(solve(&s, &SparseVec::unit(0)).is_none());
    }

    #[test]
    fn full_reduction_clears_pivot_coordinates() {
        let mut e = Echelon::new(3);
        e.insert(&SparseVec::from_entries(vec![(0, q(1)), (2, q(1))]), SparseVec::new());
        e.insert(&SparseVec::from_entries(vec![(1, q(1)), (2, q(-1))]), SparseVec::new());
        let (r, _) = e.reduce_full(&SparseVec::from_entries(vec![(1, q(1))]));
        assert_eq!(r, SparseVec::from_entries(vec![(2, q(1))]));
    }
}
