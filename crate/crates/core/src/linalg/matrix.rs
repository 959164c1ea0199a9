use super::{format_rational, Rational, SparseAcc, SparseVec};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use rayon::prelude::*;

/// Exact matrix stored as sparse columns. Column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

/// First entry where two matrices of equal shape disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub row: usize,
    pub col: usize,
    pub left: Rational,
    pub right: Rational,
}

impl std::fmt::Display for Difference {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "entry ({}, {}): {} vs {}",
            self.row,
            self.col,
            format_rational(&self.left),
            format_rational(&self.right)
        )
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        Self { rows: n, cols: n, columns: (0..n).map(|i| SparseVec::single(i, c.clone())).collect() }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns.iter().all(|c| c.support_bound() <= rows));
        Self { rows, cols: columns.len(), columns }
    }

    /// Builds column `j` from `f(j)`, in parallel; the result does not depend on scheduling.
    pub fn from_fn<F>(rows: usize, cols: usize, f: F) -> Self
    where
        F: Fn(usize) -> SparseVec + Sync + Send,
    {
        let columns: Vec<SparseVec> = if cols >= 64 {
            (0..cols).into_par_iter().map(&f).collect()
        } else {
            (0..cols).map(f).collect()
        };
        Self::from_columns(rows, columns)
    }

    /// Row-major dense input.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut cols = vec![Vec::new(); c];
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix rows");
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    cols[j].push((i, v.clone()));
                }
            }
        }
        Self::from_columns(r, cols.into_iter().map(SparseVec::from_sorted_unchecked).collect())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Rational>> =
            rows.iter().map(|r| r.iter().map(|&x| super::q(x)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<SparseVec> {
        self.columns
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.columns[j].coeff(i)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.iter() {
                out[i][j] = c.clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = SparseAcc::new();
        for (j, c) in v.iter() {
            acc.add_vec(&self.columns[j], c);
        }
        acc.finish()
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |j| self.apply(&rhs.columns[j])))
    }

    /// Matrix product; panics on shape mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape")
    }

    fn zip(&self, rhs: &Matrix, c: &Rational) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().zip(&rhs.columns).map(|(a, b)| a.add_scaled(b, c)).collect(),
        }
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        self.zip(rhs, &Rational::one())
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.zip(rhs, &-Rational::one())
    }

    pub fn scaled(&self, c: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, columns: self.columns.iter().map(|v| v.scaled(c)).collect() }
    }

    pub fn neg(&self) -> Matrix {
        self.scaled(&-Rational::one())
    }

    pub fn transpose(&self) -> Matrix {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.iter() {
                cols[i].push((j, c.clone()));
            }
        }
        Matrix::from_columns(self.cols, cols.into_iter().map(SparseVec::from_sorted_unchecked).collect())
    }

    /// Kronecker product with the left factor as the slow index.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let (r2, c2) = rhs.shape();
        let mut columns = Vec::with_capacity(self.cols * c2);
        for a in &self.columns {
            for b in &rhs.columns {
                let mut e = Vec::with_capacity(a.nnz() * b.nnz());
                for (i, x) in a.iter() {
                    for (k, y) in b.iter() {
                        e.push((i * r2 + k, x * y));
                    }
                }
                columns.push(SparseVec::from_sorted_unchecked(e));
            }
        }
        Matrix::from_columns(self.rows * r2, columns)
    }

    /// `[A | B | ...]`.
    pub fn hstack(parts: &[&Matrix]) -> Matrix {
        let rows = parts.first().map_or(0, |m| m.rows);
        let mut columns = Vec::new();
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            columns.extend(m.columns.iter().cloned());
        }
        Matrix::from_columns(rows, columns)
    }

    /// Stacks blocks vertically.
    pub fn vstack(parts: &[&Matrix]) -> Matrix {
        let cols = parts.first().map_or(0, |m| m.cols);
        let mut columns = vec![Vec::new(); cols];
        let mut offset = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            for (j, col) in m.columns.iter().enumerate() {
                columns[j].extend(col.iter().map(|(i, c)| (i + offset, c.clone())));
            }
            offset += m.rows;
        }
        Matrix::from_columns(offset, columns.into_iter().map(SparseVec::from_sorted_unchecked).collect())
    }

    pub fn block_diag(parts: &[&Matrix]) -> Matrix {
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let mut columns = Vec::new();
        let mut offset = 0;
        for m in parts {
            for col in &m.columns {
                columns.push(col.map_indices(|i| i + offset));
            }
            offset += m.rows;
        }
        Matrix::from_columns(rows, columns)
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_columns(self.rows, idx.iter().map(|&j| self.columns[j].clone()).collect())
    }

    /// Rows `start..start+len`, reindexed from zero.
    pub fn row_block(&self, start: usize, len: usize) -> Matrix {
        Matrix::from_columns(
            len,
            self.columns
                .iter()
                .map(|c| {
                    SparseVec::from_sorted_unchecked(
                        c.iter().filter(|(i, _)| *i >= start && *i < start + len).map(|(i, v)| (i - start, v.clone())).collect(),
                    )
                })
                .collect(),
        )
    }

    /// Columns `start..start+len`.
    pub fn col_block(&self, start: usize, len: usize) -> Matrix {
        Matrix::from_columns(self.rows, self.columns[start..start + len].to_vec())
    }

    /// First disagreeing entry in column-major order, or `None` when equal.
    pub fn first_difference(&self, other: &Matrix) -> Option<Difference> {
        if self.shape() != other.shape() {
            return Some(Difference {
                row: self.rows.max(other.rows),
                col: self.cols.max(other.cols),
                left: Rational::zero(),
                right: Rational::zero(),
            });
        }
        for (j, (a, b)) in self.columns.iter().zip(&other.columns).enumerate() {
            if a != b {
                let d = a.sub(b);
                let (i, _) = d.leading().expect("columns differ");
                return Some(Difference { row: i, col: j, left: a.coeff(i), right: b.coeff(i) });
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_i64_rows(&[&[1, 2], &[0, 1], &[3, 0]]);
        let b = Matrix::from_i64_rows(&[&[1, 0, 1], &[2, 1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab, Matrix::from_i64_rows(&[&[5, 2, 1], &[2, 1, 0], &[3, 0, 3]]));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(ab.transpose(), b.transpose().mul(&a.transpose()));
    }

    #[test]
    fn kron_mixed_product() {
        let a = Matrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64_rows(&[&[0, 1], &[1, 1]]);
        let c = Matrix::from_i64_rows(&[&[2, 0], &[1, 1]]);
        let d = Matrix::from_i64_rows(&[&[1, -1], &[0, 2]]);
        assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
        assert_eq!(a.kron(&b).get(1, 2), q(2));
        assert_eq!(a.kron(&b).get(3, 3), q(4));
    }

    #[test]
    fn stacking() {
        let a = Matrix::identity(2);
        let b = Matrix::from_i64_rows(&[&[5, 6]]);
        let v = Matrix::vstack(&[&a, &b]);
        assert_eq!(v.row_block(2, 1), b);
        let h = Matrix::hstack(&[&a, &a]);
        assert_eq!(h.col_block(2, 2), a);
        assert_eq!(Matrix::block_diag(&[&a, &b]).shape(), (3, 4));
        assert!(a.first_difference(&a).is_none());
        let d = a.first_difference(&Matrix::zeros(2, 2)).unwrap();
        assert_eq!((d.row, d.col), (0, 0));
    }
}
