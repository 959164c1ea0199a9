use super::{image_basis, Echelon, Insert, Matrix, SparseVec};
use crate::error::{Error, Result};

/// A subspace with a fixed basis and coordinates with respect to it.
#[derive(Clone, Debug)]
pub struct Span {
    basis: Matrix,
    echelon: Echelon,
}

impl Span {
    /// Keeps the leftmost independent columns of `gens`.
    pub fn new(gens: &Matrix) -> Self {
        let basis = gens.select_columns(&image_basis(gens));
        let mut echelon = Echelon::tracked(basis.rows());
        for (k, c) in basis.columns().iter().enumerate() {
            let r = echelon.insert(c, SparseVec::unit(k));
            debug_assert!(matches!(r, Insert::Independent(_)));
        }
        Self { basis, echelon }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.echelon.contains(v)
    }

    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        let (rem, combo) = self.echelon.reduce(v);
        rem.is_zero().then_some(combo)
    }

    /// Matrix of `f` restricted to `src` with values in `dst`.
    pub fn restrict(f: &Matrix, src: &Span, dst: &Span) -> Result<Matrix> {
        let cols = src
            .basis
            .columns()
            .iter()
            .enumerate()
            .map(|(k, b)| {
                dst.coords(&f.apply(b))
                    .ok_or_else(|| Error::RelationNotPreserved(format!("image of basis vector {k} leaves the target subspace")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(dst.dim(), cols))
    }
}
