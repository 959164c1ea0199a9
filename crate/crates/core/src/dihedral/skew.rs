//! Skew-symmetric matrices `sk_r(R)` and symplectic matrices `sp_2r(R)`
//! inside `gl(R)`, and the restriction of `gl(Φ)` to them.

use super::complex::involution_of;
use crate::algebra::{mat_index, matrix_algebra, AlgebraSpec, Measuring};
use crate::error::{Error, Result};
use crate::lie::{CeComplex, LieAlgebra, LieKind, LieMeasuring};
use crate::linalg::{kernel_basis, q, Matrix, SparseVec, Span};
use std::sync::Arc;

/// `ᵗα_ij = (α_ji)^` on `gl_r(R)`.
pub fn conjugate_transpose(a: &AlgebraSpec, r: usize) -> Result<Matrix> {
    involution_of(a)?;
    Ok(matrix_algebra(a, r).involution.expect("matrix algebra inherits the involution"))
}

/// `J_r = j^{⊕r}` with `j = [[0, 1], [-1, 0]]`, as an element of `M_{2r}(R)`.
pub fn symplectic_form(a: &AlgebraSpec, r: usize) -> SparseVec {
    let (n, d) = (2 * r, a.dim());
    let mut entries = Vec::new();
    for k in 0..r {
        for (t, c) in a.unit.iter() {
            entries.push((mat_index(n, d, 2 * k, 2 * k + 1, t), c.clone()));
            entries.push((mat_index(n, d, 2 * k + 1, 2 * k, t), -c.clone()));
        }
    }
    SparseVec::from_entries(entries)
}

/// `ᵀα = -J_r ᵗα J_r` on `gl_2r(R)`.
pub fn symplectic_transpose(a: &AlgebraSpec, r: usize) -> Result<Matrix> {
    let t = conjugate_transpose(a, 2 * r)?;
    let m = matrix_algebra(a, 2 * r);
    let j = symplectic_form(a, r);
    let left = m.left_mult(&j);
    let right = Matrix::from_fn(m.dim(), m.dim(), |k| m.mul(&SparseVec::unit(k), &j));
    Ok(left.mul(&right).mul(&t).neg())
}

/// A Lie subalgebra `{α : τα = -α}` of `gl_n(R)` together with its span.
#[derive(Clone, Debug)]
pub struct Classical {
    pub gl: Arc<LieAlgebra>,
    pub algebra: Arc<LieAlgebra>,
    pub span: Span,
    /// The operation `τ` on `gl_n(R)`.
    pub tau: Matrix,
}

impl Classical {
    fn build(a: &AlgebraSpec, size: usize, tau: Matrix, name: String, kind: LieKind) -> Result<Self> {
        let gl = Arc::new(LieAlgebra::gl(a, size));
        let plus = tau.add(&Matrix::identity(gl.dim()));
        let (algebra, span) = gl.subalgebra(&name, &kernel_basis(&plus), kind)?;
        Ok(Self { gl, algebra: Arc::new(algebra), span, tau })
    }

    /// `sk_r(R) = {α ∈ gl_r(R) : ᵗα = -α}`.
    pub fn skew(a: &AlgebraSpec, r: usize) -> Result<Self> {
        Self::build(a, r, conjugate_transpose(a, r)?, format!("sk{r}({})", a.name), LieKind::Sk { r })
    }

    /// `sp_2r(R) = {α ∈ gl_2r(R) : ᵀα = -α}`.
    pub fn symplectic(a: &AlgebraSpec, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidInput("sp needs a positive half-size".into()));
        }
        Self::build(a, 2 * r, symplectic_transpose(a, r)?, format!("sp{}({})", 2 * r, a.name), LieKind::Sp { r })
    }

    /// Matrix size `n` of the ambient `gl_n`.
    pub fn size(&self) -> usize {
        match self.algebra.kind {
            LieKind::Sk { r } => r,
            LieKind::Sp { r } => 2 * r,
            LieKind::Gl { r } => r,
            LieKind::Generic => 1,
        }
    }

    /// `Λ^n` of the inclusion into `gl_n(R)`.
    pub fn wedge_inclusion(&self, src: &CeComplex, dst: &CeComplex, n: usize) -> Matrix {
        let b = self.span.basis();
        Matrix::from_fn(dst.dim(n), src.dim(n), |k| {
            let mut words: Vec<(Vec<usize>, crate::linalg::Rational)> = vec![(Vec::new(), q(1))];
            for &s in &src.wedges[n].combos[k] {
                words = words
                    .iter()
                    .flat_map(|(w, c)| {
                        b.column(s).iter().map(move |(t, a)| {
                            let mut w = w.clone();
                            w.push(t);
                            (w, c * a)
                        })
                    })
                    .collect();
            }
            dst.normalize_words(n, words)
        })
    }
}

/// Which classical family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Skew,
    Symplectic,
}

impl Family {
    pub fn build(self, a: &AlgebraSpec, r: usize) -> Result<Classical> {
        match self {
            Family::Skew => Classical::skew(a, r),
            Family::Symplectic => Classical::symplectic(a, r),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Skew => "sk",
            Family::Symplectic => "sp",
        }
    }
}

/// `sk_r(Φ)` or `sp_2r(Φ)`: `gl(Φ)` restricted to the classical subalgebras.
pub fn restrict_measuring(m: &Measuring, src: &Classical, dst: &Classical) -> Result<LieMeasuring> {
    let n = src.size();
    let glm = LieMeasuring::gl(m, n);
    let name = format!("{}|{}", glm.name, src.algebra.name);
    glm.restrict(&name, (src.algebra.clone(), &src.span), (dst.algebra.clone(), &dst.span))
}
