//! Lie and Leibniz algebras given by bracket structure constants, and
//! coalgebra measurings between them.

use crate::algebra::{mat_index, matrix_measuring, show, AlgebraSpec, CoalgebraSpec, Measuring, ValidationReport};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseAcc, SparseVec, Span};
use num_traits::One;
use std::sync::Arc;

/// Where a bracket came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieKind {
    Gl { r: usize },
    Sk { r: usize },
    Sp { r: usize },
    Generic,
}

/// A bilinear bracket on `K^dim`; `[e_i, e_j]` is stored at `i * dim + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    pub name: String,
    pub basis: Vec<String>,
    pub kind: LieKind,
    bracket: Vec<SparseVec>,
}

impl LieAlgebra {
    pub fn new(name: impl Into<String>, basis: Vec<String>, bracket: Vec<SparseVec>, kind: LieKind) -> Result<Self> {
        let d = basis.len();
        if bracket.len() != d * d || bracket.iter().any(|v| v.support_bound() > d) {
            return Err(Error::InvalidInput("bracket table has the wrong shape".into()));
        }
        Ok(Self { name: name.into(), basis, kind, bracket })
    }

    /// The commutator bracket of an associative algebra.
    pub fn from_algebra(a: &AlgebraSpec) -> Self {
        let d = a.dim();
        let bracket = (0..d * d).map(|ij| a.commutator(&SparseVec::unit(ij / d), &SparseVec::unit(ij % d))).collect();
        Self { name: format!("Lie({})", a.name), basis: a.basis.clone(), kind: LieKind::Generic, bracket }
    }

    /// `gl_r(A)` on the basis `E_ij ⊗ e_k` of `M_r(A)`.
    pub fn gl(a: &AlgebraSpec, r: usize) -> Self {
        let m = crate::algebra::matrix_algebra(a, r);
        let mut g = Self::from_algebra(&m);
        g.name = format!("gl{r}({})", a.name);
        g.kind = LieKind::Gl { r };
        g
    }

    /// The subalgebra spanned by the columns of `gens`, with the bracket in
    /// the coordinates of the kept basis. Fails if the span is not closed.
    pub fn subalgebra(&self, name: &str, gens: &Matrix, kind: LieKind) -> Result<(Self, Span)> {
        let span = Span::new(gens);
        let b = span.basis();
        let k = span.dim();
        let mut bracket = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                let v = self.bracket(b.column(i), b.column(j));
                let c = span.coords(&v).ok_or_else(|| {
                    Error::RelationNotPreserved(format!("{name}: bracket of basis vectors {i}, {j} leaves the subspace"))
                })?;
                bracket.push(c);
            }
        }
        let labels = (0..k).map(|i| format!("s{}", i + 1)).collect();
        Ok((Self { name: name.into(), basis: labels, kind, bracket }, span))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.bracket[i * self.dim() + j]
    }

    pub fn bracket(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = SparseAcc::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_vec(self.bracket_basis(i, j), &(x * y));
            }
        }
        acc.finish()
    }

    /// `ad_a = [a, -]` as a matrix.
    pub fn ad(&self, a: &SparseVec) -> Matrix {
        Matrix::from_fn(self.dim(), self.dim(), |j| self.bracket(a, &SparseVec::unit(j)))
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(|v| v.is_zero())
    }
}

/// The elements `E_ij ⊗ 1` of `gl_r(K) ⊂ gl_r(A)`.
pub fn scalar_matrices(a: &AlgebraSpec, r: usize) -> Vec<SparseVec> {
    let d = a.dim();
    let mut out = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            out.push(SparseVec::from_entries(a.unit.iter().map(|(t, c)| (mat_index(r, d, i, j, t), c.clone())).collect()));
        }
    }
    out
}

/// Antisymmetry and the Jacobi identity on basis elements.
pub fn validate_lie(g: &LieAlgebra) -> ValidationReport {
    let mut rep = ValidationReport::new(&g.name);
    let d = g.dim();
    let l = &g.basis;
    for i in 0..d {
        for j in i..d {
            let s = g.bracket_basis(i, j).add(g.bracket_basis(j, i));
            if !s.is_zero() {
                rep.fail("antisymmetry", format!("[{},{}] + [{},{}] = {}", l[i], l[j], l[j], l[i], show(&s, l)));
                return rep;
            }
        }
    }
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let (x, y, z) = (SparseVec::unit(i), SparseVec::unit(j), SparseVec::unit(k));
                let s = g
                    .bracket(&x, g.bracket_basis(j, k))
                    .add(&g.bracket(&y, g.bracket_basis(k, i)))
                    .add(&g.bracket(&z, g.bracket_basis(i, j)));
                if !s.is_zero() {
                    rep.fail("Jacobi identity", format!("on ({},{},{}) the cyclic sum is {}", l[i], l[j], l[k], show(&s, l)));
                    return rep;
                }
            }
        }
    }
    rep
}

/// `[x,[y,z]] - [[x,y],z] + [[x,z],y] = 0` on basis triples.
pub fn validate_leibniz(g: &LieAlgebra) -> ValidationReport {
    let mut rep = ValidationReport::new(&g.name);
    let d = g.dim();
    let l = &g.basis;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (x, y, z) = (SparseVec::unit(i), SparseVec::unit(j), SparseVec::unit(k));
                let s = g
                    .bracket(&x, g.bracket_basis(j, k))
                    .sub(&g.bracket(g.bracket_basis(i, j), &z))
                    .add(&g.bracket(g.bracket_basis(i, k), &y));
                if !s.is_zero() {
                    rep.fail("Leibniz identity", format!("on ({},{},{}) the defect is {}", l[i], l[j], l[k], show(&s, l)));
                    return rep;
                }
            }
        }
    }
    rep
}

/// `Ψ: C → Hom(g, g′)`, one matrix per coalgebra basis element.
#[derive(Clone, Debug)]
pub struct LieMeasuring {
    pub name: String,
    pub coalgebra: Arc<CoalgebraSpec>,
    pub source: Arc<LieAlgebra>,
    pub target: Arc<LieAlgebra>,
    pub phi: Vec<Matrix>,
}

impl LieMeasuring {
    pub fn new(
        name: impl Into<String>,
        coalgebra: Arc<CoalgebraSpec>,
        source: Arc<LieAlgebra>,
        target: Arc<LieAlgebra>,
        phi: Vec<Matrix>,
    ) -> Result<Self> {
        if phi.len() != coalgebra.dim() || phi.iter().any(|m| m.shape() != (target.dim(), source.dim())) {
            return Err(Error::InvalidInput("Lie measuring matrices have the wrong shape".into()));
        }
        Ok(Self { name: name.into(), coalgebra, source, target, phi })
    }

    /// `gl_r(Φ)`, acting entrywise on matrices.
    pub fn gl(m: &Measuring, r: usize) -> Self {
        let mm = matrix_measuring(m, r);
        Self {
            name: format!("gl{r}({})", m.name),
            coalgebra: m.coalgebra.clone(),
            source: Arc::new(LieAlgebra::gl(&m.source, r)),
            target: Arc::new(LieAlgebra::gl(&m.target, r)),
            phi: mm.phi,
        }
    }

    /// Restriction to subalgebras; fails if some `Ψ(x_k)` leaves the target span.
    pub fn restrict(&self, name: &str, src: (Arc<LieAlgebra>, &Span), dst: (Arc<LieAlgebra>, &Span)) -> Result<Self> {
        let phi = self.phi.iter().map(|p| Span::restrict(p, src.1, dst.1)).collect::<Result<Vec<_>>>()?;
        Self::new(name, self.coalgebra.clone(), src.0, dst.0, phi)
    }

    pub fn require_cocommutative(&self) -> Result<()> {
        if self.coalgebra.cocommutative {
            Ok(())
        } else {
            Err(Error::NotCocommutative(self.coalgebra.name.clone()))
        }
    }

    /// Checks `x[α,β] = Σ [x₍₁₎α, x₍₂₎β]` on basis pairs; errors carry the first failure.
    pub fn require_lie_measuring(&self) -> Result<()> {
        match validate_lie_measuring(self).violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::NotALieMeasuring(format!("{}: {}", self.name, v.witness))),
        }
    }
}

pub fn validate_lie_measuring(m: &LieMeasuring) -> ValidationReport {
    let mut rep = ValidationReport::new(&m.name);
    let (g, h, c) = (&*m.source, &*m.target, &*m.coalgebra);
    let n = c.dim();
    for k in 0..n {
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let lhs = m.phi[k].apply(g.bracket_basis(i, j));
                let mut acc = SparseAcc::new();
                for (yz, coef) in c.comult_basis(k).iter() {
                    acc.add_vec(&h.bracket(m.phi[yz / n].column(i), m.phi[yz % n].column(j)), coef);
                }
                let rhs = acc.finish();
                if lhs != rhs {
                    let x = &c.basis[k];
                    rep.fail(
                        "bracket rule",
                        format!(
                            "{x}[{},{}] = {} but Σ [{x}₍₁₎{}, {x}₍₂₎{}] = {}",
                            g.basis[i],
                            g.basis[j],
                            show(&lhs, &h.basis),
                            g.basis[i],
                            g.basis[j],
                            show(&rhs, &h.basis)
                        ),
                    );
                    return rep;
                }
            }
        }
    }
    rep
}

/// A two-dimensional Leibniz algebra that is not Lie: `[e2, e2] = e1`, all other brackets zero.
pub fn non_lie_leibniz() -> LieAlgebra {
    let z = SparseVec::new;
    let bracket = vec![z(), z(), z(), SparseVec::single(0, crate::linalg::Rational::one())];
    LieAlgebra::new("leib2", vec!["e1".into(), "e2".into()], bracket, LieKind::Generic).expect("shape")
}
