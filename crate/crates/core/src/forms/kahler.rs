//! Kähler differentials `Ω¹ = I/I²`, their exterior powers over `A`, and the
//! de Rham differential.

use crate::algebra::words::{checked_pow, kron_vecs, pow};
use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use crate::linalg::{image_basis, inverse, kernel_basis, Matrix, Quotient, SparseVec, Subquotient};
use std::sync::Arc;

/// `Ω¹_A` realized as `I/I²` with `I = ker(μ: A ⊗ A → A)`.
#[derive(Clone, Debug)]
pub struct Kahler {
    pub algebra: Arc<AlgebraSpec>,
    pub space: Subquotient,
    /// Universal derivation `A → Ω¹`, `a ↦ [a ⊗ 1 - 1 ⊗ a]`.
    pub d: Matrix,
    /// `act[k]` is multiplication by the basis vector `e_k` on `Ω¹`.
    pub act: Vec<Matrix>,
}

impl Kahler {
    pub fn new(algebra: Arc<AlgebraSpec>) -> Result<Self> {
        if !algebra.commutative {
            return Err(Error::NotCommutative(algebra.name.clone()));
        }
        let d = algebra.dim();
        let mu = Matrix::from_fn(d, d * d, |j| algebra.mul_basis(j / d, j % d).clone());
        let ideal = kernel_basis(&mu);
        let square: Vec<SparseVec> = ideal
            .columns()
            .iter()
            .flat_map(|x| ideal.columns().iter().map(move |y| (x, y)))
            .map(|(x, y)| tensor_square_mul(&algebra, x, y))
            .collect();
        let space = Subquotient::from_spaces(ideal, Matrix::from_columns(d * d, square))?;
        let one = &algebra.unit;
        let dmat = Matrix::from_fn(space.dim(), d, |j| {
            let a = SparseVec::unit(j);
            let v = kron_vecs(&[&a, one], d).sub(&kron_vecs(&[one, &a], d));
            space.classify(&v).expect("a ⊗ 1 - 1 ⊗ a lies in I")
        });
        let act = (0..d)
            .map(|k| {
                let l = algebra.left_mult(&SparseVec::unit(k)).kron(&Matrix::identity(d));
                crate::linalg::induced_on_subquotient(&l, &space, &space)
            })
            .collect::<Result<_>>()?;
        Ok(Self { algebra, space, d: dmat, act })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `a₀ da₁` for basis indices.
    pub fn generator(&self, a0: usize, a1: usize) -> SparseVec {
        self.act[a0].apply(self.d.column(a1))
    }
}

/// Product in the algebra `A ⊗ A`.
fn tensor_square_mul(a: &AlgebraSpec, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let d = a.dim();
    let mut acc = crate::linalg::SparseAcc::new();
    for (i, c) in x.iter() {
        for (j, e) in y.iter() {
            let l = a.mul_basis(i / d, j / d);
            let r = a.mul_basis(i % d, j % d);
            acc.add_vec(&kron_vecs(&[l, r], d), &(c * e));
        }
    }
    acc.finish()
}

/// The forms `Ω^p_A` for `p ≤ top`, each a quotient of `C_p(A)` through
/// `π_p(a₀ ⊗ ... ⊗ a_p) = a₀ da₁ ... da_p`.
#[derive(Clone, Debug)]
pub struct Forms {
    pub kahler: Kahler,
    pub top: usize,
    /// `Ω^p` as a quotient of `(Ω¹)^{⊗p}` by `A`-balancing and alternation (`p ≥ 1`).
    pub exterior: Vec<Quotient>,
    /// `π_p: C_p(A) → Ω^p`.
    pub pi: Vec<Matrix>,
    /// A right inverse of `π_p`, sending each basis form to a basis chain.
    pub section: Vec<Matrix>,
    /// De Rham `d: Ω^p → Ω^{p+1}` for `p < top`.
    pub d: Vec<Matrix>,
}

impl Forms {
    pub fn new(algebra: Arc<AlgebraSpec>, top: usize, cap: usize) -> Result<Self> {
        let kahler = Kahler::new(algebra.clone())?;
        let dim = algebra.dim();
        let k = kahler.dim();
        let mut exterior = vec![Quotient::identity(dim)];
        let mut pi = vec![Matrix::identity(dim)];
        for p in 1..=top {
            checked_pow(dim, p + 1, cap, &format!("C_{p}({})", algebra.name))?;
            checked_pow(k.max(1), p, cap, &format!("(Ω¹)^⊗{p}({})", algebra.name))?;
            let q = exterior_power(&kahler, p);
            let tail = pow(dim, p);
            let dcols: Vec<&SparseVec> = (0..dim).map(|a| kahler.d.column(a)).collect();
            let m = Matrix::from_fn(q.dim(), pow(dim, p + 1), |j| {
                let (a0, rest) = (j / tail, j % tail);
                let w = crate::algebra::words::word_of(rest, dim, p);
                let head = kahler.act[a0].apply(dcols[w[0]]);
                let mut factors = vec![&head];
                factors.extend(w[1..].iter().map(|&a| dcols[a]));
                q.project(&kron_vecs(&factors, k))
            });
            exterior.push(q);
            pi.push(m);
        }
        let section = pi.iter().map(right_inverse).collect::<Result<Vec<_>>>()?;
        let mut forms = Self { kahler, top, exterior, pi, section, d: Vec::new() };
        for p in 0..top {
            let one = Matrix::from_columns(dim, vec![algebra.unit.clone()]);
            let prepend = one.kron(&Matrix::identity(pow(dim, p + 1)));
            let dp = forms.descend(&prepend, p, p + 1).map_err(|e| Error::RelationNotPreserved(format!("de Rham d in degree {p}: {e}")))?;
            forms.d.push(dp);
        }
        Ok(forms)
    }

    pub fn dim(&self, p: usize) -> usize {
        self.pi[p].rows()
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.top).map(|p| self.dim(p)).collect()
    }

    /// `π_q f σ_p` for `f: C_p → C_q`, checking that `f` maps `ker π_p` into `ker π_q`.
    pub fn descend(&self, f: &Matrix, p: usize, q: usize) -> Result<Matrix> {
        descend_between(f, &self.pi[p], &self.section[p], &self.pi[q])
    }

    /// `dim Ω^p / dΩ^{p-1}`.
    pub fn coboundary_quotient_dim(&self, p: usize) -> usize {
        let im = if p == 0 { 0 } else { crate::linalg::rank(&self.d[p - 1]) };
        self.dim(p) - im
    }

    /// `HDR^p` for `p < top`.
    pub fn de_rham(&self, p: usize) -> Result<Subquotient> {
        let out = self.d[p].clone();
        let inc = if p == 0 { Matrix::zeros(self.dim(0), 0) } else { self.d[p - 1].clone() };
        Subquotient::new(&out, &inc)
    }
}

/// `π' f σ`, failing when `π' f ≠ (π' f σ) π`.
pub fn descend_between(f: &Matrix, pi_src: &Matrix, section: &Matrix, pi_dst: &Matrix) -> Result<Matrix> {
    let lhs = pi_dst.mul(f);
    let bar = lhs.mul(section);
    match lhs.first_difference(&bar.mul(pi_src)) {
        None => Ok(bar),
        Some(d) => Err(Error::RelationNotPreserved(d.to_string())),
    }
}

/// A right inverse of a surjection, supported on its leftmost independent columns.
pub fn right_inverse(m: &Matrix) -> Result<Matrix> {
    let idx = image_basis(m);
    if idx.len() != m.rows() {
        return Err(Error::Singular(format!("map of rank {} onto a space of dimension {}", idx.len(), m.rows())));
    }
    let inv = inverse(&m.select_columns(&idx))?;
    Ok(Matrix::from_columns(m.cols(), inv.columns().iter().map(|c| c.map_indices(|i| idx[i])).collect()))
}

/// `Λ^p_A Ω¹` as a quotient of `(Ω¹)^{⊗p}` over `K`.
fn exterior_power(k: &Kahler, p: usize) -> Quotient {
    let n = k.dim();
    let total = pow(n, p);
    let mut rel = Vec::new();
    let slot = |op: &Matrix, j: usize| Matrix::identity(pow(n, j)).kron(op).kron(&Matrix::identity(pow(n, p - j - 1)));
    for j in 0..p.saturating_sub(1) {
        for a in &k.act {
            let diff = slot(a, j).sub(&slot(a, j + 1));
            rel.extend(diff.into_columns());
        }
        rel.extend(alt_relations(n, p, j));
    }
    Quotient::by_span(total, rel)
}

/// `v + τ_j v` for every basis word, `τ_j` swapping slots `j, j+1`.
fn alt_relations(n: usize, p: usize, j: usize) -> Vec<SparseVec> {
    (0..pow(n, p))
        .map(|i| {
            let mut w = crate::algebra::words::word_of(i, n, p);
            w.swap(j, j + 1);
            SparseVec::unit(i).add(&SparseVec::unit(crate::algebra::words::word_index(&w, n)))
        })
        .collect()
}
