//! The dihedral action on `C_n(R) = R^{⊗n+1}`, the coinvariant complex
//! `D_•(R)` and measuring-induced maps on it.

use crate::algebra::words::{kron_vecs, word_index, word_of};
use crate::algebra::{tensor_power_map, AlgebraSpec, Measuring};
use crate::complex::ChainComplex;
use crate::cyclic::{hochschild_complex, quotient_maps, CyclicModule};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, Matrix, Quotient, Rational, SparseVec, Subquotient};
use num_traits::One;
use std::sync::Arc;

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// The involution of `r`, or an error naming the algebra.
pub fn involution_of(a: &AlgebraSpec) -> Result<&Matrix> {
    a.involution.as_ref().ok_or_else(|| Error::NotInvolutive(format!("{} has no involution", a.name)))
}

/// Generators `u_n`, `v_n` of `D_{n+1}` acting on `C_n(R)`.
#[derive(Clone, Debug)]
pub struct DihedralAction {
    pub u: Matrix,
    pub v: Matrix,
}

impl DihedralAction {
    /// `u_n(r₀,...,r_n) = (-1)^n (r_n, r₀, ..., r_{n-1})` and
    /// `v_n(r₀,...,r_n) = (-1)^{n(n+1)/2} (r̂₀, r̂_n, ..., r̂₁)`.
    pub fn new(cm: &CyclicModule, inv: &Matrix, n: usize) -> Self {
        let d = cm.d();
        let u = Matrix::from_fn(cm.dim(n), cm.dim(n), |j| {
            let w = word_of(j, d, n + 1);
            let mut r = vec![w[n]];
            r.extend_from_slice(&w[..n]);
            SparseVec::single(word_index(&r, d), sign(n))
        });
        let v = Matrix::from_fn(cm.dim(n), cm.dim(n), |j| {
            let w = word_of(j, d, n + 1);
            let mut slots = vec![w[0]];
            slots.extend(w[1..].iter().rev());
            let hats: Vec<&SparseVec> = slots.iter().map(|&k| inv.column(k)).collect();
            kron_vecs(&hats, d).scaled(&sign(n * (n + 1) / 2))
        });
        Self { u, v }
    }

    /// First failure of `u^{n+1} = 1`, `v² = 1`, `v u v⁻¹ = u⁻¹`.
    pub fn relation_defect(&self, n: usize) -> Option<String> {
        let id = Matrix::identity(self.u.rows());
        let mut un = id.clone();
        for _ in 0..n {
            un = self.u.mul(&un);
        }
        // un = u^n = u^{-1} once u^{n+1} = 1 holds.
        if let Some(e) = self.u.mul(&un).first_difference(&id) {
            return Some(format!("u^{} ≠ 1: {e}", n + 1));
        }
        if let Some(e) = self.v.mul(&self.v).first_difference(&id) {
            return Some(format!("v² ≠ 1: {e}"));
        }
        if let Some(e) = self.v.mul(&self.u).mul(&self.v).first_difference(&un) {
            return Some(format!("v u v⁻¹ ≠ u⁻¹: {e}"));
        }
        None
    }
}

/// `(D_•(R), b̄)` up to degree `top`.
#[derive(Clone, Debug)]
pub struct DihedralComplex {
    pub cm: CyclicModule,
    pub actions: Vec<DihedralAction>,
    pub quots: Vec<Quotient>,
    pub complex: ChainComplex,
}

impl DihedralComplex {
    pub fn new(a: Arc<AlgebraSpec>, top: usize, cap: usize) -> Result<Self> {
        let inv = involution_of(&a)?.clone();
        let cm = CyclicModule::new(a, top, cap)?;
        let actions: Vec<DihedralAction> = (0..=top).map(|n| DihedralAction::new(&cm, &inv, n)).collect();
        let quots: Vec<Quotient> = (0..=top)
            .map(|n| Quotient::by_operators(cm.dim(n), &[&actions[n].u, &actions[n].v]))
            .collect();
        let hoch = hochschild_complex(&cm)?;
        let d = (0..=top)
            .map(|n| {
                if n == 0 {
                    return Ok(Matrix::zeros(0, quots[0].dim()));
                }
                let bar = Quotient::descend(hoch.d(n), &quots[n], &quots[n - 1]);
                match quots[n - 1].proj().mul(hoch.d(n)).first_difference(&bar.mul(quots[n].proj())) {
                    None => Ok(bar),
                    Some(e) => Err(Error::RelationNotPreserved(format!("b on dihedral coinvariants in degree {n}: {e}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { cm, actions, quots, complex: ChainComplex::new(d)? })
    }

    pub fn top(&self) -> usize {
        self.cm.top
    }

    pub fn dim(&self, n: usize) -> usize {
        self.quots[n].dim()
    }

    /// `HD_n` for `n < top`.
    pub fn homology(&self) -> Result<Vec<Subquotient>> {
        self.complex.homologies()
    }

    /// The canonical epimorphism `C̃_n(R) → D_n(R)` from a quotient of `C_n` by `(1 - t)`.
    pub fn from_connes(&self, n: usize, connes: &Quotient) -> Result<Matrix> {
        let id = Matrix::identity(self.cm.dim(n));
        quotient_maps(&[id], std::slice::from_ref(connes), std::slice::from_ref(&self.quots[n]))
            .map(|mut v| v.remove(0))
            .map_err(|e| Error::RelationNotPreserved(format!("C̃_{n} → D_{n}: {e}")))
    }
}

/// Checks `Φ(x)(r̂) = (Φ(x)(r))^` on every coalgebra basis element.
pub fn require_involutive(m: &Measuring) -> Result<()> {
    let (ia, ib) = (involution_of(&m.source)?, involution_of(&m.target)?);
    for (k, p) in m.phi.iter().enumerate() {
        if let Some(e) = p.mul(ia).first_difference(&ib.mul(p)) {
            let (x, a, b) = (&m.coalgebra.basis[k], &m.source.basis[e.col], &m.target.basis[e.row]);
            return Err(Error::NotInvolutive(format!(
                "{}: {x}(hat {a}) has {} on {b} but hat({x}({a})) has {}",
                m.name,
                format_rational(&e.left),
                format_rational(&e.right)
            )));
        }
    }
    Ok(())
}

/// `C_•^Φ(x)` together with its descent `D_•^Φ(x)`.
#[derive(Clone, Debug)]
pub struct DihedralMaps {
    pub chain: Vec<Matrix>,
    pub bar: Vec<Matrix>,
}

impl DihedralMaps {
    pub fn new(m: &Measuring, x: &SparseVec, src: &DihedralComplex, dst: &DihedralComplex, cap: usize) -> Result<Self> {
        m.require_cocommutative()?;
        require_involutive(m)?;
        let top = src.top().min(dst.top());
        let chain = (0..=top).map(|n| tensor_power_map(m, x, n + 1, cap)).collect::<Result<Vec<_>>>()?;
        let bar = quotient_maps(&chain, &src.quots, &dst.quots)?;
        Ok(Self { chain, bar })
    }
}

/// First degree where `f` fails to intertwine `u` or `v`.
pub fn intertwining_defect(f: &[Matrix], src: &DihedralComplex, dst: &DihedralComplex) -> Option<String> {
    for (n, f) in f.iter().enumerate() {
        let (a, b) = (&src.actions[n], &dst.actions[n]);
        if let Some(e) = f.mul(&a.u).first_difference(&b.u.mul(f)) {
            return Some(format!("u_{n}: {e}"));
        }
        if let Some(e) = f.mul(&a.v).first_difference(&b.v.mul(f)) {
            return Some(format!("v_{n}: {e}"));
        }
    }
    None
}
