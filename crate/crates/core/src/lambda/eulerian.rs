//! Convolution of graded endomorphisms of the cotensor Hopf algebra `T(A)` and
//! the Eulerian idempotents obtained from the convolution logarithm.

use super::shuffle::tensor_shuffle;
use crate::algebra::words::{checked_pow, pow};
use crate::error::Result;
use crate::linalg::{Matrix, Rational};
use num_traits::One;

/// Degree-preserving endomorphism of `T(A)` truncated at `top`; `parts[n]`
/// acts on `H_n = A^{⊗n}` (with `H_0 = K`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedEnd {
    pub d: usize,
    pub parts: Vec<Matrix>,
}

impl GradedEnd {
    pub fn identity(d: usize, top: usize) -> Self {
        Self { d, parts: (0..=top).map(|n| Matrix::identity(pow(d, n))).collect() }
    }

    pub fn zero(d: usize, top: usize) -> Self {
        Self { d, parts: (0..=top).map(|n| Matrix::zeros(pow(d, n), pow(d, n))).collect() }
    }

    /// The convolution unit `ιε`.
    pub fn unit(d: usize, top: usize) -> Self {
        Self {
            d,
            parts: (0..=top).map(|n| if n == 0 { Matrix::identity(1) } else { Matrix::zeros(pow(d, n), pow(d, n)) }).collect(),
        }
    }

    pub fn top(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { d: self.d, parts: self.parts.iter().zip(&o.parts).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { d: self.d, parts: self.parts.iter().zip(&o.parts).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self { d: self.d, parts: self.parts.iter().map(|a| a.scaled(c)).collect() }
    }

    pub fn compose(&self, o: &Self) -> Self {
        Self { d: self.d, parts: self.parts.iter().zip(&o.parts).map(|(a, b)| a.mul(b)).collect() }
    }

    /// `f ⊙ g = μ (f ⊗ g) Δ` with the cut coproduct and signed shuffle product.
    pub fn convolve(&self, g: &Self) -> Self {
        let d = self.d;
        let parts = (0..=self.top())
            .map(|n| {
                let mut acc = Matrix::zeros(pow(d, n), pow(d, n));
                for k in 0..=n {
                    let fg = self.parts[k].kron(&g.parts[n - k]);
                    acc = acc.add(&tensor_shuffle(d, k, n - k).mul(&fg));
                }
                acc
            })
            .collect();
        Self { d, parts }
    }

    pub fn power(&self, k: usize) -> Self {
        let mut out = Self::unit(self.d, self.top());
        for _ in 0..k {
            out = out.convolve(self);
        }
        out
    }
}

/// `e[n][i]` for `0 ≤ i ≤ n ≤ top`, acting on `A^{⊗n}`; `e_n^{(i)} = 0` for `i > n` is not stored.
#[derive(Clone, Debug)]
pub struct Eulerian {
    pub d: usize,
    pub e: Vec<Vec<Matrix>>,
}

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * Rational::from_integer(k.into()))
}

/// `e^{(1)} = log(ιε + f)` with `f = id - ιε`, and `e^{(i)} = (e^{(1)})^{⊙i} / i!`.
pub fn eulerian_idempotents(d: usize, top: usize, cap: usize) -> Result<Eulerian> {
    checked_pow(d, top, cap, "tensor power for the Eulerian idempotents")?;
    let f = GradedEnd::identity(d, top).sub(&GradedEnd::unit(d, top));
    let mut log = GradedEnd::zero(d, top);
    let mut fk = GradedEnd::unit(d, top);
    for k in 1..=top {
        fk = fk.convolve(&f);
        let c = Rational::new(if k % 2 == 1 { 1.into() } else { (-1).into() }, k.into());
        log = log.add(&fk.scaled(&c));
    }
    let mut e: Vec<Vec<Matrix>> = (0..=top).map(|_| Vec::new()).collect();
    let mut pw = GradedEnd::unit(d, top);
    for i in 0..=top {
        if i > 0 {
            pw = pw.convolve(&log);
        }
        let scaled = pw.scaled(&(Rational::one() / factorial(i)));
        for n in i..=top {
            e[n].push(scaled.parts[n].clone());
        }
    }
    Ok(Eulerian { d, e })
}

impl Eulerian {
    pub fn top(&self) -> usize {
        self.e.len() - 1
    }

    /// `e_n^{(i)}`, zero when `i > n`.
    pub fn get(&self, n: usize, i: usize) -> Matrix {
        match self.e[n].get(i) {
            Some(m) => m.clone(),
            None => Matrix::zeros(pow(self.d, n), pow(self.d, n)),
        }
    }

    /// `A ⊗ e_n^{(i)}` on `C_n(A) = A ⊗ A^{⊗n}`.
    pub fn on_chains(&self, n: usize, i: usize) -> Matrix {
        Matrix::identity(self.d).kron(&self.get(n, i))
    }

    /// First failure of idempotency, orthogonality or partition of unity.
    pub fn defect(&self) -> Option<String> {
        for n in 0..=self.top() {
            let dim = pow(self.d, n);
            let mut sum = Matrix::zeros(dim, dim);
            for i in 0..=n {
                let ei = self.get(n, i);
                sum = sum.add(&ei);
                for j in 0..=n {
                    let prod = ei.mul(&self.get(n, j));
                    let want = if i == j { ei.clone() } else { Matrix::zeros(dim, dim) };
                    if let Some(x) = prod.first_difference(&want) {
                        return Some(format!("e_{n}^({i}) e_{n}^({j}): {x}"));
                    }
                }
            }
            if let Some(x) = sum.first_difference(&Matrix::identity(dim)) {
                return Some(format!("sum of e_{n}^(i): {x}"));
            }
        }
        None
    }
}
