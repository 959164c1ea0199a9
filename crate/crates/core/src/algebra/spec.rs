use crate::error::{Error, Result};
use crate::linalg::{format_rational, Matrix, Rational, SparseAcc, SparseVec};
use std::sync::Arc;

/// Finite-dimensional unital algebra over Q given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub name: String,
    pub basis: Vec<String>,
    /// `mult[i * dim + j]` is the coordinate vector of `e_i e_j`.
    mult: Vec<SparseVec>,
    pub unit: SparseVec,
    /// Declared commutativity; checked by [`validate_algebra`].
    pub commutative: bool,
    /// Optional anti-multiplicative involution `r ↦ r̂`.
    pub involution: Option<Matrix>,
}

impl AlgebraSpec {
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        mult: Vec<SparseVec>,
        unit: SparseVec,
        commutative: bool,
    ) -> Result<Self> {
        let d = basis.len();
        if mult.len() != d * d {
            return Err(Error::InvalidInput(format!("structure constants need {} products, got {}", d * d, mult.len())));
        }
        if mult.iter().chain(std::iter::once(&unit)).any(|v| v.support_bound() > d) {
            return Err(Error::InvalidInput("structure constant out of range".into()));
        }
        if unit.is_zero() {
            return Err(Error::InvalidInput("unit vector is zero".into()));
        }
        Ok(Self { name: name.into(), basis, mult, unit, commutative, involution: None })
    }

    pub fn with_involution(mut self, inv: Matrix) -> Result<Self> {
        if inv.shape() != (self.dim(), self.dim()) {
            return Err(Error::InvalidInput("involution has the wrong shape".into()));
        }
        self.involution = Some(inv);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim() + j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = SparseAcc::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_vec(self.mul_basis(i, j), &(x * y));
            }
        }
        acc.finish()
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    /// Multiplication `A ⊗ A → A` as a `d × d²` matrix.
    pub fn mult_matrix(&self) -> Matrix {
        Matrix::from_columns(self.dim(), self.mult.clone())
    }

    pub fn left_mult(&self, a: &SparseVec) -> Matrix {
        Matrix::from_fn(self.dim(), self.dim(), |j| self.mul(a, &SparseVec::unit(j)))
    }

    /// Coordinate of the unit used to split `A = K·1 ⊕ Ā`: the first basis
    /// index with a nonzero unit coefficient.
    pub fn unit_pivot(&self) -> usize {
        self.unit.leading().expect("unit is nonzero").0
    }

    pub fn involution_or_identity(&self) -> Matrix {
        self.involution.clone().unwrap_or_else(|| Matrix::identity(self.dim()))
    }
}

/// Finite-dimensional coalgebra over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraSpec {
    pub name: String,
    pub basis: Vec<String>,
    /// `comult[i]` lives in `C ⊗ C`, indexed `j * dim + k`.
    comult: Vec<SparseVec>,
    pub counit: SparseVec,
    /// Declared cocommutativity; checked by [`validate_coalgebra`].
    pub cocommutative: bool,
}

impl CoalgebraSpec {
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        comult: Vec<SparseVec>,
        counit: SparseVec,
        cocommutative: bool,
    ) -> Result<Self> {
        let c = basis.len();
        if comult.len() != c || comult.iter().any(|v| v.support_bound() > c * c) || counit.support_bound() > c {
            return Err(Error::InvalidInput("coalgebra structure has the wrong shape".into()));
        }
        Ok(Self { name: name.into(), basis, comult, counit, cocommutative })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn comult_basis(&self, i: usize) -> &SparseVec {
        &self.comult[i]
    }

    pub fn counit_of(&self, x: &SparseVec) -> Rational {
        x.dot(&self.counit)
    }
}

/// A linear map `Φ: C → Hom(A, A′)` given by one matrix per coalgebra basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measuring {
    pub name: String,
    pub coalgebra: Arc<CoalgebraSpec>,
    pub source: Arc<AlgebraSpec>,
    pub target: Arc<AlgebraSpec>,
    /// `phi[k]` is `Φ(x_k)` as a `dim A′ × dim A` matrix.
    pub phi: Vec<Matrix>,
    /// Declared compatibility with the involutions; checked when set.
    pub involutive: bool,
}

impl Measuring {
    pub fn new(
        name: impl Into<String>,
        coalgebra: Arc<CoalgebraSpec>,
        source: Arc<AlgebraSpec>,
        target: Arc<AlgebraSpec>,
        phi: Vec<Matrix>,
    ) -> Result<Self> {
        if phi.len() != coalgebra.dim() || phi.iter().any(|m| m.shape() != (target.dim(), source.dim())) {
            return Err(Error::InvalidInput("measuring matrices have the wrong shape".into()));
        }
        Ok(Self { name: name.into(), coalgebra, source, target, phi, involutive: false })
    }

    /// `Φ(x)` for an arbitrary coalgebra element.
    pub fn phi_of(&self, x: &SparseVec) -> Matrix {
        let (r, c) = (self.target.dim(), self.source.dim());
        let mut out = Matrix::zeros(r, c);
        for (k, a) in x.iter() {
            out = out.add(&self.phi[k].scaled(a));
        }
        out
    }

    pub fn require_cocommutative(&self) -> Result<()> {
        if self.coalgebra.cocommutative {
            Ok(())
        } else {
            Err(Error::NotCocommutative(self.coalgebra.name.clone()))
        }
    }
}

/// One failed axiom with a concrete witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: String,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub subject: String,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub(crate) fn new(subject: &str) -> Self {
        Self { subject: subject.to_string(), violations: Vec::new() }
    }

    pub(crate) fn fail(&mut self, check: &str, witness: String) {
        self.violations.push(Violation { check: check.to_string(), witness });
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidInput(format!("{}: {} fails at {}", self.subject, v.check, v.witness))),
        }
    }
}

pub(crate) fn show(v: &SparseVec, labels: &[String]) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.iter().map(|(i, c)| format!("{}*{}", format_rational(c), labels[i])).collect::<Vec<_>>().join(" + ")
}

pub fn validate_algebra(a: &AlgebraSpec) -> ValidationReport {
    let mut rep = ValidationReport::new(&a.name);
    let d = a.dim();
    let l = &a.basis;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let left = a.mul(a.mul_basis(i, j), &SparseVec::unit(k));
                let right = a.mul(&SparseVec::unit(i), a.mul_basis(j, k));
                if left != right {
                    rep.fail(
                        "associativity",
                        format!("({}{}){} = {} but {}({}{}) = {}", l[i], l[j], l[k], show(&left, l), l[i], l[j], l[k], show(&right, l)),
                    );
                    return rep;
                }
            }
        }
    }
    for i in 0..d {
        let e = SparseVec::unit(i);
        if a.mul(&a.unit, &e) != e || a.mul(&e, &a.unit) != e {
            rep.fail("unit", format!("1·{0} or {0}·1 differs from {0}", l[i]));
            return rep;
        }
    }
    if a.commutative {
        for i in 0..d {
            for j in 0..i {
                if a.mul_basis(i, j) != a.mul_basis(j, i) {
                    rep.fail("commutativity", format!("{}{} ≠ {}{}", l[i], l[j], l[j], l[i]));
                    return rep;
                }
            }
        }
    }
    if let Some(inv) = &a.involution {
        if inv.mul(inv) != Matrix::identity(d) {
            rep.fail("involution squares to identity", format!("{:?}", inv.mul(inv).first_difference(&Matrix::identity(d))));
        }
        if inv.apply(&a.unit) != a.unit {
            rep.fail("involution fixes unit", show(&inv.apply(&a.unit), l));
        }
        'outer: for i in 0..d {
            for j in 0..d {
                let lhs = inv.apply(a.mul_basis(i, j));
                let rhs = a.mul(inv.column(j), inv.column(i));
                if lhs != rhs {
                    rep.fail("involution reverses products", format!("hat({}{}) = {} but hat({})hat({}) = {}", l[i], l[j], show(&lhs, l), l[j], l[i], show(&rhs, l)));
                    break 'outer;
                }
            }
        }
    }
    rep
}

pub fn validate_coalgebra(c: &CoalgebraSpec) -> ValidationReport {
    let mut rep = ValidationReport::new(&c.name);
    let n = c.dim();
    let l = &c.basis;
    for i in 0..n {
        // (Δ ⊗ id)Δ and (id ⊗ Δ)Δ in C^{⊗3}.
        let mut left = SparseAcc::new();
        let mut right = SparseAcc::new();
        for (jk, coef) in c.comult_basis(i).iter() {
            let (j, k) = (jk / n, jk % n);
            for (ab, x) in c.comult_basis(j).iter() {
                left.add(ab * n + k, coef * x);
            }
            for (ab, x) in c.comult_basis(k).iter() {
                right.add(j * n * n + ab, coef * x);
            }
        }
        if left.finish() != right.finish() {
            rep.fail("coassociativity", format!("on {}", l[i]));
            return rep;
        }
        let mut lc = SparseAcc::new();
        let mut rc = SparseAcc::new();
        for (jk, coef) in c.comult_basis(i).iter() {
            let (j, k) = (jk / n, jk % n);
            lc.add(k, coef * c.counit.coeff(j));
            rc.add(j, coef * c.counit.coeff(k));
        }
        if lc.finish() != SparseVec::unit(i) || rc.finish() != SparseVec::unit(i) {
            rep.fail("counit", format!("on {}", l[i]));
            return rep;
        }
        if c.cocommutative {
            let flipped = c.comult_basis(i).map_indices(|jk| (jk % n) * n + jk / n);
            if &flipped != c.comult_basis(i) {
                rep.fail("cocommutativity", format!("Δ({}) is not symmetric", l[i]));
                return rep;
            }
        }
    }
    rep
}

/// Checks the product rule, the unit rule and, when declared, compatibility
/// with the involutions, on every basis pair and coalgebra basis element.
pub fn validate_measuring(m: &Measuring) -> ValidationReport {
    let mut rep = ValidationReport::new(&m.name);
    let (a, b, c) = (&*m.source, &*m.target, &*m.coalgebra);
    let n = c.dim();
    for k in 0..n {
        let x = &c.basis[k];
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = m.phi[k].apply(a.mul_basis(i, j));
                let mut acc = SparseAcc::new();
                for (yz, coef) in c.comult_basis(k).iter() {
                    let (y, z) = (yz / n, yz % n);
                    let prod = b.mul(m.phi[y].column(i), m.phi[z].column(j));
                    acc.add_vec(&prod, coef);
                }
                let rhs = acc.finish();
                if lhs != rhs {
                    rep.fail(
                        "product rule",
                        format!("{x}({}{}) = {} but Σ {x}₍₁₎({}){x}₍₂₎({}) = {}", a.basis[i], a.basis[j], show(&lhs, &b.basis), a.basis[i], a.basis[j], show(&rhs, &b.basis)),
                    );
                    return rep;
                }
            }
        }
        let img = m.phi[k].apply(&a.unit);
        let want = b.unit.scaled(&c.counit.coeff(k));
        if img != want {
            rep.fail("unit rule", format!("{x}(1) = {} but ε({x})·1 = {}", show(&img, &b.basis), show(&want, &b.basis)));
            return rep;
        }
    }
    if m.involutive {
        let (Some(ia), Some(ib)) = (&a.involution, &b.involution) else {
            rep.fail("involution compatibility", "source or target has no involution".into());
            return rep;
        };
        for k in 0..n {
            let lhs = m.phi[k].mul(ia);
            let rhs = ib.mul(&m.phi[k]);
            if let Some(d) = lhs.first_difference(&rhs) {
                rep.fail(
                    "involution compatibility",
                    format!("{}(hat {}) has {} on {} but hat({}({})) has {}", c.basis[k], a.basis[d.col], format_rational(&d.left), b.basis[d.row], c.basis[k], a.basis[d.col], format_rational(&d.right)),
                );
                return rep;
            }
        }
    }
    rep
}
