use super::{image_basis, kernel_basis, Echelon, Insert, Matrix, SparseVec};
use crate::error::{Error, Result};

/// Homology-style subquotient `Z / B` of an ambient coordinate space.
///
/// Representatives are the first cycle basis vectors (in order) that are
/// independent modulo the boundaries and the representatives chosen before.
#[derive(Clone, Debug)]
pub struct Subquotient {
    ambient: usize,
    cycles: Matrix,
    boundaries: Matrix,
    reps: Matrix,
    echelon: Echelon,
}

impl Subquotient {
    /// `ker(d_out) / im(d_in)` for `d_in: C_{n+1} -> C_n`, `d_out: C_n -> C_{n-1}`.
    pub fn new(d_out: &Matrix, d_in: &Matrix) -> Result<Self> {
        if d_out.cols() != d_in.rows() {
            return Err(Error::DimensionMismatch(format!(
                "differentials {}x{} and {}x{} are not composable",
                d_out.rows(),
                d_out.cols(),
                d_in.rows(),
                d_in.cols()
            )));
        }
        if let Some(d) = d_out.mul(d_in).first_difference(&Matrix::zeros(d_out.rows(), d_in.cols())) {
            return Err(Error::CompositionNotZero(d.to_string()));
        }
        let cycles = kernel_basis(d_out);
        let boundaries = d_in.select_columns(&image_basis(d_in));
        Ok(Self::assemble(d_in.rows(), cycles, boundaries))
    }

    /// Subquotient from an explicit cycle basis and a spanning set of
    /// boundaries, which must lie in the span of the cycles.
    pub fn from_spaces(cycles: Matrix, boundaries: Matrix) -> Result<Self> {
        let ambient = cycles.rows();
        if boundaries.rows() != ambient {
            return Err(Error::DimensionMismatch("boundary and cycle ambient differ".into()));
        }
        let mut z = Echelon::new(ambient);
        for c in cycles.columns() {
            z.insert(c, SparseVec::new());
        }
        if let Some(j) = boundaries.columns().iter().position(|b| !z.contains(b)) {
            return Err(Error::NotACycle(format!("boundary generator {j} is not in the cycle span")));
        }
        let boundaries = boundaries.select_columns(&image_basis(&boundaries));
        Ok(Self::assemble(ambient, cycles, boundaries))
    }

    fn assemble(ambient: usize, cycles: Matrix, boundaries: Matrix) -> Self {
        let mut echelon = Echelon::tracked(ambient);
        for b in boundaries.columns() {
            echelon.insert(b, SparseVec::new());
        }
        let mut reps = Vec::new();
        for z in cycles.columns() {
            if let Insert::Independent(_) = echelon.insert(z, SparseVec::unit(reps.len())) {
                reps.push(z.clone());
            }
        }
        Self { ambient, cycles, boundaries, reps: Matrix::from_columns(ambient, reps), echelon }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.reps.cols()
    }

    pub fn reps(&self) -> &Matrix {
        &self.reps
    }

    pub fn rep(&self, k: usize) -> &SparseVec {
        self.reps.column(k)
    }

    pub fn cycles(&self) -> &Matrix {
        &self.cycles
    }

    pub fn boundaries(&self) -> &Matrix {
        &self.boundaries
    }

    /// Coordinates of the class of a cycle `v` in the representative basis.
    pub fn classify(&self, v: &SparseVec) -> Result<SparseVec> {
        let (rem, combo) = self.echelon.reduce(v);
        if rem.is_zero() {
            Ok(combo)
        } else {
            Err(Error::NotACycle(format!("residual leading index {}", rem.leading().unwrap().0)))
        }
    }

    pub fn is_cycle(&self, v: &SparseVec) -> bool {
        self.echelon.contains(v)
    }

    pub fn is_boundary(&self, v: &SparseVec) -> bool {
        matches!(self.classify(v), Ok(c) if c.is_zero())
    }
}

/// Matrix of the map on subquotients induced by `f`, after checking that `f`
/// sends cycles to cycles and boundaries to boundaries.
pub fn induced_on_subquotient(f: &Matrix, src: &Subquotient, dst: &Subquotient) -> Result<Matrix> {
    if f.cols() != src.ambient() || f.rows() != dst.ambient() {
        return Err(Error::DimensionMismatch(format!(
            "map {}x{} between ambients {} and {}",
            f.rows(),
            f.cols(),
            src.ambient(),
            dst.ambient()
        )));
    }
    for (j, z) in src.cycles().columns().iter().enumerate() {
        if !dst.is_cycle(&f.apply(z)) {
            return Err(Error::NotAChainMapOnClasses(format!("image of cycle {j} is not a cycle")));
        }
    }
    for (j, b) in src.boundaries().columns().iter().enumerate() {
        if !dst.is_boundary(&f.apply(b)) {
            return Err(Error::NotAChainMapOnClasses(format!("image of boundary {j} is not a boundary")));
        }
    }
    let cols = src.reps().columns().iter().map(|r| dst.classify(&f.apply(r))).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(dst.dim(), cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Simplicial chains of a hollow triangle: H_0 = H_1 = Q.
    fn triangle() -> (Matrix, Matrix) {
        let d1 = Matrix::from_i64_rows(&[&[-1, 0, -1], &[1, -1, 0], &[0, 1, 1]]);
        (Matrix::zeros(0, 3), d1)
    }

    #[test]
    fn circle_homology() {
        let (d0, d1) = triangle();
        let h0 = Subquotient::new(&d0, &d1).unwrap();
        let h1 = Subquotient::new(&d1, &Matrix::zeros(3, 0)).unwrap();
        assert_eq!((h0.dim(), h1.dim()), (1, 1));
        let neg = Matrix::identity(3).neg();
        let m = induced_on_subquotient(&neg, &h1, &h1).unwrap();
        assert_eq!(m, Matrix::identity(1).neg());
    }

    #[test]
    fn rejects_nonzero_composite() {
        let a = Matrix::identity(2);
        assert!(matches!(Subquotient::new(&a, &a), Err(Error::CompositionNotZero(_))));
    }

    #[test]
    fn rejects_non_chain_map() {
        let (d0, d1) = triangle();
        let h0 = Subquotient::new(&d0, &d1).unwrap();
        // Collapsing vertex 0 onto a sum of two vertices sends boundaries off boundaries.
        let f = Matrix::from_i64_rows(&[&[1, 0, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert!(matches!(induced_on_subquotient(&f, &h0, &h0), Err(Error::NotAChainMapOnClasses(_))));
    }
}
