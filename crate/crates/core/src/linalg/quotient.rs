use super::{Echelon, Matrix, Rational, SparseVec};
use num_traits::{One, Signed};

/// Linear map sending basis vector `i` to `±e_{image[i]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPerm {
    pub image: Vec<usize>,
    pub negate: Vec<bool>,
}

impl SignedPerm {
    /// Recognises a matrix whose columns are distinct signed unit vectors.
    pub fn from_matrix(m: &Matrix) -> Option<Self> {
        if m.rows() != m.cols() {
            return None;
        }
        let mut seen = vec![false; m.rows()];
        let mut image = Vec::with_capacity(m.cols());
        let mut negate = Vec::with_capacity(m.cols());
        for col in m.columns() {
            let [(i, c)] = col.entries() else { return None };
            if !c.abs().is_one() || seen[*i] {
                return None;
            }
            seen[*i] = true;
            image.push(*i);
            negate.push(c.is_negative());
        }
        Some(Self { image, negate })
    }
}

/// Quotient of `Q^dim` by a subspace, realised on the complement spanned by
/// the coordinates that are not pivot indices of the subspace.
#[derive(Clone, Debug)]
pub struct Quotient {
    dim: usize,
    kept: Vec<usize>,
    proj: Matrix,
}

impl Quotient {
    /// Quotient by the span of `relations`.
    pub fn by_span(dim: usize, relations: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = Echelon::new(dim);
        for r in relations {
            e.insert(&r, SparseVec::new());
        }
        let kept: Vec<usize> = (0..dim).filter(|&i| !e.is_pivot_index(i)).collect();
        let mut pos = vec![usize::MAX; dim];
        for (k, &i) in kept.iter().enumerate() {
            pos[i] = k;
        }
        let proj = Matrix::from_fn(kept.len(), dim, |i| {
            if pos[i] != usize::MAX {
                SparseVec::unit(pos[i])
            } else {
                e.reduce_full(&SparseVec::unit(i)).0.map_indices(|j| pos[j])
            }
        });
        Self { dim, kept, proj }
    }

    /// Coinvariants `Q^dim / span{v - g v}` for signed permutations `g`.
    /// Agrees exactly with [`by_span`](Self::by_span) on the same relations.
    pub fn by_signed_perms(dim: usize, gens: &[SignedPerm]) -> Self {
        // sign[i] = s means e_i is identified with s * e_root.
        let mut sign: Vec<i8> = vec![0; dim];
        let mut orbit_of = vec![usize::MAX; dim];
        let mut orbits: Vec<(Vec<usize>, bool)> = Vec::new();
        for start in 0..dim {
            if sign[start] != 0 {
                continue;
            }
            let id = orbits.len();
            let mut members = vec![start];
            let mut killed = false;
            sign[start] = 1;
            orbit_of[start] = id;
            let mut k = 0;
            while k < members.len() {
                let i = members[k];
                k += 1;
                for g in gens {
                    // e_i ~ g e_i = (±) e_j, so sign[j] = ± sign[i].
                    let j = g.image[i];
                    let s = if g.negate[i] { -sign[i] } else { sign[i] };
                    if sign[j] == 0 {
                        sign[j] = s;
                        orbit_of[j] = id;
                        members.push(j);
                    } else if sign[j] != s {
                        killed = true;
                    }
                }
            }
            orbits.push((members, killed));
        }
        let mut reps: Vec<(usize, usize)> = orbits
            .iter()
            .enumerate()
            .filter(|(_, (_, killed))| !killed)
            .map(|(id, (m, _))| (*m.iter().max().unwrap(), id))
            .collect();
        reps.sort();
        let mut slot = vec![usize::MAX; orbits.len()];
        for (k, (_, id)) in reps.iter().enumerate() {
            slot[*id] = k;
        }
        let kept: Vec<usize> = reps.iter().map(|r| r.0).collect();
        let columns = (0..dim)
            .map(|i| {
                let id = orbit_of[i];
                if slot[id] == usize::MAX {
                    return SparseVec::new();
                }
                let root = kept[slot[id]];
                let c = i64::from(sign[i] * sign[root]);
                SparseVec::single(slot[id], Rational::from_integer(c.into()))
            })
            .collect();
        let proj = Matrix::from_columns(kept.len(), columns);
        Self { dim, kept, proj }
    }

    /// Coinvariants of the operators: quotient by the images of `1 - g`.
    /// Uses the orbit method when every operator is a signed permutation.
    pub fn by_operators(dim: usize, ops: &[&Matrix]) -> Self {
        let perms: Option<Vec<SignedPerm>> = ops.iter().map(|m| SignedPerm::from_matrix(m)).collect();
        match perms {
            Some(p) => Self::by_signed_perms(dim, &p),
            None => Self::by_span(
                dim,
                ops.iter().flat_map(|g| {
                    (0..dim).map(move |i| SparseVec::unit(i).sub(g.column(i)))
                }),
            ),
        }
    }

    /// The trivial quotient.
    pub fn identity(dim: usize) -> Self {
        Self { dim, kept: (0..dim).collect(), proj: Matrix::identity(dim) }
    }

    pub fn ambient(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.kept.len()
    }

    /// Ambient coordinates whose classes form the quotient basis.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn proj(&self) -> &Matrix {
        &self.proj
    }

    pub fn project(&self, v: &SparseVec) -> SparseVec {
        self.proj.apply(v)
    }

    /// Section sending quotient basis vector `k` to `e_{kept[k]}`.
    pub fn lift(&self) -> Matrix {
        Matrix::from_columns(self.dim, self.kept.iter().map(|&i| SparseVec::unit(i)).collect())
    }

    pub fn lift_vec(&self, v: &SparseVec) -> SparseVec {
        v.map_indices(|k| self.kept[k])
    }

    /// True when `v` lies in the subspace being divided out.
    pub fn kills(&self, v: &SparseVec) -> bool {
        self.project(v).is_zero()
    }

    /// Descends an operator `f` on the ambient space: `proj_dst * f * lift`.
    pub fn descend(f: &Matrix, src: &Quotient, dst: &Quotient) -> Matrix {
        Matrix::from_fn(dst.dim(), src.dim(), |k| dst.project(&f.apply(&SparseVec::unit(src.kept[k]))))
    }
}

impl Default for Quotient {
    fn default() -> Self {
        Self::identity(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_shift(n: usize, negate: bool) -> Matrix {
        let cols = (0..n)
            .map(|i| SparseVec::single((i + 1) % n, if negate { -Rational::one() } else { Rational::one() }))
            .collect();
        Matrix::from_columns(n, cols)
    }

    #[test]
    fn orbit_path_matches_general_path() {
        for n in 1..6 {
            for neg in [false, true] {
                let g = cyclic_shift(n, neg);
                let fast = Quotient::by_operators(n, &[&g]);
                let slow = Quotient::by_span(n, (0..n).map(|i| SparseVec::unit(i).sub(g.column(i))));
                assert_eq!(fast.kept(), slow.kept());
                assert_eq!(fast.proj(), slow.proj());
            }
        }
    }

    #[test]
    fn negated_cycle_of_odd_length_dies() {
        let g = cyclic_shift(3, true);
        assert_eq!(Quotient::by_operators(3, &[&g]).dim(), 0);
        assert_eq!(Quotient::by_operators(4, &[&cyclic_shift(4, true)]).dim(), 1);
    }
}
