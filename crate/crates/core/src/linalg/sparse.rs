use super::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self { entries: vec![(i, Rational::one())] }
    }

    pub fn single(i: usize, c: Rational) -> Self {
        if c.is_zero() {
            Self::new()
        } else {
            Self { entries: vec![(i, c)] }
        }
    }

    /// Builds from arbitrary (index, coefficient) pairs, summing duplicates.
    pub fn from_entries(mut entries: Vec<(usize, Rational)>) -> Self {
        entries.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { entries: out }
    }

    /// Caller guarantees sorted, distinct, nonzero entries.
    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|e| !e.1.is_zero()));
        Self { entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        Self {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, n: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Rational> {
        self.entries
            .binary_search_by_key(&i, |e| e.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    /// Largest stored index plus one (0 for the zero vector).
    pub fn support_bound(&self) -> usize {
        self.entries.last().map_or(0, |e| e.0 + 1)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self { entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect() }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &SparseVec, c: &Rational) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() && y < b.len() {
            let (ia, ib) = (a[x].0, b[y].0);
            if ia < ib {
                out.push(a[x].clone());
                x += 1;
            } else if ib < ia {
                out.push((ib, &b[y].1 * c));
                y += 1;
            } else {
                let s = &a[x].1 + &b[y].1 * c;
                if !s.is_zero() {
                    out.push((ia, s));
                }
                x += 1;
                y += 1;
            }
        }
        out.extend_from_slice(&a[x..]);
        out.extend(b[y..].iter().map(|(i, v)| (*i, v * c)));
        Self { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> Self {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &SparseVec) -> Self {
        self.add_scaled(other, &-Rational::one())
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_entries(self.entries.iter().map(|(i, c)| (f(*i), c.clone())).collect())
    }

    /// Drops every entry whose index fails `keep`.
    pub fn filter_indices(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self { entries: self.entries.iter().filter(|(i, _)| keep(*i)).cloned().collect() }
    }

    /// Dot product with another sparse vector.
    pub fn dot(&self, other: &SparseVec) -> Rational {
        let (a, b) = (&self.entries, &other.entries);
        let (mut x, mut y) = (0, 0);
        let mut s = Rational::zero();
        while x < a.len() && y < b.len() {
            match a[x].0.cmp(&b[y].0) {
                std::cmp::Ordering::Less => x += 1,
                std::cmp::Ordering::Greater => y += 1,
                std::cmp::Ordering::Equal => {
                    s += &a[x].1 * &b[y].1;
                    x += 1;
                    y += 1;
                }
            }
        }
        s
    }
}

/// Accumulates sparse contributions before sorting them into a `SparseVec`.
#[derive(Default)]
pub struct SparseAcc {
    map: BTreeMap<usize, Rational>,
}

impl SparseAcc {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        *self.map.entry(i).or_insert_with(Rational::zero) += c;
    }

    pub fn add_vec(&mut self, v: &SparseVec, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (i, x) in v.iter() {
            self.add(i, x * c);
        }
    }

    pub fn finish(self) -> SparseVec {
        SparseVec::from_sorted_unchecked(self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn add_scaled_cancels() {
        let a = SparseVec::from_entries(vec![(0, q(1)), (3, q(2))]);
        let b = SparseVec::from_entries(vec![(3, q(1)), (5, q(4))]);
        let c = a.add_scaled(&b, &q(-2));
        assert_eq!(c.entries(), &[(0, q(1)), (5, q(-8))]);
        assert_eq!(a.dot(&b), q(2));
    }

    #[test]
    fn duplicates_merge() {
        let v = SparseVec::from_entries(vec![(2, q(1)), (1, q(3)), (2, q(-1))]);
        assert_eq!(v.entries(), &[(1, q(3))]);
    }
}
