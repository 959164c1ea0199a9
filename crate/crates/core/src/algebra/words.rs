//! Basis words of tensor powers `V^{⊗n}`, ordered lexicographically with the
//! first factor varying slowest.

use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseVec};

/// `d^n`, or an error naming `what` when it exceeds `cap`.
pub fn checked_pow(d: usize, n: usize, cap: usize, what: &str) -> Result<usize> {
    let mut x: usize = 1;
    for _ in 0..n {
        x = x.checked_mul(d).filter(|&v| v <= cap).ok_or_else(|| Error::TruncationTooLarge {
            what: what.to_string(),
            dim: d.saturating_pow(n as u32),
            cap,
        })?;
    }
    Ok(x)
}

pub fn pow(d: usize, n: usize) -> usize {
    d.pow(n as u32)
}

pub fn word_index(word: &[usize], d: usize) -> usize {
    word.iter().fold(0, |acc, &i| acc * d + i)
}

pub fn word_of(mut index: usize, d: usize, len: usize) -> Vec<usize> {
    let mut w = vec![0; len];
    for slot in w.iter_mut().rev() {
        *slot = index % d;
        index /= d;
    }
    w
}

/// Tensor product of vectors `v_1 ⊗ ... ⊗ v_n`, all living in `Q^d`.
pub fn kron_vecs(factors: &[&SparseVec], d: usize) -> SparseVec {
    let mut acc: Vec<(usize, Rational)> = vec![(0, Rational::from_integer(1.into()))];
    for f in factors {
        let mut next = Vec::with_capacity(acc.len() * f.nnz());
        for (i, a) in &acc {
            for (k, b) in f.iter() {
                next.push((i * d + k, a * b));
            }
        }
        acc = next;
        if acc.is_empty() {
            break;
        }
    }
    SparseVec::from_entries(acc)
}

/// Human-readable label of a word, e.g. `1⊗x⊗x`.
pub fn word_label(word: &[usize], labels: &[String]) -> String {
    if word.is_empty() {
        return "()".into();
    }
    word.iter().map(|&i| labels[i].as_str()).collect::<Vec<_>>().join("⊗")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn index_round_trip() {
        for idx in 0..27 {
            assert_eq!(word_index(&word_of(idx, 3, 3), 3), idx);
        }
        assert_eq!(word_of(5, 2, 3), vec![1, 0, 1]);
    }

    #[test]
    fn kron_of_units_is_word() {
        let v = kron_vecs(&[&SparseVec::unit(1), &SparseVec::unit(0), &SparseVec::unit(1)], 2);
        assert_eq!(v, SparseVec::unit(5));
        let s = SparseVec::from_entries(vec![(0, q(1)), (1, q(2))]);
        let w = kron_vecs(&[&s, &s], 2);
        assert_eq!(w.to_dense(4), vec![q(1), q(2), q(2), q(4)]);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(checked_pow(4, 5, 5000, "C").unwrap(), 1024);
        assert!(matches!(checked_pow(8, 5, 5000, "C"), Err(Error::TruncationTooLarge { .. })));
    }
}
