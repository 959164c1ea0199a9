//! Shared inputs for the benchmarks.

use hhc_core::algebra::AlgebraSpec;
use hhc_core::corpus::bundled;
use hhc_core::linalg::{q, Matrix, SparseVec};
use std::sync::Arc;

pub fn algebra(name: &str) -> Arc<AlgebraSpec> {
    bundled().algebra(name).expect("bundled algebra").clone()
}

/// A dense `n × n` integer matrix of rank about `n / 2`, deterministic in `n`.
pub fn half_rank(n: usize) -> Matrix {
    let half = (n / 2).max(1);
    Matrix::from_fn(n, n, |j| {
        let col: Vec<_> = (0..n).map(|i| q(((i * 7 + (j % half) * 13 + 3) % 11) as i64 - 5)).collect();
        SparseVec::from_dense(&col)
    })
}
