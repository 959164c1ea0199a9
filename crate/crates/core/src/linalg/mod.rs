//! Exact linear algebra over Q with sparse column storage.

mod echelon;
mod matrix;
mod quotient;
mod rational;
mod sparse;
mod span;
mod subquotient;

pub use echelon::{image_basis, inverse, kernel_basis, rank, solve, Echelon, Insert};
pub use matrix::{Difference, Matrix};
pub use quotient::{Quotient, SignedPerm};
pub use rational::{format_rational, parse_rational, q, Rational};
pub use sparse::{SparseAcc, SparseVec};
pub use span::Span;
pub use subquotient::{induced_on_subquotient, Subquotient};
