//! Algebras, coalgebras and measurings given by structure constants.

mod matrix_algebra;
mod spec;
mod sweedler;
pub mod words;

pub use matrix_algebra::{mat_index, matrix_algebra, matrix_measuring};
pub(crate) use spec::show;
pub use spec::{
    validate_algebra, validate_coalgebra, validate_measuring, AlgebraSpec, CoalgebraSpec, Measuring,
    ValidationReport, Violation,
};
pub use sweedler::{apply_measuring_tensor, expand_word, iterated_coproduct, tensor_power_map};
