//! Lie algebras `gl_r(A)`, their Chevalley–Eilenberg and Leibniz complexes,
//! the θ/trace maps to cyclic homology, coinvariants and the `V` complex.

mod algebra;
mod coinvariants;
mod complexes;
mod trace;
mod vcomplex;
mod verify;

pub use algebra::{
    non_lie_leibniz, scalar_matrices, validate_leibniz, validate_lie, validate_lie_measuring, LieAlgebra, LieKind,
    LieMeasuring,
};
pub use coinvariants::{adjoint_matrices, Coinvariants};
pub use complexes::{CeComplex, ClComplex};
pub use trace::{ConnesData, ThetaTrace};
pub use vcomplex::{CyclicWords, VComplex};
pub use verify::{
    lie_homology_dims, validate_gl, verify_ce_coinvariant_products, verify_ce_coproduct, verify_cl_coinvariant_products,
    verify_coinvariants, verify_leibniz_coproduct, verify_theta_trace, verify_v_complex, MATRIX_SIZES,
};

#[cfg(test)]
mod tests;
