//! Differential forms of commutative algebras and the Lie-type complex `E_•(A)`.

mod kahler;
mod lie_type;
mod verify;

pub use kahler::{descend_between, right_inverse, Forms, Kahler};
pub use lie_type::{antisymmetrizer, permutations, LieTypeComplex, Wedges};
pub use verify::{de_rham_mixed, verify_antisymmetrization, verify_eps_pi, verify_pibar};

#[cfg(test)]
mod tests;
