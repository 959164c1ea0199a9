//! Dihedral homology of involutive algebras, and the skew-symmetric and
//! symplectic Lie algebras with their ladders down to `D_•(R)`.

mod complex;
mod skew;
mod verify;

pub use complex::{
    intertwining_defect, involution_of, require_involutive, DihedralAction, DihedralComplex, DihedralMaps,
};
pub use skew::{conjugate_transpose, restrict_measuring, symplectic_form, symplectic_transpose, Classical, Family};
pub use verify::{
    dihedral_homology_dims, verify_dihedral_maps, verify_sk_sp_ladder, verify_sk_sp_restriction, LADDER_CASES,
    LADDER_TOP,
};

#[cfg(test)]
mod tests;
