//! Cyclic module of an algebra and the Hochschild, cyclic and Connes complexes.

mod complexes;
mod maps;
mod ops;
mod sbi;
mod verify;

pub use complexes::{
    connes_complex, connes_quotients, cyclic_bicomplex, hochschild_complex, normalized_mixed, unnormalized_mixed,
    Normalization,
};
pub use maps::{cyclic_maps, cyclic_morphism_defect, normalized_map, normalized_maps, quotient_maps, tot_maps};
pub use ops::CyclicModule;
pub use sbi::{exact_at, inclusion_chain, periodicity_chain, sbi_sequence, Sbi};
pub use verify::{verify_normalized_quotient, verify_sbi_compatibility, CyclicData};

#[cfg(test)]
mod tests;
