//! Shuffle and `∗` products, Eulerian idempotents and the λ-decomposition.

mod decomp;
mod eulerian;
mod products;
mod shuffle;
mod verify;

pub use decomp::{summand_dims, Lambda};
pub use eulerian::{eulerian_idempotents, Eulerian, GradedEnd};
pub use products::{shuffle_bar, star, star_action};
pub use shuffle::{permute_word, shuffle_product, shuffle_words, shuffles, tensor_shuffle, Shuffle};

pub use verify::{
    verify_comodule_measuring, verify_eulerian_commute, verify_hc_summands, verify_hh_summands, verify_lambda_ladder,
    verify_star_measuring, MeasuredLambda,
};

#[cfg(test)]
mod tests;
