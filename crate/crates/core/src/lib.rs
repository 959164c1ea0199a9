pub mod algebra;
pub mod complex;
pub mod corpus;
pub mod cyclic;
pub mod dihedral;
pub mod error;
pub mod forms;
pub mod harness;
pub mod linalg;

pub use error::{Error, Result};
pub mod lambda;
pub mod lie;
pub mod report;
