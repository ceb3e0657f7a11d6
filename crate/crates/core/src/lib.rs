//! Numerical semigroups, the ordinarization and quasi-ordinarization
//! transforms, and exhaustive enumeration by genus.

pub mod error;
pub mod closedsets;
pub mod explore;
pub mod semigroup;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use explore::{CountTable, Explorer, ForestGraph, TableKind};
pub use semigroup::{Semigroup, SemigroupProfile, DEFAULT_GENUS_BOUND, GENUS_LIMIT};
pub use transforms::{
    ordinarization_chain, ordinarization_number, ordinarize, qo_chain, qo_number,
    quasi_ordinarize, quasi_ordinary_root, TransformChain,
};
