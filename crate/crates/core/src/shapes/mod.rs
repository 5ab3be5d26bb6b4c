//! Compositions, partitions, permutations, the Bruhat order, and the
//! geometry of augmented diagrams.
//!
//! Rows are 1-based top to bottom (English notation); column 0 is the basement.

mod composition;
mod diagram;
mod permutation;

pub use composition::{composition_bruhat_leq, grevlex_desc, Composition, Partition};
pub use diagram::{arm_leg, has_cell};
pub use permutation::{bruhat_leq, permute_composition, BruhatPoset, Permutation};
