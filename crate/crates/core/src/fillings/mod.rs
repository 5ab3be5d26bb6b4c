//! Augmented fillings, their statistics, and the combinatorial formula for
//! the permuted-basement Macdonald polynomials.

mod enumerate;
mod filling;
mod formula;

pub use enumerate::enumerate_naf;
pub use filling::{is_inversion, shape_triples, AugmentedFilling, Cell, Triple, TripleKind};
pub use formula::{macdonald_combinatorial, macdonald_specialized};
