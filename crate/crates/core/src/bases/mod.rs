//! Named polynomial families and expansion into permuted-basement atom bases.

mod expand;
mod families;
mod laws;

pub use expand::{expand_in_basis, product_expand_schur, BasisId, BasisTable, ExpansionResult, Family};
pub use families::{
    demazure_atom, elementary_poly, elementary_single, factor_elementary_parts, hall_littlewood_p, key_poly,
    key_poly_by_operators, monomial_symmetric, patom_t, permuted_atom, schur_poly,
};
pub use laws::{factorization_data, single_step_exponent, SingleStep};
