//! Exact arithmetic: integer polynomials in `q,t`, the rational-function
//! field `Q(q,t)`, and polynomials in `x_1..x_n` over that field.
//!
//! Everything here is immutable after construction and `Send + Sync`.

mod json;
mod qtpoly;
mod rational;
mod upoly;
mod xpoly;

pub(crate) use xpoly::render_monomial;

pub use json::{
    qtpoly_from_json, qtpoly_to_json, rational_from_json, rational_to_json, xpoly_from_json, xpoly_to_json,
};
pub use qtpoly::QtPoly;
pub use rational::QtRational;
pub use xpoly::{Monomial, XPoly};

use num_rational::BigRational;

use crate::error::{Error, Result};

/// Parse an exact rational written as `p/q` or an integer literal.
/// Decimal notation is rejected.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.contains('.') || s.contains('e') || s.contains('E') {
        return Err(Error::Parse(format!("decimal literal {s:?} not accepted; use p/q")));
    }
    let r: BigRational = s.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    Ok(r)
}
