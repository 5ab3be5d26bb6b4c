use num_rational::BigRational;

use crate::algebra::{QtRational, XPoly};
use crate::error::{Error, Result};
use crate::fillings::macdonald_specialized;
use crate::shapes::{Composition, Permutation};

use super::families::{elementary_poly, factor_elementary_parts, patom_t};

/// `F = e_{λ'}/e_{(λ̃)'}` and whether `E^σ_λ(x;1,t) = F · E^σ_λ̃(x;1,t)`.
pub fn factorization_data(lambda: &Composition, sigma: &Permutation) -> Result<(XPoly, bool)> {
    let n = lambda.len();
    let f = elementary_poly(&factor_elementary_parts(lambda)?, n);
    let one = BigRational::from_integer(1.into());
    let lhs = macdonald_specialized(lambda, sigma, Some(&one), None)?;
    let reduced = macdonald_specialized(&lambda.weak_standardize(), sigma, Some(&one), None)?;
    let check = lhs == f.mul(&reduced)?;
    Ok((f, check))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingleStep {
    /// `A^{s_iτ}_λ = A^τ_{s_iλ}`.
    Equal,
    /// `A^{s_iτ}_λ − A^τ_{s_iλ} = t^m (1−t) A^τ_λ`.
    Exponent(u32),
    /// Neither form holds.
    Violated,
}

/// Classify the atom relation for the basement pair `τ < s_iτ`, where `s_iτ`
/// exchanges the basement rows `i` and `i+1`; for `λ_i > λ_{i+1}` the exponent
/// `m` is recovered by exact division.
pub fn single_step_exponent(lambda: &Composition, tau: &Permutation, i: usize) -> Result<SingleStep> {
    let n = lambda.len();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    let sigma = tau.swap_positions(i);
    if sigma.length() <= tau.length() {
        return Err(Error::DirectionMismatch { index: i, direction: "up" });
    }
    let diff = patom_t(lambda, &sigma)?.sub(&patom_t(&lambda.swap(i), tau)?)?;
    if lambda.part(i) <= lambda.part(i + 1) {
        return Ok(if diff.is_zero() { SingleStep::Equal } else { SingleStep::Violated });
    }
    let base = patom_t(lambda, tau)?.scale(&QtRational::one_minus(0, 1));
    let (Some((m, c)), false) = (base.terms().next(), diff.is_zero()) else {
        return Ok(SingleStep::Violated);
    };
    let ratio = diff.coefficient(m.exponents()).checked_div(c)?;
    // ratio must be a bare power of t
    let terms = ratio.numerator().terms();
    let exponent = match (ratio.denominator().is_one(), terms.as_slice()) {
        (true, [(coeff, 0, k)]) if *coeff == 1.into() => *k as u32,
        _ => return Ok(SingleStep::Violated),
    };
    Ok(if diff == base.scale(&ratio) { SingleStep::Exponent(exponent) } else { SingleStep::Violated })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_step_law_small() {
        for tau in Permutation::all(3) {
            for i in 1..3 {
                if tau.swap_positions(i).length() < tau.length() {
                    assert!(single_step_exponent(&Composition::zero(3), &tau, i).is_err());
                    continue;
                }
                for lambda in Composition::all_up_to(3, 3) {
                    let r = single_step_exponent(&lambda, &tau, i).unwrap();
                    if lambda.part(i) > lambda.part(i + 1) {
                        assert!(matches!(r, SingleStep::Exponent(_)), "{lambda} {tau} {i}");
                    } else {
                        assert_eq!(r, SingleStep::Equal);
                    }
                }
            }
        }
    }

    #[test]
    fn factorization_examples() {
        let sigma = Permutation::new(vec![2, 3, 1]).unwrap();
        let (f, ok) = factorization_data(&Composition::new(vec![2, 0, 1]), &sigma).unwrap();
        assert!(ok);
        assert_eq!(f, XPoly::one(3));
        let (f, ok) = factorization_data(&Composition::new(vec![3, 0, 1]), &sigma).unwrap();
        assert!(ok);
        assert_eq!(f, elementary_poly(&[1], 3));
    }
}
