//! The field `Q(q,t)` of rational functions in the two parameters.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::qtpoly::QtPoly;
use crate::error::{Error, Result};

/// A reduced fraction of integer polynomials in `q` and `t`.
///
/// Canonical form: numerator and denominator coprime over `Q[q,t]`, their
/// joint integer content is 1, and the lexicographically leading term of the
/// denominator (q before t, higher degree first) is positive. Zero is `0/1`.
/// Structural equality therefore coincides with field equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QtRational {
    num: QtPoly,
    den: QtPoly,
}

impl QtRational {
    pub fn zero() -> Self {
        QtRational { num: QtPoly::zero(), den: QtPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(QtPoly::one())
    }

    pub fn q() -> Self {
        Self::from_poly(QtPoly::q())
    }

    pub fn t() -> Self {
        Self::from_poly(QtPoly::t())
    }

    pub fn from_integer(c: impl Into<BigInt>) -> Self {
        Self::from_poly(QtPoly::constant(c.into()))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(QtPoly::constant(r.numer().clone()), QtPoly::constant(r.denom().clone()))
            .expect("BigRational has nonzero denominator")
    }

    pub fn from_poly(p: QtPoly) -> Self {
        QtRational { num: p, den: QtPoly::one() }
    }

    /// `num / den` in canonical form.
    pub fn new(num: QtPoly, den: QtPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero { op: "fraction" });
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QtPoly, den: QtPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
        };
        Self::normalize_units(num, den)
    }

    /// Only fixes integer content and sign; callers guarantee coprimality.
    fn normalize_units(mut num: QtPoly, mut den: QtPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let c = num.integer_content().gcd(&den.integer_content());
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        if den.leading_coefficient().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        QtRational { num, den }
    }

    pub fn numerator(&self) -> &QtPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QtPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. an element of `Z[q,t]`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as an exact rational, if it does not depend on `q` or `t`.
    pub fn as_constant(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    /// The value as an integer, if constant and integral.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_constant()?;
        r.is_integer().then(|| r.to_integer())
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = QtPoly::monomial(BigInt::one(), k.unsigned_abs() as usize, 0);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            QtRational { num: QtPoly::one(), den: m }
        }
    }

    pub fn t_pow(k: u32) -> Self {
        Self::from_poly(QtPoly::monomial(BigInt::one(), 0, k as usize))
    }

    /// `1 - q^a t^b`.
    pub fn one_minus(a: usize, b: usize) -> Self {
        Self::from_poly(QtPoly::one_minus(a, b))
    }

    pub fn checked_add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            if self.den.is_one() {
                return Self::from_poly(self.num.add(&other.num));
            }
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        if self.den.is_one() {
            // gcd(n1*d2 + n2, d2) = gcd(n2, d2) = 1
            let num = self.num.mul(&other.den).add(&other.num);
            return Self::normalize_units(num, other.den.clone());
        }
        if other.den.is_one() {
            let num = other.num.mul(&self.den).add(&self.num);
            return Self::normalize_units(num, self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            // coprime denominators leave nothing to cancel
            return Self::normalize_units(num, self.den.mul(&other.den));
        }
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = other.den.div_exact(&g).unwrap();
        let num = self.num.mul(&d2).add(&other.num.mul(&d1));
        Self::reduce(num, d1.mul(&other.den))
    }

    pub fn checked_mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), other.den.clone())
        } else {
            (self.num.div_exact(&g1).unwrap(), other.den.div_exact(&g1).unwrap())
        };
        let (n2, d1) = if g2.is_one() {
            (other.num.clone(), self.den.clone())
        } else {
            (other.num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap())
        };
        Self::normalize_units(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero { op: "inverse" });
        }
        Ok(Self::normalize_units(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero { op: "div" });
        }
        Ok(self.checked_mul(&other.inverse()?))
    }

    pub fn scale_integer(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() {
            return Self::from_poly(self.num.scale(c));
        }
        Self::normalize_units(self.num.scale(c), self.den.clone())
    }

    /// Substitute exact rational values for `q` and/or `t`. An omitted
    /// parameter stays symbolic. Fails when the reduced denominator vanishes.
    pub fn specialize(&self, q: Option<&BigRational>, t: Option<&BigRational>) -> Result<Self> {
        if q.is_none() && t.is_none() {
            return Ok(self.clone());
        }
        let sq = self.num.q_degree().unwrap_or(0).max(self.den.q_degree().unwrap_or(0));
        let st = self.num.t_degree().unwrap_or(0).max(self.den.t_degree().unwrap_or(0));
        let den = self.den.substitute_scaled(q, t, sq, st);
        if den.is_zero() {
            return Err(Error::VanishingDenominator { term: String::new(), coefficient: self.to_string() });
        }
        let num = self.num.substitute_scaled(q, t, sq, st);
        Self::new(num, den)
    }

    /// Evaluate at a rational point for both parameters.
    pub fn evaluate(&self, q: &BigRational, t: &BigRational) -> Result<BigRational> {
        let v = self.specialize(Some(q), Some(t))?;
        Ok(v.as_constant().expect("fully specialized value is constant"))
    }
}

impl Default for QtRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<QtPoly> for QtRational {
    fn from(p: QtPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for QtRational {
    fn from(c: i64) -> Self {
        Self::from_integer(c)
    }
}

impl Add for &QtRational {
    type Output = QtRational;
    fn add(self, rhs: &QtRational) -> QtRational {
        self.checked_add(rhs)
    }
}

impl Sub for &QtRational {
    type Output = QtRational;
    fn sub(self, rhs: &QtRational) -> QtRational {
        self.checked_add(&-rhs)
    }
}

impl Mul for &QtRational {
    type Output = QtRational;
    fn mul(self, rhs: &QtRational) -> QtRational {
        self.checked_mul(rhs)
    }
}

/// Panics on division by zero; use [`QtRational::checked_div`] for a `Result`.
impl Div for &QtRational {
    type Output = QtRational;
    fn div(self, rhs: &QtRational) -> QtRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &QtRational {
    type Output = QtRational;
    fn neg(self) -> QtRational {
        QtRational { num: self.num.neg(), den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QtRational {
            type Output = QtRational;
            fn $m(self, rhs: QtRational) -> QtRational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QtRational {
    type Output = QtRational;
    fn neg(self) -> QtRational {
        -&self
    }
}

impl fmt::Display for QtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let wrap = |p: &QtPoly| {
                let s = p.to_string();
                if p.terms().len() > 1 {
                    format!("({s})")
                } else {
                    s
                }
            };
            // show the sign that makes the denominator's constant term positive
            let flip = self.den.terms().last().is_some_and(|(c, dq, dt)| *dq == 0 && *dt == 0 && c.is_negative());
            if flip {
                write!(f, "{}/{}", wrap(&self.num.neg()), wrap(&self.den.neg()))
            } else {
                write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: QtPoly, d: QtPoly) -> QtRational {
        QtRational::new(n, d).unwrap()
    }

    #[test]
    fn cancellation_to_one() {
        // (1-t)/(1-t^2) * (1+t) = 1
        let a = r(QtPoly::one_minus(0, 1), QtPoly::one_minus(0, 2));
        let b = QtRational::from_poly(QtPoly::one().add(&QtPoly::t()));
        assert!((&a * &b).is_one());
    }

    #[test]
    fn t_div_t() {
        let t = QtRational::t();
        assert!(t.checked_div(&t).unwrap().is_one());
    }

    #[test]
    fn one_minus_t_plus_t() {
        let a = QtRational::one_minus(0, 1);
        assert!((&a + &QtRational::t()).is_one());
    }

    #[test]
    fn division_by_zero_names_operation() {
        let err = QtRational::one().checked_div(&QtRational::zero()).unwrap_err();
        assert_eq!(err, Error::DivisionByZero { op: "div" });
        assert!(QtRational::new(QtPoly::one(), QtPoly::zero()).is_err());
    }

    #[test]
    fn canonical_sign_and_content() {
        let a = r(QtPoly::constant(2.into()), QtPoly::constant((-4).into()));
        assert_eq!(a, QtRational::from_rational(&BigRational::new((-1).into(), 2.into())));
        assert_eq!(a.denominator().as_constant(), Some(BigInt::from(2)));
    }

    #[test]
    fn specialize_q_zero() {
        let a = r(QtPoly::one_minus(0, 1), QtPoly::one_minus(1, 1));
        let zero = BigRational::zero();
        assert_eq!(a.specialize(Some(&zero), None).unwrap(), QtRational::one_minus(0, 1));
    }

    #[test]
    fn specialize_vanishing_denominator() {
        let a = r(QtPoly::one_minus(0, 1), QtPoly::one_minus(1, 2));
        let one = BigRational::one();
        assert!(matches!(a.specialize(Some(&one), Some(&one)), Err(Error::VanishingDenominator { .. })));
        // sequentially the pole cancels, jointly it does not
        let at_q1 = a.specialize(Some(&one), None).unwrap();
        assert_eq!(at_q1, r(QtPoly::one(), QtPoly::one().add(&QtPoly::t())));
    }

    #[test]
    fn negative_q_power_cancels() {
        let a = &QtRational::q_pow(-2) * &QtRational::q_pow(3);
        assert_eq!(a, QtRational::q());
    }

    #[test]
    fn display() {
        let a = r(QtPoly::one_minus(0, 1), QtPoly::one_minus(1, 1));
        assert_eq!(a.to_string(), "(1-t)/(1-q*t)");
    }
}
