//! Dense univariate polynomials over the integers.
//!
//! These are the coefficient ring `Z[t]` used when a bivariate polynomial is
//! viewed as a polynomial in `q`; the gcd machinery lives here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending degree order, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub(crate) struct UPoly(pub(crate) Vec<BigInt>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = UPoly(vec![c]);
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = UPoly(coeffs);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.0.last()
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let len = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.0.get(i);
            let b = other.0.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly(self.0.iter().map(|a| a * c).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.0.iter().cloned());
        UPoly(out)
    }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> UPoly {
        UPoly(self.0.iter().map(|a| a / c).collect())
    }

    /// Exact quotient `self / other` over `Z[t]`, or `None` if `other` does not divide.
    pub fn div_exact(&self, other: &UPoly) -> Option<UPoly> {
        let dd = other.degree()?;
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        if other.0.len() == 1 {
            let c = &other.0[0];
            if self.0.iter().all(|a| (a % c).is_zero()) {
                return Some(self.div_scalar_exact(c));
            }
            return None;
        }
        let lc = other.lead().unwrap();
        let mut rem = self.0.clone();
        let ds = self.degree().unwrap();
        if ds < dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in other.0.iter().enumerate() {
                rem[k + j] -= &qk * b;
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UPoly::from_coeffs(quot))
    }

    /// Pseudo-remainder of `self` by `other` (nonzero).
    pub fn prem(&self, other: &UPoly) -> UPoly {
        let dd = other.degree().expect("prem by zero");
        let lc = other.lead().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.lead().unwrap().clone();
            r = r.scale(&lc).sub(&other.scale(&lr).shift(dr - dd));
        }
        r
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = self.content();
        if self.lead().unwrap().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Greatest common divisor, normalized to a positive leading coefficient.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        if self.is_zero() {
            return other.normalized_sign();
        }
        if other.is_zero() {
            return self.normalized_sign();
        }
        let c = self.content().gcd(&other.content());
        if self.0.len() == 1 || other.0.len() == 1 {
            return UPoly::constant(c);
        }
        let (mut f, mut g) = if self.0.len() >= other.0.len() {
            (self.primitive(), other.primitive())
        } else {
            (other.primitive(), self.primitive())
        };
        while !g.is_zero() {
            let r = f.prem(&g);
            f = g;
            g = r.primitive();
        }
        f.primitive().scale(&c)
    }

    fn normalized_sign(&self) -> UPoly {
        if self.lead().is_some_and(|l| l.is_negative()) {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (1 - t^2) and (1 - t^3) share exactly (t - 1)
        let a = p(&[1, 0, -1]);
        let b = p(&[1, 0, 0, -1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn gcd_keeps_integer_content() {
        let a = p(&[2, 2]);
        let b = p(&[4, 0, -4]);
        assert_eq!(a.gcd(&b), p(&[2, 2]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 0, -1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[1, -1])));
        assert_eq!(a.div_exact(&p(&[1, 2])), None);
        assert_eq!(p(&[4, 6]).div_exact(&p(&[2])), Some(p(&[2, 3])));
    }
}
