//! Integer polynomials in the two parameters `q` and `t`.
//!
//! Stored densely as a polynomial in `q` whose coefficients are dense
//! polynomials in `t`; at the degrees that occur here (well under 50) this is
//! both the simplest and the fastest layout for the gcd recursion.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::upoly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QtPoly {
    /// `coeffs[d]` is the coefficient of `q^d`; no trailing zeros.
    coeffs: Vec<UPoly>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![UPoly::constant(c)])
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// `c * q^dq * t^dt`.
    pub fn monomial(c: BigInt, dq: usize, dt: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![UPoly::zero(); dq + 1];
        coeffs[dq] = UPoly::constant(c).shift(dt);
        QtPoly { coeffs }
    }

    /// `1 - q^a t^b`.
    pub fn one_minus(a: usize, b: usize) -> Self {
        Self::one().sub(&Self::monomial(BigInt::one(), a, b))
    }

    /// Build from `(coefficient, q-degree, t-degree)` triples; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (BigInt, usize, usize)>>(terms: I) -> Self {
        let mut acc = QtPoly::zero();
        for (c, dq, dt) in terms {
            acc = acc.add(&QtPoly::monomial(c, dq, dt));
        }
        acc
    }

    pub(crate) fn from_coeffs(coeffs: Vec<UPoly>) -> Self {
        let mut p = QtPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Integer constant, if the polynomial has no `q` or `t` dependence.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 if self.coeffs[0].0.len() == 1 => Some(self.coeffs[0].0[0].clone()),
            _ => None,
        }
    }

    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree()).max()
    }

    /// Terms as `(coefficient, q-degree, t-degree)`, sorted q-degree descending
    /// then t-degree descending.
    pub fn terms(&self) -> Vec<(BigInt, usize, usize)> {
        let mut out = Vec::new();
        for (dq, c) in self.coeffs.iter().enumerate().rev() {
            for (dt, a) in c.0.iter().enumerate().rev() {
                if !a.is_zero() {
                    out.push((a.clone(), dq, dt));
                }
            }
        }
        out
    }

    /// Coefficient of the lexicographically leading term (q first, higher degree first).
    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last().and_then(|c| c.lead())
    }

    pub fn add(&self, other: &QtPoly) -> QtPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        QtPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> QtPoly {
        QtPoly { coeffs: self.coeffs.iter().map(UPoly::neg).collect() }
    }

    pub fn sub(&self, other: &QtPoly) -> QtPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QtPoly) -> QtPoly {
        if self.is_zero() || other.is_zero() {
            return QtPoly::zero();
        }
        let mut out = vec![UPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        QtPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> QtPoly {
        if c.is_zero() {
            return QtPoly::zero();
        }
        QtPoly { coeffs: self.coeffs.iter().map(|u| u.scale(c)).collect() }
    }

    /// Multiply by `q^a t^b`.
    pub fn shift(&self, a: usize, b: usize) -> QtPoly {
        if self.is_zero() {
            return QtPoly::zero();
        }
        let mut coeffs = vec![UPoly::zero(); a];
        coeffs.extend(self.coeffs.iter().map(|u| u.shift(b)));
        QtPoly { coeffs }
    }

    pub fn pow(&self, k: u32) -> QtPoly {
        let mut acc = QtPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Non-negative gcd of all integer coefficients.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(&c.content());
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> QtPoly {
        QtPoly { coeffs: self.coeffs.iter().map(|u| u.div_scalar_exact(c)).collect() }
    }

    /// Content with respect to `q`: the gcd in `Z[t]` of the `q`-coefficients.
    fn t_content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_upoly_exact(&self, c: &UPoly) -> QtPoly {
        QtPoly {
            coeffs: self.coeffs.iter().map(|u| u.div_exact(c).expect("content divides every coefficient")).collect(),
        }
    }

    fn t_primitive(&self) -> QtPoly {
        if self.is_zero() {
            return QtPoly::zero();
        }
        let mut c = self.t_content();
        if self.leading_coefficient().unwrap().is_negative() {
            c = c.neg();
        }
        self.div_upoly_exact(&c)
    }

    fn mul_upoly(&self, c: &UPoly) -> QtPoly {
        QtPoly::from_coeffs(self.coeffs.iter().map(|u| u.mul(c)).collect())
    }

    /// Pseudo-remainder in `q` over `Z[t]`.
    fn prem_q(&self, other: &QtPoly) -> QtPoly {
        let dd = other.q_degree().expect("prem by zero");
        let lc = other.coeffs[dd].clone();
        let mut r = self.clone();
        while let Some(dr) = r.q_degree() {
            if dr < dd {
                break;
            }
            let lr = r.coeffs[dr].clone();
            let sub = QtPoly::from_coeffs(
                std::iter::repeat_n(UPoly::zero(), dr - dd).chain(other.coeffs.iter().map(|u| u.mul(&lr))).collect(),
            );
            r = r.mul_upoly(&lc).sub(&sub);
        }
        r
    }

    /// Greatest common divisor over `Z[q,t]`, via content/primitive-part
    /// recursion in `q` and a primitive remainder sequence. The result has
    /// positive leading coefficient and keeps the integer content gcd.
    pub fn gcd(&self, other: &QtPoly) -> QtPoly {
        if self.is_zero() {
            return other.normalized_sign();
        }
        if other.is_zero() {
            return self.normalized_sign();
        }
        if let Some(c) = self.as_constant() {
            return QtPoly::constant(c.gcd(&other.integer_content()));
        }
        if let Some(c) = other.as_constant() {
            return QtPoly::constant(c.gcd(&self.integer_content()));
        }
        let ca = self.t_content();
        let cb = other.t_content();
        let c = ca.gcd(&cb);
        let (mut f, mut g) = if self.coeffs.len() >= other.coeffs.len() {
            (self.div_upoly_exact(&ca), other.div_upoly_exact(&cb))
        } else {
            (other.div_upoly_exact(&cb), self.div_upoly_exact(&ca))
        };
        while !g.is_zero() {
            let r = f.prem_q(&g);
            f = g;
            g = r.t_primitive();
        }
        f.t_primitive().mul_upoly(&c).normalized_sign()
    }

    fn normalized_sign(&self) -> QtPoly {
        if self.leading_coefficient().is_some_and(|l| l.is_negative()) {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Exact quotient over `Z[q,t]`, or `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &QtPoly) -> Option<QtPoly> {
        let dd = other.q_degree()?;
        if self.is_zero() {
            return Some(QtPoly::zero());
        }
        let ds = self.q_degree().unwrap();
        if ds < dd {
            return None;
        }
        let lc = &other.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![UPoly::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let qk = rem[k + dd].div_exact(lc)?;
            for (j, b) in other.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&qk.mul(b));
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(QtPoly::from_coeffs(quot))
    }

    /// True iff `q` divides the polynomial (it vanishes identically at `q = 0`).
    pub fn divisible_by_q(&self) -> bool {
        self.coeffs.first().is_some_and(|c| c.is_zero())
    }

    /// Substitute rational values for `q` and/or `t`, scaled so the result
    /// stays integral: returns `r_q^{sq} r_t^{st} * p(p_q/r_q, p_t/r_t)`.
    /// The caller picks `sq`/`st` at least the respective degrees and uses
    /// the same scales for a numerator and its denominator.
    pub(crate) fn substitute_scaled(
        &self,
        q: Option<&BigRational>,
        t: Option<&BigRational>,
        sq: usize,
        st: usize,
    ) -> QtPoly {
        let mut out = QtPoly::zero();
        for (c, dq, dt) in self.terms() {
            let mut coeff = c;
            let mut eq = dq;
            let mut et = dt;
            if let Some(v) = q {
                coeff *= v.numer().pow(dq as u32) * v.denom().pow((sq - dq) as u32);
                eq = 0;
            }
            if let Some(v) = t {
                coeff *= v.numer().pow(dt as u32) * v.denom().pow((st - dt) as u32);
                et = 0;
            }
            out = out.add(&QtPoly::monomial(coeff, eq, et));
        }
        out
    }

    /// Evaluate at `t = value` for an integer value, keeping `q` symbolic.
    pub fn eval_t_integer(&self, value: &BigInt) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.eval(value)).collect()
    }
}

/// Renders in ascending order, e.g. `1-t`, `1-q*t^2`, `t-t^2`.
impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = self.terms();
        terms.sort_by_key(|a| (a.1 + a.2, a.1, a.2));
        for (idx, (c, dq, dt)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let mut factors = Vec::new();
            if !abs.is_one() || (*dq == 0 && *dt == 0) {
                factors.push(abs.to_string());
            }
            match dq {
                0 => {}
                1 => factors.push("q".into()),
                d => factors.push(format!("q^{d}")),
            }
            match dt {
                0 => {}
                1 => factors.push("t".into()),
                d => factors.push(format!("t^{d}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn om(a: usize, b: usize) -> QtPoly {
        QtPoly::one_minus(a, b)
    }

    #[test]
    fn gcd_of_shared_factor() {
        let common = om(1, 1);
        let a = common.mul(&om(2, 0));
        let b = common.mul(&om(0, 3));
        let g = a.gcd(&b);
        // sign-normalized (q t - 1)
        assert_eq!(g, common.neg());
    }

    #[test]
    fn gcd_is_one_for_coprime() {
        assert!(om(1, 2).gcd(&om(2, 1)).is_one());
    }

    #[test]
    fn gcd_with_t_content() {
        let a = om(0, 2).mul(&QtPoly::q());
        let b = om(0, 1).mul(&om(1, 0));
        // (1 - t) divides both
        let g = a.gcd(&b);
        assert_eq!(g, om(0, 1).neg());
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = om(1, 2).mul(&om(3, 1)).mul(&QtPoly::t());
        assert_eq!(a.div_exact(&om(3, 1)), Some(om(1, 2).mul(&QtPoly::t())));
        assert_eq!(a.div_exact(&om(1, 1)), None);
    }

    #[test]
    fn display_ascending() {
        assert_eq!(om(0, 1).to_string(), "1-t");
        assert_eq!(om(1, 2).to_string(), "1-q*t^2");
        assert_eq!(QtPoly::t().sub(&QtPoly::t().pow(2)).to_string(), "t-t^2");
        assert_eq!(QtPoly::constant(BigInt::from(-3)).to_string(), "-3");
    }
}
