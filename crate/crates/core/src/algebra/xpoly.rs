//! Polynomials in `x_1..x_n` with coefficients in `Q(q,t)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::rational::QtRational;
use crate::error::{Error, Result};

/// An exponent vector. Ordered by graded reverse-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// Exchange the exponents of `x_i` and `x_{i+1}` (1-based `i`).
    pub fn swapped(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e.swap(i - 1, i);
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // larger means smaller exponent in the last differing position
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in a fixed number of variables. Zero coefficients are
/// never stored; [`XPoly::terms`] iterates in descending grevlex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XPoly {
    n: usize,
    terms: BTreeMap<Monomial, QtRational>,
}

impl XPoly {
    pub fn zero(n: usize) -> Self {
        XPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, QtRational::one())
    }

    pub fn constant(n: usize, c: QtRational) -> Self {
        Self::term(Monomial::one(n), c)
    }

    /// `c * x^exps`.
    pub fn term(m: Monomial, c: QtRational) -> Self {
        let mut p = XPoly::zero(m.len());
        p.add_term(m, c);
        p
    }

    pub fn monomial(exps: &[u32]) -> Self {
        Self::term(Monomial::new(exps.to_vec()), QtRational::one())
    }

    /// The variable `x_i` (1-based).
    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Self::monomial(&e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending grevlex) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &QtRational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, QtRational)> {
        self.terms.into_iter().rev()
    }

    pub fn coefficient(&self, exps: &[u32]) -> QtRational {
        self.terms.get(&Monomial::new(exps.to_vec())).cloned().unwrap_or_else(QtRational::zero)
    }

    /// Accumulate `c * x^m`, pruning zeros.
    pub fn add_term(&mut self, m: Monomial, c: QtRational) {
        debug_assert_eq!(m.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().checked_add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_n(&self, other: &XPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &XPoly) -> Result<XPoly> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &XPoly) -> Result<XPoly> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &XPoly) -> Result<XPoly> {
        self.check_n(other)?;
        let mut out = XPoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.checked_mul(mb)?, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> XPoly {
        self.map_coefficients(|c| -c)
    }

    pub fn scale(&self, c: &QtRational) -> XPoly {
        if c.is_zero() {
            return XPoly::zero(self.n);
        }
        if c.is_one() {
            return self.clone();
        }
        self.map_coefficients(|a| a * c)
    }

    /// Multiply by the monomial `x^m`.
    pub fn shift(&self, m: &Monomial) -> Result<XPoly> {
        let mut out = XPoly::zero(self.n);
        for (a, c) in &self.terms {
            out.terms.insert(a.checked_mul(m)?, c.clone());
        }
        Ok(out)
    }

    pub fn map_coefficients(&self, f: impl Fn(&QtRational) -> QtRational) -> XPoly {
        let mut out = XPoly::zero(self.n);
        for (m, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Result<XPoly> {
        let mut acc = XPoly::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Total degree of the highest term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// `s_i f`: exchange `x_i` and `x_{i+1}` (1-based, `1 <= i < n`).
    pub fn swap_variables(&self, i: usize) -> Result<XPoly> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, bound: self.n });
        }
        let mut out = XPoly::zero(self.n);
        for (m, c) in &self.terms {
            out.terms.insert(m.swapped(i), c.clone());
        }
        Ok(out)
    }

    /// Apply a permutation of the variables: `x_k -> x_{w(k)}` (1-based one-line `w`).
    pub fn permute_variables(&self, w: &[usize]) -> XPoly {
        let mut out = XPoly::zero(self.n);
        for (m, c) in &self.terms {
            let mut e = vec![0; self.n];
            for (k, &a) in m.exponents().iter().enumerate() {
                e[w[k] - 1] = a;
            }
            out.terms.insert(Monomial::new(e), c.clone());
        }
        out
    }

    /// Substitute exact values for `q` and/or `t` in every coefficient.
    pub fn specialize(&self, q: Option<&BigRational>, t: Option<&BigRational>) -> Result<XPoly> {
        let mut out = XPoly::zero(self.n);
        for (m, c) in &self.terms {
            let v = c.specialize(q, t).map_err(|e| match e {
                Error::VanishingDenominator { coefficient, .. } => {
                    Error::VanishingDenominator { term: render_monomial(m), coefficient }
                }
                other => other,
            })?;
            out.add_term(m.clone(), v);
        }
        Ok(out)
    }

    /// Exact quotient by `x_i - x_j` (1-based, `i != j`), or `None` if it does not divide.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Option<XPoly> {
        let (i0, j0) = (i - 1, j - 1);
        // coefficient of x_i^k, as polynomials free of x_i
        let mut by_power: BTreeMap<u32, XPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.exponents().to_vec();
            let k = std::mem::take(&mut rest[i0]);
            by_power.entry(k).or_insert_with(|| XPoly::zero(self.n)).add_term(Monomial::new(rest), c.clone());
        }
        let top = match by_power.keys().next_back() {
            None => return Some(XPoly::zero(self.n)),
            Some(&k) => k,
        };
        let xj = XPoly::variable(self.n, j0 + 1);
        // f = sum_k c_k x_i^k ; quotient b_{k-1} = c_k + x_j b_k
        let mut quotient = XPoly::zero(self.n);
        let mut carry = XPoly::zero(self.n);
        for k in (1..=top).rev() {
            let ck = by_power.get(&k).cloned().unwrap_or_else(|| XPoly::zero(self.n));
            let b = ck.add(&carry).ok()?;
            let mut xi_pow = vec![0; self.n];
            xi_pow[i0] = k - 1;
            quotient = quotient.add(&b.shift(&Monomial::new(xi_pow)).ok()?).ok()?;
            carry = xj.mul(&b).ok()?;
        }
        let c0 = by_power.get(&0).cloned().unwrap_or_else(|| XPoly::zero(self.n));
        if !c0.add(&carry).ok()?.is_zero() {
            return None;
        }
        Some(quotient)
    }

    /// Render in the human-readable form, e.g. `(1-t)*x1^2*x2 + x3`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

pub(crate) fn render_monomial(m: &Monomial) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let mono = render_monomial(m);
            let is_one_mono = m.degree() == 0;
            let (neg, body) = match c.as_integer() {
                Some(k) => {
                    let abs = k.abs();
                    let b = if is_one_mono {
                        abs.to_string()
                    } else if abs == BigInt::from(1) {
                        mono.clone()
                    } else {
                        format!("{abs}*{mono}")
                    };
                    (k.is_negative(), b)
                }
                None => {
                    let s = c.to_string();
                    let single = c.is_polynomial() && c.numerator().terms().len() == 1;
                    let coeff = if single { s } else { format!("({s})") };
                    let b = if is_one_mono { coeff } else { format!("{coeff}*{mono}") };
                    (false, b)
                }
            };
            match (idx, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> XPoly {
        XPoly::variable(n, i)
    }

    #[test]
    fn product_of_variables() {
        assert_eq!(x(2, 1).mul(&x(2, 2)).unwrap(), XPoly::monomial(&[1, 1]));
    }

    #[test]
    fn self_difference_is_zero() {
        let f = x(3, 1).add(&x(3, 3)).unwrap().pow(2).unwrap();
        assert!(f.sub(&f).unwrap().is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let a = x(2, 1).add(&x(2, 2)).unwrap();
        let b = x(2, 1).sub(&x(2, 2)).unwrap();
        let expected = XPoly::monomial(&[2, 0]).sub(&XPoly::monomial(&[0, 2])).unwrap();
        assert_eq!(a.mul(&b).unwrap(), expected);
    }

    #[test]
    fn mismatched_variable_counts() {
        assert_eq!(x(2, 1).add(&x(3, 1)), Err(Error::VariableMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn swap_is_involution() {
        let f = XPoly::monomial(&[2, 1]);
        assert_eq!(f.swap_variables(1).unwrap(), XPoly::monomial(&[1, 2]));
        assert_eq!(f.swap_variables(1).unwrap().swap_variables(1).unwrap(), f);
        assert!(f.swap_variables(2).is_err());
        assert!(f.swap_variables(0).is_err());
    }

    #[test]
    fn grevlex_order() {
        let mut m = [
            Monomial::new(vec![1, 0, 1]),
            Monomial::new(vec![0, 2, 0]),
            Monomial::new(vec![2, 0, 0]),
            Monomial::new(vec![1, 1, 0]),
            Monomial::new(vec![0, 0, 1]),
        ];
        m.sort();
        m.reverse();
        let got: Vec<_> = m.iter().map(|m| m.exponents().to_vec()).collect();
        assert_eq!(got, vec![vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 0], vec![1, 0, 1], vec![0, 0, 1]]);
    }

    #[test]
    fn specialize_coefficient() {
        let c =
            QtRational::new(crate::algebra::QtPoly::one_minus(0, 1), crate::algebra::QtPoly::one_minus(1, 1)).unwrap();
        let f = XPoly::term(Monomial::new(vec![1, 0]), c);
        let g = f.specialize(Some(&BigRational::from_integer(0.into())), None).unwrap();
        assert_eq!(g.coefficient(&[1, 0]), QtRational::one_minus(0, 1));
    }

    #[test]
    fn specialize_vanishing_names_term() {
        let c =
            QtRational::new(crate::algebra::QtPoly::one_minus(0, 1), crate::algebra::QtPoly::one_minus(1, 2)).unwrap();
        let f = XPoly::term(Monomial::new(vec![2, 1]), c);
        let one = BigRational::from_integer(1.into());
        match f.specialize(Some(&one), Some(&one)) {
            Err(Error::VanishingDenominator { term, .. }) => assert_eq!(term, "x1^2*x2"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn constant_specializes_to_itself() {
        let f = XPoly::one(3);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.specialize(Some(&half), Some(&half)).unwrap(), f);
    }

    #[test]
    fn exact_division_by_difference() {
        // x1^2 - x2^2 = (x1 - x2)(x1 + x2)
        let f = XPoly::monomial(&[2, 0, 1]).sub(&XPoly::monomial(&[0, 2, 1])).unwrap();
        let q = f.div_by_difference(1, 2).unwrap();
        let expected = XPoly::monomial(&[1, 0, 1]).add(&XPoly::monomial(&[0, 1, 1])).unwrap();
        assert_eq!(q, expected);
        assert!(XPoly::monomial(&[1, 0, 0]).div_by_difference(1, 2).is_none());
        // dividing by x3 - x1 exercises a non-adjacent pair and sign
        let g = XPoly::monomial(&[0, 0, 1]).sub(&XPoly::monomial(&[1, 0, 0])).unwrap();
        assert_eq!(g.div_by_difference(3, 1).unwrap(), XPoly::one(3));
    }

    #[test]
    fn text_rendering() {
        let c = QtRational::one_minus(0, 1);
        let mut f = XPoly::term(Monomial::new(vec![2, 1]), c);
        f.add_term(Monomial::new(vec![0, 0]), QtRational::from_integer(-2));
        f.add_term(Monomial::new(vec![0, 1]), QtRational::t());
        assert_eq!(f.to_text(), "(1-t)*x1^2*x2 + t*x2 - 2");
    }
}
