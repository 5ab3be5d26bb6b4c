use std::fmt;

use crate::algebra::{Monomial, QtRational, XPoly};
use crate::error::{Error, Result};

fn check_index(f: &XPoly, i: usize) -> Result<()> {
    if i == 0 || i >= f.n() {
        return Err(Error::IndexOutOfRange { index: i, bound: f.n() });
    }
    Ok(())
}

/// `∂_i f = (f − s_i f)/(x_i − x_{i+1})`, evaluated monomial by monomial:
/// for `a > b`, `∂_i x_i^a x_{i+1}^b = Σ_{k=0}^{a-b-1} x_i^{a-1-k} x_{i+1}^{b+k}`,
/// and `∂_i` is anti-symmetric under exchanging `a` and `b`.
pub fn divided_difference(f: &XPoly, i: usize) -> Result<XPoly> {
    check_index(f, i)?;
    let mut out = XPoly::zero(f.n());
    for (m, c) in f.terms() {
        let e = m.exponents();
        let (a, b) = (e[i - 1], e[i]);
        if a == b {
            continue;
        }
        let (hi, lo, coeff) = if a > b { (a, b, c.clone()) } else { (b, a, -c) };
        for k in 0..hi - lo {
            let mut exps = e.to_vec();
            exps[i - 1] = hi - 1 - k;
            exps[i] = lo + k;
            out.add_term(Monomial::new(exps), coeff.clone());
        }
    }
    Ok(out)
}

/// `π_i f = ∂_i(x_i f)`.
pub fn demazure_pi(f: &XPoly, i: usize) -> Result<XPoly> {
    check_index(f, i)?;
    let mut shift = vec![0; f.n()];
    shift[i - 1] = 1;
    divided_difference(&f.shift(&Monomial::new(shift))?, i)
}

/// `θ_i = π_i − 1`.
pub fn demazure_theta(f: &XPoly, i: usize) -> Result<XPoly> {
    demazure_pi(f, i)?.sub(f)
}

/// `π̃_i = (1−t)π_i + t s_i`.
pub fn pi_t(f: &XPoly, i: usize) -> Result<XPoly> {
    let a = demazure_pi(f, i)?.scale(&QtRational::one_minus(0, 1));
    a.add(&f.swap_variables(i)?.scale(&QtRational::t()))
}

/// `θ̃_i = (1−t)θ_i + t s_i`.
pub fn theta_t(f: &XPoly, i: usize) -> Result<XPoly> {
    let a = demazure_theta(f, i)?.scale(&QtRational::one_minus(0, 1));
    a.add(&f.swap_variables(i)?.scale(&QtRational::t()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    Pi,
    Theta,
    PiT,
    ThetaT,
}

impl OperatorKind {
    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::Pi => "pi",
            OperatorKind::Theta => "theta",
            OperatorKind::PiT => "pi_t",
            OperatorKind::ThetaT => "theta_t",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            OperatorKind::Pi => "pi",
            OperatorKind::Theta => "theta",
            OperatorKind::PiT => "pi~",
            OperatorKind::ThetaT => "theta~",
        }
    }

    pub fn apply(self, f: &XPoly, i: usize) -> Result<XPoly> {
        match self {
            OperatorKind::Pi => demazure_pi(f, i),
            OperatorKind::Theta => demazure_theta(f, i),
            OperatorKind::PiT => pi_t(f, i),
            OperatorKind::ThetaT => theta_t(f, i),
        }
    }
}

/// A composite `ρ_{i_1} ⋯ ρ_{i_ℓ}`; the rightmost factor acts first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OperatorWord(Vec<(OperatorKind, usize)>);

impl OperatorWord {
    pub fn new(letters: Vec<(OperatorKind, usize)>) -> Self {
        OperatorWord(letters)
    }

    pub fn letters(&self) -> &[(OperatorKind, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, f: &XPoly) -> Result<XPoly> {
        let mut g = f.clone();
        for &(kind, i) in self.0.iter().rev() {
            g = kind.apply(&g, i)?;
        }
        Ok(g)
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.0.iter().map(|(k, i)| serde_json::json!({"kind": k.name(), "index": i})).collect()
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        let s: Vec<String> = self.0.iter().map(|(k, i)| format!("{}_{i}", k.symbol())).collect();
        write!(f, "{}", s.join(" . "))
    }
}
