use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{Monomial, QtRational, XPoly};
use crate::error::{Error, Result};
use crate::fillings::macdonald_specialized;
use crate::operators::demazure_pi;
use crate::shapes::{Composition, Partition, Permutation};

fn zero() -> BigRational {
    BigRational::zero()
}

/// `e_k(x_1..x_n)`; zero when `k > n`.
pub fn elementary_single(k: usize, n: usize) -> XPoly {
    let mut out = XPoly::zero(n);
    if k > n {
        return out;
    }
    // subsets of size k as 0/1 exponent vectors
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            let exps = (0..n).map(|i| (mask >> i) & 1).collect();
            out.add_term(Monomial::new(exps), QtRational::one());
        }
    }
    out
}

/// `e_μ = ∏ e_{μ_i}`, with `e_0 = 1`.
pub fn elementary_poly(mu: &[u32], n: usize) -> XPoly {
    mu.iter().fold(XPoly::one(n), |acc, &k| acc.mul(&elementary_single(k as usize, n)).expect("same variable count"))
}

/// `∏_{i<j} (x_i − x_j)`.
fn divide_by_vandermonde(f: &XPoly) -> Option<XPoly> {
    let n = f.n();
    let mut g = f.clone();
    for i in 1..=n {
        for j in i + 1..=n {
            g = g.div_by_difference(i, j)?;
        }
    }
    Some(g)
}

/// `Σ_{w ∈ S_n} sign(w) · w(f)`.
fn antisymmetrize(f: &XPoly) -> XPoly {
    let n = f.n();
    let mut out = XPoly::zero(n);
    for w in Permutation::all(n) {
        let term = f.permute_variables(w.one_line());
        out = out.add(&if w.sign() > 0 { term } else { term.neg() }).expect("same n");
    }
    out
}

fn padded(mu: &Partition, n: usize) -> Result<Vec<u32>> {
    Ok(mu.with_length(n)?.parts().to_vec())
}

/// Schur polynomial as the bialternant `a_{μ+δ} / a_δ`; zero when `μ` has more
/// than `n` nonzero parts.
pub fn schur_poly(mu: &Partition, n: usize) -> XPoly {
    let Ok(parts) = padded(mu, n) else {
        return XPoly::zero(n);
    };
    let exps: Vec<u32> = parts.iter().enumerate().map(|(i, &p)| p + (n - 1 - i) as u32).collect();
    let alt = antisymmetrize(&XPoly::monomial(&exps));
    divide_by_vandermonde(&alt).expect("alternant is divisible by the Vandermonde")
}

/// Monomial symmetric polynomial `m_μ`.
pub fn monomial_symmetric(mu: &Partition, n: usize) -> XPoly {
    let mut out = XPoly::zero(n);
    let Ok(parts) = padded(mu, n) else {
        return out;
    };
    for c in Composition::new(parts).rearrangements() {
        out.add_term(Monomial::new(c.parts().to_vec()), QtRational::one());
    }
    out
}

/// Hall–Littlewood `P_μ(x;t)` by symmetrization:
/// `(1/|S_μ|) Σ_w sign(w) w(x^μ ∏_{μ_i>μ_j} (x_i − t x_j) ∏_{i<j, μ_i=μ_j} (x_i − x_j)) / Δ`.
pub fn hall_littlewood_p(mu: &Partition, n: usize) -> Result<XPoly> {
    let parts = padded(mu, n)?;
    let var = |i: usize| XPoly::variable(n, i + 1);
    let mut h = XPoly::monomial(&parts);
    let mut stabilizer = BigInt::from(1);
    for i in 0..n {
        for j in i + 1..n {
            let factor =
                if parts[i] > parts[j] { var(i).sub(&var(j).scale(&QtRational::t()))? } else { var(i).sub(&var(j))? };
            h = h.mul(&factor)?;
        }
    }
    let mut run = 1;
    for i in 1..=n {
        if i < n && parts[i] == parts[i - 1] {
            run += 1;
        } else {
            for k in 2..=run {
                stabilizer *= k;
            }
            run = 1;
        }
    }
    let alt = antisymmetrize(&h);
    let p = divide_by_vandermonde(&alt).expect("antisymmetric numerator");
    let inv = QtRational::from_rational(&BigRational::new(1.into(), stabilizer));
    Ok(p.scale(&inv))
}

/// `A^σ_γ(x;t) = E^σ_γ(x;0,t)`.
pub fn patom_t(gamma: &Composition, sigma: &Permutation) -> Result<XPoly> {
    macdonald_specialized(gamma, sigma, Some(&zero()), None)
}

/// `A^σ_γ(x) = E^σ_γ(x;0,0)`.
pub fn permuted_atom(gamma: &Composition, sigma: &Permutation) -> Result<XPoly> {
    macdonald_specialized(gamma, sigma, Some(&zero()), Some(&zero()))
}

/// Key polynomial `K_γ = E^{ω₀}_γ(x;0,0)`.
pub fn key_poly(gamma: &Composition) -> Result<XPoly> {
    permuted_atom(gamma, &Permutation::longest(gamma.len()))
}

/// Demazure atom `A_γ = E^{id}_γ(x;0,0)`.
pub fn demazure_atom(gamma: &Composition) -> Result<XPoly> {
    permuted_atom(gamma, &Permutation::identity(gamma.len()))
}

/// Key polynomial from Demazure operators: `x^{rev γ}` for weakly increasing
/// `γ`, and `K_{s_jγ} = π_{n−j} K_γ` whenever `γ_j < γ_{j+1}`.
pub fn key_poly_by_operators(gamma: &Composition) -> Result<XPoly> {
    let n = gamma.len();
    if gamma.is_weakly_increasing() {
        let rev: Vec<u32> = gamma.parts().iter().rev().copied().collect();
        return Ok(XPoly::monomial(&rev));
    }
    let j = (1..n).find(|&j| gamma.part(j) > gamma.part(j + 1)).expect("has a descent");
    let base = key_poly_by_operators(&gamma.swap(j))?;
    demazure_pi(&base, n - j)
}

/// Quotient `e_{λ'}/e_{(λ̃)'}` as `e` of the multiset difference of the parts
/// of the two conjugates.
pub fn factor_elementary_parts(lambda: &Composition) -> Result<Vec<u32>> {
    let mut big: Vec<u32> = lambda.revsort().conjugate().parts().to_vec();
    let small = lambda.weak_standardize().revsort().conjugate();
    for p in small.parts() {
        let k = big.iter().position(|x| x == p).ok_or_else(|| {
            Error::InvalidBasis(format!("parts of {small} are not contained in those of the conjugate of {lambda}"))
        })?;
        big.remove(k);
    }
    Ok(big)
}
