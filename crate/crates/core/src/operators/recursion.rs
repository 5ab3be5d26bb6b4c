use std::collections::HashMap;

use crate::algebra::{Monomial, QtPoly, QtRational, XPoly};
use crate::error::{Error, Result};
use crate::shapes::{arm_leg, Composition, Permutation};

use super::demazure::{pi_t, theta_t, OperatorKind, OperatorWord};

/// `q^{λ₁} x₁ E(x₂,…,xₙ, q⁻¹x₁)`: produces `E_{(λ₂,…,λₙ,λ₁+1)}` from `E_λ`.
pub fn knop_sahi_shift(e: &XPoly, lambda1: u32) -> Result<XPoly> {
    let n = e.n();
    let mut out = XPoly::zero(n);
    for (m, c) in e.terms() {
        let exps = m.exponents();
        let last = exps[n - 1];
        let mut rotated = Vec::with_capacity(n);
        rotated.push(last.checked_add(1).ok_or(Error::ExponentOverflow)?);
        rotated.extend_from_slice(&exps[..n - 1]);
        let scale = QtRational::q_pow(lambda1 as i64 - last as i64);
        out.add_term(Monomial::new(rotated), c * &scale);
    }
    Ok(out)
}

/// Memo of `E^{ω₀}_λ` for a fixed `n`; one per worker.
#[derive(Debug, Default)]
pub struct RecursionCache {
    table: HashMap<Composition, XPoly>,
}

impl RecursionCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// `E^{ω₀}_λ`: sort descents away with the shape-permuting relation,
    /// peel weakly increasing shapes with the Knop–Sahi shift.
    pub fn longest_basement(&mut self, shape: &Composition) -> Result<XPoly> {
        if let Some(e) = self.table.get(shape) {
            return Ok(e.clone());
        }
        let n = shape.len();
        let e = if shape.size() == 0 {
            XPoly::one(n)
        } else if let Some(j) = (1..n).find(|&j| shape.part(j) > shape.part(j + 1)) {
            let mu = shape.swap(j);
            let base = self.longest_basement(&mu)?;
            // u is the box just right of the end of row j, read in row j+1 of μ
            let col = mu.part(j) as usize + 1;
            let (arm, leg) = arm_leg(&mu, j + 1, col)?;
            let c = QtRational::new(QtPoly::one_minus(0, 1), QtPoly::one_minus(leg as usize + 1, arm as usize))?;
            theta_t(&base, n - j)?.add(&base.scale(&c))?
        } else {
            let mut mu = Vec::with_capacity(n);
            mu.push(shape.part(n) - 1);
            mu.extend_from_slice(&shape.parts()[..n - 1]);
            let mu = Composition::new(mu);
            let base = self.longest_basement(&mu)?;
            knop_sahi_shift(&base, mu.part(1))?
        };
        self.table.insert(shape.clone(), e.clone());
        Ok(e)
    }
}

/// `γ_i`: length of the row whose basement label is `i`.
fn label_length(shape: &Composition, basement: &Permutation, i: usize) -> u32 {
    shape.part(basement.position_of(i))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `ℓ(σs_i) > ℓ(σ)`, via `π̃_i`.
    Up,
    /// `ℓ(σs_i) < ℓ(σ)`, via `θ̃_i`.
    Down,
}

/// Move `E^σ_λ` to `E^{σs_i}_λ`, where `σs_i` exchanges the labels `i`, `i+1`
/// of the basement. Down steps apply `θ̃_i` and remove a factor `t` when
/// `γ_i ≤ γ_{i+1}`; up steps apply `π̃_i` and remove `t` when `γ_i < γ_{i+1}`.
pub fn basement_permute(
    e: &XPoly,
    shape: &Composition,
    basement: &Permutation,
    i: usize,
    direction: Direction,
) -> Result<(XPoly, Permutation)> {
    let n = basement.len();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    let next = basement.swap_values(i);
    let goes_up = next.length() > basement.length();
    let (gi, gj) = (label_length(shape, basement, i), label_length(shape, basement, i + 1));
    let (image, has_t) = match direction {
        Direction::Up if goes_up => (pi_t(e, i)?, gi < gj),
        Direction::Down if !goes_up => (theta_t(e, i)?, gi <= gj),
        Direction::Up => return Err(Error::DirectionMismatch { index: i, direction: "up" }),
        Direction::Down => return Err(Error::DirectionMismatch { index: i, direction: "down" }),
    };
    let out = if has_t {
        let inv_t = QtRational::one().checked_div(&QtRational::t())?;
        image.scale(&inv_t)
    } else {
        image
    };
    Ok((out, next))
}

/// Label steps leading down from `ω₀` to `σ`.
fn descent_from_longest(basement: &Permutation) -> Vec<usize> {
    let mut up = Vec::new();
    let mut cur = basement.clone();
    let n = cur.len();
    while let Some(i) = (1..n).find(|&i| cur.position_of(i) < cur.position_of(i + 1)) {
        cur = cur.swap_values(i);
        up.push(i);
    }
    up.reverse();
    up
}

/// `E^σ_λ` from the recurrences alone, reusing `cache` for the `ω₀` values.
pub fn macdonald_recursive_cached(
    shape: &Composition,
    basement: &Permutation,
    cache: &mut RecursionCache,
) -> Result<XPoly> {
    let n = shape.len();
    if basement.len() != n {
        return Err(Error::LengthMismatch { left: n, right: basement.len() });
    }
    let mut e = cache.longest_basement(shape)?;
    let mut sigma = Permutation::longest(n);
    for i in descent_from_longest(basement) {
        let (next_e, next_sigma) = basement_permute(&e, shape, &sigma, i, Direction::Down)?;
        e = next_e;
        sigma = next_sigma;
    }
    debug_assert_eq!(&sigma, basement);
    Ok(e)
}

/// `E^σ_λ` from the shape-permuting, Knop–Sahi and basement-permuting relations.
pub fn macdonald_recursive(shape: &Composition, basement: &Permutation) -> Result<XPoly> {
    macdonald_recursive_cached(shape, basement, &mut RecursionCache::new())
}

/// Positions `p < p'` whose labels and row lengths are ordered alike
/// (`σ_p < σ_{p'}`, `λ_p < λ_{p'}`) or oppositely with ties
/// (`σ_p > σ_{p'}`, `λ_p ≥ λ_{p'}`).
pub fn monotone_pairs(shape: &Composition, basement: &Permutation) -> Vec<(usize, usize)> {
    let n = shape.len();
    let mut out = Vec::new();
    for p in 1..=n {
        for p2 in p + 1..=n {
            let (s, s2) = (basement.at(p), basement.at(p2));
            let (l, l2) = (shape.part(p), shape.part(p2));
            if (s < s2 && l < l2) || (s > s2 && l >= l2) {
                out.push((p, p2));
            }
        }
    }
    out
}

/// The `q = 0` polynomial `A^σ_λ(x;t)` as an operator word applied to a
/// monomial. Each step removes a monotone pair of consecutive labels: `π̃_i`
/// when label `i+1` sits above `i` in a row at least as long, `θ̃_i` when `i`
/// sits above `i+1` in a strictly shorter row; the topmost such pair is taken.
/// With no monotone pairs left the rows are constant and the polynomial is
/// `∏_r x_{σ_r}^{λ_r}`.
pub fn atom_operator_construction(shape: &Composition, basement: &Permutation) -> Result<(OperatorWord, XPoly)> {
    let n = shape.len();
    if basement.len() != n {
        return Err(Error::LengthMismatch { left: n, right: basement.len() });
    }
    let mut sigma = basement.clone();
    let mut letters = Vec::new();
    while !monotone_pairs(shape, &sigma).is_empty() {
        let mut best: Option<(usize, OperatorKind, usize)> = None;
        for i in 1..n {
            let (pi, pj) = (sigma.position_of(i), sigma.position_of(i + 1));
            let (li, lj) = (shape.part(pi), shape.part(pj));
            let step = if pj < pi && lj >= li {
                Some((pj, OperatorKind::PiT))
            } else if pi < pj && li < lj {
                Some((pi, OperatorKind::ThetaT))
            } else {
                None
            };
            if let Some((top, kind)) = step {
                if best.is_none_or(|(b, _, _)| top < b) {
                    best = Some((top, kind, i));
                }
            }
        }
        let (_, kind, i) = best.ok_or_else(|| {
            Error::InvalidBasis(format!("no consecutive-label monotone pair for {shape} over {sigma}"))
        })?;
        letters.push((kind, i));
        sigma = sigma.swap_values(i);
    }
    let mut exps = vec![0u32; n];
    for r in 1..=n {
        exps[sigma.at(r) - 1] = shape.part(r);
    }
    let word = OperatorWord::new(letters);
    let poly = word.apply(&XPoly::monomial(&exps))?;
    Ok((word, poly))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fillings::{macdonald_combinatorial, macdonald_specialized};
    use num_rational::BigRational;

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn shift_from_one() {
        let e = knop_sahi_shift(&XPoly::one(3), 0).unwrap();
        assert_eq!(e, XPoly::monomial(&[1, 0, 0]));
    }

    #[test]
    fn recursive_matches_combinatorial_small() {
        let mut cache = RecursionCache::new();
        for n in 1..=3 {
            for shape in Composition::all_up_to(n, 3) {
                for basement in Permutation::all(n) {
                    let rec = macdonald_recursive_cached(&shape, &basement, &mut cache).unwrap();
                    let comb = macdonald_combinatorial(&shape, &basement).unwrap();
                    assert_eq!(rec, comb, "{shape} {basement}");
                }
            }
            cache = RecursionCache::new();
        }
    }

    #[test]
    fn basement_round_trip() {
        let shape = comp(&[2, 0, 1]);
        let sigma = perm(&[2, 1, 3]);
        let e = macdonald_combinatorial(&shape, &sigma).unwrap();
        let (up, s_up) = basement_permute(&e, &shape, &sigma, 2, Direction::Up).unwrap();
        assert_eq!(s_up, perm(&[3, 1, 2]));
        assert_eq!(up, macdonald_combinatorial(&shape, &s_up).unwrap());
        let (back, s_back) = basement_permute(&up, &shape, &s_up, 2, Direction::Down).unwrap();
        assert_eq!(s_back, sigma);
        assert_eq!(back, e);
        assert!(basement_permute(&e, &shape, &sigma, 2, Direction::Down).is_err());
    }

    #[test]
    fn atom_word_examples() {
        let (w, p) = atom_operator_construction(&comp(&[3, 1, 0, 2]), &perm(&[3, 1, 4, 2])).unwrap();
        assert_eq!(w.to_string(), "pi~_2 . pi~_1 . theta~_2");
        let zero = BigRational::from_integer(0.into());
        let expected = macdonald_specialized(&comp(&[3, 1, 0, 2]), &perm(&[3, 1, 4, 2]), Some(&zero), None).unwrap();
        assert_eq!(p, expected);
        let (w, p) = atom_operator_construction(&comp(&[3, 1, 0, 2]), &perm(&[1, 3, 4, 2])).unwrap();
        assert!(w.is_empty());
        assert_eq!(p, XPoly::monomial(&[3, 2, 1, 0]));
    }
}
