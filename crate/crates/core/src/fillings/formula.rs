use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{Monomial, QtPoly, QtRational, XPoly};
use crate::error::{Error, Result};
use crate::shapes::{arm_leg, Composition, Permutation};

use super::enumerate::for_each_naf;
use super::filling::{is_inversion, shape_triples};

/// Shape-only data shared by every filling: boxes with their denominator
/// factors, and the triples as grid coordinates.
struct Geometry {
    // (row index 0-based, column)
    boxes: Vec<(usize, usize)>,
    maj_weight: Vec<u32>,
    factors: Vec<QtPoly>,
    triples: Vec<[(usize, usize); 3]>,
}

impl Geometry {
    fn new(shape: &Composition) -> Result<Self> {
        let mut boxes = Vec::new();
        let mut maj_weight = Vec::new();
        let mut factors = Vec::new();
        for r in 1..=shape.len() {
            for c in 1..=shape.part(r) as usize {
                let (arm, leg) = arm_leg(shape, r, c)?;
                boxes.push((r - 1, c));
                maj_weight.push(leg + 1);
                factors.push(QtPoly::one_minus(leg as usize + 1, arm as usize + 1));
            }
        }
        if boxes.len() > 128 {
            return Err(Error::SizeBound(boxes.len()));
        }
        let triples = shape_triples(shape)
            .into_iter()
            .map(|t| [(t.a.0 - 1, t.a.1), (t.b.0 - 1, t.b.1), (t.c.0 - 1, t.c.1)])
            .collect();
        Ok(Geometry { boxes, maj_weight, factors, triples })
    }
}

/// The formula's numerators over the common denominator `∏_u (1 − q^{1+leg} t^{1+arm})`,
/// one per monomial.
struct Numerators {
    n: usize,
    geometry: Geometry,
    by_monomial: BTreeMap<Vec<u32>, QtPoly>,
}

fn numerators(shape: &Composition, basement: &Permutation, skip_maj: bool, skip_coinv: bool) -> Result<Numerators> {
    let n = shape.len();
    if basement.len() != n {
        return Err(Error::LengthMismatch { left: n, right: basement.len() });
    }
    let geometry = Geometry::new(shape)?;

    // Group fillings by (x-weight, set of boxes equal to their left neighbour);
    // within a group only q^maj t^coinv varies.
    let mut groups: HashMap<(Vec<u32>, u128), QtPoly> = HashMap::new();
    for_each_naf(shape, basement, |grid| {
        let mut maj = 0usize;
        let mut equal: u128 = 0;
        let mut exps = vec![0u32; n];
        for (k, &(r, c)) in geometry.boxes.iter().enumerate() {
            let (left, here) = (grid[r][c - 1], grid[r][c]);
            exps[here - 1] += 1;
            if left < here {
                maj += geometry.maj_weight[k] as usize;
            }
            if left == here {
                equal |= 1 << k;
            }
        }
        if skip_maj && maj > 0 {
            return;
        }
        let coinv = geometry
            .triples
            .iter()
            .filter(|[a, b, c]| !is_inversion(grid[a.0][a.1], grid[b.0][b.1], grid[c.0][c.1]))
            .count();
        if skip_coinv && coinv > 0 {
            return;
        }
        let entry = groups.entry((exps, equal)).or_insert_with(QtPoly::zero);
        *entry = entry.add(&QtPoly::monomial(1.into(), maj, coinv));
    });

    let one_minus_t = QtPoly::one_minus(0, 1);
    let mut factor_cache: HashMap<u128, QtPoly> = HashMap::new();
    let mut by_monomial: BTreeMap<Vec<u32>, QtPoly> = BTreeMap::new();
    for ((exps, equal), stats) in groups {
        let factor = factor_cache.entry(equal).or_insert_with(|| {
            let mut p = QtPoly::one();
            for (k, f) in geometry.factors.iter().enumerate() {
                p = p.mul(if equal & (1 << k) != 0 { f } else { &one_minus_t });
            }
            p
        });
        let acc = by_monomial.entry(exps).or_insert_with(QtPoly::zero);
        *acc = acc.add(&stats.mul(factor));
    }
    Ok(Numerators { n, geometry, by_monomial })
}

/// Reduce `num / ∏ factors`, dividing out whole factors before the gcd.
fn reduce(num: &QtPoly, factors: &[QtPoly]) -> Result<QtRational> {
    let mut num = num.clone();
    let mut den = QtPoly::one();
    for f in factors {
        match num.div_exact(f) {
            Some(quot) => num = quot,
            None => den = den.mul(f),
        }
    }
    QtRational::new(num, den)
}

/// `E^σ_λ(x;q,t)` as the weighted sum over non-attacking fillings.
pub fn macdonald_combinatorial(shape: &Composition, basement: &Permutation) -> Result<XPoly> {
    let nums = numerators(shape, basement, false, false)?;
    let mut out = XPoly::zero(nums.n);
    for (exps, num) in &nums.by_monomial {
        out.add_term(Monomial::new(exps.clone()), reduce(num, &nums.geometry.factors)?);
    }
    Ok(out)
}

/// `E^σ_λ` with `q` and/or `t` specialized.
///
/// Agrees with specializing [`macdonald_combinatorial`]; when the common
/// denominator survives the substitution the reduction is skipped entirely.
/// Fillings whose weight vanishes at `q = 0` or `t = 0` are never visited.
pub fn macdonald_specialized(
    shape: &Composition,
    basement: &Permutation,
    q: Option<&BigRational>,
    t: Option<&BigRational>,
) -> Result<XPoly> {
    let skip_maj = q.is_some_and(Zero::is_zero);
    let skip_coinv = t.is_some_and(Zero::is_zero);
    let nums = numerators(shape, basement, skip_maj, skip_coinv)?;
    let den = nums.geometry.factors.iter().fold(QtPoly::one(), |acc, f| acc.mul(f));
    let mut out = XPoly::zero(nums.n);
    for (exps, num) in &nums.by_monomial {
        let m = Monomial::new(exps.clone());
        let sq = num.q_degree().unwrap_or(0).max(den.q_degree().unwrap_or(0));
        let st = num.t_degree().unwrap_or(0).max(den.t_degree().unwrap_or(0));
        let den_at = den.substitute_scaled(q, t, sq, st);
        let coeff = if den_at.is_zero() {
            reduce(num, &nums.geometry.factors)?.specialize(q, t).map_err(|e| name_term(e, &m))?
        } else {
            QtRational::new(num.substitute_scaled(q, t, sq, st), den_at)?
        };
        out.add_term(m, coeff);
    }
    Ok(out)
}

fn name_term(e: Error, m: &Monomial) -> Error {
    match e {
        Error::VanishingDenominator { coefficient, .. } => {
            Error::VanishingDenominator { term: crate::algebra::render_monomial(m), coefficient }
        }
        other => other,
    }
}
