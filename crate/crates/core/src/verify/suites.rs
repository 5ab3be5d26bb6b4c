use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Monomial, QtPoly, QtRational, XPoly};
use crate::bases::{
    elementary_poly, factorization_data, hall_littlewood_p, key_poly, patom_t, permuted_atom, schur_poly,
    single_step_exponent, BasisId, BasisTable, Family, SingleStep,
};
use crate::error::Result;
use crate::exec::Exec;
use crate::fillings::{macdonald_combinatorial, macdonald_specialized};
use crate::operators::{demazure_pi, demazure_theta, macdonald_recursive_cached, pi_t, theta_t, RecursionCache};
use crate::shapes::{bruhat_leq, Composition, Partition, Permutation};

use super::report::{Failure, SuiteReport};

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn all_instances(n: usize, degree: u32) -> Vec<(Composition, Permutation)> {
    let mut out = Vec::new();
    for m in 1..=n {
        for shape in Composition::all_up_to(m, degree) {
            for sigma in Permutation::all(m) {
                out.push((shape.clone(), sigma));
            }
        }
    }
    out
}

fn partitions(m: usize, degree: u32) -> Vec<Composition> {
    (0..=degree).flat_map(|d| Partition::all_of_size(m, d)).map(|p| p.as_composition()).collect()
}

fn compare(input: String, expected: Result<XPoly>, actual: Result<XPoly>) -> Option<Failure> {
    match (expected, actual) {
        (Ok(e), Ok(a)) if e == a => None,
        (Ok(e), Ok(a)) => Some(Failure::new(input, e, a)),
        (Err(e), _) | (_, Err(e)) => Some(Failure::new(input, "a value", format!("error: {e}"))),
    }
}

fn label(shape: &Composition, sigma: &Permutation) -> String {
    format!("shape {shape} basement {sigma}")
}

/// Recursive construction equals the combinatorial formula, `q, t` symbolic.
pub fn oracle(n: usize, degree: u32, exec: Exec) -> SuiteReport {
    let inst = all_instances(n, degree);
    let out = exec.map_with(&inst, RecursionCache::new, |cache, (shape, sigma)| {
        compare(
            label(shape, sigma),
            macdonald_combinatorial(shape, sigma),
            macdonald_recursive_cached(shape, sigma, cache),
        )
    });
    SuiteReport::from_outcomes("oracle", out)
}

/// As [`oracle`], on `samples` random instances with exactly `n` parts.
pub fn oracle_sampled(n: usize, degree: u32, samples: usize, seed: u64, exec: Exec) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let perms = Permutation::all(n);
    let by_degree: Vec<Vec<Composition>> = (0..=degree).map(|d| Composition::all_of_size(n, d)).collect();
    let inst: Vec<(Composition, Permutation)> = (0..samples)
        .map(|_| {
            let shapes = &by_degree[rng.gen_range(0..=degree as usize)];
            (shapes.choose(&mut rng).unwrap().clone(), perms.choose(&mut rng).unwrap().clone())
        })
        .collect();
    let out = exec.map_with(&inst, RecursionCache::new, |cache, (shape, sigma)| {
        compare(
            label(shape, sigma),
            macdonald_combinatorial(shape, sigma),
            macdonald_recursive_cached(shape, sigma, cache),
        )
    });
    SuiteReport::from_outcomes("oracle-sampled", out)
}

/// `E^σ_λ(x;1,t) = e_{λ'}` for partitions `λ`.
pub fn partition(n: usize, degree: u32, exec: Exec) -> SuiteReport {
    let one = BigRational::one();
    let inst: Vec<(Composition, Permutation)> = (1..=n)
        .flat_map(|m| {
            let perms = Permutation::all(m);
            partitions(m, degree).into_iter().flat_map(move |l| perms.clone().into_iter().map(move |s| (l.clone(), s)))
        })
        .collect();
    let out = exec.map(&inst, |(lambda, sigma)| {
        let e = elementary_poly(lambda.revsort().conjugate().parts(), lambda.len());
        compare(label(lambda, sigma), Ok(e), macdonald_specialized(lambda, sigma, Some(&one), None))
    });
    SuiteReport::from_outcomes("partition", out)
}

/// `E^σ_λ(x;1,t) = (e_{λ'}/e_{(λ̃)'}) E^σ_λ̃(x;1,t)` for all compositions.
pub fn factorization(n: usize, degree: u32, exec: Exec) -> SuiteReport {
    let inst = all_instances(n, degree);
    let out = exec.map(&inst, |(lambda, sigma)| match factorization_data(lambda, sigma) {
        Ok((_, true)) => None,
        Ok((f, false)) => Some(Failure::new(label(lambda, sigma), format!("factor {f}"), "product differs")),
        Err(e) => Some(Failure::new(label(lambda, sigma), "a value", format!("error: {e}"))),
    });
    SuiteReport::from_outcomes("factorization", out)
}

/// `E^σ_α` is symmetric in `x_i, x_{i+1}` whenever `α_j = α_{j+1}` and
/// `{σ_j, σ_{j+1}} = {i, i+1}`. One instance per applicable `(α, j, σ)`.
pub fn symmetry(n: usize, degree: u32, exec: Exec) -> SuiteReport {
    // (alpha, sigma, [(j, i)])
    type Instance = (Composition, Permutation, Vec<(usize, usize)>);
    let inst: Vec<Instance> = all_instances(n, degree)
        .into_iter()
        .filter_map(|(alpha, sigma)| {
            let pairs: Vec<(usize, usize)> = (1..alpha.len())
                .filter(|&j| alpha.part(j) == alpha.part(j + 1) && sigma.at(j).abs_diff(sigma.at(j + 1)) == 1)
                .map(|j| (j, sigma.at(j).min(sigma.at(j + 1))))
                .collect();
            (!pairs.is_empty()).then_some((alpha, sigma, pairs))
        })
        .collect();
    let out: Vec<Vec<Option<Failure>>> = exec.map(&inst, |(alpha, sigma, pairs)| {
        let e = macdonald_combinatorial(alpha, sigma);
        pairs
            .iter()
            .map(|&(j, i)| {
                let input = format!("{} j={j} i={i}", label(alpha, sigma));
                let swapped = e.as_ref().map_err(Clone::clone).and_then(|e| e.swap_variables(i));
                compare(input, e.clone(), swapped)
            })
            .collect()
    });
    SuiteReport::from_outcomes("symmetry", out.into_iter().flatten().collect())
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> QtRational {
    let palette = [
        QtRational::from_integer(rng.gen_range(1..=4)),
        QtRational::from_integer(-rng.gen_range(1..=4)),
        QtRational::t(),
        QtRational::q(),
        QtRational::one_minus(0, 1),
        QtRational::new(QtPoly::one_minus(0, 1), QtPoly::one_minus(1, 2)).expect("nonzero"),
        QtRational::q_pow(-1) * QtRational::t_pow(2),
    ];
    palette[rng.gen_range(0..palette.len())].clone()
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize, degree: u32) -> XPoly {
    let mut f = XPoly::zero(n);
    for _ in 0..rng.gen_range(1..=4) {
        let mut exps = vec![0u32; n];
        for _ in 0..rng.gen_range(0..=degree) {
            exps[rng.gen_range(0..n)] += 1;
        }
        f.add_term(Monomial::new(exps), random_coefficient(rng));
    }
    f
}

/// `θ̃π̃ = π̃θ̃ = t`, braid relations for `π̃` and `θ̃`, `π² = π`, `θ² = −θ`
/// on `samples` random polynomials.
pub fn operators(n: usize, degree: u32, samples: usize, seed: u64, exec: Exec) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_n = n.max(2);
    let polys: Vec<XPoly> = (0..samples)
        .map(|_| {
            let m = rng.gen_range(2..=max_n);
            random_poly(&mut rng, m, degree)
        })
        .collect();
    let tag = |k: usize, what: &str| format!("poly #{k} {what}");
    let indexed: Vec<(usize, XPoly, usize)> = polys
        .into_iter()
        .enumerate()
        .map(|(k, f)| {
            let i = 1 + (k % (f.n() - 1));
            (k, f, i)
        })
        .collect();
    let out: Vec<Vec<Option<Failure>>> = exec.map(&indexed, |(k, f, i)| {
        let (k, i) = (*k, *i);
        let tf = Ok(f.scale(&QtRational::t()));
        let mut checks = vec![
            compare(tag(k, &format!("theta~_{i} pi~_{i}")), tf.clone(), pi_t(f, i).and_then(|g| theta_t(&g, i))),
            compare(tag(k, &format!("pi~_{i} theta~_{i}")), tf, theta_t(f, i).and_then(|g| pi_t(&g, i))),
            compare(
                tag(k, &format!("pi_{i}^2")),
                demazure_pi(f, i),
                demazure_pi(f, i).and_then(|g| demazure_pi(&g, i)),
            ),
            compare(
                tag(k, &format!("theta_{i}^2")),
                demazure_theta(f, i).map(|g| g.neg()),
                demazure_theta(f, i).and_then(|g| demazure_theta(&g, i)),
            ),
        ];
        if f.n() >= 3 {
            let j = 1 + (k % (f.n() - 2));
            type Op = fn(&XPoly, usize) -> Result<XPoly>;
            for (name, op) in [("pi~", pi_t as Op), ("theta~", theta_t as Op)] {
                let lhs = op(f, j).and_then(|g| op(&g, j + 1)).and_then(|g| op(&g, j));
                let rhs = op(f, j + 1).and_then(|g| op(&g, j)).and_then(|g| op(&g, j + 1));
                checks.push(compare(tag(k, &format!("braid {name}_{j}")), lhs, rhs));
            }
        }
        checks
    });
    SuiteReport::from_outcomes("operators", out.into_iter().flatten().collect())
}

fn is_nonneg_integer(c: &QtRational) -> bool {
    c.as_constant().is_some_and(|v| v.is_integer() && !v.is_negative())
}

fn is_zero_one(c: &QtRational) -> bool {
    c.is_zero() || c.is_one()
}

/// t-only polynomial with non-negative values at the sample points of `[0, 1]`.
fn is_positive_t_polynomial(c: &QtRational) -> bool {
    if !c.is_polynomial() || c.numerator().q_degree().unwrap_or(0) > 0 {
        return false;
    }
    let points = [rat(0, 1), rat(1, 10), rat(1, 4), rat(1, 2), rat(3, 4), rat(9, 10), rat(1, 1)];
    points.iter().all(|t| c.evaluate(&BigRational::zero(), t).is_ok_and(|v| !v.is_negative()))
}

/// Atom expansions between comparable basements and the single-step law.
///
/// For `σ ≤ τ`: `A^τ_γ(x;t)` in the `σ` t-atom basis has t-polynomial
/// coefficients, non-negative on `[0,1]` samples; at `t = 0` the coefficients
/// are `0/1` (`τ = ω₀` gives keys into `σ`-atoms). Supports stay within the
/// rearrangement class of `γ`.
pub fn expansion(n: usize, degree: u32, exec: Exec) -> SuiteReport {
    let groups: Vec<(Permutation, u32)> = (1..=n)
        .flat_map(|m| Permutation::all(m).into_iter().flat_map(move |s| (0..=degree).map(move |d| (s.clone(), d))))
        .collect();
    let out: Vec<Vec<Option<Failure>>> = exec.map(&groups, |(sigma, d)| {
        let m = sigma.len();
        let mut fails = Vec::new();
        let tables = BasisId::new(Family::PatomT, Some(sigma.clone()))
            .and_then(|b| BasisTable::new(&b, m, *d, Exec::Sequential))
            .and_then(|tt| {
                BasisId::new(Family::Atom, Some(sigma.clone()))
                    .and_then(|b| BasisTable::new(&b, m, *d, Exec::Sequential))
                    .map(|t0| (tt, t0))
            });
        let (t_table, zero_table) = match tables {
            Ok(t) => t,
            Err(e) => return vec![Some(Failure::new(format!("basis {sigma} degree {d}"), "invertible", e))],
        };
        for tau in Permutation::all(m) {
            if !bruhat_leq(sigma, &tau).unwrap_or(false) {
                continue;
            }
            let gammas = Composition::all_of_size(m, *d);
            let t_targets: Result<Vec<XPoly>> = gammas.iter().map(|g| patom_t(g, &tau)).collect();
            let z_targets: Result<Vec<XPoly>> = gammas.iter().map(|g| permuted_atom(g, &tau)).collect();
            let results = t_targets
                .and_then(|ts| t_table.expand_all(&ts))
                .and_then(|a| z_targets.and_then(|zs| zero_table.expand_all(&zs)).map(|b| (a, b)));
            let (t_res, z_res) = match results {
                Ok(r) => r,
                Err(e) => {
                    fails.push(Some(Failure::new(format!("tau {tau} sigma {sigma} degree {d}"), "solvable", e)));
                    continue;
                }
            };
            for ((gamma, tr), zr) in gammas.iter().zip(&t_res).zip(&z_res) {
                let input = format!("gamma {gamma} tau {tau} into sigma {sigma}");
                let class_ok = |r: &crate::bases::ExpansionResult| r.support().all(|a| a.revsort() == gamma.revsort());
                let ok = class_ok(tr)
                    && class_ok(zr)
                    && tr.coefficients().iter().all(|(_, c)| is_positive_t_polynomial(c))
                    && zr.coefficients().iter().all(|(_, c)| is_zero_one(c));
                fails.push((!ok).then(|| {
                    Failure::new(input, "t-polynomials >= 0 and 0/1 at t=0 within the class", format!("{tr} | {zr}"))
                }));
            }
        }
        fails
    });
    let mut report_out: Vec<Option<Failure>> = out.into_iter().flatten().collect();

    // single-step law with recovered exponents
    let mut steps: Vec<(Composition, Permutation, usize)> = Vec::new();
    for m in 2..=n {
        for l in Composition::all_up_to(m, degree) {
            for tau in Permutation::all(m) {
                for i in 1..m {
                    if tau.swap_positions(i).length() > tau.length() {
                        steps.push((l.clone(), tau.clone(), i));
                    }
                }
            }
        }
    }
    let results = exec.map(&steps, |(l, tau, i)| single_step_exponent(l, tau, *i));
    let mut histogram: BTreeMap<u32, usize> = BTreeMap::new();
    let mut table = Vec::new();
    for ((l, tau, i), r) in steps.iter().zip(results) {
        let input = format!("single step lambda {l} tau {tau} i={i}");
        match r {
            Ok(SingleStep::Equal) => report_out.push(None),
            Ok(SingleStep::Exponent(m)) => {
                *histogram.entry(m).or_default() += 1;
                table.push(format!("m({l}, {}, {i}) = {m}", tau.swap_positions(*i)));
                report_out.push(None);
            }
            Ok(SingleStep::Violated) => report_out.push(Some(Failure::new(input, "law holds", "violated"))),
            Err(e) => report_out.push(Some(Failure::new(input, "law holds", e))),
        }
    }
    let mut report = SuiteReport::from_outcomes("expansion", report_out);
    report.notes.push(format!(
        "single-step exponents m: {}",
        histogram.iter().map(|(m, k)| format!("m={m}: {k}")).collect::<Vec<_>>().join(", ")
    ));
    report.notes.extend(table);
    report
}

/// `s_μ · A^σ_γ` has non-negative integer coefficients in the `σ`-atom basis.
pub fn schur_product(n: usize, degree: u32, exec: Exec) -> SuiteReport {
    let groups: Vec<(Permutation, u32)> = (1..=n)
        .flat_map(|m| Permutation::all(m).into_iter().flat_map(move |s| (0..=2 * degree).map(move |d| (s.clone(), d))))
        .collect();
    let out: Vec<Vec<Option<Failure>>> = exec.map(&groups, |(sigma, total)| {
        let m = sigma.len();
        let mut pairs = Vec::new();
        for dm in 0..=(*total).min(degree) {
            let dg = total - dm;
            if dg > degree {
                continue;
            }
            for mu in Partition::all_of_size(m, dm) {
                for gamma in Composition::all_of_size(m, dg) {
                    pairs.push((mu.clone(), gamma));
                }
            }
        }
        if pairs.is_empty() {
            return Vec::new();
        }
        let targets: Result<Vec<XPoly>> =
            pairs.iter().map(|(mu, g)| permuted_atom(g, sigma).and_then(|a| schur_poly(mu, m).mul(&a))).collect();
        let results = BasisId::new(Family::Atom, Some(sigma.clone()))
            .and_then(|b| BasisTable::new(&b, m, *total, Exec::Sequential))
            .and_then(|table| targets.and_then(|ts| table.expand_all(&ts)));
        match results {
            Err(e) => vec![Some(Failure::new(format!("sigma {sigma} degree {total}"), "solvable", e))],
            Ok(rs) => pairs
                .iter()
                .zip(rs)
                .map(|((mu, g), r)| {
                    let ok = r.coefficients().iter().all(|(_, c)| is_nonneg_integer(c));
                    (!ok).then(|| Failure::new(format!("s{mu} * A[{sigma}]{g}"), "non-negative integers", r))
                })
                .collect(),
        }
    });
    SuiteReport::from_outcomes("schur-product", out.into_iter().flatten().collect())
}

/// `P_μ(x;t) = Σ_{revsort(γ) = μ} A_γ(x;t)`, read off the t-atom expansion
/// of the symmetrization-formula `P_μ`.
pub fn hall_littlewood(n: usize, degree: u32, exec: Exec) -> SuiteReport {
    let groups: Vec<(usize, u32)> = (1..=n).flat_map(|m| (0..=degree).map(move |d| (m, d))).collect();
    let out: Vec<Vec<Option<Failure>>> = exec.map(&groups, |&(m, d)| {
        let mus = Partition::all_of_size(m, d);
        let run = || -> Result<Vec<crate::bases::ExpansionResult>> {
            let basis = BasisId::new(Family::PatomT, Some(Permutation::identity(m)))?;
            let table = BasisTable::new(&basis, m, d, Exec::Sequential)?;
            let targets: Vec<XPoly> = mus.iter().map(|mu| hall_littlewood_p(mu, m)).collect::<Result<_>>()?;
            table.expand_all(&targets)
        };
        match run() {
            Err(e) => vec![Some(Failure::new(format!("n={m} degree {d}"), "solvable", e))],
            Ok(rs) => mus
                .iter()
                .zip(rs)
                .map(|(mu, r)| {
                    let expected = mu.as_composition().rearrangements();
                    let ok =
                        r.coefficients().len() == expected.len() && expected.iter().all(|g| r.coefficient(g).is_one());
                    (!ok).then(|| Failure::new(format!("P{mu} n={m}"), "unit coefficient on each rearrangement", r))
                })
                .collect(),
        }
    });
    SuiteReport::from_outcomes("hall-littlewood", out.into_iter().flatten().collect())
}

/// `E_{(0,3,0)}(x;1,0) · K_{(2,0,1)}` has a negative key coefficient.
pub fn negative_example() -> SuiteReport {
    let run = || -> Result<crate::bases::ExpansionResult> {
        let (one, zero) = (BigRational::one(), BigRational::zero());
        let e =
            macdonald_specialized(&Composition::new(vec![0, 3, 0]), &Permutation::longest(3), Some(&one), Some(&zero))?;
        let f = e.mul(&key_poly(&Composition::new(vec![2, 0, 1]))?)?;
        crate::bases::expand_in_basis(&f, &BasisId::new(Family::Key, None)?, Exec::Sequential)
    };
    let input = "E(0,3,0)(x;1,0) * K(2,0,1) in the key basis";
    let (failure, note) = match run() {
        Err(e) => (Some(Failure::new(input, "an expansion", e)), None),
        Ok(r) => {
            let negative = r.coefficients().iter().any(|(_, c)| c.as_constant().is_some_and(|v| v.is_negative()));
            let note = format!("expansion: {r}");
            ((!negative).then(|| Failure::new(input, "a negative coefficient", &r)), Some(note))
        }
    };
    let mut report = SuiteReport::from_outcomes("negative-example", vec![failure]);
    report.notes.extend(note);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let exec = Exec::Sequential;
        for report in [
            oracle(2, 3, exec),
            oracle_sampled(3, 2, 5, 7, exec),
            partition(3, 3, exec),
            factorization(3, 3, exec),
            symmetry(3, 2, exec),
            operators(3, 3, 10, 1, exec),
            expansion(2, 2, exec),
            schur_product(2, 2, exec),
            hall_littlewood(2, 3, exec),
            negative_example(),
        ] {
            assert!(report.passed(), "{report}");
            assert!(report.instances > 0, "{}", report.suite);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = operators(3, 3, 8, 42, Exec::Parallel).to_json();
        let b = operators(3, 3, 8, 42, Exec::Sequential).to_json();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
