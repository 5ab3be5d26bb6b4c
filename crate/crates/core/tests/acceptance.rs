//! One PASS/FAIL line per acceptance criterion, with wall time against the
//! stated budget. Exits non-zero if any line fails.

mod common;

use std::time::{Duration, Instant};

use permac::exec::Exec;
use permac::verify::{self, SuiteReport};

fn suite(reports: &[SuiteReport]) -> Result<String, String> {
    let instances: usize = reports.iter().map(|r| r.instances).sum();
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(format!("{instances} instances")),
        Some(r) => Err(r.to_string()),
    }
}

fn main() {
    let exec = Exec::default();
    let minutes = |m: u64| Some(Duration::from_secs(60 * m));
    type Check = Box<dyn Fn() -> Result<String, String>>;
    let criteria: Vec<(&str, Option<Duration>, Check)> = vec![
        (
            "worked examples: 3124 fillings, 132 coinversion-free fillings, 1423 t-atom",
            Some(Duration::from_secs(1)),
            Box::new(|| {
                common::naf_3124()?;
                common::coinversion_free_132()?;
                common::seven_term_atom()?;
                Ok("3 examples".into())
            }),
        ),
        (
            "E(x;1,t) = e_{lambda'} for partitions, |lambda| <= 5, n <= 4, all basements",
            minutes(2),
            Box::new(move || suite(&[verify::partition(4, 5, exec)])),
        ),
        (
            "E(x;1,t) factors through the weak standardization, n <= 3, |lambda| <= 5",
            minutes(2),
            Box::new(move || suite(&[verify::factorization(3, 5, exec)])),
        ),
        (
            "recursion equals the filling formula, q,t symbolic, n <= 3, |lambda| <= 4",
            minutes(5),
            Box::new(move || suite(&[verify::oracle(3, 4, exec)])),
        ),
        (
            "partial symmetry in x_i, x_{i+1}, n <= 4, |alpha| <= 4",
            None,
            Box::new(move || suite(&[verify::symmetry(4, 4, exec)])),
        ),
        (
            "Hecke operator relations on 200 random polynomials, n <= 4, degree <= 4",
            None,
            Box::new(move || suite(&[verify::operators(4, 4, 200, 0, exec)])),
        ),
        (
            "atom expansions: keys into sigma-atoms 0/1, tau-to-sigma t-atoms positive, n <= 3, |gamma| <= 4",
            None,
            Box::new(move || suite(&[verify::expansion(3, 4, exec)])),
        ),
        (
            "Hall-Littlewood P as a sum of t-atoms, n = 3, |mu| <= 4",
            minutes(1),
            Box::new(move || suite(&[verify::hall_littlewood(3, 4, exec)])),
        ),
        (
            "Schur times sigma-atom is atom-positive with integer coefficients, n = 3, degrees <= 3",
            None,
            Box::new(move || suite(&[verify::schur_product(3, 3, exec)])),
        ),
        (
            "E_(0,3,0)(x;1,0) * K_(2,0,1) has a negative key coefficient",
            None,
            Box::new(|| suite(&[verify::negative_example()])),
        ),
    ];

    let mut all_pass = true;
    for (k, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let over = budget.is_some_and(|b| elapsed > b);
        let pass = outcome.is_ok() && !over;
        all_pass &= pass;
        let budget_text = budget.map(|b| format!(" / {}s", b.as_secs())).unwrap_or_default();
        let detail = match &outcome {
            Ok(d) => d.clone(),
            Err(e) => e.lines().next().unwrap_or("").to_string(),
        };
        println!(
            "{} criterion {:>2}: {name} [{detail}] ({:.2}s{budget_text})",
            if pass { "PASS" } else { "FAIL" },
            k + 1,
            elapsed.as_secs_f64()
        );
        if let Err(e) = outcome {
            for line in e.lines().skip(1).take(10) {
                println!("    {line}");
            }
        }
    }
    if !all_pass {
        std::process::exit(1);
    }
}
