//! Identity-checking suites. Each suite enumerates its instances exhaustively
//! within `(n, degree)` unless its name ends in `-sampled`; results are
//! reassembled in generation order, so reports do not depend on scheduling.

mod report;
mod suites;

pub use report::{Failure, SuiteReport};
pub use suites::{
    expansion, factorization, hall_littlewood, negative_example, operators, oracle, oracle_sampled, partition,
    schur_product, symmetry,
};

use std::time::Instant;

use crate::error::{Error, Result};
use crate::exec::Exec;

/// Largest `n` any suite accepts.
pub const MAX_N: usize = 5;

pub const SUITES: &[&str] = &[
    "oracle",
    "oracle-sampled",
    "partition",
    "factorization",
    "symmetry",
    "operators",
    "expansion",
    "schur-product",
    "hall-littlewood",
    "negative-example",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteParams {
    pub n: usize,
    pub degree: u32,
    pub seed: u64,
    /// Instance count for sampled suites.
    pub samples: usize,
    pub exec: Exec,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { n: 3, degree: 4, seed: 0, samples: 100, exec: Exec::default() }
    }
}

/// Run one suite by name, or every suite for `"all"`.
pub fn run_suite(name: &str, params: &SuiteParams) -> Result<Vec<SuiteReport>> {
    if params.n > MAX_N {
        return Err(Error::SizeBound(params.n));
    }
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s, params)).collect();
    }
    Ok(vec![run_one(name, params)?])
}

fn run_one(name: &str, p: &SuiteParams) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut report = match name {
        "oracle" => oracle(p.n, p.degree, p.exec),
        "oracle-sampled" => oracle_sampled(p.n, p.degree, p.samples, p.seed, p.exec),
        "partition" => partition(p.n, p.degree, p.exec),
        "factorization" => factorization(p.n, p.degree, p.exec),
        "symmetry" => symmetry(p.n, p.degree, p.exec),
        "operators" => operators(p.n, p.degree, p.samples, p.seed, p.exec),
        "expansion" => expansion(p.n, p.degree, p.exec),
        "schur-product" => schur_product(p.n, p.degree, p.exec),
        "hall-littlewood" => hall_littlewood(p.n, p.degree, p.exec),
        "negative-example" => negative_example(),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    report.set_elapsed(start.elapsed());
    Ok(report)
}
