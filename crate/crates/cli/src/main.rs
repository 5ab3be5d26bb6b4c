use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;

use permac::algebra::{parse_rational, xpoly_from_json, xpoly_to_json, QtRational, XPoly};
use permac::bases::{expand_in_basis, BasisId, ExpansionResult, Family};
use permac::exec::Exec;
use permac::fillings::{enumerate_naf, macdonald_combinatorial, macdonald_specialized};
use permac::operators::macdonald_recursive;
use permac::shapes::{Composition, Permutation};
use permac::verify::{run_suite, SuiteParams};
use permac::Error;

#[derive(Parser)]
#[command(name = "permac", version, about = "Permuted-basement non-symmetric Macdonald polynomials")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; 1 runs sequentially, 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Combinatorial,
    Recursive,
}

#[derive(Subcommand)]
enum Cmd {
    /// E^σ_λ(x;q,t), optionally at exact values of q and t.
    Compute {
        #[arg(long)]
        shape: Composition,
        /// Defaults to the longest permutation.
        #[arg(long)]
        basement: Option<Permutation>,
        #[arg(long, value_parser = parse_rational_arg)]
        q: Option<num_rational::BigRational>,
        #[arg(long, value_parser = parse_rational_arg)]
        t: Option<num_rational::BigRational>,
        #[arg(long, value_enum, default_value_t = Method::Combinatorial)]
        method: Method,
    },
    /// Non-attacking fillings with their statistics.
    Fillings {
        #[arg(long)]
        shape: Composition,
        #[arg(long)]
        basement: Option<Permutation>,
    },
    /// Expand a polynomial in a named basis.
    Expand {
        /// Family of the input polynomial (with --shape).
        #[arg(long, requires = "shape")]
        family: Option<String>,
        #[arg(long)]
        shape: Option<Composition>,
        /// Basement of the input family, for atom and patom_t.
        #[arg(long)]
        family_basement: Option<Permutation>,
        /// `FACTOR-times-FACTOR`, each factor `[family-]parts`; a bare
        /// composition means E_λ(x;1,0).
        #[arg(long)]
        product_schur: Option<String>,
        /// Polynomial JSON file, `-` for stdin.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, default_value = "atom")]
        basis: String,
        #[arg(long)]
        basement: Option<Permutation>,
        /// Exit 1 unless every coefficient is a polynomial in q,t with
        /// non-negative coefficients.
        #[arg(long)]
        assert_positive: bool,
    },
    /// Run identity-checking suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        degree: u32,
        /// Instance count for sampled suites.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

fn parse_rational_arg(s: &str) -> Result<num_rational::BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

enum Failure {
    Assertion(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.jobs == 1 { Exec::Sequential } else { Exec::Parallel };
    match exec.install(cli.jobs, || run(&cli, exec)) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Assertion(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn basement_or_longest(b: &Option<Permutation>, n: usize) -> Result<Permutation, Failure> {
    let b = b.clone().unwrap_or_else(|| Permutation::longest(n));
    if b.len() != n {
        return Err(Error::LengthMismatch { left: n, right: b.len() }.into());
    }
    Ok(b)
}

fn render_poly(f: &XPoly, format: Format) -> String {
    match format {
        Format::Text => format!("{f}\n"),
        Format::Json => format!("{}\n", xpoly_to_json(f)),
    }
}

fn run(cli: &Cli, exec: Exec) -> Result<String, Failure> {
    match &cli.cmd {
        Cmd::Compute { shape, basement, q, t, method } => {
            let sigma = basement_or_longest(basement, shape.len())?;
            let f = match method {
                Method::Combinatorial => macdonald_specialized(shape, &sigma, q.as_ref(), t.as_ref())?,
                Method::Recursive => macdonald_recursive(shape, &sigma)?.specialize(q.as_ref(), t.as_ref())?,
            };
            Ok(render_poly(&f, cli.format))
        }
        Cmd::Fillings { shape, basement } => {
            let sigma = basement_or_longest(basement, shape.len())?;
            let naf = enumerate_naf(shape, &sigma)?;
            Ok(match cli.format {
                Format::Json => {
                    let list: Vec<_> = naf.iter().map(|f| f.to_json()).collect();
                    format!("{}\n", serde_json::json!({ "fillings": list, "count": naf.len() }))
                }
                Format::Text => {
                    let mut out = String::new();
                    for f in &naf {
                        out.push_str(&format!("{f}maj {} inv {} coinv {}\n\n", f.maj(), f.inv(), f.coinv()));
                    }
                    out.push_str(&format!("count: {}\n", naf.len()));
                    out
                }
            })
        }
        Cmd::Expand { family, shape, family_basement, product_schur, input, basis, basement, assert_positive } => {
            let f = match (family, shape, product_schur, input) {
                (Some(fam), Some(s), None, None) => family_element(fam, s, family_basement.as_ref())?,
                (None, None, Some(factors), None) => product(factors, family_basement.as_ref())?,
                (None, None, None, Some(path)) => read_poly(path)?,
                _ => {
                    return Err(Failure::Usage("give exactly one of --family/--shape, --product-schur, --input".into()))
                }
            };
            let n = f.n();
            let mut basement = basement.clone();
            if basis == "patom_t" && basement.is_none() {
                basement = Some(Permutation::identity(n));
            }
            let basis = BasisId::new(Family::parse(basis)?, basement)?;
            let r = expand_in_basis(&f, &basis, exec)?;
            let out = match cli.format {
                Format::Json => format!("{}\n", r.to_json()),
                Format::Text => format!("{r}\n"),
            };
            if *assert_positive && !is_positive(&r) {
                return Err(Failure::Assertion(out));
            }
            Ok(out)
        }
        Cmd::Verify { suite, n, degree, samples } => {
            let params = SuiteParams { n: *n, degree: *degree, seed: cli.seed, samples: *samples, exec };
            let reports = run_suite(suite, &params)?;
            let out = match cli.format {
                Format::Json => {
                    let list: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
                    format!("{}\n", serde_json::to_string_pretty(&list).expect("serializable"))
                }
                Format::Text => reports.iter().map(|r| r.to_string()).collect(),
            };
            if reports.iter().all(|r| r.passed()) {
                Ok(out)
            } else {
                Err(Failure::Assertion(out))
            }
        }
    }
}

fn is_positive(r: &ExpansionResult) -> bool {
    r.coefficients().iter().all(|(_, c): &(Composition, QtRational)| {
        c.is_polynomial() && c.numerator().terms().iter().all(|(k, _, _)| !k.is_negative())
    })
}

/// `macdonald` (the default) is `E_λ(x;1,0)` with the longest basement.
fn family_element(name: &str, shape: &Composition, basement: Option<&Permutation>) -> Result<XPoly, Failure> {
    if name == "macdonald" {
        let one = num_rational::BigRational::from_integer(1.into());
        let zero = num_rational::BigRational::from_integer(0.into());
        let sigma = basement.cloned().unwrap_or_else(|| Permutation::longest(shape.len()));
        return Ok(macdonald_specialized(shape, &sigma, Some(&one), Some(&zero))?);
    }
    if name == "macdonald-full" {
        let sigma = basement.cloned().unwrap_or_else(|| Permutation::longest(shape.len()));
        return Ok(macdonald_combinatorial(shape, &sigma)?);
    }
    let family = Family::parse(name)?;
    let basement = if family.is_symmetric() || family == Family::Key { None } else { basement.cloned() };
    Ok(BasisId::new(family, basement)?.element(shape)?)
}

fn product(factors: &str, basement: Option<&Permutation>) -> Result<XPoly, Failure> {
    let mut acc: Option<XPoly> = None;
    for factor in factors.split("-times-") {
        let (name, parts) = match factor.rsplit_once('-') {
            Some((name, parts)) => (name, parts),
            None => ("macdonald", factor),
        };
        let shape: Composition = parts.parse()?;
        let f = family_element(name, &shape, basement)?;
        acc = Some(match acc {
            None => f,
            Some(a) => a.mul(&f)?,
        });
    }
    acc.ok_or_else(|| Failure::Usage("empty product".into()))
}

fn read_poly(path: &str) -> Result<XPoly, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    Ok(xpoly_from_json(&v)?)
}
