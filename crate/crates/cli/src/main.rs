//! `cs-d4`: compute and check D4 Calogero–Sutherland eigenpolynomials.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error, 3 pole of a
//! coefficient at the requested κ.

mod verify;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use cs_d4::fixture::{cs_polynomial_to_json, render, zpolynomial_to_json};
use cs_d4::genfun::{build, check_series, expand, pde_residual, Label};
use cs_d4::parse::parse_weight;
use cs_d4::qspace::{hamiltonian_residual, random_generic_point};
use cs_d4::recurrence::expand_product;
use cs_d4::rootsystem::weyl_dimension;
use cs_d4::solver::{solve, specialize, SolveCache};
use cs_d4::{Error, KappaRational, Var, WeightVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "cs-d4", version, about = "Exact eigenpolynomials of the D4 Calogero-Sutherland model")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Golden,
    Eigen,
    Recur,
    Genfun,
    Qspace,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenfunCheck {
    Series,
    Pde,
}

/// `symbolic` or an exact rational such as `1`, `-1/2` or `0.7`.
#[derive(Clone, Debug, PartialEq)]
enum KappaMode {
    Symbolic,
    Value(BigRational),
}

impl FromStr for KappaMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("symbolic") {
            Ok(KappaMode::Symbolic)
        } else {
            parse_exact(s).map(KappaMode::Value)
        }
    }
}

/// Integers, fractions `a/b` and finite decimals, all read exactly.
fn parse_exact(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let bad = || format!("expected an integer, a fraction a/b or a decimal, got {s:?}");
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int}{frac}");
        let num: BigInt = digits.parse().map_err(|_| bad())?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(BigRational::new(num, den));
    }
    let r: BigRational = s.parse().map_err(|_| bad())?;
    Ok(r)
}

fn weight_arg(s: &str) -> Result<WeightVector, String> {
    let m = parse_weight(s).map_err(|e| e.to_string())?;
    m.ensure_dominant().map_err(|e| e.to_string())?;
    Ok(m)
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

fn variable(s: &str) -> Result<Var, String> {
    let n: usize = s.trim_start_matches('z').parse().map_err(|_| format!("expected 1..4, got {s:?}"))?;
    Var::from_number(n).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve for P_m and print it in fixture form, or specialized at a κ value.
    Compute {
        /// Quantum numbers m1,m2,m3,m4 (dominant).
        #[arg(long, value_parser = weight_arg)]
        m: WeightVector,
        /// `symbolic`, or an exact value of κ.
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        kappa: KappaMode,
    },
    /// Run a verification suite and report every check.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest index for the recurrence suite and largest m1+m2+m3+m4 for the eigen suite.
        #[arg(long)]
        max_m: Option<i64>,
        /// Series order for the genfun suite; defaults to 8 for F0/F1 and 6 for G0/G1.
        #[arg(long)]
        order: Option<usize>,
        /// Seed for the random torus points of the qspace suite.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random points per configuration in the qspace suite.
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// Expand a generating function and compare it with the solver or its differential equation.
    Genfun {
        #[arg(long, value_parser = |s: &str| s.parse::<Label>().map_err(|e| e.to_string()))]
        label: Label,
        /// Truncation order; defaults to 8 for F0/F1 and 6 for G0/G1.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = GenfunCheck::Series)]
        check: GenfunCheck,
    },
    /// Finite-difference check of the eigenvalue equation in the angle coordinates.
    Qcheck {
        #[arg(long, value_parser = weight_arg)]
        m: WeightVector,
        #[arg(long, allow_hyphen_values = true)]
        kappa: f64,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        /// Finite-difference step.
        #[arg(long, default_value_t = 1e-4, value_parser = positive)]
        step: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest accepted relative residual.
        #[arg(long, default_value_t = 1e-6, value_parser = positive)]
        tolerance: f64,
    },
    /// Weyl dimension of the irreducible representation with highest weight m.
    Dims {
        #[arg(long, value_parser = weight_arg)]
        m: WeightVector,
    },
    /// Expand z_v P_m in the P basis.
    Recur {
        /// Multiplier index 1..4.
        #[arg(long, value_parser = variable)]
        v: Var,
        #[arg(long, value_parser = weight_arg)]
        m: WeightVector,
    },
}

/// What a command produced: JSON, a text rendering and whether its checks passed.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub passed: bool,
}

fn rational_json(r: &KappaRational) -> Value {
    json!({ "num": r.num().to_string(), "den": r.den().to_string() })
}

fn compute(m: WeightVector, kappa: &KappaMode) -> Result<Report, Error> {
    let p = solve(m)?;
    match kappa {
        KappaMode::Symbolic => {
            Ok(Report { text: format!("{}\n", p.polynomial), json: cs_polynomial_to_json(&p), passed: true })
        }
        KappaMode::Value(k) => {
            let poly = specialize(&p, k)?;
            let eps = KappaRational::from_rational(&p.eigenvalue.value.substitute(k)?);
            Ok(Report {
                text: format!("{poly}\n"),
                json: json!({
                    "m": m.0,
                    "kappa": k.to_string(),
                    "epsilon": rational_json(&eps),
                    "polynomial": zpolynomial_to_json(&poly),
                }),
                passed: true,
            })
        }
    }
}

fn genfun(label: Label, order: Option<usize>, check: GenfunCheck) -> Result<Report, Error> {
    let order = order.unwrap_or(label.default_order());
    let (series, flags): (Vec<_>, Vec<bool>) = match check {
        GenfunCheck::Series => {
            let series = expand(&build(label), order)?;
            let flags = check_series(label, order, &SolveCache::new())?.into_iter().map(|(_, ok)| ok).collect();
            (series.coeffs().to_vec(), flags)
        }
        GenfunCheck::Pde => {
            let residual = pde_residual(label, order)?;
            let flags = residual.coeffs().iter().map(|c| c.is_zero()).collect();
            (residual.coeffs().to_vec(), flags)
        }
    };
    let passed = flags.iter().all(|&b| b);
    let key = if check == GenfunCheck::Series { "matches_solver" } else { "vanishes" };
    let coefficients: Vec<Value> = series
        .iter()
        .zip(&flags)
        .enumerate()
        .map(|(t, (c, ok))| json!({ "t": t, "polynomial": zpolynomial_to_json(c), "text": c.to_string(), key: ok }))
        .collect();
    let text = series
        .iter()
        .zip(&flags)
        .enumerate()
        .map(|(t, (c, ok))| format!("t^{t}: {c}  [{}]\n", if *ok { "ok" } else { "MISMATCH" }))
        .collect::<String>()
        + &format!("{}\n", if passed { "PASS" } else { "FAIL" });
    let check_name = if check == GenfunCheck::Series { "series" } else { "pde" };
    Ok(Report {
        json: json!({ "label": label.to_string(), "order": order, "check": check_name, "coefficients": coefficients, "passed": passed }),
        text,
        passed,
    })
}

fn qcheck(m: WeightVector, kappa: f64, samples: usize, step: f64, seed: u64, tolerance: f64) -> Result<Report, Error> {
    if !kappa.is_finite() {
        return Err(Error::InvalidArgument(format!("kappa must be finite, got {kappa}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut worst = 0f64;
    let mut signs = Vec::new();
    for _ in 0..samples {
        let p = random_generic_point(&mut rng);
        let r = hamiltonian_residual(m, kappa, &p, step)?;
        let q: Vec<f64> = p.q.iter().map(|c| c.re).collect();
        worst = worst.max(r.residual);
        signs.push(r.sign);
        text += &format!("q = {q:?}: residual {:.3e} sign {}\n", r.residual, r.sign);
        rows.push(json!({ "q": q, "residual": r.residual, "sign": r.sign }));
    }
    let consistent = signs.windows(2).all(|w| w[0] == w[1]);
    let passed = worst < tolerance && consistent;
    text += &format!("max residual {worst:.3e}, tolerance {tolerance:.0e}: {}\n", if passed { "PASS" } else { "FAIL" });
    Ok(Report {
        json: json!({
            "m": m.0,
            "kappa": kappa,
            "step": step,
            "seed": seed,
            "tolerance": tolerance,
            "samples": rows,
            "max_residual": worst,
            "consistent_sign": consistent,
            "passed": passed,
        }),
        text,
        passed,
    })
}

fn dims(m: WeightVector) -> Result<Report, Error> {
    let d = weyl_dimension(m)?;
    Ok(Report { json: json!({ "m": m.0, "dimension": d }), text: format!("{d}\n"), passed: true })
}

fn recur(v: Var, m: WeightVector) -> Result<Report, Error> {
    let exp = expand_product(v, m, &SolveCache::new())?;
    let terms: Vec<Value> = exp
        .terms
        .iter()
        .map(|(mp, c)| json!({ "mp": mp.0, "num": c.num().to_string(), "den": c.den().to_string() }))
        .collect();
    let text = exp.terms.iter().map(|(mp, c)| format!("P{mp}: {c}\n")).collect();
    Ok(Report { json: json!({ "v": v.number(), "m": m.0, "terms": terms }), text, passed: true })
}

fn run(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Command::Compute { m, kappa } => compute(*m, kappa),
        Command::Verify { suite, max_m, order, seed, samples } => {
            let cfg = verify::Config { max_m: *max_m, order: *order, seed: *seed, samples: *samples };
            verify::run(verify::suites(*suite), &cfg)
        }
        Command::Genfun { label, order, check } => genfun(*label, *order, *check),
        Command::Qcheck { m, kappa, samples, step, seed, tolerance } => {
            qcheck(*m, *kappa, *samples, *step, *seed, *tolerance)
        }
        Command::Dims { m } => dims(*m),
        Command::Recur { v, m } => recur(*v, *m),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::PoleAtKappa { .. } => 3,
        Error::NotDominant(_) | Error::InvalidArgument(_) | Error::InvalidPermutation(_) | Error::Parse(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => print!("{}", render(&report.json)),
                Format::Text => print!("{}", report.text),
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if let Error::PoleAtKappa { mu, kappa } = &e {
                let mu = mu.map(|m| m.0);
                let body = json!({ "error": "pole", "kappa": kappa, "mu": mu, "message": e.to_string() });
                if cli.format == Format::Json {
                    print!("{}", render(&body));
                }
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
