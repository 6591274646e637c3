//! Verification suites behind `cs-d4 verify`.

use cs_d4::fixture::reference_corpus;
use cs_d4::genfun::{check_series, pde_residual, Label};
use cs_d4::qspace::{hamiltonian_residual, random_generic_point, special_kappa_identity};
use cs_d4::recurrence::{dominant_weights_up_to, ladder_next, recover_m1, verify_closed_forms};
use cs_d4::rootsystem::weyl_dimension;
use cs_d4::solver::{solve, specialize, verify_eigen, SolveCache};
use cs_d4::{Error, WeightVector};
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::{Report, Suite};

pub struct Config {
    pub max_m: Option<i64>,
    pub order: Option<usize>,
    pub seed: u64,
    pub samples: usize,
}

struct Check {
    suite: &'static str,
    name: String,
    passed: bool,
    detail: String,
}

type Checks = Vec<Check>;

fn push(out: &mut Checks, suite: &'static str, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
    out.push(Check { suite, name: name.into(), passed, detail: detail.into() });
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn suites(s: Suite) -> Vec<Suite> {
    match s {
        Suite::All => vec![Suite::Golden, Suite::Eigen, Suite::Recur, Suite::Genfun, Suite::Qspace],
        one => vec![one],
    }
}

fn golden(out: &mut Checks) -> Result<(), Error> {
    for e in reference_corpus()? {
        let p = solve(e.m)?;
        let got = match e.kind.kappa() {
            None => p.polynomial,
            Some(k) => specialize(&p, &rat(k))?,
        };
        let passed = got == e.polynomial;
        let detail = if passed { "exact".to_string() } else { format!("solver gives {got}") };
        push(out, "golden", format!("{} P{}", e.kind, e.m), passed, detail);
    }
    Ok(())
}

fn eigen(out: &mut Checks, max_total: i64) -> Result<(), Error> {
    let z = [8, 28, 8, 8].map(rat);
    for m in dominant_weights_up_to(max_total) {
        let p = solve(m)?;
        push(
            out,
            "eigen",
            format!("L P{m} = eps P{m}"),
            verify_eigen(&p),
            format!("{} cone terms", p.coefficients.len()),
        );
        let value = specialize(&p, &rat(1))?.eval_rational(&z, &rat(1))?;
        let dim = weyl_dimension(m)?;
        push(
            out,
            "eigen",
            format!("dimension {m}"),
            value == rat(dim as i64),
            format!("character {value}, Weyl {dim}"),
        );
    }
    Ok(())
}

fn recur(out: &mut Checks, max_m: i64) -> Result<(), Error> {
    let cache = SolveCache::new();
    for c in verify_closed_forms(max_m, max_m.min(3), &cache)?.checks {
        push(out, "recur", format!("{} m={}", c.family, c.m), c.passed, c.detail);
    }
    for m in 1..max_m {
        let ok = ladder_next(m, &cache)? == *cache.get(WeightVector::new(m + 1, 0, 0, 0))?;
        push(out, "recur", format!("ladder m={m}"), ok, format!("P({},0,0,0)", m + 1));
    }
    for m in 1..=max_m.min(3) {
        let ok = recover_m1(m, &cache)? == *cache.get(WeightVector::new(m, 1, 0, 0))?;
        push(out, "recur", format!("recovery m={m}"), ok, format!("P({m},1,0,0)"));
    }
    Ok(())
}

fn genfun(out: &mut Checks, order: Option<usize>) -> Result<(), Error> {
    let cache = SolveCache::new();
    for label in Label::ALL {
        let order = order.unwrap_or(label.default_order());
        for (m, ok) in check_series(label, order, &cache)? {
            push(out, "genfun", format!("{label} t^{m}"), ok, "series coefficient against solver");
        }
    }
    for label in [Label::F0, Label::F1] {
        let order = order.unwrap_or(6);
        let ok = pde_residual(label, order)?.is_zero();
        push(out, "genfun", format!("{label} differential equation"), ok, format!("residual through t^{order}"));
    }
    Ok(())
}

fn qspace(out: &mut Checks, seed: u64, samples: usize) -> Result<(), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut signs = Vec::new();
    for m in [WeightVector::new(1, 0, 0, 0), WeightVector::new(0, 1, 0, 0), WeightVector::new(1, 1, 0, 0)] {
        for kappa in [0.7, 1.3] {
            let mut worst = 0f64;
            for _ in 0..samples {
                let r = hamiltonian_residual(m, kappa, &random_generic_point(&mut rng), 1e-4)?;
                worst = worst.max(r.residual);
                signs.push(r.sign);
            }
            push(out, "qspace", format!("residual P{m} kappa={kappa}"), worst < 1e-6, format!("max {worst:.3e}"));
        }
    }
    let consistent = signs.windows(2).all(|w| w[0] == w[1]);
    let first = signs.first().map_or("none".to_string(), |s| s.to_string());
    push(out, "qspace", "sign convention", consistent, format!("sign {first} at every point: {consistent}"));
    for (n, tol) in [(1u32, 1e-10), (2, 1e-8)] {
        let mut worst = 0f64;
        for _ in 0..samples {
            worst = worst.max(special_kappa_identity(n, &random_generic_point(&mut rng))?.relative_error);
        }
        push(out, "qspace", format!("special coupling n={n}"), worst < tol, format!("max relative error {worst:.3e}"));
    }
    Ok(())
}

pub fn run(suites: Vec<Suite>, cfg: &Config) -> Result<Report, Error> {
    if matches!(cfg.max_m, Some(m) if m < 1) {
        return Err(Error::InvalidArgument("--max-m must be at least 1".into()));
    }
    let mut checks = Checks::new();
    for s in suites {
        match s {
            Suite::Golden => golden(&mut checks)?,
            Suite::Eigen => eigen(&mut checks, cfg.max_m.unwrap_or(3))?,
            Suite::Recur => recur(&mut checks, cfg.max_m.unwrap_or(6))?,
            Suite::Genfun => genfun(&mut checks, cfg.order)?,
            Suite::Qspace => qspace(&mut checks, cfg.seed, cfg.samples.max(1))?,
            Suite::All => unreachable!("expanded by suites()"),
        }
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let text: String = checks
        .iter()
        .map(|c| format!("{} [{}] {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.suite, c.name, c.detail))
        .chain(std::iter::once(format!("{} passed, {failed} failed\n", checks.len() - failed)))
        .collect();
    let json = json!({
        "checks": checks
            .iter()
            .map(|c| json!({ "suite": c.suite, "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect::<Vec<_>>(),
        "passed": checks.len() - failed,
        "failed": failed,
    });
    Ok(Report { json, text, passed: failed == 0 })
}
