//! Rational generating functions in an auxiliary variable t for the
//! κ = 0 monomial functions and κ = 1 characters of types (m,0,0,0) and (m,1,0,0).

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::algebra::{KappaRational, TauSeries, ZPolynomial};
use crate::error::Error;
use crate::operator::apply_l;
use crate::parse::parse_zpolynomial;
use crate::rootsystem::WeightVector;
use crate::solver::{specialize, SolveCache};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// Σ t^m P^{(0)}_{m,0,0,0}, with the m = 0 term equal to 8.
    F0,
    /// Σ t^m P^{(0)}_{m,1,0,0}.
    G0,
    /// Σ t^m P^{(1)}_{m,0,0,0}.
    F1,
    /// Σ t^m P^{(1)}_{m,1,0,0}.
    G1,
}

impl Label {
    pub const ALL: [Label; 4] = [Label::F0, Label::G0, Label::F1, Label::G1];

    pub fn kappa(self) -> i64 {
        match self {
            Label::F0 | Label::G0 => 0,
            Label::F1 | Label::G1 => 1,
        }
    }

    /// Quantum numbers of the t^m coefficient.
    pub fn weight(self, m: i64) -> WeightVector {
        match self {
            Label::F0 | Label::F1 => WeightVector::new(m, 0, 0, 0),
            Label::G0 | Label::G1 => WeightVector::new(m, 1, 0, 0),
        }
    }

    /// Default truncation order.
    pub fn default_order(self) -> usize {
        match self {
            Label::F0 | Label::F1 => 8,
            Label::G0 | Label::G1 => 6,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::F0 => "F0",
            Label::G0 => "G0",
            Label::F1 => "F1",
            Label::G1 => "G1",
        })
    }
}

impl FromStr for Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Label::ALL
            .into_iter()
            .find(|l| l.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown generating function {s:?}")))
    }
}

/// numerator(t) / denominator(t) with polynomial-in-z coefficients, lowest power first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    pub label: Label,
    pub numerator: Vec<ZPolynomial>,
    pub denominator: Vec<ZPolynomial>,
}

const D: [&str; 9] = ["1", "-z1", "z2", "-(z3*z4 - z1)", "z3^2 + z4^2 - 2*z2 - 2", "-(z3*z4 - z1)", "z2", "-z1", "1"];

const N0: [&str; 8] =
    ["8", "-7*z1", "6*z2", "-5*(z3*z4 - z1)", "4*(z3^2 + z4^2 - 2*z2 - 2)", "-3*(z3*z4 - z1)", "2*z2", "-z1"];

const M0: [&str; 9] = [
    "z2 - 4",
    "6*z1 - 3*z3*z4",
    "-8 - 2*z1^2 - 10*z2 - z2^2 + 4*z3^2 + 2*z1*z3*z4 + 4*z4^2",
    "10*z1 + 5*z1*z2 - 3*z1*z3^2 - 4*z3*z4 + z2*z3*z4 - 3*z1*z4^2",
    "8*z2 - 4*z1^2 + 2*z2^2 - z2*z3^2 + 4*z1*z3*z4 - z2*z4^2",
    "-6*z1 - 6*z1*z2 - z3*z4 + z2*z3*z4",
    "8 + 6*z1^2 + 2*z2 - z2^2",
    "-10*z1 + z1*z2",
    "4 - z2",
];

const N1: [&str; 3] = ["1", "0", "-1"];

const G1: [&str; 7] = ["z2", "-z3*z4", "z3^2 + z4^2 - 2*z2 - 1", "-(z3*z4 - z1)", "z2", "-z1", "1"];

fn polys(src: &[&str]) -> Vec<ZPolynomial> {
    src.iter().map(|s| parse_zpolynomial(s).expect("built-in generating function")).collect()
}

pub fn build(label: Label) -> RationalGF {
    let numerator = match label {
        Label::F0 => polys(&N0),
        Label::G0 => polys(&M0),
        Label::F1 => polys(&N1),
        Label::G1 => polys(&G1),
    };
    RationalGF { label, numerator, denominator: polys(&D) }
}

/// Series expansion of the generating function through t^order.
pub fn expand(gf: &RationalGF, order: usize) -> Result<TauSeries, Error> {
    let num = TauSeries::new(gf.numerator.clone(), order);
    let den = TauSeries::new(gf.denominator.clone(), order);
    num.div(&den)
}

/// Coefficients of `[½ L|_κ − (t∂t)² − c·t∂t] F` through t^order, where κ = 0,
/// c = 0 for F0 and κ = 1, c = 6 for F1. Identically zero when F solves its
/// differential equation.
pub fn pde_residual(label: Label, order: usize) -> Result<TauSeries, Error> {
    let linear = match label {
        Label::F0 => 0,
        Label::F1 => 6,
        _ => return Err(Error::InvalidArgument(format!("no differential equation is stated for {label}"))),
    };
    let kappa = BigRational::from_integer(label.kappa().into());
    let series = expand(&build(label), order)?;
    let half = KappaRational::from_rational(&BigRational::new(1.into(), 2.into()));
    let mut coeffs = Vec::with_capacity(order + 1);
    for (k, c) in series.coeffs().iter().enumerate() {
        let k = k as i64;
        let mut r = apply_l(c).substitute(&kappa)?.scale(&half);
        r.add_scaled(c, &KappaRational::integer(-(k * k + linear * k)));
        coeffs.push(r);
    }
    Ok(TauSeries::new(coeffs, order))
}

/// The polynomial the t^m coefficient should equal according to the solver.
pub fn solver_coefficient(label: Label, m: i64, cache: &SolveCache) -> Result<ZPolynomial, Error> {
    if label == Label::F0 && m == 0 {
        return Ok(ZPolynomial::constant(KappaRational::integer(8)));
    }
    let kappa = BigRational::from_integer(label.kappa().into());
    specialize(&*cache.get(label.weight(m))?, &kappa)
}

/// Per-coefficient comparison of the expansion with the solver.
pub fn check_series(label: Label, order: usize, cache: &SolveCache) -> Result<Vec<(usize, bool)>, Error> {
    let series = expand(&build(label), order)?;
    (0..=order).map(|m| Ok((m, series.coeff(m) == &solver_coefficient(label, m as i64, cache)?))).collect()
}
