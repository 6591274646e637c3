//! Products z_v · P_m expanded back in the P basis, closed-form recurrence
//! coefficients and the z1 ladder.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::algebra::{Exponent, KappaRational, Var, ZPolynomial};
use crate::error::Error;
use crate::operator::commutator_with;
use crate::parse::parse_kappa_rational;
use crate::rootsystem::{rho_grade, Triality, WeightVector};
use crate::solver::{CSPolynomial, SolveCache};

/// Weights of the representation with character z_v, as quantum-number shifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftTable {
    pub variable: Var,
    pub shifts: Vec<WeightVector>,
}

impl ShiftTable {
    pub fn contains(&self, w: WeightVector) -> bool {
        self.shifts.contains(&w)
    }
}

fn with_negatives(half: &[[i64; 4]]) -> Vec<WeightVector> {
    half.iter().flat_map(|&w| [WeightVector(w), -WeightVector(w)]).collect()
}

pub fn shift_table(v: Var) -> ShiftTable {
    let shifts = match v {
        Var::Z1 => with_negatives(&[[1, 0, 0, 0], [1, -1, 0, 0], [0, 1, -1, -1], [0, 0, 1, -1]]),
        Var::Z3 => with_negatives(&[[0, 0, 1, 0], [0, -1, 1, 0], [-1, 1, 0, -1], [1, 0, 0, -1]]),
        Var::Z4 => with_negatives(&[[0, 0, 0, 1], [0, -1, 0, 1], [-1, 1, -1, 0], [1, 0, -1, 0]]),
        Var::Z2 => {
            let mut s = with_negatives(&[
                [0, 1, 0, 0],
                [-2, 1, 0, 0],
                [0, 1, -2, 0],
                [0, 1, 0, -2],
                [-1, 2, -1, -1],
                [1, 1, -1, -1],
                [-1, 1, 1, -1],
                [-1, 1, -1, 1],
                [1, 0, 1, -1],
                [1, 0, -1, 1],
                [-1, 0, 1, 1],
                [-1, 1, -1, -1],
            ]);
            s.push(WeightVector::ZERO);
            s
        }
    };
    ShiftTable { variable: v, shifts }
}

/// `z_v P_m = Σ terms[m'] P_{m'}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceExpansion {
    pub variable: Var,
    pub m: WeightVector,
    pub terms: BTreeMap<WeightVector, KappaRational>,
}

impl RecurrenceExpansion {
    /// Σ terms[m'] P_{m'}, which must equal z_v P_m.
    pub fn reconstruct(&self, cache: &SolveCache) -> Result<ZPolynomial, Error> {
        let mut out = ZPolynomial::zero();
        for (mp, c) in &self.terms {
            out.add_scaled(&cache.get(*mp)?.polynomial, c);
        }
        Ok(out)
    }

    /// Image under a triality acting on the multiplier, m and every m'.
    pub fn permuted(&self, sigma: Triality) -> RecurrenceExpansion {
        RecurrenceExpansion {
            variable: Var::ALL[sigma.slot(self.variable.index())],
            m: sigma.permute(self.m),
            terms: self.terms.iter().map(|(mp, c)| (sigma.permute(*mp), c.clone())).collect(),
        }
    }
}

fn leading_exponent(p: &ZPolynomial) -> Option<Exponent> {
    p.terms().map(|(e, _)| *e).max_by_key(|e| (rho_grade(*e), *e))
}

/// Expands z_v P_m in the P basis by peeling off leading monomials.
///
/// Every P_{m'} is unitriangular with leading monomial z^{m'} in the grading
/// by (ρ, ·), so the top monomial of the remainder fixes the next m'.
pub fn expand_product(v: Var, m: WeightVector, cache: &SolveCache) -> Result<RecurrenceExpansion, Error> {
    m.ensure_dominant()?;
    let table = shift_table(v);
    let mut rem = cache.get(m)?.polynomial.mul_var(v);
    let mut terms = BTreeMap::new();
    while let Some(e) = leading_exponent(&rem) {
        let mp = WeightVector::from_exponent(e);
        if !table.contains(mp - m) {
            return Err(Error::ResidualNonzero { v: v.number(), m, exponent: e });
        }
        let c = rem.coeff(&e);
        rem.add_scaled(&cache.get(mp)?.polynomial, &-c.clone());
        terms.insert(mp, c);
    }
    Ok(RecurrenceExpansion { variable: v, m, terms })
}

/// Printed closed-form recurrence coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosedForm {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    K,
    P,
    Q,
    R,
    S,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 13] = [
        ClosedForm::A,
        ClosedForm::B,
        ClosedForm::C,
        ClosedForm::D,
        ClosedForm::E,
        ClosedForm::F,
        ClosedForm::G,
        ClosedForm::H,
        ClosedForm::K,
        ClosedForm::P,
        ClosedForm::Q,
        ClosedForm::R,
        ClosedForm::S,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::A => "a",
            ClosedForm::B => "b",
            ClosedForm::C => "c",
            ClosedForm::D => "d",
            ClosedForm::E => "e",
            ClosedForm::F => "f",
            ClosedForm::G => "g",
            ClosedForm::H => "h",
            ClosedForm::K => "k",
            ClosedForm::P => "p",
            ClosedForm::Q => "q",
            ClosedForm::R => "r",
            ClosedForm::S => "s",
        }
    }

    /// Formula in `m` and `k`.
    fn template(self) -> &'static str {
        match self {
            ClosedForm::A => "m*(m+2*k)*(m-1+4*k)*(m-1+6*k)/((m-1+k)*(m-1+3*k)*(m+3*k)*(m+5*k))",
            ClosedForm::B => "m*(m-1+4*k)/((m-1+k)*(m+3*k))",
            ClosedForm::C => "m*(m-1+2*k)/((m+k)*(m-1+k))",
            ClosedForm::D => {
                "2*m*(m+k)*(m-1+3*k)*(m-1+4*k)*(2*m-1+6*k)/((m-1+k)*(m-1+2*k)*(m+3*k)*(2*m-1+5*k)*(2*m+5*k))"
            }
            ClosedForm::E | ClosedForm::G => "m*(m-1+3*k)/((m-1+k)*(m+2*k))",
            ClosedForm::F => {
                "m*(m-1)*(m-2+2*k)*(m+2*k)*(m-1+4*k)*(m-1+5*k)/((m-2+k)*(m-1+k)^2*(m-1+3*k)*(m+3*k)*(m+4*k))"
            }
            ClosedForm::H => "4*(-3*k^3+5*k^2+(6*m-1)*k+(m^2-1))/((m-1+k)*(1+3*k)*(m+1+5*k))",
            ClosedForm::K => {
                "4*m*(m+k)^2*(m+2*k)*(m-1+3*k)*(m-1+4*k)^2*(2*m-1+4*k)*(m-1+5*k)*(2*m-1+6*k)\
                 /((m-1+k)*(m-1+2*k)^2*(m+3*k)^2*(m+4*k)*(2*m-2+5*k)*(2*m-1+5*k)^2*(2*m+5*k))"
            }
            ClosedForm::P => "m*(m-1+2*k)/((m-1+k)*(m+k))",
            ClosedForm::Q => {
                "2*m*(m-1)*(m+k)^2*(m-2+2*k)*(m-1+3*k)^3*(2*m-1+6*k)\
                 /((m-2+k)*(m-1+k)^2*(m-1+2*k)^2*(m+2*k)^2*(2*m-1+5*k)*(2*m+5*k))"
            }
            ClosedForm::R => "m*(m+k)*(m-1+3*k)*(m-1+4*k)/((m-1+k)*(m-1+2*k)*(m+2*k)*(m+3*k))",
            ClosedForm::S => {
                "-4*((-1+5*m^2-4*m^4)+(2+25*m-7*m^2-40*m^3+2*m^4)*k+(20-35*m-123*m^2+20*m^3)*k^2\
                 +(-22-115*m+63*m^2)*k^3+(-19+65*m)*k^4+20*k^5)\
                 /((k+1)*(m-1+k)*(m+1+4*k)*(2*m-1+5*k)*(2*m+1+5*k))"
            }
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_m", self.name())
    }
}

impl FromStr for ClosedForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.trim().trim_end_matches("_m");
        ClosedForm::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown coefficient {s:?}")))
    }
}

/// The closed form of `name` at index m ≥ 1, as a function of κ.
pub fn closed_form(name: ClosedForm, m: i64) -> Result<KappaRational, Error> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!("closed forms are defined for m >= 1, got {m}")));
    }
    let text = name.template().replace('m', &format!("({m})"));
    Ok(parse_kappa_rational(&text)?)
}

/// The closed form at κ = 1 as a rational function of m, returned in the
/// [`KappaRational`] variable.
pub fn closed_form_at_kappa_one(name: ClosedForm) -> Result<KappaRational, Error> {
    let text = name.template().replace('k', "(1)").replace('m', "k");
    Ok(parse_kappa_rational(&text)?)
}

/// One comparison performed by [`verify_closed_forms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub family: String,
    pub m: i64,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, family: &str, m: i64, passed: bool, detail: String) {
        self.checks.push(Check { family: family.to_string(), m, passed, detail });
    }
}

struct Relation {
    family: &'static str,
    v: Var,
    base: [i64; 4],
    expected: Vec<([i64; 4], KappaRational)>,
}

fn known_relations(m: i64) -> Result<Vec<Relation>, Error> {
    use ClosedForm as Cf;
    let cf = |n| closed_form(n, m);
    let one = KappaRational::one;
    let (a, b, c, d, e) = (cf(Cf::A)?, cf(Cf::B)?, cf(Cf::C)?, cf(Cf::D)?, cf(Cf::E)?);
    let (f, g, h) = (cf(Cf::F)?, cf(Cf::G)?, cf(Cf::H)?);
    let (k, p, q, r, s) = (cf(Cf::K)?, cf(Cf::P)?, cf(Cf::Q)?, cf(Cf::R)?, cf(Cf::S)?);
    let rel = |family, v, base, expected| Relation { family, v, base, expected };
    use Var::*;
    Ok(vec![
        rel(
            "a,c: z1 P(m,0,0,0)",
            Z1,
            [m, 0, 0, 0],
            vec![([m + 1, 0, 0, 0], one()), ([m - 1, 0, 0, 0], a.clone()), ([m - 1, 1, 0, 0], c.clone())],
        ),
        rel(
            "a,c: z3 P(0,0,m,0)",
            Z3,
            [0, 0, m, 0],
            vec![([0, 0, m + 1, 0], one()), ([0, 0, m - 1, 0], a.clone()), ([0, 1, m - 1, 0], c.clone())],
        ),
        rel(
            "a,c: z4 P(0,0,0,m)",
            Z4,
            [0, 0, 0, m],
            vec![([0, 0, 0, m + 1], one()), ([0, 0, 0, m - 1], a), ([0, 1, 0, m - 1], c)],
        ),
        rel("b: z1 P(0,0,m,0)", Z1, [0, 0, m, 0], vec![([1, 0, m, 0], one()), ([0, 0, m - 1, 1], b.clone())]),
        rel("b: z1 P(0,0,0,m)", Z1, [0, 0, 0, m], vec![([1, 0, 0, m], one()), ([0, 0, 1, m - 1], b.clone())]),
        rel("b: z3 P(m,0,0,0)", Z3, [m, 0, 0, 0], vec![([m, 0, 1, 0], one()), ([m - 1, 0, 0, 1], b.clone())]),
        rel("b: z3 P(0,0,0,m)", Z3, [0, 0, 0, m], vec![([0, 0, 1, m], one()), ([1, 0, 0, m - 1], b.clone())]),
        rel("b: z4 P(m,0,0,0)", Z4, [m, 0, 0, 0], vec![([m, 0, 0, 1], one()), ([m - 1, 0, 1, 0], b.clone())]),
        rel("b: z4 P(0,0,m,0)", Z4, [0, 0, m, 0], vec![([0, 0, m, 1], one()), ([1, 0, m - 1, 0], b)]),
        rel(
            "d,e: z1 P(0,m,0,0)",
            Z1,
            [0, m, 0, 0],
            vec![([1, m, 0, 0], one()), ([1, m - 1, 0, 0], d.clone()), ([0, m - 1, 1, 1], e.clone())],
        ),
        rel(
            "d,e: z3 P(0,m,0,0)",
            Z3,
            [0, m, 0, 0],
            vec![([0, m, 1, 0], one()), ([0, m - 1, 1, 0], d.clone()), ([1, m - 1, 0, 1], e.clone())],
        ),
        rel(
            "d,e: z4 P(0,m,0,0)",
            Z4,
            [0, m, 0, 0],
            vec![([0, m, 0, 1], one()), ([0, m - 1, 0, 1], d), ([1, m - 1, 1, 0], e)],
        ),
        rel(
            "f,g,h: z2 P(m,0,0,0)",
            Z2,
            [m, 0, 0, 0],
            vec![
                ([m, 1, 0, 0], one()),
                ([m - 2, 1, 0, 0], f.clone()),
                ([m - 1, 0, 1, 1], g.clone()),
                ([m, 0, 0, 0], h.clone()),
            ],
        ),
        rel(
            "f,g,h: z2 P(0,0,m,0)",
            Z2,
            [0, 0, m, 0],
            vec![
                ([0, 1, m, 0], one()),
                ([0, 1, m - 2, 0], f.clone()),
                ([1, 0, m - 1, 1], g.clone()),
                ([0, 0, m, 0], h.clone()),
            ],
        ),
        rel(
            "f,g,h: z2 P(0,0,0,m)",
            Z2,
            [0, 0, 0, m],
            vec![([0, 1, 0, m], one()), ([0, 1, 0, m - 2], f), ([1, 0, 1, m - 1], g), ([0, 0, 0, m], h)],
        ),
        rel(
            "k,p,q,r,s: z2 P(0,m,0,0)",
            Z2,
            [0, m, 0, 0],
            vec![
                ([0, m + 1, 0, 0], one()),
                ([0, m - 1, 0, 0], k),
                ([1, m - 1, 1, 1], p),
                ([1, m - 2, 1, 1], q),
                ([2, m - 1, 0, 0], r.clone()),
                ([0, m - 1, 2, 0], r.clone()),
                ([0, m - 1, 0, 2], r),
                ([0, m, 0, 0], s),
            ],
        ),
    ])
}

fn describe(terms: &BTreeMap<WeightVector, KappaRational>) -> String {
    let parts: Vec<String> = terms.iter().map(|(mp, c)| format!("{mp}: {c}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Checks every known recurrence family for 1 ≤ m ≤ max_m, the triality
/// identities between expansion coefficients for all dominant m with
/// |m| ≤ `triality_max`, and the κ = 1 limit of every closed form.
pub fn verify_closed_forms(max_m: i64, triality_max: i64, cache: &SolveCache) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::default();
    let kappa_one = BigRational::from_integer(1.into());

    for m in 1..=max_m {
        for rel in known_relations(m)? {
            let expected: BTreeMap<WeightVector, KappaRational> = rel
                .expected
                .into_iter()
                .map(|(mp, c)| (WeightVector(mp), c))
                .filter(|(mp, c)| mp.is_dominant() && !c.is_zero())
                .collect();
            let got = expand_product(rel.v, WeightVector(rel.base), cache)?;
            let passed = got.terms == expected;
            let detail = if passed {
                format!("{} terms", expected.len())
            } else {
                format!("expected {} got {}", describe(&expected), describe(&got.terms))
            };
            report.push(rel.family, m, passed, detail);

            if rel.family.starts_with("a,c") {
                let bad: Vec<String> = got
                    .terms
                    .iter()
                    .filter(|(_, c)| c.substitute(&kappa_one).ok() != Some(kappa_one.clone()))
                    .map(|(mp, c)| format!("{mp}: {c}"))
                    .collect();
                report.push(
                    &format!("kappa=1 limit of {}", rel.family),
                    m,
                    bad.is_empty(),
                    if bad.is_empty() { "all coefficients are 1".into() } else { bad.join(", ") },
                );
            }
        }
    }
    // As rational functions of m; f_m and q_m are 0/0 at m = 1 once κ = 1 is set first.
    for name in ClosedForm::ALL {
        let value = closed_form_at_kappa_one(name)?;
        report.push(&format!("kappa=1 limit of {name}"), 0, value.is_one(), format!("{value} (in m)"));
    }

    for m in dominant_weights_up_to(triality_max) {
        for v in Var::ALL {
            let base = expand_product(v, m, cache)?;
            for sigma in Triality::all().into_iter().skip(1) {
                let image = base.permuted(sigma);
                let direct = expand_product(image.variable, image.m, cache)?;
                let passed = direct == image;
                report.push(
                    "triality of expansion coefficients",
                    m.total(),
                    passed,
                    format!("z{} P{} under {:?}", v.number(), m, sigma),
                );
            }
        }
    }
    Ok(report)
}

/// Dominant weights with m1 + m2 + m3 + m4 ≤ n, in lexicographic order.
pub fn dominant_weights_up_to(n: i64) -> Vec<WeightVector> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            for c in 0..=n - a - b {
                for d in 0..=n - a - b - c {
                    out.push(WeightVector::new(a, b, c, d));
                }
            }
        }
    }
    out
}

/// P_{m+1,0,0,0} from P_{m,0,0,0} and P_{m−1,0,0,0} by the commutator ladder
/// `P_{m+1} = [L,z1] P_m / (4(m+κ)) − (1+4κ) z1 P_m / (2(m+κ)) + β_m P_{m−1}`.
pub fn ladder_step(m: i64, current: &ZPolynomial, previous: &ZPolynomial) -> Result<ZPolynomial, Error> {
    if m < 0 {
        return Err(Error::InvalidArgument(format!("ladder index must be nonnegative, got {m}")));
    }
    let r = |s: String| parse_kappa_rational(&s).map_err(Error::from);
    let mut out = commutator_with(Var::Z1, current).scale(&r(format!("1/(4*({m}+k))"))?);
    out.add_scaled(&current.mul_var(Var::Z1), &r(format!("-(1+4*k)/(2*({m}+k))"))?);
    if m >= 1 {
        let beta = r(format!("{m}*({m}+2*k)*({m}-1+4*k)*({m}-1+6*k)/(({m}-1+k)*({m}-1+3*k)*({m}+k)*({m}+3*k))"))?;
        out.add_scaled(previous, &beta);
    }
    Ok(out)
}

/// Ladder step with P_m and P_{m−1} taken from the solver.
pub fn ladder_next(m: i64, cache: &SolveCache) -> Result<CSPolynomial, Error> {
    let current = cache.get(WeightVector::new(m, 0, 0, 0))?.polynomial.clone();
    let previous = cache.polynomial_or_zero(WeightVector::new(m - 1, 0, 0, 0))?;
    let next = ladder_step(m, &current, &previous)?;
    CSPolynomial::from_polynomial(WeightVector::new(m + 1, 0, 0, 0), &next)
}

/// P_{m,0,0,0} for 0 ≤ m ≤ max by the ladder alone, starting from P_0 = 1.
pub fn ladder_sequence(max: i64) -> Result<Vec<ZPolynomial>, Error> {
    let mut seq = vec![ZPolynomial::one()];
    let mut previous = ZPolynomial::zero();
    for m in 0..max {
        let next = ladder_step(m, &seq[m as usize], &previous)?;
        previous = seq[m as usize].clone();
        seq.push(next);
    }
    Ok(seq)
}

/// P_{m,1,0,0} from `c_{m+1} P_{m,1,0,0} = z1 P_{m+1,0,0,0} − P_{m+2,0,0,0} − a_{m+1} P_{m,0,0,0}`.
pub fn recover_m1(m: i64, cache: &SolveCache) -> Result<CSPolynomial, Error> {
    let p = |n: i64| cache.get(WeightVector::new(n, 0, 0, 0)).map(|x| x.polynomial.clone());
    let mut rhs = &p(m + 1)?.mul_var(Var::Z1) - &p(m + 2)?;
    rhs.add_scaled(&p(m)?, &-closed_form(ClosedForm::A, m + 1)?);
    let c = closed_form(ClosedForm::C, m + 1)?;
    CSPolynomial::from_polynomial(WeightVector::new(m, 1, 0, 0), &rhs.scale(&c.recip()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_zpolynomial as zp;
    use crate::rootsystem::{positive_roots, root_to_weight};
    use crate::solver::solve;

    fn w(a: i64, b: i64, c: i64, d: i64) -> WeightVector {
        WeightVector::new(a, b, c, d)
    }

    #[test]
    fn shift_tables() {
        for v in [Var::Z1, Var::Z3, Var::Z4] {
            assert_eq!(shift_table(v).shifts.len(), 8);
        }
        let z2 = shift_table(Var::Z2);
        assert_eq!(z2.shifts.len(), 25);
        let mut roots: Vec<WeightVector> =
            positive_roots().into_iter().flat_map(|r| [root_to_weight(r), -root_to_weight(r)]).collect();
        roots.push(WeightVector::ZERO);
        roots.sort();
        let mut listed = z2.shifts.clone();
        listed.sort();
        assert_eq!(listed, roots);
        let s3 = Triality::from_images([3, 2, 1, 4]).unwrap();
        let mut mapped: Vec<_> = shift_table(Var::Z1).shifts.into_iter().map(|x| s3.permute(x)).collect();
        mapped.sort();
        let mut z3 = shift_table(Var::Z3).shifts;
        z3.sort();
        assert_eq!(mapped, z3);
    }

    #[test]
    fn expansion_examples() {
        let cache = SolveCache::new();
        let e = expand_product(Var::Z1, w(1, 0, 0, 0), &cache).unwrap();
        let want: BTreeMap<_, _> = [
            (w(2, 0, 0, 0), KappaRational::one()),
            (w(0, 0, 0, 0), parse_kappa_rational("8*(1+2*k)/((1+3*k)*(1+5*k))").unwrap()),
            (w(0, 1, 0, 0), parse_kappa_rational("2/(1+k)").unwrap()),
        ]
        .into();
        assert_eq!(e.terms, want);

        let e = expand_product(Var::Z1, w(0, 0, 0, 0), &cache).unwrap();
        assert_eq!(e.terms, [(w(1, 0, 0, 0), KappaRational::one())].into());

        let e = expand_product(Var::Z2, w(0, 0, 0, 0), &cache).unwrap();
        let want: BTreeMap<_, _> =
            [(w(0, 1, 0, 0), KappaRational::one()), (w(0, 0, 0, 0), parse_kappa_rational("-4*(k-1)/(5*k+1)").unwrap())]
                .into();
        assert_eq!(e.terms, want);
    }

    #[test]
    fn reconstruction() {
        let cache = SolveCache::new();
        for m in dominant_weights_up_to(2) {
            for v in Var::ALL {
                let e = expand_product(v, m, &cache).unwrap();
                assert_eq!(e.reconstruct(&cache).unwrap(), cache.get(m).unwrap().polynomial.mul_var(v));
                assert_eq!(e.terms[&(m + shift_table(v).shifts[0])], KappaRational::one());
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(ClosedForm::C, 1).unwrap(), parse_kappa_rational("2/(1+k)").unwrap());
        let zero = BigRational::from_integer(0.into());
        let four = BigRational::from_integer(4.into());
        for m in 2..6 {
            assert_eq!(
                closed_form(ClosedForm::B, m).unwrap().substitute(&zero).unwrap(),
                BigRational::from_integer(1.into())
            );
            assert_eq!(closed_form(ClosedForm::H, m).unwrap().substitute(&zero).unwrap(), four);
        }
        assert_eq!(closed_form(ClosedForm::B, 1).unwrap().substitute(&zero).unwrap(), four);
        let h1 = closed_form(ClosedForm::H, 1).unwrap();
        assert_eq!(h1.substitute(&zero).unwrap(), BigRational::from_integer(10.into()));
        assert!(closed_form(ClosedForm::F, 1).unwrap().is_zero());
        assert!(closed_form(ClosedForm::Q, 1).unwrap().is_zero());
        assert!(closed_form(ClosedForm::A, 0).is_err());
        assert_eq!("s_m".parse::<ClosedForm>().unwrap(), ClosedForm::S);
        assert!("x".parse::<ClosedForm>().is_err());
    }

    #[test]
    fn closed_forms_verified_small() {
        let cache = SolveCache::new();
        let report = verify_closed_forms(2, 1, &cache).unwrap();
        if let Some(c) = report.failures().next() {
            panic!("{} m={}: {}", c.family, c.m, c.detail);
        }
        assert!(report.checks.len() > 40);
    }

    #[test]
    fn ladder() {
        let cache = SolveCache::new();
        assert_eq!(ladder_next(1, &cache).unwrap(), solve(w(2, 0, 0, 0)).unwrap());
        let p3 = ladder_next(2, &cache).unwrap();
        let expected =
            zp("z1^3 - 6/(2+k)*z1*z2 + 6/((1+k)*(2+k))*z3*z4 - 12*(1+2*k+2*k^2)/((1+k)*(2+k)*(2+3*k))*z1").unwrap();
        assert_eq!(p3.polynomial, expected);
        let seq = ladder_sequence(4).unwrap();
        for (m, p) in seq.iter().enumerate() {
            assert_eq!(p, &solve(w(m as i64, 0, 0, 0)).unwrap().polynomial);
        }
        assert_eq!(recover_m1(1, &cache).unwrap(), solve(w(1, 1, 0, 0)).unwrap());
    }
}
