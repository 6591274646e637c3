//! JSON forms of polynomials and eigenpolynomials, and the reference corpus
//! of known eigenpolynomials used by the golden tests.
//!
//! κ-polynomials are written as canonical strings (`3*k^2 - 4*k + 1`).
//! Object keys come out sorted because `serde_json::Value` keeps them in a
//! `BTreeMap`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{KappaRational, ZPolynomial};
use crate::error::Error;
use crate::operator::epsilon;
use crate::parse::{parse_kpoly, parse_weight, parse_zpolynomial};
use crate::rootsystem::{RootVector, WeightVector};
use crate::solver::{support_cone, CSPolynomial};

/// Environment variable naming a directory that replaces the built-in fixtures.
pub const FIXTURE_ENV: &str = "CS_D4_FIXTURES";

/// File name of the reference corpus inside a fixture directory.
pub const CORPUS_FILE: &str = "reference_polynomials.txt";

/// Decoding refuses weights above this total; the support cone grows like m⁴.
pub const MAX_DECODED_WEIGHT: i64 = 24;

const BUILTIN_CORPUS: &str = include_str!("../fixtures/reference_polynomials.txt");

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    exponents: [u32; 4],
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RationalJson {
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoeffJson {
    mu: [i64; 4],
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CSPolynomialJson {
    m: [i64; 4],
    epsilon: RationalJson,
    coeffs: Vec<CoeffJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    polynomial: Option<Vec<TermJson>>,
}

fn bad(msg: impl fmt::Display) -> Error {
    Error::Fixture(msg.to_string())
}

fn rational(num: &str, den: &str) -> Result<KappaRational, Error> {
    KappaRational::new(parse_kpoly(num)?, parse_kpoly(den)?)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("fixture types serialize")
}

fn zpoly_terms(p: &ZPolynomial) -> Vec<TermJson> {
    p.terms().map(|(e, c)| TermJson { exponents: *e, num: c.num().to_string(), den: c.den().to_string() }).collect()
}

fn zpoly_from_terms(terms: Vec<TermJson>) -> Result<ZPolynomial, Error> {
    let mut out = ZPolynomial::zero();
    let mut seen = std::collections::BTreeSet::new();
    for t in terms {
        if !seen.insert(t.exponents) {
            return Err(bad(format!("exponent {:?} listed twice", t.exponents)));
        }
        out.add_term(t.exponents, &rational(&t.num, &t.den)?);
    }
    Ok(out)
}

/// Canonical JSON form of a polynomial: terms sorted by exponent.
pub fn zpolynomial_to_json(p: &ZPolynomial) -> Value {
    to_value(&zpoly_terms(p))
}

pub fn zpolynomial_from_json(v: &Value) -> Result<ZPolynomial, Error> {
    let terms: Vec<TermJson> = serde_json::from_value(v.clone()).map_err(bad)?;
    zpoly_from_terms(terms)
}

pub fn zpolynomial_from_json_str(s: &str) -> Result<ZPolynomial, Error> {
    let terms: Vec<TermJson> = serde_json::from_str(s).map_err(bad)?;
    zpoly_from_terms(terms)
}

/// Fixture form: quantum numbers, eigenvalue, every c_μ of the cone and the
/// materialized polynomial.
pub fn cs_polynomial_to_json(p: &CSPolynomial) -> Value {
    let e = &p.eigenvalue.value;
    to_value(&CSPolynomialJson {
        m: p.m.0,
        epsilon: RationalJson { num: e.num().to_string(), den: e.den().to_string() },
        coeffs: p
            .coefficients
            .iter()
            .map(|(mu, c)| CoeffJson { mu: mu.0, num: c.num().to_string(), den: c.den().to_string() })
            .collect(),
        polynomial: Some(zpoly_terms(&p.polynomial)),
    })
}

/// Reads the fixture form back. Every μ must lie in the support cone, missing
/// ones are zero, and the eigenvalue and the optional `polynomial` field must
/// agree with the table.
pub fn cs_polynomial_from_json_str(s: &str) -> Result<CSPolynomial, Error> {
    let raw: CSPolynomialJson = serde_json::from_str(s).map_err(bad)?;
    let m = WeightVector(raw.m);
    m.ensure_dominant()?;
    if m.total() > MAX_DECODED_WEIGHT {
        return Err(bad(format!("weight {m} exceeds the decoding limit {MAX_DECODED_WEIGHT}")));
    }
    let cone = support_cone(m)?;
    let mut coefficients: BTreeMap<RootVector, KappaRational> =
        cone.elements.iter().map(|e| (e.mu, KappaRational::zero())).collect();
    let mut seen = std::collections::BTreeSet::new();
    for c in raw.coeffs {
        let mu = RootVector(c.mu);
        if !cone.contains(mu) {
            return Err(bad(format!("mu = {mu} lies outside the support cone of {m}")));
        }
        if !seen.insert(mu) {
            return Err(bad(format!("mu = {mu} listed twice")));
        }
        coefficients.insert(mu, rational(&c.num, &c.den)?);
    }
    let out = CSPolynomial::from_coefficients(m, coefficients)?;
    let eps = rational(&raw.epsilon.num, &raw.epsilon.den)?;
    if eps != epsilon(m)?.value {
        return Err(bad(format!("epsilon {eps} does not match the eigenvalue of {m}")));
    }
    if let Some(terms) = raw.polynomial {
        if zpoly_from_terms(terms)? != out.polynomial {
            return Err(bad("polynomial field disagrees with the coefficient table"));
        }
    }
    Ok(out)
}

/// Pretty-printed JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values render");
    s.push('\n');
    s
}

/// Which normalization a reference entry is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReferenceKind {
    /// Exact in κ.
    Symbolic,
    /// κ = 1.
    Character,
    /// κ = 0.
    Monomial,
}

impl ReferenceKind {
    pub const ALL: [ReferenceKind; 3] = [ReferenceKind::Symbolic, ReferenceKind::Character, ReferenceKind::Monomial];

    /// The κ value the entry is specialized at, if any.
    pub fn kappa(self) -> Option<i64> {
        match self {
            ReferenceKind::Symbolic => None,
            ReferenceKind::Character => Some(1),
            ReferenceKind::Monomial => Some(0),
        }
    }

    fn section(self) -> &'static str {
        match self {
            ReferenceKind::Symbolic => "symbolic",
            ReferenceKind::Character => "characters",
            ReferenceKind::Monomial => "monomials",
        }
    }
}

impl fmt::Display for ReferenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.section())
    }
}

impl FromStr for ReferenceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        ReferenceKind::ALL.into_iter().find(|k| k.section() == s).ok_or_else(|| bad(format!("unknown section [{s}]")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceEntry {
    pub kind: ReferenceKind,
    pub m: WeightVector,
    pub polynomial: ZPolynomial,
}

/// Parses corpus text: `[section]` headers, `m1,m2,m3,m4 = expr` entries,
/// indented continuation lines and `#` comments.
pub fn parse_corpus(text: &str) -> Result<Vec<ReferenceEntry>, Error> {
    let mut kind = None;
    let mut pending: Vec<(ReferenceKind, WeightVector, String, usize)> = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let lineno = n + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if line.starts_with(char::is_whitespace) {
            let last =
                pending.last_mut().ok_or_else(|| bad(format!("line {lineno}: continuation without an entry")))?;
            last.2.push(' ');
            last.2.push_str(trimmed);
            continue;
        }
        if let Some(name) = trimmed.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            kind = Some(name.parse::<ReferenceKind>()?);
            continue;
        }
        let k = kind.ok_or_else(|| bad(format!("line {lineno}: entry before any section")))?;
        let (lhs, rhs) = trimmed.split_once('=').ok_or_else(|| bad(format!("line {lineno}: expected `m = expr`")))?;
        let m = parse_weight(lhs)?;
        m.ensure_dominant()?;
        pending.push((k, m, rhs.trim().to_string(), lineno));
    }
    let mut seen = std::collections::BTreeSet::new();
    pending
        .into_iter()
        .map(|(kind, m, expr, lineno)| {
            if !seen.insert((kind, m)) {
                return Err(bad(format!("line {lineno}: {m} repeated in [{kind}]")));
            }
            let polynomial = parse_zpolynomial(&expr).map_err(|e| bad(format!("line {lineno}: {e}")))?;
            if kind.kappa().is_some() && !polynomial.is_kappa_free() {
                return Err(bad(format!("line {lineno}: specialized entry depends on k")));
            }
            Ok(ReferenceEntry { kind, m, polynomial })
        })
        .collect()
}

/// The directory named by `CS_D4_FIXTURES`, if set.
pub fn fixture_override() -> Option<PathBuf> {
    std::env::var_os(FIXTURE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

/// Fixture directory: the override, or the one shipped with the crate.
pub fn fixture_dir() -> PathBuf {
    fixture_override().unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures")))
}

/// Loads the reference corpus, from the override directory when one is set.
pub fn reference_corpus() -> Result<Vec<ReferenceEntry>, Error> {
    match fixture_override() {
        Some(dir) => {
            let path = dir.join(CORPUS_FILE);
            let text = std::fs::read_to_string(&path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
            parse_corpus(&text)
        }
        None => parse_corpus(BUILTIN_CORPUS),
    }
}

/// Relative path of the solved-coefficient fixture for m.
pub fn solved_fixture_name(m: WeightVector) -> String {
    let [a, b, c, d] = m.0;
    format!("solved/P_{a}_{b}_{c}_{d}.json")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::solve;

    #[test]
    fn zpolynomial_round_trip() {
        let p = parse_zpolynomial("z1^2 - 2/(1+k)*z2 - 8*k/((1+k)*(1+3*k))").unwrap();
        let v = zpolynomial_to_json(&p);
        assert_eq!(v[0]["exponents"], serde_json::json!([0, 0, 0, 0]));
        assert_eq!(v[0]["num"], "-8*k");
        assert_eq!(v[0]["den"], "3*k^2 + 4*k + 1");
        assert_eq!(zpolynomial_from_json(&v).unwrap(), p);
        assert_eq!(zpolynomial_from_json_str(&render(&v)).unwrap(), p);
        assert_eq!(zpolynomial_to_json(&ZPolynomial::zero()), serde_json::json!([]));
    }

    #[test]
    fn zpolynomial_rejects_malformed() {
        assert!(zpolynomial_from_json_str(r#"[{"exponents":[0,0,0,0],"num":"1","den":"0"}]"#).is_err());
        assert!(zpolynomial_from_json_str(r#"[{"exponents":[0,0,0],"num":"1","den":"1"}]"#).is_err());
        assert!(zpolynomial_from_json_str(r#"[{"exponents":[0,0,0,0],"num":"1/2","den":"1"}]"#).is_err());
        let dup = r#"[{"exponents":[1,0,0,0],"num":"1","den":"1"},{"exponents":[1,0,0,0],"num":"1","den":"1"}]"#;
        assert!(zpolynomial_from_json_str(dup).is_err());
    }

    #[test]
    fn cs_polynomial_round_trip() {
        let p = solve(WeightVector::new(1, 1, 0, 0)).unwrap();
        let v = cs_polynomial_to_json(&p);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["coeffs", "epsilon", "m", "polynomial"]);
        assert_eq!(v["epsilon"]["num"], "32*k + 10");
        assert_eq!(cs_polynomial_from_json_str(&render(&v)).unwrap(), p);
    }

    #[test]
    fn cs_polynomial_rejects_inconsistent() {
        let trivial =
            r#"{"m":[0,0,0,0],"epsilon":{"num":"0","den":"1"},"coeffs":[{"mu":[0,0,0,0],"num":"1","den":"1"}]}"#;
        assert_eq!(cs_polynomial_from_json_str(trivial).unwrap().polynomial, ZPolynomial::one());
        let wrong_eps = trivial.replace(r#""num":"0""#, r#""num":"1""#);
        assert!(cs_polynomial_from_json_str(&wrong_eps).is_err());
        let outside =
            r#"{"m":[1,0,0,0],"epsilon":{"num":"12*k + 2","den":"1"},"coeffs":[{"mu":[1,0,0,0],"num":"1","den":"1"}]}"#;
        assert!(cs_polynomial_from_json_str(outside).is_err());
        let huge = r#"{"m":[99,0,0,0],"epsilon":{"num":"0","den":"1"},"coeffs":[]}"#;
        assert!(cs_polynomial_from_json_str(huge).is_err());
        assert!(cs_polynomial_from_json_str(r#"{"m":[0,-1,0,0],"epsilon":{"num":"0","den":"1"},"coeffs":[]}"#).is_err());
    }

    #[test]
    fn corpus_shape() {
        let corpus = parse_corpus(BUILTIN_CORPUS).unwrap();
        assert_eq!(corpus.len(), 36);
        for kind in ReferenceKind::ALL {
            assert_eq!(corpus.iter().filter(|e| e.kind == kind).count(), 12, "{kind}");
        }
        let first = &corpus[0];
        assert_eq!((first.kind, first.m), (ReferenceKind::Symbolic, WeightVector::new(1, 0, 0, 0)));
    }

    #[test]
    fn corpus_parser_errors() {
        assert!(parse_corpus("1,0,0,0 = z1").is_err());
        assert!(parse_corpus("[symbolic]\n  z1").is_err());
        assert!(parse_corpus("[symbolic]\n1,0,0,0 = z1\n1,0,0,0 = z1").is_err());
        assert!(parse_corpus("[characters]\n1,0,0,0 = k*z1").is_err());
        assert!(parse_corpus("[other]\n").is_err());
        let ok = parse_corpus("[monomials]\n1,0,0,0 = z1 +\n    0\n").unwrap();
        assert_eq!(ok[0].polynomial, parse_zpolynomial("z1").unwrap());
    }

    #[test]
    fn fixture_names() {
        assert_eq!(solved_fixture_name(WeightVector::new(0, 3, 0, 0)), "solved/P_0_3_0_0.json");
    }
}
