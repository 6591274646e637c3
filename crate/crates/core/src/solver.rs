//! Eigenpolynomials P_m by the height-ordered coefficient recursion.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use rayon::prelude::*;

use crate::algebra::{Exponent, KappaRational, ZPolynomial};
use crate::error::Error;
use crate::operator::{apply_l, epsilon, epsilon_raw, lowering_coefficients, Eigenvalue, LOWERING_SHIFTS};
use crate::rootsystem::{root_to_weight, weight_to_root, RootVector, Triality, WeightVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeElement {
    pub mu: RootVector,
    pub weight: WeightVector,
    pub exponent: Exponent,
}

/// The μ ≥ 0 in the root lattice with m − μ a nonnegative exponent, sorted by
/// height and then lexicographically; μ = 0 comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportCone {
    pub m: WeightVector,
    pub elements: Vec<ConeElement>,
}

impl SupportCone {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, mu: RootVector) -> bool {
        self.elements.binary_search_by(|e| cone_order(&e.mu, &mu)).is_ok()
    }

    /// Elements grouped by height, in increasing order.
    pub fn levels(&self) -> Vec<&[ConeElement]> {
        self.elements.chunk_by(|a, b| a.mu.height() == b.mu.height()).collect()
    }
}

fn cone_order(a: &RootVector, b: &RootVector) -> std::cmp::Ordering {
    a.height().cmp(&b.height()).then_with(|| a.cmp(b))
}

/// Enumerates Q^+(m). Since (ρ, m − w(μ)) ≥ 0 for a nonnegative exponent and
/// (ρ, w(μ)) is the height of μ, the height is at most (ρ, m); the search is
/// a finite box.
pub fn support_cone(m: WeightVector) -> Result<SupportCone, Error> {
    m.ensure_dominant()?;
    let [m1, m2, m3, m4] = m.0;
    let max_height = 3 * m1 + 5 * m2 + 3 * m3 + 3 * m4;
    let mut elements = Vec::new();
    for n1 in 0..=max_height {
        for n2 in 0..=max_height - n1 {
            for n3 in 0..=max_height - n1 - n2 {
                for n4 in 0..=max_height - n1 - n2 - n3 {
                    let mu = RootVector::new(n1, n2, n3, n4);
                    let weight = root_to_weight(mu);
                    if let Some(exponent) = (m - weight).to_exponent() {
                        elements.push(ConeElement { mu, weight, exponent });
                    }
                }
            }
        }
    }
    elements.sort_by(|a, b| cone_order(&a.mu, &b.mu));
    Ok(SupportCone { m, elements })
}

/// An eigenpolynomial together with its coefficient table over the full cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CSPolynomial {
    pub m: WeightVector,
    pub eigenvalue: Eigenvalue,
    /// c_μ for every μ in the support cone, including coefficients that vanish.
    pub coefficients: BTreeMap<RootVector, KappaRational>,
    pub polynomial: ZPolynomial,
}

impl CSPolynomial {
    /// Assembles from a coefficient table, materializing Σ c_μ z^{m−μ}.
    pub fn from_coefficients(
        m: WeightVector,
        coefficients: BTreeMap<RootVector, KappaRational>,
    ) -> Result<Self, Error> {
        let eigenvalue = epsilon(m)?;
        let mut polynomial = ZPolynomial::zero();
        for (mu, c) in &coefficients {
            let e = (m - root_to_weight(*mu))
                .to_exponent()
                .ok_or_else(|| Error::InvalidArgument(format!("mu = {mu} lies outside the support cone of {m}")))?;
            polynomial.add_term(e, c);
        }
        Ok(CSPolynomial { m, eigenvalue, coefficients, polynomial })
    }

    /// Reads the coefficient table off a polynomial; fails if it has a
    /// monomial outside the support cone of m.
    pub fn from_polynomial(m: WeightVector, p: &ZPolynomial) -> Result<Self, Error> {
        let cone = support_cone(m)?;
        let coefficients: BTreeMap<RootVector, KappaRational> =
            cone.elements.iter().map(|e| (e.mu, p.coeff(&e.exponent))).collect();
        let out = Self::from_coefficients(m, coefficients)?;
        if &out.polynomial != p {
            return Err(Error::InvalidArgument(format!("polynomial has monomials outside the support cone of {m}")));
        }
        Ok(out)
    }

    /// Image under a triality acting on quantum numbers and variables at once.
    pub fn permuted(&self, sigma: Triality) -> CSPolynomial {
        CSPolynomial {
            m: sigma.permute(self.m),
            eigenvalue: self.eigenvalue.clone(),
            coefficients: self.coefficients.iter().map(|(mu, c)| (RootVector(sigma.apply(mu.0)), c.clone())).collect(),
            polynomial: self.polynomial.permute_vars(|i| sigma.slot(i)),
        }
    }
}

/// Solves L P = ε_m P with c_0 = 1 over the field of rational functions of κ.
///
/// Coefficients are produced one height level at a time; within a level they
/// only depend on lower levels and are computed in parallel.
pub fn solve(m: WeightVector) -> Result<CSPolynomial, Error> {
    let cone = support_cone(m)?;
    let eps_m = epsilon_raw(m.0);
    let index: HashMap<RootVector, usize> = cone.elements.iter().enumerate().map(|(i, e)| (e.mu, i)).collect();
    let lowering: Vec<[KappaRational; 17]> =
        cone.elements.par_iter().map(|e| lowering_coefficients(e.exponent.map(i64::from))).collect();

    let mut coeffs: Vec<Option<KappaRational>> = vec![None; cone.len()];
    for level in cone.levels() {
        let start = index[&level[0].mu];
        let computed: Vec<Result<KappaRational, Error>> = level
            .par_iter()
            .map(|nu| {
                if nu.mu == RootVector::ZERO {
                    return Ok(KappaRational::one());
                }
                let mut acc = KappaRational::zero();
                for (f, s) in LOWERING_SHIFTS.iter().enumerate() {
                    let source = nu.mu - *s;
                    if !source.is_nonnegative() {
                        continue;
                    }
                    let Some(&j) = index.get(&source) else {
                        continue;
                    };
                    let coef = &lowering[j][f];
                    if coef.is_zero() {
                        continue;
                    }
                    let c = coeffs[j].as_ref().ok_or_else(|| {
                        Error::InternalInconsistency(format!("coefficient {} needed before it was computed", source))
                    })?;
                    if !c.is_zero() {
                        acc += &(coef * c);
                    }
                }
                let gap = &epsilon_raw(nu.exponent.map(i64::from)) - &eps_m;
                if gap.is_zero() {
                    return Err(Error::InternalInconsistency(format!("vanishing eigenvalue gap at mu = {}", nu.mu)));
                }
                acc.checked_div(&gap)
            })
            .collect();
        for (k, c) in computed.into_iter().enumerate() {
            coeffs[start + k] = Some(c?);
        }
    }

    let coefficients: BTreeMap<RootVector, KappaRational> =
        cone.elements.iter().zip(coeffs).map(|(e, c)| (e.mu, c.expect("every level visited"))).collect();
    CSPolynomial::from_coefficients(m, coefficients)
}

/// Substitutes κ = `kappa0` in every coefficient.
pub fn specialize(p: &CSPolynomial, kappa0: &BigRational) -> Result<ZPolynomial, Error> {
    let mut out = ZPolynomial::zero();
    for (mu, c) in &p.coefficients {
        let v = c.substitute(kappa0).map_err(|_| Error::PoleAtKappa { kappa: kappa0.to_string(), mu: Some(*mu) })?;
        let e = (p.m - root_to_weight(*mu)).to_exponent().expect("cone element");
        out.add_term(e, &KappaRational::from_rational(&v));
    }
    Ok(out)
}

/// True iff L applied to the materialized polynomial equals ε_m times it.
pub fn verify_eigen(p: &CSPolynomial) -> bool {
    apply_l(&p.polynomial) == p.polynomial.scale(&p.eigenvalue.value)
}

/// Recovers the root-basis label of z^e inside P_m, if it lies in the lattice.
pub fn mu_of_exponent(m: WeightVector, e: Exponent) -> Option<RootVector> {
    weight_to_root(m - WeightVector::from_exponent(e))
}

/// Thread-safe memo of solved eigenpolynomials.
#[derive(Default)]
pub struct SolveCache {
    entries: Mutex<HashMap<WeightVector, Arc<CSPolynomial>>>,
}

impl SolveCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, m: WeightVector) -> Result<Arc<CSPolynomial>, Error> {
        if let Some(p) = self.entries.lock().expect("cache poisoned").get(&m) {
            return Ok(Arc::clone(p));
        }
        let p = Arc::new(solve(m)?);
        self.entries.lock().expect("cache poisoned").insert(m, Arc::clone(&p));
        Ok(p)
    }

    /// The polynomial of P_m, or zero when m has a negative entry.
    pub fn polynomial_or_zero(&self, m: WeightVector) -> Result<ZPolynomial, Error> {
        if !m.is_dominant() {
            return Ok(ZPolynomial::zero());
        }
        Ok(self.get(m)?.polynomial.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_zpolynomial as zp;

    fn w(a: i64, b: i64, c: i64, d: i64) -> WeightVector {
        WeightVector::new(a, b, c, d)
    }

    #[test]
    fn cone_examples() {
        let mus = |m| support_cone(m).unwrap().elements.into_iter().map(|e| e.mu).collect::<Vec<_>>();
        assert_eq!(mus(w(1, 0, 0, 0)), vec![RootVector::ZERO]);
        assert_eq!(mus(w(0, 0, 0, 0)), vec![RootVector::ZERO]);
        assert_eq!(
            mus(w(2, 0, 0, 0)),
            vec![RootVector::ZERO, RootVector::new(1, 0, 0, 0), RootVector::new(2, 2, 1, 1)]
        );
        assert!(support_cone(w(-1, 0, 0, 0)).is_err());
    }

    #[test]
    fn cone_is_not_connected_by_simple_steps() {
        let cone = support_cone(w(2, 0, 0, 0)).unwrap();
        let top = RootVector::new(2, 2, 1, 1);
        assert!(cone.contains(top));
        assert!((0..4).all(|i| !cone.contains(top - RootVector::simple(i))));
    }

    #[test]
    fn small_solutions() {
        assert_eq!(solve(w(0, 0, 0, 0)).unwrap().polynomial, ZPolynomial::one());
        assert_eq!(solve(w(2, 0, 0, 0)).unwrap().polynomial, zp("z1^2 - 2/(1+k)*z2 - 8*k/((1+k)*(1+3*k))").unwrap());
        assert_eq!(solve(w(0, 1, 0, 0)).unwrap().polynomial, zp("z2 + 4*(k-1)/(5*k+1)").unwrap());
        assert_eq!(solve(w(1, 0, 1, 0)).unwrap().polynomial, zp("z1*z3 - 4/(1+3*k)*z4").unwrap());
    }

    #[test]
    fn solutions_are_eigenfunctions() {
        for m in [w(1, 1, 0, 0), w(0, 0, 0, 0), w(1, 0, 1, 1), w(0, 2, 0, 0)] {
            let p = solve(m).unwrap();
            assert!(verify_eigen(&p), "{m}");
            assert!(p.coefficients[&RootVector::ZERO].is_one());
        }
    }

    #[test]
    fn perturbed_polynomial_fails_verification() {
        let mut p = solve(w(1, 1, 0, 0)).unwrap();
        let e = *p.polynomial.terms().last().unwrap().0;
        p.polynomial.add_term(e, &KappaRational::one());
        assert!(!verify_eigen(&p));
    }

    #[test]
    fn specializations() {
        let one = BigRational::from_integer(1.into());
        let zero = BigRational::from_integer(0.into());
        let p = solve(w(1, 1, 0, 0)).unwrap();
        assert_eq!(specialize(&p, &one).unwrap(), zp("z1*z2 - z3*z4").unwrap());
        let p = solve(w(2, 0, 0, 0)).unwrap();
        assert_eq!(specialize(&p, &zero).unwrap(), zp("z1^2 - 2*z2").unwrap());
        let p = solve(w(1, 0, 1, 1)).unwrap();
        assert_eq!(specialize(&p, &zero).unwrap(), zp("z1*z3*z4 - 4*z1^2 - 4*z3^2 - 4*z4^2 + 12*z2 + 16").unwrap());
        let err = specialize(&solve(w(2, 0, 0, 0)).unwrap(), &BigRational::from_integer((-1).into()));
        assert!(matches!(err, Err(Error::PoleAtKappa { mu: Some(_), .. })));
    }

    #[test]
    fn triality_maps_solutions() {
        let p = solve(w(2, 1, 0, 1)).unwrap();
        for s in Triality::all() {
            assert_eq!(p.permuted(s), solve(s.permute(p.m)).unwrap());
        }
    }
}
