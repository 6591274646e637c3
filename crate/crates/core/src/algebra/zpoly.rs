//! Sparse polynomials in the character variables z1..z4.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Signed;

use super::kappa::KappaRational;
use crate::error::Error;

/// Exponents of z1..z4.
pub type Exponent = [u32; 4];

/// One of the four character variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z1,
    Z2,
    Z3,
    Z4,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Z1, Var::Z2, Var::Z3, Var::Z4];

    /// 0-based slot.
    pub fn index(self) -> usize {
        self as usize
    }

    /// From the 1-based variable number used in formulas.
    pub fn from_number(n: usize) -> Result<Var, Error> {
        match n {
            1 => Ok(Var::Z1),
            2 => Ok(Var::Z2),
            3 => Ok(Var::Z3),
            4 => Ok(Var::Z4),
            _ => Err(Error::InvalidArgument(format!("variable index {n} is not in 1..=4"))),
        }
    }

    pub fn number(self) -> usize {
        self.index() + 1
    }

    pub fn unit_exponent(self) -> Exponent {
        let mut e = [0; 4];
        e[self.index()] = 1;
        e
    }
}

/// Sum of `c_e z^e` with nonzero `KappaRational` coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by exponent so iteration and
/// serialization are deterministic; no other monomial order is implied.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZPolynomial {
    terms: BTreeMap<Exponent, KappaRational>,
}

impl ZPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(KappaRational::one())
    }

    pub fn constant(c: KappaRational) -> Self {
        Self::monomial([0; 4], c)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(v.unit_exponent(), KappaRational::one())
    }

    pub fn monomial(e: Exponent, c: KappaRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        ZPolynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, KappaRational)>>(it: I) -> Self {
        let mut p = ZPolynomial::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &KappaRational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Exponent, KappaRational> {
        self.terms
    }

    pub fn coeff(&self, e: &Exponent) -> KappaRational {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, e: &Exponent) -> Option<&KappaRational> {
        self.terms.get(e)
    }

    /// Adds `c z^e` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, e: Exponent, c: &KappaRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, other: &ZPolynomial, factor: &KappaRational) {
        if factor.is_zero() {
            return;
        }
        for (e, c) in &other.terms {
            let t = if factor.is_one() { c.clone() } else { c * factor };
            self.add_term(*e, &t);
        }
    }

    pub fn scale(&self, c: &KappaRational) -> ZPolynomial {
        if c.is_zero() {
            return ZPolynomial::zero();
        }
        ZPolynomial { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn mul_monomial(&self, e: Exponent) -> ZPolynomial {
        ZPolynomial {
            terms: self.terms.iter().map(|(f, c)| (std::array::from_fn(|i| e[i] + f[i]), c.clone())).collect(),
        }
    }

    pub fn mul_var(&self, v: Var) -> ZPolynomial {
        self.mul_monomial(v.unit_exponent())
    }

    /// Formal partial derivative with respect to `v`.
    pub fn derive(&self, v: Var) -> ZPolynomial {
        let j = v.index();
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[j] == 0 {
                continue;
            }
            let mut f = *e;
            f[j] -= 1;
            out.insert(f, c.scale_int(&e[j].into()));
        }
        ZPolynomial { terms: out }
    }

    /// Renames variables by a slot permutation (the variable in slot i moves to `perm(i)`).
    pub fn permute_vars(&self, perm: impl Fn(usize) -> usize) -> ZPolynomial {
        ZPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = [0; 4];
                    for (i, &x) in e.iter().enumerate() {
                        f[perm(i)] = x;
                    }
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Substitutes κ = `kappa` in every coefficient.
    pub fn substitute(&self, kappa: &BigRational) -> Result<ZPolynomial, Error> {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let v = c.substitute(kappa)?;
            if v != BigRational::from_integer(0.into()) {
                out.insert(*e, KappaRational::from_rational(&v));
            }
        }
        Ok(ZPolynomial { terms: out })
    }

    /// True when no coefficient depends on κ.
    pub fn is_kappa_free(&self) -> bool {
        self.terms.values().all(KappaRational::is_constant)
    }

    /// Numeric value at complex `z` with κ set to `kappa`.
    pub fn eval_complex(&self, z: &[Complex64; 4], kappa: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut t = Complex64::new(c.eval_f64(kappa), 0.0);
                for (zi, &ei) in z.iter().zip(e.iter()) {
                    t *= zi.powu(ei);
                }
                t
            })
            .sum()
    }

    /// Exact value at rational `z` for a κ-free polynomial, or after
    /// substituting `kappa`.
    pub fn eval_rational(&self, z: &[BigRational; 4], kappa: &BigRational) -> Result<BigRational, Error> {
        let mut acc = BigRational::from_integer(0.into());
        for (e, c) in &self.terms {
            let mut t = c.substitute(kappa)?;
            for (zi, &ei) in z.iter().zip(e.iter()) {
                t *= num_traits::pow(zi.clone(), ei as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }
}

impl Add for &ZPolynomial {
    type Output = ZPolynomial;
    fn add(self, rhs: &ZPolynomial) -> ZPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &KappaRational::one());
        out
    }
}

impl Sub for &ZPolynomial {
    type Output = ZPolynomial;
    fn sub(self, rhs: &ZPolynomial) -> ZPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Neg for &ZPolynomial {
    type Output = ZPolynomial;
    fn neg(self) -> ZPolynomial {
        ZPolynomial { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &ZPolynomial {
    type Output = ZPolynomial;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &ZPolynomial) -> ZPolynomial {
        let mut out = ZPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = std::array::from_fn(|i| ea[i] + eb[i]);
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for ZPolynomial {
            type Output = ZPolynomial;
            fn $f(self, rhs: ZPolynomial) -> ZPolynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Human-readable form, highest total degree first: `z1^2 - (2)/(k + 1)*z2`.
impl fmt::Display for ZPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(j, &x)| if x == 1 { format!("z{}", j + 1) } else { format!("z{}^{}", j + 1, x) })
                .collect();
            let mono = mono.join("*");
            let neg = c.num().leading().is_some_and(Signed::is_negative);
            let mag = if neg { -c } else { c.clone() };
            if i > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let coeff =
                if mag.as_constant().is_some() { mag.as_constant().unwrap().to_string() } else { format!("({mag})") };
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => f.write_str(&coeff)?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{coeff}*{mono}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: Var) -> ZPolynomial {
        ZPolynomial::var(v)
    }

    #[test]
    fn ring_examples() {
        let z1 = z(Var::Z1);
        let z2 = z(Var::Z2);
        let z3 = z(Var::Z3);
        let p = &(&z1 * &z1) - &z2;
        let lhs = &p * &z2;
        let want = &(&(&z1 * &z1) * &z2) - &(&z2 * &z2);
        assert_eq!(lhs, want);
        assert!((&p + &p.scale(&KappaRational::integer(-1))).is_zero());
        assert_eq!(&(&z1 + &z3) * &(&z1 - &z3), &(&z1 * &z1) - &(&z3 * &z3));
    }

    #[test]
    fn derivatives() {
        let z1 = z(Var::Z1);
        let z3 = z(Var::Z3);
        let p = &(&z1 * &z1) * &z3;
        assert_eq!(p.derive(Var::Z1), (&z1 * &z3).scale(&KappaRational::integer(2)));
        assert!(ZPolynomial::constant(KappaRational::integer(5)).derive(Var::Z4).is_zero());
        let z2 = z(Var::Z2);
        let cube = &(&z2 * &z2) * &z2;
        assert_eq!(cube.derive(Var::Z2), (&z2 * &z2).scale(&KappaRational::integer(3)));
    }

    #[test]
    fn display() {
        let p = &(&z(Var::Z1) * &z(Var::Z1)) - &z(Var::Z2).scale(&KappaRational::integer(2));
        assert_eq!(p.to_string(), "z1^2 - 2*z2");
        assert_eq!(ZPolynomial::zero().to_string(), "0");
    }
}
