//! Canonical rational functions of the coupling κ.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::kpoly::KPoly;
use crate::error::Error;

/// `num / den` with `gcd(num, den) = 1` in Q[κ], coprime integer contents
/// and a positive leading coefficient in `den`. Two equal rational
/// functions therefore have identical representations, so `==` is exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KappaRational {
    num: KPoly,
    den: KPoly,
}

impl Default for KappaRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl KappaRational {
    pub fn zero() -> Self {
        KappaRational { num: KPoly::zero(), den: KPoly::one() }
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(n: i64) -> Self {
        Self::from_poly(KPoly::from_i64s(&[n]))
    }

    pub fn kappa() -> Self {
        Self::from_poly(KPoly::linear(0, 1))
    }

    /// `a + b κ`
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_poly(KPoly::linear(a, b))
    }

    pub fn from_poly(num: KPoly) -> Self {
        KappaRational { num, den: KPoly::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        KappaRational { num: KPoly::constant(r.numer().clone()), den: KPoly::constant(r.denom().clone()) }
    }

    /// Reduces `num / den` to canonical form.
    pub fn new(num: KPoly, den: KPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: KPoly, den: KPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd_primitive(&den);
        if g.is_one() {
            Self::normalize_content(num, den)
        } else {
            Self::normalize_content(num.div_exact(&g), den.div_exact(&g))
        }
    }

    /// Assumes `num` and `den` are already coprime over Q[κ].
    fn normalize_content(num: KPoly, den: KPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if c.is_one() {
            KappaRational { num, den }
        } else {
            KappaRational { num: num.div_exact_scalar(&c), den: den.div_exact_scalar(&c) }
        }
    }

    pub fn num(&self) -> &KPoly {
        &self.num
    }

    pub fn den(&self) -> &KPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not depend on κ.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The κ-independent value, if there is one.
    pub fn as_constant(&self) -> Option<BigRational> {
        self.is_constant().then(|| BigRational::new(self.num.coeff(0), self.den.coeff(0)))
    }

    /// Exact value at κ = `kappa`; fails with `PoleAtKappa` if the reduced
    /// denominator vanishes there.
    pub fn substitute(&self, kappa: &BigRational) -> Result<BigRational, Error> {
        let d = self.den.eval_rational(kappa);
        if d.is_zero() {
            return Err(Error::PoleAtKappa { kappa: kappa.to_string(), mu: None });
        }
        Ok(self.num.eval_rational(kappa) / d)
    }

    pub fn eval_f64(&self, kappa: f64) -> f64 {
        self.num.eval_f64(kappa) / self.den.eval_f64(kappa)
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize_content(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        KappaRational { num: self.num.pow(n), den: self.den.pow(n) }
    }

    /// Scales by an integer.
    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        if self.den.is_constant() {
            return Self::normalize_content(self.num.scale(c), self.den.clone());
        }
        let g = c.gcd(&self.den.content());
        let c = c / &g;
        Self::normalize_content(self.num.scale(&c), self.den.div_exact_scalar(&g))
    }

    /// Multiplies by a polynomial in κ.
    pub fn mul_poly(&self, p: &KPoly) -> Self {
        if p.is_constant() {
            return self.scale_int(&p.coeff(0));
        }
        self * &KappaRational::from_poly(p.clone())
    }
}

impl Add for &KappaRational {
    type Output = KappaRational;
    fn add(self, rhs: &KappaRational) -> KappaRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return KappaRational::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd_primitive(&rhs.den);
        if g.is_one() {
            // With coprime denominators the sum is already reduced over Q[κ].
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return KappaRational::normalize_content(num, &self.den * &rhs.den);
        }
        let b1 = self.den.div_exact(&g);
        let d1 = rhs.den.div_exact(&g);
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return KappaRational::zero();
        }
        let den = &(&b1 * &d1) * &g;
        let h = num.gcd_primitive(&g);
        if h.is_one() {
            KappaRational::normalize_content(num, den)
        } else {
            KappaRational::normalize_content(num.div_exact(&h), den.div_exact(&h))
        }
    }
}

impl Neg for &KappaRational {
    type Output = KappaRational;
    fn neg(self) -> KappaRational {
        KappaRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for KappaRational {
    type Output = KappaRational;
    fn neg(self) -> KappaRational {
        KappaRational { num: -self.num, den: self.den }
    }
}

impl Sub for &KappaRational {
    type Output = KappaRational;
    fn sub(self, rhs: &KappaRational) -> KappaRational {
        self + &(-rhs)
    }
}

impl Mul for &KappaRational {
    type Output = KappaRational;
    fn mul(self, rhs: &KappaRational) -> KappaRational {
        if self.is_zero() || rhs.is_zero() {
            return KappaRational::zero();
        }
        if self.den.is_constant() && rhs.den.is_constant() && (self.num.is_constant() || rhs.num.is_constant()) {
            return KappaRational::canonical(&self.num * &rhs.num, &self.den * &rhs.den);
        }
        let g1 = self.num.gcd_primitive(&rhs.den);
        let g2 = rhs.num.gcd_primitive(&self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_exact(&g1), rhs.den.div_exact(&g1))
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_exact(&g2), self.den.div_exact(&g2))
        };
        KappaRational::normalize_content(&a * &c, &b * &d)
    }
}

/// Panics on division by zero, like the integer operators.
impl Div for &KappaRational {
    type Output = KappaRational;
    fn div(self, rhs: &KappaRational) -> KappaRational {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for KappaRational {
            type Output = KappaRational;
            fn $f(self, rhs: KappaRational) -> KappaRational {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&KappaRational> for KappaRational {
            type Output = KappaRational;
            fn $f(self, rhs: &KappaRational) -> KappaRational {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&KappaRational> for KappaRational {
    fn add_assign(&mut self, rhs: &KappaRational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&KappaRational> for KappaRational {
    fn sub_assign(&mut self, rhs: &KappaRational) {
        *self = &*self - rhs;
    }
}

impl From<i64> for KappaRational {
    fn from(n: i64) -> Self {
        KappaRational::integer(n)
    }
}

impl Zero for KappaRational {
    fn zero() -> Self {
        KappaRational::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for KappaRational {
    fn one() -> Self {
        KappaRational::one()
    }
}

/// `(num)/(den)`, or just the numerator when the denominator is 1.
impl fmt::Display for KappaRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
