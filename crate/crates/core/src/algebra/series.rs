//! Truncated power series in an auxiliary variable t with `ZPolynomial` coefficients.

use super::kappa::KappaRational;
use super::zpoly::ZPolynomial;
use crate::error::Error;

/// `Σ_{k=0}^{N} c_k t^k`, where N is the truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauSeries {
    coeffs: Vec<ZPolynomial>,
}

impl TauSeries {
    /// Builds a series of the given order from polynomial coefficients,
    /// truncating or zero-padding as needed.
    pub fn new(mut coeffs: Vec<ZPolynomial>, order: usize) -> Self {
        coeffs.resize(order + 1, ZPolynomial::zero());
        TauSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ZPolynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &ZPolynomial {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ZPolynomial::is_zero)
    }

    fn check_order(&self, other: &TauSeries) -> Result<(), Error> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &TauSeries) -> Result<TauSeries, Error> {
        self.check_order(other)?;
        Ok(TauSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &TauSeries) -> Result<TauSeries, Error> {
        self.check_order(other)?;
        Ok(TauSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &TauSeries) -> Result<TauSeries, Error> {
        self.check_order(other)?;
        let n = self.order();
        let coeffs = (0..=n)
            .map(|k| {
                let mut acc = ZPolynomial::zero();
                for i in 0..=k {
                    if self.coeffs[i].is_zero() || other.coeffs[k - i].is_zero() {
                        continue;
                    }
                    acc = &acc + &(&self.coeffs[i] * &other.coeffs[k - i]);
                }
                acc
            })
            .collect();
        Ok(TauSeries { coeffs })
    }

    /// Quotient `q` with `q * den = self` through the truncation order.
    ///
    /// `den` must have a nonzero z-independent constant term.
    pub fn div(&self, den: &TauSeries) -> Result<TauSeries, Error> {
        self.check_order(den)?;
        let d0 = den.coeffs[0].coeff(&[0; 4]);
        if den.coeffs[0].len() != 1 || d0.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let inv = KappaRational::one().checked_div(&d0)?;
        let mut q: Vec<ZPolynomial> = Vec::with_capacity(self.coeffs.len());
        for k in 0..self.coeffs.len() {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                if den.coeffs[i].is_zero() || q[k - i].is_zero() {
                    continue;
                }
                acc = &acc - &(&den.coeffs[i] * &q[k - i]);
            }
            q.push(if inv.is_one() { acc } else { acc.scale(&inv) });
        }
        Ok(TauSeries { coeffs: q })
    }

    /// Applies `f(k, c_k)` to each coefficient.
    pub fn map_indexed(&self, mut f: impl FnMut(usize, &ZPolynomial) -> ZPolynomial) -> TauSeries {
        TauSeries { coeffs: self.coeffs.iter().enumerate().map(|(k, c)| f(k, c)).collect() }
    }
}

/// Expands `num / den` to the given order.
pub fn series_div(num: &TauSeries, den: &TauSeries) -> Result<TauSeries, Error> {
    num.div(den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zpoly::Var;

    fn c(n: i64) -> ZPolynomial {
        ZPolynomial::constant(KappaRational::integer(n))
    }

    #[test]
    fn geometric_series() {
        let one = TauSeries::new(vec![c(1)], 3);
        let den = TauSeries::new(vec![c(1), c(-1)], 3);
        let q = series_div(&one, &den).unwrap();
        assert_eq!(q, TauSeries::new(vec![c(1), c(1), c(1), c(1)], 3));
    }

    #[test]
    fn self_quotient_is_one() {
        let z1 = ZPolynomial::var(Var::Z1);
        let d = TauSeries::new(vec![c(1), z1.clone(), &z1 * &z1], 4);
        assert_eq!(d.div(&d).unwrap(), TauSeries::new(vec![c(1)], 4));
    }

    #[test]
    fn difference_of_squares() {
        let num = TauSeries::new(vec![c(1), c(0), c(-1)], 2);
        let den = TauSeries::new(vec![c(1), c(-1)], 2);
        assert_eq!(num.div(&den).unwrap(), TauSeries::new(vec![c(1), c(1)], 2));
    }

    #[test]
    fn rejects_non_invertible() {
        let z1 = ZPolynomial::var(Var::Z1);
        let num = TauSeries::new(vec![c(1)], 2);
        assert_eq!(num.div(&TauSeries::new(vec![c(0), c(1)], 2)), Err(Error::NonInvertibleSeries));
        assert_eq!(num.div(&TauSeries::new(vec![&c(1) + &z1], 2)), Err(Error::NonInvertibleSeries));
        assert_eq!(num.div(&TauSeries::new(vec![c(1)], 3)), Err(Error::OrderMismatch(2, 3)));
    }
}
