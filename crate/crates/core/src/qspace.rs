//! Numerical checks in the torus coordinates q1..q4.

use num_complex::Complex64;
use num_rational::{BigRational, Ratio};
use rand::Rng;

use crate::algebra::{KappaRational, ZPolynomial};
use crate::error::Error;
use crate::rootsystem::{weight_inner, WeightVector, WEYL_VECTOR};
use crate::solver::{solve, specialize, CSPolynomial};

/// Minimum |sin(q_j ± q_k)| accepted by the finite-difference residual.
pub const SINGULARITY_MARGIN: f64 = 0.1;

/// A point on the (complexified) maximal torus.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TorusPoint {
    pub q: [Complex64; 4],
}

impl TorusPoint {
    pub fn real(q: [f64; 4]) -> Self {
        TorusPoint { q: q.map(|x| Complex64::new(x, 0.0)) }
    }

    /// x_j = exp(2 i q_j).
    pub fn x(&self) -> [Complex64; 4] {
        self.q.map(|q| (Complex64::i() * 2.0 * q).exp())
    }

    /// The square root of x1 x2 x3 x4 on the branch exp(i Σ q_j).
    pub fn x_bar(&self) -> Complex64 {
        (Complex64::i() * self.q.iter().sum::<Complex64>()).exp()
    }

    fn shifted(&self, j: usize, h: f64) -> TorusPoint {
        let mut p = *self;
        p.q[j] += h;
        p
    }

    /// Smallest |sin(q_j ± q_k)| over j < k.
    pub fn singularity_distance(&self) -> f64 {
        pairs()
            .flat_map(|(j, k)| [(self.q[j] - self.q[k]).sin().norm(), (self.q[j] + self.q[k]).sin().norm()])
            .fold(f64::INFINITY, f64::min)
    }
}

fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..4).flat_map(|j| (j + 1..4).map(move |k| (j, k)))
}

/// Values of z1..z4 at a torus point.
pub fn characters_from_q(p: &TorusPoint) -> [Complex64; 4] {
    let x = p.x();
    let xi = x.map(|v| v.inv());
    let xb = p.x_bar();
    let pair_sum: Complex64 = pairs().map(|(i, j)| x[i] * x[j]).sum();
    let pair_inv_sum: Complex64 = pairs().map(|(i, j)| xi[i] * xi[j]).sum();
    let sum_x: Complex64 = x.iter().sum();
    let sum_xi: Complex64 = xi.iter().sum();
    let z1 = sum_x + sum_xi;
    let z2 = pair_sum + pair_inv_sum + sum_xi * sum_x;
    let z3 = xb * sum_xi + sum_x / xb;
    let z4 = xb + xb.inv() + pair_sum / xb;
    [z1, z2, z3, z4]
}

/// Π_{j<k} sin(q_j − q_k) sin(q_j + q_k).
pub fn sine_product(p: &TorusPoint) -> Complex64 {
    pairs().map(|(j, k)| (p.q[j] - p.q[k]).sin() * (p.q[j] + p.q[k]).sin()).product()
}

/// Ground state Ψ0 = (Π sin(q_j − q_k) sin(q_j + q_k))^κ, principal branch.
pub fn ground_state(p: &TorusPoint, kappa: f64) -> Complex64 {
    if kappa == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let s = sine_product(p);
    if s == Complex64::new(0.0, 0.0) {
        return s;
    }
    s.powf(kappa)
}

/// E_0(κ) = 28 κ².
pub fn e0(kappa: f64) -> f64 {
    28.0 * kappa * kappa
}

/// E_m = 2(λ + κρ, λ + κρ) = 2(λ,λ) + 4κ(λ,ρ) + 2κ²(ρ,ρ) from inverse-Cartan inner products.
pub fn energy_from_inner_products(m: WeightVector) -> KappaRational {
    let r = |x: Ratio<i64>| KappaRational::from_rational(&BigRational::new((*x.numer()).into(), (*x.denom()).into()));
    let k = KappaRational::kappa();
    let ll = r(weight_inner(m, m));
    let lr = r(weight_inner(m, WEYL_VECTOR));
    let rr = r(weight_inner(WEYL_VECTOR, WEYL_VECTOR));
    let two = KappaRational::integer(2);
    &(&(&two * &ll) + &(&(&KappaRational::integer(4) * &k) * &lr)) + &(&(&two * &k.pow(2)) * &rr)
}

fn eval_phi(poly: &ZPolynomial, kappa: f64, p: &TorusPoint) -> Complex64 {
    poly.eval_complex(&characters_from_q(p), kappa)
}

/// The q-space operator `½ Σ ∂² + κ Σ_{j<k} [cot(q_j−q_k)(∂_j−∂_k) + cot(q_j+q_k)(∂_j+∂_k)]`
/// applied to a function by second-order central differences.
pub fn q_operator(f: impl Fn(&TorusPoint) -> Complex64, kappa: f64, p: &TorusPoint, h: f64) -> Complex64 {
    let f0 = f(p);
    let mut grad = [Complex64::new(0.0, 0.0); 4];
    let mut lap = Complex64::new(0.0, 0.0);
    for (j, g) in grad.iter_mut().enumerate() {
        let fp = f(&p.shifted(j, h));
        let fm = f(&p.shifted(j, -h));
        *g = (fp - fm) / (2.0 * h);
        lap += (fp - f0 * 2.0 + fm) / (h * h);
    }
    let mut drift = Complex64::new(0.0, 0.0);
    for (j, k) in pairs() {
        let cot = |z: Complex64| z.cos() / z.sin();
        drift += cot(p.q[j] - p.q[k]) * (grad[j] - grad[k]);
        drift += cot(p.q[j] + p.q[k]) * (grad[j] + grad[k]);
    }
    lap * 0.5 + drift * kappa
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Residual {
    /// min over s = ±1 of |(s Δ^κ − ε) Φ| / |ε Φ|.
    pub residual: f64,
    /// The minimizing sign s.
    pub sign: i8,
}

/// Numerically evaluates Φ = P_m at κ on the torus and checks the eigenvalue
/// equation in the q coordinates.
pub fn hamiltonian_residual(m: WeightVector, kappa: f64, p: &TorusPoint, h: f64) -> Result<Residual, Error> {
    let poly = solve(m)?;
    residual_for(&poly, kappa, p, h)
}

/// As [`hamiltonian_residual`] for an already solved polynomial.
pub fn residual_for(poly: &CSPolynomial, kappa: f64, p: &TorusPoint, h: f64) -> Result<Residual, Error> {
    let d = p.singularity_distance();
    if d <= SINGULARITY_MARGIN {
        return Err(Error::NearSingularity(d));
    }
    for (mu, c) in &poly.coefficients {
        let den = c.den().eval_f64(kappa);
        if den.abs() < 1e-12 * c.den().coeffs().len() as f64 {
            return Err(Error::PoleAtKappa { kappa: kappa.to_string(), mu: Some(*mu) });
        }
    }
    let phi = |x: &TorusPoint| eval_phi(&poly.polynomial, kappa, x);
    let eps = poly.eigenvalue.value.eval_f64(kappa);
    let f0 = phi(p);
    let d_phi = q_operator(phi, kappa, p, h);
    let scale = [(f0 * eps).norm(), f0.norm(), 1.0].into_iter().find(|&s| s > 1e-300).unwrap_or(1.0);
    let res = |s: f64| (d_phi * s - f0 * eps).norm() / scale;
    let (plus, minus) = (res(1.0), res(-1.0));
    Ok(if minus <= plus { Residual { residual: minus, sign: -1 } } else { Residual { residual: plus, sign: 1 } })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpecialIdentity {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub relative_error: f64,
}

/// Compares P_{nρ} at κ = −(n−1)/2 with (−1)^n 2^{12n} (Π sin(q_j−q_k) sin(q_j+q_k))^n.
pub fn special_kappa_identity(n: u32, p: &TorusPoint) -> Result<SpecialIdentity, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let k = n as i64;
    let poly = solve(WeightVector::new(k, k, k, k))?;
    let kappa0 = BigRational::new((1 - k).into(), 2.into());
    let specialized = specialize(&poly, &kappa0)?;
    let lhs = specialized.eval_complex(&characters_from_q(p), 0.0);
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let rhs = sine_product(p).powu(n) * sign * 2f64.powi(12 * n as i32);
    let scale = lhs.norm().max(rhs.norm());
    let relative_error = if scale == 0.0 { 0.0 } else { (lhs - rhs).norm() / scale };
    Ok(SpecialIdentity { lhs, rhs, relative_error })
}

/// A real point with every |sin(q_j ± q_k)| above the singularity margin,
/// drawn uniformly from [0, π)^4 by rejection.
pub fn random_generic_point<R: Rng + ?Sized>(rng: &mut R) -> TorusPoint {
    loop {
        let p = TorusPoint::real(std::array::from_fn(|_| rng.gen_range(0.0..std::f64::consts::PI)));
        if p.singularity_distance() > 2.0 * SINGULARITY_MARGIN {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::energy;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_point_gives_dimensions() {
        let z = characters_from_q(&TorusPoint::real([0.0; 4]));
        for (v, want) in z.iter().zip([8.0, 28.0, 8.0, 8.0]) {
            assert!((v - want).norm() < 1e-12);
        }
    }

    #[test]
    fn characters_are_real_and_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let p = random_generic_point(&mut rng);
            let z = characters_from_q(&p);
            assert!(z.iter().all(|v| v.im.abs() < 1e-12));
            let swapped = TorusPoint { q: [p.q[2], p.q[1], p.q[0], p.q[3]] };
            assert!((characters_from_q(&swapped)[0] - z[0]).norm() < 1e-12);
        }
    }

    #[test]
    fn ground_state_examples() {
        let p = TorusPoint::real([0.3, 0.9, 1.7, 2.4]);
        assert_eq!(ground_state(&p, 0.0), Complex64::new(1.0, 0.0));
        assert_eq!(ground_state(&TorusPoint::real([0.3, 0.3, 1.7, 2.4]), 1.0).norm(), 0.0);
        assert_eq!(e0(2.0), 112.0);
    }

    #[test]
    fn energies_match_inner_products() {
        for a in 0..=3 {
            for b in 0..=3 - a {
                for c in 0..=3 - a - b {
                    for d in 0..=3 - a - b - c {
                        let m = WeightVector::new(a, b, c, d);
                        assert_eq!(energy(m).unwrap(), energy_from_inner_products(m), "{m}");
                    }
                }
            }
        }
    }

    #[test]
    fn residual_examples() {
        let p = TorusPoint::real([0.31, 0.97, 1.73, 2.52]);
        let r = hamiltonian_residual(WeightVector::new(1, 0, 0, 0), 1.0, &p, 1e-4).unwrap();
        assert!(r.residual < 1e-6, "{r:?}");
        assert_eq!(r.sign, -1);
        let r = hamiltonian_residual(WeightVector::new(0, 0, 0, 0), 0.4, &p, 1e-4).unwrap();
        assert!(r.residual < 1e-12, "{r:?}");
        let r = hamiltonian_residual(WeightVector::new(1, 1, 0, 0), 0.7, &p, 1e-4).unwrap();
        assert!(r.residual < 1e-6, "{r:?}");
        let near = TorusPoint::real([0.3, 0.32, 1.7, 2.4]);
        assert!(matches!(
            hamiltonian_residual(WeightVector::new(1, 0, 0, 0), 1.0, &near, 1e-4),
            Err(Error::NearSingularity(_))
        ));
    }
}
