//! The Calogero–Sutherland operator written in the characters z1..z4.
//!
//! `L` is normalized so that `L P_m = ε_m P_m`. It is available in two
//! independent forms: as a second-order differential operator with polynomial
//! coefficients ([`apply_l`]) and through its closed-form action on single
//! monomials ([`apply_l_monomial`]).

use std::fmt;
use std::sync::OnceLock;

use crate::algebra::{Exponent, KPoly, KappaRational, Var, ZPolynomial};
use crate::error::Error;
use crate::parse::parse_zpolynomial;
use crate::rootsystem::{root_to_weight, RootVector, WeightVector};

/// An eigenvalue ε_m, a polynomial in κ of degree at most one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenvalue {
    pub value: KappaRational,
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// ε for an arbitrary integer 4-tuple, without a dominance check.
pub(crate) fn epsilon_raw(m: [i64; 4]) -> KappaRational {
    let [m1, m2, m3, m4] = m;
    let c0 =
        2 * (m1 * m1 + m3 * m3 + m4 * m4) + 4 * m2 * m2 + 2 * (m1 * m3 + m1 * m4 + m3 * m4) + 4 * m2 * (m1 + m3 + m4);
    let c1 = 12 * (m1 + m3 + m4) + 20 * m2;
    KappaRational::linear(c0, c1)
}

pub fn epsilon(m: WeightVector) -> Result<Eigenvalue, Error> {
    m.ensure_dominant()?;
    Ok(Eigenvalue { value: epsilon_raw(m.0) })
}

/// Ground-state energy E_0 = 28 κ².
pub fn ground_energy() -> KappaRational {
    KappaRational::from_poly(KPoly::from_i64s(&[0, 0, 28]))
}

/// Full energy E_m = ε_m + E_0.
pub fn energy(m: WeightVector) -> Result<KappaRational, Error> {
    Ok(&epsilon(m)?.value + &ground_energy())
}

struct Coefficients {
    /// Second-order coefficients for ∂i∂j, i ≤ j.
    second: Vec<(Var, Var, ZPolynomial)>,
    first: Vec<(Var, ZPolynomial)>,
}

fn coefficients() -> &'static Coefficients {
    static CELL: OnceLock<Coefficients> = OnceLock::new();
    CELL.get_or_init(|| {
        use Var::*;
        let p = |s: &str| {
            let half = parse_zpolynomial(s).expect("built-in coefficient");
            half.scale(&KappaRational::integer(2))
        };
        Coefficients {
            second: vec![
                (Z1, Z1, p("z1^2 - 2*z2 - 8")),
                (Z2, Z2, p("2*z2^2 - 4*(z1^2 + z3^2 + z4^2) - 2*z1*z3*z4 + 8*z2")),
                (Z3, Z3, p("z3^2 - 2*z2 - 8")),
                (Z4, Z4, p("z4^2 - 2*z2 - 8")),
                (Z1, Z2, p("2*z1*z2 - 6*z3*z4 - 8*z1")),
                (Z1, Z3, p("z1*z3 - 8*z4")),
                (Z1, Z4, p("z1*z4 - 8*z3")),
                (Z2, Z3, p("2*z2*z3 - 6*z1*z4 - 8*z3")),
                (Z2, Z4, p("2*z2*z4 - 6*z1*z3 - 8*z4")),
                (Z3, Z4, p("z3*z4 - 8*z1")),
            ],
            first: vec![
                (Z1, p("(6*k + 1)*z1")),
                (Z2, p("2*(5*k + 1)*z2 + 8*(k - 1)")),
                (Z3, p("(6*k + 1)*z3")),
                (Z4, p("(6*k + 1)*z4")),
            ],
        }
    })
}

/// Applies L as a differential operator, term by term.
pub fn apply_l(p: &ZPolynomial) -> ZPolynomial {
    let c = coefficients();
    let mut out = ZPolynomial::zero();
    let firsts: Vec<ZPolynomial> = Var::ALL.iter().map(|&v| p.derive(v)).collect();
    for (v, coeff) in &c.first {
        let d = &firsts[v.index()];
        if !d.is_zero() {
            out = &out + &(coeff * d);
        }
    }
    for (a, b, coeff) in &c.second {
        let d = firsts[a.index()].derive(*b);
        if !d.is_zero() {
            out = &out + &(coeff * &d);
        }
    }
    out
}

/// Root-basis shifts of the lowering families, in a fixed order: α_i (4),
/// α2+α_j (3), α2+α_i+α_j (3), 2α2+α_i+α_j (3), λ2 (1), λ2+α_j (3), with
/// j ∈ {1,3,4} and ij ∈ {13,14,34}. λ2 = α1+2α2+α3+α4 is the highest root.
pub const LOWERING_SHIFTS: [RootVector; 17] = [
    RootVector([1, 0, 0, 0]),
    RootVector([0, 1, 0, 0]),
    RootVector([0, 0, 1, 0]),
    RootVector([0, 0, 0, 1]),
    RootVector([1, 1, 0, 0]),
    RootVector([0, 1, 1, 0]),
    RootVector([0, 1, 0, 1]),
    RootVector([1, 1, 1, 0]),
    RootVector([1, 1, 0, 1]),
    RootVector([0, 1, 1, 1]),
    RootVector([1, 2, 1, 0]),
    RootVector([1, 2, 0, 1]),
    RootVector([0, 2, 1, 1]),
    RootVector([1, 2, 1, 1]),
    RootVector([2, 2, 1, 1]),
    RootVector([1, 2, 2, 1]),
    RootVector([1, 2, 1, 2]),
];

/// Coefficients of the lowering families on z^m, aligned with
/// [`LOWERING_SHIFTS`], so that `L z^m = ε_m z^m − Σ c_f z^{m − w(s_f)}`.
pub fn lowering_coefficients(m: [i64; 4]) -> [KappaRational; 17] {
    const I: [usize; 3] = [0, 2, 3];
    const T: [(usize, usize); 3] = [(0, 2), (0, 3), (2, 3)];
    let a: [i64; 4] = std::array::from_fn(|i| 4 * m[i] * (m[i] - 1));
    let s: i64 = I.iter().map(|&j| m[j]).sum();
    let mut c: [i64; 17] = [0; 17];
    c[..4].copy_from_slice(&a);
    for (f, j) in I.into_iter().enumerate() {
        c[4 + f] = 12 * m[1] * m[j];
        c[14 + f] = 4 * a[j];
    }
    for (f, (i, j)) in T.into_iter().enumerate() {
        c[7 + f] = 16 * m[i] * m[j];
        c[10 + f] = 2 * a[1];
    }
    let mut out = c.map(KappaRational::integer);
    out[13] = KappaRational::linear(16 * m[1] * (2 - m[1] + s), -16 * m[1]);
    out
}

/// The nonvanishing lowering terms on z^m as (shift, coefficient) pairs.
pub fn lowering_terms(m: [i64; 4]) -> Vec<(RootVector, KappaRational)> {
    LOWERING_SHIFTS.into_iter().zip(lowering_coefficients(m)).filter(|(_, c)| !c.is_zero()).collect()
}

/// L z^e through the closed-form monomial action.
pub fn apply_l_monomial(e: Exponent) -> ZPolynomial {
    let m: [i64; 4] = e.map(i64::from);
    let mut out = ZPolynomial::monomial(e, epsilon_raw(m));
    for (s, c) in lowering_terms(m) {
        let w = root_to_weight(s);
        let target = WeightVector(m) - w;
        let f = target
            .to_exponent()
            .unwrap_or_else(|| panic!("lowering term {s} with nonzero coefficient leaves the monomial ring at {e:?}"));
        out.add_term(f, &-c);
    }
    out
}

/// `[L, z_v] p = L(z_v p) − z_v L(p)`.
pub fn commutator_with(v: Var, p: &ZPolynomial) -> ZPolynomial {
    &apply_l(&p.mul_var(v)) - &apply_l(p).mul_var(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_zpolynomial as zp;
    use crate::rootsystem::{weight_to_root, Triality};

    fn k(a: i64, b: i64) -> KappaRational {
        KappaRational::linear(a, b)
    }

    #[test]
    fn epsilon_examples() {
        let e = |a, b, c, d| epsilon(WeightVector::new(a, b, c, d)).unwrap().value;
        assert_eq!(e(1, 0, 0, 0), k(2, 12));
        assert_eq!(e(0, 0, 0, 0), KappaRational::zero());
        assert_eq!(e(0, 1, 0, 0), k(4, 20));
        assert_eq!(e(1, 1, 0, 0), k(10, 32));
        assert!(epsilon(WeightVector::new(0, -1, 0, 0)).is_err());
    }

    #[test]
    fn operator_examples() {
        assert_eq!(apply_l(&ZPolynomial::one()), ZPolynomial::zero());
        assert_eq!(apply_l(&zp("z1").unwrap()), zp("(2+12*k)*z1").unwrap());
        let want = zp("(8+24*k)*z1^2 - 8*z2 - 32").unwrap();
        assert_eq!(apply_l(&zp("z1^2").unwrap()), want);
        assert_eq!(apply_l_monomial([2, 0, 0, 0]), want);
        assert_eq!(apply_l_monomial([1, 0, 0, 0]), zp("(2+12*k)*z1").unwrap());
        assert_eq!(apply_l_monomial([0; 4]), ZPolynomial::zero());
    }

    #[test]
    fn two_forms_agree_exhaustively() {
        for n in 0..256u32 {
            let e = [n % 4, (n / 4) % 4, (n / 16) % 4, n / 64];
            let direct = apply_l(&ZPolynomial::monomial(e, KappaRational::one()));
            assert_eq!(direct, apply_l_monomial(e), "exponent {e:?}");
        }
    }

    #[test]
    fn commutator_examples() {
        let one = ZPolynomial::one();
        assert_eq!(commutator_with(Var::Z1, &one), zp("(2+12*k)*z1").unwrap());
        assert_eq!(commutator_with(Var::Z3, &one), zp("(2+12*k)*z3").unwrap());
        assert_eq!(commutator_with(Var::Z1, &zp("z1").unwrap()), zp("(6+12*k)*z1^2 - 8*z2 - 32").unwrap());
    }

    #[test]
    fn triality_equivariance() {
        let p = zp("z1^2*z3 - k*z2*z4 + 3/(1+k)*z1*z3*z4 + z2^2").unwrap();
        let lp = apply_l(&p);
        for s in Triality::all() {
            let perm = |i| s.slot(i);
            assert_eq!(apply_l(&p.permute_vars(perm)), lp.permute_vars(perm));
        }
    }

    #[test]
    fn shift_table_matches_families() {
        let a = |i| RootVector::simple(i);
        let lambda2 = a(0) + a(1) + a(1) + a(2) + a(3);
        assert_eq!(LOWERING_SHIFTS[4], a(1) + a(0));
        assert_eq!(LOWERING_SHIFTS[9], a(1) + a(2) + a(3));
        assert_eq!(LOWERING_SHIFTS[11], a(1) + a(1) + a(0) + a(3));
        assert_eq!(LOWERING_SHIFTS[13], lambda2);
        assert_eq!(LOWERING_SHIFTS[16], lambda2 + a(3));
        assert_eq!(root_to_weight(lambda2), WeightVector::new(0, 1, 0, 0));
    }

    #[test]
    fn lowered_monomials_lie_in_the_cone() {
        for n in 0..625u32 {
            let e = [n % 5, (n / 5) % 5, (n / 25) % 5, n / 125];
            let m = WeightVector::from_exponent(e);
            for (f, _) in apply_l_monomial(e).terms() {
                let mu = weight_to_root(m - WeightVector::from_exponent(*f)).expect("root lattice");
                assert!(mu.is_nonnegative(), "{e:?} -> {f:?}");
            }
        }
    }
}
