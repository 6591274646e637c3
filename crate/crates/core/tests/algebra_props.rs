use cs_d4::algebra::{series_div, Exponent};
use cs_d4::fixture::{zpolynomial_from_json, zpolynomial_to_json};
use cs_d4::parse::{parse_kappa_rational, parse_zpolynomial};
use cs_d4::{KPoly, KappaRational, TauSeries, ZPolynomial};
use num_rational::BigRational;
use proptest::prelude::*;

fn kpoly(max_deg: usize) -> impl Strategy<Value = KPoly> {
    prop::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|c| KPoly::from_i64s(&c))
}

/// Denominators built from factors (a + b k) with a ≥ 1, b ≥ 0, so they never
/// vanish at κ ≥ 0.
fn denominator() -> impl Strategy<Value = KPoly> {
    prop::collection::vec((1i64..=4, 0i64..=3), 0..=2)
        .prop_map(|fs| fs.into_iter().fold(KPoly::one(), |acc, (a, b)| &acc * &KPoly::linear(a, b)))
}

fn kappa_rational() -> impl Strategy<Value = KappaRational> {
    (kpoly(2), denominator()).prop_map(|(n, d)| KappaRational::new(n, d).unwrap())
}

fn exponent() -> impl Strategy<Value = Exponent> {
    [0u32..3, 0u32..3, 0u32..3, 0u32..3]
}

fn zpoly() -> impl Strategy<Value = ZPolynomial> {
    prop::collection::vec((exponent(), kappa_rational()), 0..5).prop_map(ZPolynomial::from_terms)
}

fn nonneg_rational() -> impl Strategy<Value = BigRational> {
    (0i64..20, 1i64..7).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in zpoly(), b in zpoly(), c in zpoly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &ZPolynomial::one(), a);
    }

    #[test]
    fn kappa_field_axioms(a in kappa_rational(), b in kappa_rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a);
        }
    }

    #[test]
    fn substitution_is_a_homomorphism(a in zpoly(), b in zpoly(), k in nonneg_rational()) {
        let (sa, sb) = (a.substitute(&k).unwrap(), b.substitute(&k).unwrap());
        prop_assert_eq!((&a + &b).substitute(&k).unwrap(), &sa + &sb);
        prop_assert_eq!((&a * &b).substitute(&k).unwrap(), &sa * &sb);
    }

    #[test]
    fn scalar_substitution_is_a_homomorphism(a in kappa_rational(), b in kappa_rational(), k in nonneg_rational()) {
        let (sa, sb) = (a.substitute(&k).unwrap(), b.substitute(&k).unwrap());
        prop_assert_eq!((&a * &b).substitute(&k).unwrap(), &sa * &sb);
        prop_assert_eq!((&a - &b).substitute(&k).unwrap(), &sa - &sb);
    }

    #[test]
    fn series_division_inverts_multiplication(
        q in prop::collection::vec(zpoly(), 1..5),
        d in prop::collection::vec(zpoly(), 0..4),
        d0 in kappa_rational().prop_filter("invertible", |c| !c.is_zero()),
    ) {
        let order = 3;
        let mut dc = vec![ZPolynomial::constant(d0)];
        dc.extend(d);
        let q = TauSeries::new(q, order);
        let d = TauSeries::new(dc, order);
        prop_assert_eq!(series_div(&q.mul(&d).unwrap(), &d).unwrap(), q);
    }

    #[test]
    fn display_round_trips_through_the_parser(p in zpoly(), r in kappa_rational()) {
        prop_assert_eq!(parse_zpolynomial(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(parse_kappa_rational(&r.to_string()).unwrap(), r);
        prop_assert_eq!(zpolynomial_from_json(&zpolynomial_to_json(&p)).unwrap(), p);
    }
}
