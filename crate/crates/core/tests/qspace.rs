use cs_d4::qspace::{
    characters_from_q, ground_state, hamiltonian_residual, random_generic_point, special_kappa_identity, TorusPoint,
};
use cs_d4::WeightVector;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn residuals_are_small_with_one_sign() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut signs = Vec::new();
    for m in [WeightVector::new(1, 0, 0, 0), WeightVector::new(0, 1, 0, 0)] {
        for kappa in [0.7, 1.3] {
            for _ in 0..3 {
                let p = random_generic_point(&mut rng);
                let r = hamiltonian_residual(m, kappa, &p, 1e-4).unwrap();
                assert!(r.residual < 1e-6, "P{m} kappa {kappa}: {}", r.residual);
                signs.push(r.sign);
            }
        }
    }
    assert!(signs.iter().all(|&s| s == signs[0]));
}

#[test]
fn second_special_coupling_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..3 {
        let id = special_kappa_identity(2, &random_generic_point(&mut rng)).unwrap();
        assert!(id.relative_error < 1e-8, "{id:?}");
    }
}

#[test]
fn first_special_coupling_is_not_the_sine_product() {
    // P_ρ at κ = 0 is Weyl invariant while the sine product changes sign under
    // a reflection, so the two cannot agree at n = 1.
    let p = TorusPoint::real([0.3, 0.9, 1.4, 2.2]);
    let swapped = TorusPoint::real([0.9, 0.3, 1.4, 2.2]);
    let a = special_kappa_identity(1, &p).unwrap();
    let b = special_kappa_identity(1, &swapped).unwrap();
    assert!((a.lhs - b.lhs).norm() < 1e-9 * a.lhs.norm().max(1.0));
    assert!((a.rhs + b.rhs).norm() < 1e-9 * a.rhs.norm());
    assert!(a.relative_error > 1e-3);
}

#[test]
fn characters_at_the_origin() {
    let z = characters_from_q(&TorusPoint::real([0.0; 4]));
    for (got, want) in z.iter().zip([8.0, 28.0, 8.0, 8.0]) {
        assert!((got - Complex64::new(want, 0.0)).norm() < 1e-12);
    }
    assert!(ground_state(&TorusPoint::real([0.0; 4]), 1.0).norm() < 1e-12);
}
