use num_traits::Zero;
use omega_forge_core::omega::{a_omega_classical, omega_on_semiinvariant, OmegaImage, OmegaOperator, SemiInvariantWitness};
use omega_forge_core::weightlattice::{
    dominance_leq, ideal_check, matrix_monoid_cone, omega_coefficient_family, polynomial_dominant_weights,
    saturation_check, CoefficientStatus, RationalCone, TruncationBox, Weight,
};
use proptest::prelude::*;

fn weight(n: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-3i64..=3, n).prop_map(Weight::new)
}

fn cone(dim: usize) -> impl Strategy<Value = RationalCone> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, dim), 0..=4)
        .prop_map(move |g| RationalCone::from_integer_generators(dim, &g).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn dominance_is_a_partial_order(a in weight(3), b in weight(3), c in weight(3)) {
        prop_assert!(dominance_leq(&a, &a).unwrap());
        if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &c).unwrap() {
            prop_assert!(dominance_leq(&a, &c).unwrap());
        }
    }

    #[test]
    fn dual_is_an_involution(c in cone(3)) {
        let dd = c.dual().dual();
        for g in c.generators() {
            prop_assert!(dd.contains(g));
        }
        for g in dd.generators() {
            prop_assert!(c.contains(g));
        }
    }

    #[test]
    fn dual_generators_pair_nonnegatively(c in cone(3)) {
        for y in c.dual().generators() {
            prop_assert!(c.dual_contains(y));
        }
    }

    #[test]
    fn certificates_are_strictly_positive(c in cone(2)) {
        if let Ok(y) = c.strict_convexity_certificate() {
            for g in c.generators() {
                let pairing: omega_forge_core::Rational = g.iter().zip(&y).map(|(a, b)| a * b).sum();
                prop_assert!(g.iter().all(Zero::is_zero) || pairing > omega_forge_core::Rational::zero());
            }
        } else {
            prop_assert!(!c.is_strictly_convex());
        }
    }
}

#[test]
fn m2_polynomial_weights_are_the_nonnegative_dominant_ones() {
    let b = TruncationBox::symmetric(4);
    let pw = polynomial_dominant_weights(&matrix_monoid_cone(2), 2, b).unwrap();
    let mut expected: Vec<Weight> =
        (0..=4).flat_map(|i| (0..=i).map(move |j| Weight::new(vec![i, j]))).collect();
    expected.sort();
    assert_eq!(pw.weights, expected);
    assert!(saturation_check(&pw.weights, 2, b, 4).passed());
    assert!(ideal_check(&pw.weights, 2, b).passed());
    for a in &pw.weights {
        for c in &pw.weights {
            let s = a.checked_add(c).unwrap();
            if b.contains(&s) {
                assert!(pw.contains(&s), "{a} + {c}");
            }
        }
    }
}

#[test]
fn m3_weights_and_checks() {
    let b = TruncationBox::symmetric(2);
    let pw = polynomial_dominant_weights(&matrix_monoid_cone(3), 3, b).unwrap();
    assert!(pw.weights.iter().all(|w| w.coords()[2] >= 0 && w.is_dominant()));
    assert!(saturation_check(&pw.weights, 3, b, 4).passed());
    assert!(ideal_check(&pw.weights, 3, b).passed());
}

#[test]
fn coefficient_family_agrees_with_classical_process() {
    let op = OmegaOperator::new(2).unwrap();
    let pw = polynomial_dominant_weights(&matrix_monoid_cone(2), 2, TruncationBox::symmetric(4)).unwrap();
    let family = omega_coefficient_family(&Weight::new(vec![1, 1]), &pw).unwrap();
    for (mu, status) in &family.entries {
        // μ = r_1 ω_1 + r (1, 1)
        let (r1, r) = ((mu.coords()[0] - mu.coords()[1]) as u32, mu.coords()[1] as u32);
        let w = SemiInvariantWitness::minor_product(2, &[r1], r).unwrap();
        let image = omega_on_semiinvariant(&op, &w).unwrap();
        match status {
            CoefficientStatus::Free => {
                let a = a_omega_classical(&op, &[r1], r).unwrap();
                assert!(!a.is_zero(), "a at {mu} vanished");
                assert!(matches!(image, OmegaImage::Witness(_)));
            }
            CoefficientStatus::ForcedZero => assert_eq!(image, OmegaImage::Zero, "{mu}"),
        }
    }
}
