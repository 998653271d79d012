//! The process and its derived functionals checked against independent
//! formulas: iterated `partial_derivative` calls for Ω, `a!·[x^a]det^r` for
//! the constant term of `Ω^r`, and `s(s+1)...(s+n-1)` for `α_s`.

use omega_forge_core::invariantize::{second_rule_matrix, second_rule_residual, ConstantTermFunctional};
use omega_forge_core::omega::{cayley_constants, first_rule_check, OmegaOperator, Process};
use omega_forge_core::polycore::{determinant, permutations};
use omega_forge_core::reps::{binary_form_coefficients, binary_forms_module, semi_invariant_oracle};
use omega_forge_core::linalg::Span;
use omega_forge_core::{Monomial, Polynomial, Rational, Ring, Var};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn omega_by_derivatives(f: &Polynomial, n: usize) -> Polynomial {
    let mut total = Polynomial::zero(f.ring());
    for (perm, sign) in permutations(n) {
        let mut g = f.clone();
        for (i, &j) in perm.iter().enumerate() {
            g = g.partial_derivative(Var::x(i as u8 + 1, j as u8 + 1)).unwrap();
        }
        total = if sign > 0 { &total + &g } else { &total - &g };
    }
    total
}

fn factorial(k: u32) -> Rational {
    (1..=k).fold(Rational::one(), |acc, i| acc * Rational::from_integer(i.into()))
}

fn rat(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

fn poly_strategy(n: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let nn = n * n;
    let coefficient = prop_oneof![-5i64..=-1, 1i64..=5];
    prop::collection::vec((prop::collection::vec(0..=max_deg, nn), coefficient), 1..=max_terms).prop_map(
        move |terms| {
            let ring = Ring::matrix(n);
            Polynomial::from_terms(
                &ring,
                terms.into_iter().map(|(mut e, c)| {
                    // trim to total degree ≤ max_deg
                    let mut budget = max_deg;
                    for x in e.iter_mut() {
                        *x = (*x).min(budget);
                        budget -= *x;
                    }
                    (Monomial::from_exponents(e), rat(c))
                }),
            )
            .unwrap()
        },
    )
}

fn homogeneous_strategy(n: usize, deg: u32) -> impl Strategy<Value = Polynomial> {
    let nn = n * n;
    prop::collection::vec((prop::collection::vec(0..nn, deg as usize), -5i64..=5), 1..=5).prop_map(move |terms| {
        let ring = Ring::matrix(n);
        Polynomial::from_terms(
            &ring,
            terms.into_iter().map(|(slots, c)| {
                let mut e = vec![0u32; nn];
                for s in slots {
                    e[s] += 1;
                }
                (Monomial::from_exponents(e), rat(c))
            }),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn omega_matches_iterated_partials_n2(f in poly_strategy(2, 4, 6)) {
        let op = OmegaOperator::new(2).unwrap();
        prop_assert_eq!(op.apply(&f).unwrap(), omega_by_derivatives(&f, 2));
    }

    #[test]
    fn omega_matches_iterated_partials_n3(f in poly_strategy(3, 4, 5)) {
        let op = OmegaOperator::new(3).unwrap();
        prop_assert_eq!(op.apply(&f).unwrap(), omega_by_derivatives(&f, 3));
    }

    #[test]
    fn omega_lowers_homogeneous_degree_by_n(f in homogeneous_strategy(2, 5)) {
        let op = OmegaOperator::new(2).unwrap();
        let g = op.apply(&f).unwrap();
        prop_assert!(g.is_zero() || g.homogeneous_degree() == Some(3));
    }

    #[test]
    fn first_rule_n2(f in poly_strategy(2, 4, 4)) {
        let op = OmegaOperator::new(2).unwrap();
        let report = first_rule_check(&op, &f).unwrap();
        prop_assert!(report.passed());
    }

    #[test]
    fn constant_term_of_powers(f in homogeneous_strategy(2, 4)) {
        // ν(Ω²(x^a)) = a!·[x^a] det²
        let op = OmegaOperator::new(2).unwrap();
        let det2 = determinant(&Ring::matrix(2), 2, b'x').unwrap().pow(2);
        let mut expected = Rational::zero();
        for (m, c) in f.terms() {
            let a_fact = m.exponents().iter().fold(Rational::one(), |acc, &e| acc * factorial(e));
            expected += c * a_fact * det2.coefficient(m);
        }
        let mut functional = ConstantTermFunctional::new(&op);
        prop_assert_eq!(functional.eval(&f, 2).unwrap(), expected);
    }
}

#[test]
fn cayley_constants_match_the_product_formula() {
    for (n, s_max) in [(2usize, 6u32), (3, 3)] {
        let op = OmegaOperator::new(n).unwrap();
        let k = cayley_constants(&op, s_max).unwrap();
        let mut c = Rational::one();
        for s in 1..=s_max {
            let alpha = (0..n as i64).fold(Rational::one(), |acc, i| acc * rat(s as i64 + i));
            assert_eq!(k.alpha(s), Some(&alpha), "n={n} s={s}");
            c *= alpha;
            assert_eq!(k.c(s), Some(&c));
        }
    }
}

#[test]
fn det3_power_oracle() {
    let op = OmegaOperator::new(3).unwrap();
    let det = op.character().clone();
    assert_eq!(op.power(&det.pow(2), 2).unwrap(), Polynomial::constant(det.ring(), rat(6 * 24)));
}

#[test]
fn second_rule_on_binary_forms_matches_oracle() {
    let op = OmegaOperator::new(2).unwrap();
    for d in 1..=3u32 {
        for module in [binary_forms_module(d).unwrap(), binary_form_coefficients(d).unwrap()] {
            let degree = module.homogeneous_degree().unwrap();
            for s in 0..=1u32 {
                if degree % 2 != 0 {
                    continue;
                }
                let r = degree / 2 + s;
                let m = second_rule_matrix(&op, &module, r, s).unwrap();
                let oracle = Span::from_vectors(module.dim(), semi_invariant_oracle(&module, r - s).unwrap());
                for j in 0..module.dim() {
                    let col: Vec<Rational> = m.iter().map(|row| row[j].clone()).collect();
                    assert!(oracle.contains(&col));
                    assert!(second_rule_residual(&op, &module, &col, r, s).unwrap().iter().all(Polynomial::is_zero));
                }
            }
        }
    }
}
