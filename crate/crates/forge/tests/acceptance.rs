//! One verdict line per acceptance criterion, with exact tolerances.
//! Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use omega_forge::suite::{module_catalog, random_polynomial, random_vector};
use omega_forge_core::invariantize::{
    check_projection, check_reynolds, hilbert_generators, integral_j, integral_sweedler_residuals,
    reynolds_rational, second_rule_is_morphism, second_rule_matrix, second_rule_residual, HilbertOptions,
};
use omega_forge_core::linalg::{mat_vec, Span};
use omega_forge_core::omega::{
    a_omega_classical, cayley_constants, first_rule_check, OmegaOperator, Process, SemiInvariantWitness,
};
use omega_forge_core::polycore::{determinant, lower_right_minor};
use omega_forge_core::reps::{
    binary_forms_module, semi_invariant_oracle, PolynomialComodule, RationalRep, DEFAULT_DIMENSION_CAP,
};
use omega_forge_core::weightlattice::{
    ideal_check, matrix_monoid_cone, omega_coefficient_family, polynomial_dominant_weights, saturation_check,
    CoefficientStatus, TruncationBox, Weight,
};
use omega_forge_core::{Polynomial, Rational, Result, Ring};

type Verdict = Result<std::result::Result<String, String>>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn pass(detail: impl Into<String>) -> Verdict {
    Ok(Ok(detail.into()))
}

fn fail(detail: impl Into<String>) -> Verdict {
    Ok(Err(detail.into()))
}

fn rat(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

fn first_rule() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut checked = 0;
    for (n, count, degree) in [(2, 50, 4), (3, 20, 3)] {
        let op = OmegaOperator::new(n)?;
        let ring = Ring::matrix(n);
        for _ in 0..count {
            let f = random_polynomial(&mut rng, &ring, degree);
            let report = first_rule_check(&op, &f)?;
            if let Some(r) = report.residual() {
                return fail(format!("n = {n}, f = {f}: residual with {} terms", r.num_terms()));
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(120) {
        return fail(format!("{checked} polynomials exact but took {elapsed:.1?} (limit 120 s)"));
    }
    pass(format!("{checked} random polynomials (50 at n = 2, 20 at n = 3), zero residual, {elapsed:.1?}"))
}

/// `Ω(det^s)` compared with `s(s+1)...(s+n-1) det^{s-1}` built independently.
fn cayley() -> Verdict {
    for (n, s_max) in [(2usize, 6u32), (3, 3)] {
        let op = OmegaOperator::new(n)?;
        let ring = Ring::matrix(n);
        let det = determinant(&ring, n, b'x')?;
        let constants = cayley_constants(&op, s_max)?;
        let mut product = Rational::one();
        for s in 1..=s_max {
            let expected: Rational = (0..n as i64).map(|i| rat(i64::from(s) + i)).product();
            let image = op.apply(&det.pow(s))?;
            if image != det.pow(s - 1).scale(&expected) {
                return fail(format!("n = {n}: Omega(det^{s}) != {expected} det^{}", s - 1));
            }
            if constants.alpha(s) != Some(&expected) || expected.is_zero() {
                return fail(format!("n = {n}: alpha_{s} = {:?}", constants.alpha(s)));
            }
            product *= &expected;
            if constants.c(s) != Some(&product) {
                return fail(format!("n = {n}: c_{s} = {:?}, product {product}", constants.c(s)));
            }
        }
    }
    let op = OmegaOperator::new(2)?;
    let det = determinant(&Ring::matrix(2), 2, b'x')?;
    let iterated = op.power(&det.pow(2), 2)?;
    let product = cayley_constants(&op, 2)?.alphas.values().product::<Rational>();
    if iterated != Polynomial::constant(det.ring(), rat(12)) || product != rat(12) {
        return fail(format!("c_2: iterated {iterated}, product {product}"));
    }
    pass("alpha_s exact for s <= 6 (n = 2) and s <= 3 (n = 3), all nonzero; c_2 = 12 by iteration and by product")
}

fn acceptance_modules() -> Result<Vec<(String, PolynomialComodule)>> {
    let mut modules = module_catalog(2, 4, 3)?;
    for (name, m) in module_catalog(3, 1, 2)? {
        modules.push((format!("{name} (n = 3)"), m));
    }
    Ok(modules)
}

fn exponent_pairs(m: &PolynomialComodule) -> Vec<(u32, u32)> {
    let mut pairs = vec![(1, 1), (2, 1)];
    if let Some(d) = m.homogeneous_degree() {
        let n = m.n() as u32;
        if d % n == 0 {
            let k = d / n;
            pairs.extend([(k + 1, 1), (k + 2, 2)]);
            if k > 0 {
                pairs.push((k, 0));
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

fn second_rule(modules: &[(String, PolynomialComodule)]) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut cases = 0;
    for (name, m) in modules {
        let op = OmegaOperator::new(m.n())?;
        for (r, s) in exponent_pairs(m) {
            let matrix = second_rule_matrix(&op, m, r, s)?;
            if !second_rule_is_morphism(m, &matrix)? {
                return fail(format!("{name}: I_{{{r},{s}}} does not commute with C"));
            }
            let oracle = Span::from_vectors(m.dim(), semi_invariant_oracle(m, r - s)?);
            for _ in 0..3 {
                let v = random_vector(&mut rng, m.dim());
                let w = mat_vec(&matrix, &v);
                if second_rule_residual(&op, m, &w, r, s)?.iter().any(|p| !p.is_zero()) {
                    return fail(format!("{name}: det^{s} C w != det^{r} w"));
                }
                if !oracle.contains(&w) {
                    return fail(format!("{name}: I_{{{r},{s}}}(v) outside the oracle semi-invariants"));
                }
                cases += 1;
            }
        }
    }
    pass(format!("{} modules, {cases} sampled vectors: semi-invariance identity exact, every output in the oracle space", modules.len()))
}

fn integral_and_reynolds(modules: &[(String, PolynomialComodule)]) -> Verdict {
    let op = OmegaOperator::new(2)?;
    let ring = Ring::matrix(2);
    let j1 = integral_j(&op, &Polynomial::one(&ring))?;
    if !j1.is_one() {
        return fail(format!("J(1) = {j1}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    for _ in 0..30 {
        let f = random_polynomial(&mut rng, &ring, 4);
        let (right, left) = integral_sweedler_residuals(&op, &f)?;
        if !right.is_zero() || !left.is_zero() {
            return fail(format!("Sweedler identity fails for {f}"));
        }
    }
    let mut invariant_dims = 0;
    for (name, m) in modules {
        let op = OmegaOperator::new(m.n())?;
        let check = check_reynolds(&op, m)?;
        if !check.passed() {
            return fail(format!("{name}: {check:?}"));
        }
        invariant_dims += check.invariant_dim;
    }
    let v = RationalRep::from_polynomial(&binary_forms_module(2)?)?;
    let rep = v.tensor(&v.contragredient()?)?;
    let chi = rep.polynomial_twist()?;
    let k = rep.minimal_twist_exponent() as u32;
    let check = check_projection(&reynolds_rational(&op, &rep)?, &semi_invariant_oracle(&chi, k)?);
    if !check.passed() || check.invariant_dim != 1 {
        return fail(format!("B2 (x) B2^: {check:?}"));
    }
    pass(format!(
        "J(1) = 1; two-sided Sweedler exact on 30 samples; R^2 = R, fixes and lands in oracle invariants on {} modules ({invariant_dims} invariants) and on B2 (x) B2^",
        modules.len()
    ))
}

fn proportional(a: &Polynomial, b: &Polynomial) -> bool {
    let Some((m, c)) = b.leading_term() else { return a.is_zero() };
    let k = a.coefficient(m) / c;
    !k.is_zero() && *a == b.scale(&k)
}

fn classical() -> Verdict {
    let start = Instant::now();
    let op = OmegaOperator::new(2)?;
    let options = |b| HilbertOptions { degree_bound: b, twist: 0, dimension_cap: DEFAULT_DIMENSION_CAP };
    let quadratic = hilbert_generators(&op, 2, &options(4))?;
    let gens: Vec<_> = quadratic.generators().collect();
    let disc = Polynomial::parse("b^2 - 4*a*c", &Ring::form_coefficients(2))?;
    if gens.len() != 1 || gens[0].0 != 2 || !proportional(gens[0].1, &disc) {
        return fail(format!("quadratic generators {gens:?}"));
    }
    let quartic = hilbert_generators(&op, 4, &options(3))?;
    let ring4 = Ring::form_coefficients(4);
    let i = Polynomial::parse("12*a*e - 3*b*d + c^2", &ring4)?;
    let j = Polynomial::parse("72*a*c*e + 9*b*c*d - 27*a*d^2 - 27*e*b^2 - 2*c^3", &ring4)?;
    let dims: Vec<_> = quartic.degrees.iter().map(|d| (d.process_dim, d.oracle_dim)).collect();
    if dims != [(0, 0), (1, 1), (1, 1)] {
        return fail(format!("quartic (process, oracle) dimensions {dims:?}"));
    }
    let g2 = &quartic.degrees[1].generators;
    let g3 = &quartic.degrees[2].generators;
    if g2.len() != 1 || g3.len() != 1 || !proportional(&g2[0], &i) || !proportional(&g3[0], &j) {
        return fail("quartic generators are not I and J");
    }
    if !quadratic.agreement() || !quartic.agreement() {
        return fail("process and oracle disagree");
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(300) {
        return fail(format!("took {elapsed:.1?} (limit 300 s)"));
    }
    pass(format!(
        "quadratic: one generator ~ b^2 - 4ac through degree 4; quartic: dims 1, 1 at degrees 2, 3 (~ I, J), oracle agreement; {elapsed:.1?}"
    ))
}

fn weights() -> Verdict {
    let n = 2;
    let bounds = TruncationBox::symmetric(4);
    let pw = polynomial_dominant_weights(&matrix_monoid_cone(n), n, bounds)?;
    let mut expected: Vec<Weight> = (0..=4).flat_map(|a| (0..=a).map(move |b| Weight::new(vec![a, b]))).collect();
    expected.sort();
    if pw.weights != expected {
        return fail(format!("polynomial dominant weights {:?}", pw.weights));
    }
    let sat = saturation_check(&pw.weights, n, bounds, 4);
    let ideal = ideal_check(&pw.weights, n, bounds);
    if !sat.passed() || !ideal.passed() {
        return fail(format!("{} saturation and {} ideal violations", sat.violations.len(), ideal.violations.len()));
    }
    let op = OmegaOperator::new(n)?;
    let ring = Ring::matrix(n);
    let f1 = lower_right_minor(&ring, n, 1, b'x')?;
    for r1 in 0..=4u32 {
        let image = op.apply(&f1.pow(r1))?;
        if !image.is_zero() {
            return fail(format!("Omega(f1^{r1}) = {image}"));
        }
    }
    let family = omega_coefficient_family(&Weight::det_power(n, 1), &pw)?;
    let mut free = 0;
    for (mu, status) in &family.entries {
        let (r1, r) = ((mu.coords()[0] - mu.coords()[1]) as u32, mu.coords()[1] as u32);
        match status {
            CoefficientStatus::Free => {
                let a = a_omega_classical(&op, &[r1], r)?;
                let w = SemiInvariantWitness::minor_product(n, &[r1], r)?;
                if a.is_zero() || op.apply(w.polynomial())?.is_zero() {
                    return fail(format!("free weight {mu} has a = 0"));
                }
                free += 1;
            }
            CoefficientStatus::ForcedZero if r != 0 => return fail(format!("{mu} forced to zero with r = {r}")),
            CoefficientStatus::ForcedZero => {}
        }
    }
    pass(format!(
        "{} weights = {{a >= b >= 0}} in box 4; saturation/ideal 0 violations; f1^r1 (r = 0) annihilated; {free} free weights with nonzero a",
        pw.weights.len()
    ))
}

fn comodules(modules: &[(String, PolynomialComodule)]) -> Verdict {
    for (name, m) in modules {
        if !m.check_counit()? || !m.check_zero_idempotent() || m.multiplicativity_residual_symbolic()?.is_some() {
            return fail(format!("{name} is not a comodule"));
        }
    }
    let rat_of = |m: &PolynomialComodule| RationalRep::from_polynomial(m);
    let b1 = rat_of(&binary_forms_module(1)?)?;
    let b2 = rat_of(&binary_forms_module(2)?)?;
    let b1_dual = rat_of(&binary_forms_module(1)?.dual_action_module()?)?;
    let k_det = rat_of(&PolynomialComodule::k_det(2)?)?;
    let pairs = [
        ("B1 (x) B1*", b1.clone(), b1_dual.clone()),
        ("B2 (x) det B1", b2.clone(), b1.twist(1)?),
        ("B1^ (x) B2^", b1.contragredient()?, b2.contragredient()?),
        ("k_det (x) B2", k_det, b2),
        ("B1* (x) B1*", b1_dual.clone(), b1_dual),
    ];
    let mut shown = Vec::new();
    for (name, v, w) in pairs {
        let t = v.tensor(&w)?;
        t.verify()?;
        let (nv, nw, nt) = (v.minimal_twist_exponent(), w.minimal_twist_exponent(), t.minimal_twist_exponent());
        if nt != nv + nw {
            return fail(format!("{name}: {nt} != {nv} + {nw}"));
        }
        shown.push(format!("{nt} = {nv} + {nw}").replace("+ -", "- "));
    }
    pass(format!("{} modules exact; twist additivity on 5 pairs ({})", modules.len(), shown.join(", ")))
}

fn main() -> ExitCode {
    let modules = match acceptance_modules() {
        Ok(m) => m,
        Err(e) => {
            println!("FAIL could not build the module catalog: {e}");
            return ExitCode::FAILURE;
        }
    };
    let criteria: [Criterion; 7] = [
        ("1 first rule", Box::new(first_rule)),
        ("2 Cayley constants", Box::new(cayley)),
        ("3 second rule", Box::new(|| second_rule(&modules))),
        ("4 integral and Reynolds", Box::new(|| integral_and_reynolds(&modules))),
        ("5 classical invariants", Box::new(classical)),
        ("6 weight consistency", Box::new(weights)),
        ("7 comodule integrity", Box::new(|| comodules(&modules))),
    ];
    let mut failures = 0;
    for (name, check) in &criteria {
        let line = match check() {
            Ok(Ok(detail)) => format!("PASS [{name}] {detail}"),
            Ok(Err(detail)) => format!("FAIL [{name}] {detail}"),
            Err(e) => format!("FAIL [{name}] error: {e}"),
        };
        if line.starts_with("FAIL") {
            failures += 1;
        }
        println!("{line}");
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
