//! Seeded, deterministic property suite over the process, its constants, the
//! second rule, the integral, the Reynolds operator and the weight bridge.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use omega_forge_core::invariantize::{
    check_projection, check_reynolds, integral_j, integral_sweedler_residuals, integral_translation_residual,
    reynolds_rational, second_rule_is_morphism, second_rule_matrix, second_rule_residual,
};
use omega_forge_core::linalg::{mat_vec, Span, Vector};
use omega_forge_core::omega::{
    a_omega_classical, cayley_constants, first_rule_check, omega_on_semiinvariant, OmegaImage, OmegaOperator,
    Process, SemiInvariantWitness,
};
use omega_forge_core::reps::{
    binary_forms_module, semi_invariant_oracle, PolynomialComodule, RationalRep, DEFAULT_DIMENSION_CAP,
};
use omega_forge_core::weightlattice::{
    matrix_monoid_cone, omega_coefficient_family, polynomial_dominant_weights, CoefficientStatus, TruncationBox,
    Weight,
};
use omega_forge_core::{Monomial, Polynomial, Rational, Result, Ring};

use crate::config::FaultKind;
use crate::fault::FaultyProcess;
use crate::formats::{FailureJson, PropertyJson, SuiteJson};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n: usize,
    pub seed: u64,
    pub max_degree: u32,
    pub cases: usize,
    pub fault: Option<FaultKind>,
}

impl SuiteConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        SuiteConfig { n, seed, max_degree: default_max_degree(n), cases: 12, fault: None }
    }
}

pub fn default_max_degree(n: usize) -> u32 {
    match n {
        2 => 4,
        3 => 3,
        _ => 2,
    }
}

/// A random polynomial in `ring` with at most five terms of degree at most
/// `max_degree` and small rational coefficients.
pub fn random_polynomial(rng: &mut impl Rng, ring: &Ring, max_degree: u32) -> Polynomial {
    let arity = ring.arity();
    let terms = rng.gen_range(1..=5);
    let mut f = Polynomial::zero(ring);
    for _ in 0..terms {
        let mut exps = vec![0u32; arity];
        for _ in 0..rng.gen_range(0..=max_degree) {
            exps[rng.gen_range(0..arity)] += 1;
        }
        let mut num: i64 = rng.gen_range(1..=7);
        if rng.gen_bool(0.5) {
            num = -num;
        }
        let den: i64 = if rng.gen_bool(0.2) { rng.gen_range(2..=3) } else { 1 };
        let term = Polynomial::from_terms(ring, [(Monomial::from_exponents(exps), Rational::new(num.into(), den.into()))])
            .expect("exponents match the ring");
        f = &f + &term;
    }
    if f.is_zero() {
        Polynomial::one(ring)
    } else {
        f
    }
}

pub fn random_vector(rng: &mut impl Rng, dim: usize) -> Vector {
    loop {
        let v: Vector = (0..dim).map(|_| Rational::from_integer(rng.gen_range(-3i64..=3).into())).collect();
        if v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    }
}

/// Named modules of `M_n` used by the second-rule and Reynolds properties.
///
/// For `n = 2` these are binary forms of degree up to `max_form_degree`, their
/// duals and the symmetric powers of both up to `max_power`; for larger `n`
/// the standard module plays the part of the binary forms.
pub fn module_catalog(n: usize, max_form_degree: u32, max_power: u32) -> Result<Vec<(String, PolynomialComodule)>> {
    let mut out = vec![
        ("trivial".to_string(), PolynomialComodule::trivial(n)?),
        ("k_det".to_string(), PolynomialComodule::k_det(n)?),
    ];
    let mut bases = Vec::new();
    if n == 2 {
        for d in 1..=max_form_degree {
            bases.push((format!("B{d}"), binary_forms_module(d)?));
        }
    } else {
        bases.push(("V".to_string(), PolynomialComodule::standard(n)?));
    }
    for (name, m) in bases {
        let dual = m.dual_action_module()?;
        for e in 2..=max_power {
            out.push((format!("S{e}({name})"), m.symmetric_power(e, DEFAULT_DIMENSION_CAP)?));
            out.push((format!("S{e}({name}*)"), dual.symmetric_power(e, DEFAULT_DIMENSION_CAP)?));
        }
        out.push((format!("{name}*"), dual));
        out.push((name, m));
    }
    out.sort_by_key(|(_, m)| m.dim());
    Ok(out)
}

/// `(r, s)` pairs worth testing on a module: the ones matching its
/// determinant weight, plus a generic pair.
fn exponent_pairs(module: &PolynomialComodule) -> Vec<(u32, u32)> {
    let mut pairs = vec![(1, 1)];
    if let Some(d) = module.homogeneous_degree() {
        let n = module.n() as u32;
        if d % n == 0 {
            let k = d / n;
            if k >= 1 {
                pairs.push((k, 0));
            }
            pairs.push((k + 1, 1));
        } else {
            pairs.push((2, 1));
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

struct Tally {
    name: &'static str,
    cases: usize,
    failures: usize,
    first: Option<FailureJson>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, cases: 0, failures: 0, first: None }
    }

    fn record(&mut self, input: impl FnOnce() -> String, outcome: Result<Option<String>>) {
        let case = self.cases;
        self.cases += 1;
        let detail = match outcome {
            Ok(None) => return,
            Ok(Some(d)) => d,
            Err(e) => format!("error: {e}"),
        };
        self.failures += 1;
        if self.first.is_none() {
            self.first = Some(FailureJson { case, input: input(), detail });
        }
    }

    fn finish(self) -> PropertyJson {
        PropertyJson { name: self.name.into(), cases: self.cases, failures: self.failures, first_failure: self.first }
    }
}

fn abbreviate(p: &Polynomial) -> String {
    const LIMIT: usize = 160;
    let text = p.to_string();
    if text.len() <= LIMIT {
        return text;
    }
    let cut = (0..=LIMIT).rev().find(|&i| text.is_char_boundary(i)).unwrap_or(0);
    format!("{} ... ({} terms)", &text[..cut], p.num_terms())
}

fn failing(ok: bool, detail: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(detail)
}

/// Runs every property; the process is replaced by a faulty one on request.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteJson> {
    let op = OmegaOperator::new(config.n)?;
    let properties = match config.fault {
        None => run_properties(&op, &op, config)?,
        Some(kind) => run_properties(&FaultyProcess::new(op.clone(), kind), &op, config)?,
    };
    Ok(SuiteJson {
        n: config.n,
        seed: config.seed,
        max_degree: config.max_degree,
        fault: config.fault.map(|k| match k {
            FaultKind::FirstRule => "first-rule".to_string(),
        }),
        passed: properties.iter().all(PropertyJson::passed),
        properties,
    })
}

fn run_properties<P: Process>(process: &P, op: &OmegaOperator, config: &SuiteConfig) -> Result<Vec<PropertyJson>> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let ring = Ring::matrix(config.n);
    let catalog = module_catalog(config.n, config.max_degree.min(4), 2)?;
    Ok(vec![
        first_rule(process, &ring, config, &mut rng),
        cayley(process, config),
        second_rule(process, &catalog, &mut rng),
        integral(process, op, &ring, config, &mut rng),
        reynolds(process, op, &catalog),
        weight_bridge(op),
    ])
}

fn first_rule<P: Process>(process: &P, ring: &Ring, config: &SuiteConfig, rng: &mut ChaCha8Rng) -> PropertyJson {
    let mut t = Tally::new("first-rule");
    for _ in 0..config.cases {
        let f = random_polynomial(rng, ring, config.max_degree);
        let outcome = first_rule_check(process, &f).map(|report| {
            report.residual().map(|r| format!("residual {}", abbreviate(r)))
        });
        t.record(|| f.to_string(), outcome);
    }
    t.finish()
}

/// `α_s` against `s(s+1)...(s+n-1)` and `c_s` against the running product.
fn cayley<P: Process>(process: &P, config: &SuiteConfig) -> PropertyJson {
    let mut t = Tally::new("cayley-constants");
    let s_max = match config.n {
        2 => 6,
        3 => 3,
        _ => 2,
    };
    let constants = cayley_constants(process, s_max);
    let mut product = Rational::one();
    for s in 1..=s_max {
        let outcome = constants.as_ref().map_err(Clone::clone).map(|c| {
            let expected: Rational = (0..config.n as i64).map(|i| Rational::from_integer((i64::from(s) + i).into())).product();
            product *= &expected;
            let (alpha, cs) = (c.alpha(s).cloned().unwrap_or_default(), c.c(s).cloned().unwrap_or_default());
            failing(alpha == expected && cs == product && !alpha.is_zero(), || {
                format!("alpha = {alpha}, expected {expected}; c = {cs}, expected {product}")
            })
        });
        t.record(|| format!("s = {s}"), outcome);
    }
    t.finish()
}

fn second_rule<P: Process>(process: &P, catalog: &[(String, PolynomialComodule)], rng: &mut ChaCha8Rng) -> PropertyJson {
    let mut t = Tally::new("second-rule");
    for (name, module) in catalog {
        for (r, s) in exponent_pairs(module) {
            let v = random_vector(rng, module.dim());
            let outcome = (|| -> Result<Option<String>> {
                let matrix = second_rule_matrix(process, module, r, s)?;
                let w = mat_vec(&matrix, &v);
                let residual = second_rule_residual(process, module, &w, r, s)?;
                if let Some(p) = residual.iter().find(|p| !p.is_zero()) {
                    return Ok(Some(format!("det^s C w - det^r w = {}", abbreviate(p))));
                }
                if !second_rule_is_morphism(module, &matrix)? {
                    return Ok(Some("I C != C I".into()));
                }
                let oracle = Span::from_vectors(module.dim(), semi_invariant_oracle(module, r - s)?);
                Ok(failing(oracle.contains(&w), || "output is not a semi-invariant according to the oracle".into()))
            })();
            t.record(|| format!("{name}, r = {r}, s = {s}"), outcome);
        }
    }
    t.finish()
}

fn integral<P: Process>(
    process: &P,
    op: &OmegaOperator,
    ring: &Ring,
    config: &SuiteConfig,
    rng: &mut ChaCha8Rng,
) -> PropertyJson {
    let mut t = Tally::new("integral");
    let one = Polynomial::one(ring);
    let outcome = integral_j(process, &one).map(|j| failing(j.is_one(), || format!("J(1) = {j}")));
    t.record(|| "1".into(), outcome);
    let degree = config.max_degree.min(if config.n == 2 { 4 } else { 2 });
    for _ in 0..config.cases {
        let f = random_polynomial(rng, ring, degree);
        let outcome = (|| -> Result<Option<String>> {
            let (right, left) = integral_sweedler_residuals(process, &f)?;
            if !right.is_zero() || !left.is_zero() {
                return Ok(Some(format!("Sweedler residuals {} | {}", abbreviate(&right), abbreviate(&left))));
            }
            let shift = integral_translation_residual(op, &f)?;
            Ok(failing(shift.is_zero(), || format!("J(f.Y) - J(f) = {}", abbreviate(&shift))))
        })();
        t.record(|| f.to_string(), outcome);
    }
    t.finish()
}

fn reynolds<P: Process>(process: &P, op: &OmegaOperator, catalog: &[(String, PolynomialComodule)]) -> PropertyJson {
    let mut t = Tally::new("reynolds");
    for (name, module) in catalog {
        let outcome = check_reynolds(process, module).map(|c| failing(c.passed(), || format!("{c:?}")));
        t.record(|| name.clone(), outcome);
    }
    let n = op.n();
    let outcome = (|| -> Result<Option<String>> {
        let v = if n == 2 { binary_forms_module(1)? } else { PolynomialComodule::standard(n)? };
        let v = RationalRep::from_polynomial(&v)?;
        let rep = v.tensor(&v.contragredient()?)?;
        let projection = reynolds_rational(op, &rep)?;
        let chi = rep.polynomial_twist()?;
        let k = u32::try_from(rep.minimal_twist_exponent()).unwrap_or(0);
        let check = check_projection(&projection, &semi_invariant_oracle(&chi, k)?);
        Ok(failing(check.passed() && check.invariant_dim == 1, || format!("{check:?}")))
    })();
    t.record(|| "V (x) V^".into(), outcome);
    t.finish()
}

/// Free coefficients have nonzero classical values; forced zeros are
/// annihilated by the process.
fn weight_bridge(op: &OmegaOperator) -> PropertyJson {
    let mut t = Tally::new("weight-bridge");
    let n = op.n();
    let bound = match n {
        2 => 4,
        3 => 2,
        _ => 1,
    };
    let family = polynomial_dominant_weights(&matrix_monoid_cone(n), n, TruncationBox::symmetric(bound))
        .and_then(|pw| omega_coefficient_family(&Weight::det_power(n, 1), &pw));
    let family = match family {
        Ok(f) => f,
        Err(e) => {
            t.record(|| "family".into(), Err(e));
            return t.finish();
        }
    };
    for (mu, status) in &family.entries {
        let c = mu.coords();
        let minors: Vec<u32> = c.windows(2).map(|w| (w[0] - w[1]) as u32).collect();
        let det = c[n - 1] as u32;
        let outcome = (|| -> Result<Option<String>> {
            let w = SemiInvariantWitness::minor_product(n, &minors, det)?;
            let image = omega_on_semiinvariant(op, &w)?;
            Ok(match status {
                CoefficientStatus::Free => {
                    let a = a_omega_classical(op, &minors, det)?;
                    failing(!a.is_zero() && matches!(image, OmegaImage::Witness(_)), || format!("free weight but a = {a}"))
                }
                CoefficientStatus::ForcedZero => {
                    failing(image == OmegaImage::Zero, || "forced-zero weight not annihilated".into())
                }
            })
        })();
        t.record(|| mu.to_string(), outcome);
    }
    t.finish()
}
