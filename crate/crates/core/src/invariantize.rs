//! Semi-invariants, integrals and Reynolds operators manufactured from a
//! process, and a degree-by-degree search for generators of invariant rings
//! of binary forms.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{mat_mul, mat_vec, Span, Vector};
use crate::omega::{cayley_constants, generic_matrix, right_translate, OmegaOperator, Process};
use crate::polycore::{convolve, Monomial, Polynomial, Rational, Ring};
use crate::reps::{binary_form_coefficients, semi_invariant_oracle, PolynomialComodule, RationalRep};

/// `f ↦ ν(Ω^r(f))`, memoized over monomials.
///
/// Only monomials of degree `n·r` can contribute, so the memo is keyed by the
/// monomial alone.
pub struct ConstantTermFunctional<'a, P: Process + ?Sized> {
    op: &'a P,
    memo: BTreeMap<Monomial, Rational>,
}

impl<'a, P: Process + ?Sized> ConstantTermFunctional<'a, P> {
    pub fn new(op: &'a P) -> Self {
        ConstantTermFunctional { op, memo: BTreeMap::new() }
    }

    /// `ν(Ω^r(f))` for `f` in `k[M_n]`.
    pub fn eval(&mut self, f: &Polynomial, r: u32) -> Result<Rational> {
        let n = self.op.size() as u32;
        let mut total = Rational::zero();
        for (m, c) in f.terms() {
            if m.degree() != n * r {
                continue;
            }
            let v = self.monomial(f.ring(), m)?;
            if !v.is_zero() {
                total += c * v;
            }
        }
        Ok(total)
    }

    fn monomial(&mut self, ring: &Ring, m: &Monomial) -> Result<Rational> {
        if m.is_one() {
            return Ok(Rational::one());
        }
        if let Some(v) = self.memo.get(m) {
            return Ok(v.clone());
        }
        let image = self.op.apply(&Polynomial::from_terms(ring, [(m.clone(), Rational::one())])?)?;
        let mut total = Rational::zero();
        for (m2, c) in image.terms() {
            let v = self.monomial(ring, m2)?;
            if !v.is_zero() {
                total += c * v;
            }
        }
        self.memo.insert(m.clone(), total.clone());
        Ok(total)
    }
}

/// The matrix of `I_{r,s}`: entry `(j, i)` is `ν(Ω^r(det^s C_ji))`.
pub fn second_rule_matrix<P: Process + ?Sized>(
    op: &P,
    module: &PolynomialComodule,
    r: u32,
    s: u32,
) -> Result<Vec<Vector>> {
    if r == 0 {
        return Err(Error::InvalidArgument("I_{r,s} needs r ≥ 1".into()));
    }
    check_size(op, module)?;
    let det_s = op.character().pow(s);
    let mut functional = ConstantTermFunctional::new(op);
    module
        .matrix()
        .iter()
        .map(|row| row.iter().map(|c| functional.eval(&(&det_s * c), r)).collect())
        .collect()
}

fn check_size<P: Process + ?Sized>(op: &P, module: &PolynomialComodule) -> Result<()> {
    if op.size() == module.n() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: op.size(), found: module.n() })
    }
}

/// `I_{r,s}(v) = Σ v_0 ν(Ω^r(det^s v_1))`.
pub fn i_rs<P: Process + ?Sized>(op: &P, module: &PolynomialComodule, v: &[Rational], r: u32, s: u32) -> Result<Vector> {
    if v.len() != module.dim() {
        return Err(Error::DimensionMismatch { expected: module.dim(), found: v.len() });
    }
    Ok(mat_vec(&second_rule_matrix(op, module, r, s)?, v))
}

/// `det^s C(x) w - det^r w` for `w = I_{r,s}(v)`; all zero when the
/// semi-invariance identity holds.
pub fn second_rule_residual<P: Process + ?Sized>(
    op: &P,
    module: &PolynomialComodule,
    w: &[Rational],
    r: u32,
    s: u32,
) -> Result<Vec<Polynomial>> {
    let det_s = op.character().pow(s);
    let det_r = op.character().pow(r);
    module
        .act(w)?
        .iter()
        .zip(w)
        .map(|(p, c)| (&det_s * p).checked_sub(&det_r.scale(c)))
        .collect()
}

/// Whether `I_{r,s} C(x) = C(x) I_{r,s}`, the commuting square for the
/// `det^s`-twisted structure.
pub fn second_rule_is_morphism(module: &PolynomialComodule, matrix: &[Vector]) -> Result<bool> {
    module.is_morphism_to(module, matrix)
}

/// `J(f) = ν(Ω(f·λ)) / Ω(λ)`.
pub fn integral_j<P: Process + ?Sized>(op: &P, f: &Polynomial) -> Result<Rational> {
    let mut functional = ConstantTermFunctional::new(op);
    integral_with(op, &mut functional, f)
}

fn integral_with<P: Process + ?Sized>(
    op: &P,
    functional: &mut ConstantTermFunctional<'_, P>,
    f: &Polynomial,
) -> Result<Rational> {
    let lambda = op.character();
    let alpha = op.apply(lambda)?;
    if !alpha.is_constant() || alpha.is_zero() {
        return Err(Error::NotProper("Ω(λ) is not a nonzero constant".into()));
    }
    let product = f.checked_mul(lambda)?;
    Ok(functional.eval(&product, 1)? / alpha.constant_term())
}

/// Residuals of `J(f)·1 = Σ f_1 J(f_2)` and `J(f)·1 = Σ J(f_1) f_2`.
pub fn integral_sweedler_residuals<P: Process + ?Sized>(op: &P, f: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    let mut functional = ConstantTermFunctional::new(op);
    let j = integral_with(op, &mut functional, f)?;
    let lhs = Polynomial::constant(f.ring(), j);
    let ring = f.ring().clone();
    let mut jf = |g: &Polynomial| -> Result<Polynomial> {
        Ok(Polynomial::constant(&ring, integral_with(op, &mut functional, g)?))
    };
    let right = convolve(|g: &Polynomial| Ok(g.clone()), &mut jf, f)?;
    let left = convolve(&mut jf, |g: &Polynomial| Ok(g.clone()), f)?;
    Ok((lhs.checked_sub(&right)?, lhs.checked_sub(&left)?))
}

/// `J(f·Y) - J(f)` with `Y` generic, as a polynomial in the `y` entries.
pub fn integral_translation_residual(op: &OmegaOperator, f: &Polynomial) -> Result<Polynomial> {
    let n = op.n();
    let (ring, y) = generic_matrix(n)?;
    let translated = right_translate(f, &y)?;
    let lambda = op.character().embed(&ring)?;
    let alpha = op.apply(op.character())?.constant_term();
    let image = op.apply(&translated.checked_mul(&lambda)?)?;
    // ν in the x variables only
    let x_vars: Vec<_> = Ring::matrix(n).vars().to_vec();
    let at_zero = image.zero_out(&x_vars)?;
    let j = integral_j(op, f)?;
    at_zero.scale(&(Rational::one() / alpha)).checked_sub(&Polynomial::constant(&ring, j))
}

/// The Reynolds operator `I_{1,1}/Ω(λ)` of a polynomial module, as a matrix.
pub fn reynolds_matrix<P: Process + ?Sized>(op: &P, module: &PolynomialComodule) -> Result<Vec<Vector>> {
    let alpha = op.apply(op.character())?;
    if !alpha.is_constant() || alpha.is_zero() {
        return Err(Error::NotProper("Ω(λ) is not a nonzero constant".into()));
    }
    let scale = Rational::one() / alpha.constant_term();
    Ok(second_rule_matrix(op, module, 1, 1)?
        .into_iter()
        .map(|row| row.into_iter().map(|c| c * &scale).collect())
        .collect())
}

pub fn reynolds<P: Process + ?Sized>(op: &P, module: &PolynomialComodule, v: &[Rational]) -> Result<Vector> {
    Ok(mat_vec(&reynolds_matrix(op, module)?, v))
}

/// Projection onto the `GL_n`-invariants of a rational representation.
///
/// With `χ = det^k R` polynomial (`k` the minimal twist), invariants of `R`
/// are the semi-invariants of weight `det^k` in `χ`, and `I_{k+1,1}/c_{k+1}`
/// projects onto them. For `k < 0` there are none.
pub fn reynolds_rational(op: &OmegaOperator, rep: &RationalRep) -> Result<Vec<Vector>> {
    let dim = rep.dim();
    let k = rep.minimal_twist_exponent();
    if k < 0 {
        return Ok(vec![vec![Rational::zero(); dim]; dim]);
    }
    let chi = rep.polynomial_twist()?;
    let r = k as u32 + 1;
    let constants = cayley_constants(op, r)?;
    let c = constants.c(r).cloned().unwrap_or_default();
    if c.is_zero() {
        return Err(Error::NotProper(format!("c_{r} vanishes")));
    }
    let scale = Rational::one() / c;
    Ok(second_rule_matrix(op, &chi, r, 1)?
        .into_iter()
        .map(|row| row.into_iter().map(|x| x * &scale).collect())
        .collect())
}

/// Exact checks of a projection against the invariant subspace computed by
/// the linear oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReynoldsCheck {
    pub idempotent: bool,
    pub fixes_invariants: bool,
    pub image_in_invariants: bool,
    pub invariant_dim: usize,
}

impl ReynoldsCheck {
    pub fn passed(&self) -> bool {
        self.idempotent && self.fixes_invariants && self.image_in_invariants
    }
}

pub fn check_projection(matrix: &[Vector], invariants: &[Vector]) -> ReynoldsCheck {
    let dim = matrix.len();
    let span = Span::from_vectors(dim, invariants.iter().cloned());
    let columns: Vec<Vector> = (0..dim).map(|j| matrix.iter().map(|row| row[j].clone()).collect()).collect();
    ReynoldsCheck {
        idempotent: mat_mul(matrix, matrix) == matrix,
        fixes_invariants: invariants.iter().all(|v| mat_vec(matrix, v) == *v),
        image_in_invariants: columns.iter().all(|c| span.contains(c)),
        invariant_dim: span.dim(),
    }
}

/// Reynolds operator of a polynomial module checked against
/// `semi_invariant_oracle(module, 0)`.
pub fn check_reynolds<P: Process + ?Sized>(op: &P, module: &PolynomialComodule) -> Result<ReynoldsCheck> {
    let matrix = reynolds_matrix(op, module)?;
    Ok(check_projection(&matrix, &semi_invariant_oracle(module, 0)?))
}

/// The determinant weight `k` for which `GL_2` semi-invariants of weight
/// `det^k` in the module are exactly its `SL_2` invariants: the homogeneous
/// degree of the coefficient matrix divided by `n`.
pub fn semisimple_lift(module: &PolynomialComodule) -> Result<u32> {
    let degree = module
        .homogeneous_degree()
        .ok_or_else(|| Error::InvalidArgument("coefficient matrix is not homogeneous".into()))?;
    let n = module.n() as u32;
    if degree % n != 0 {
        return Err(Error::InvalidArgument(format!(
            "degree {degree} is not divisible by {n}: non-integral determinant weight"
        )));
    }
    Ok(degree / n)
}

/// `binom(dim + e - 1, e)`, saturating.
fn symmetric_power_dim(dim: usize, e: u32) -> usize {
    let mut acc: usize = 1;
    for i in 1..=e as usize {
        acc = match acc.checked_mul(dim + i - 1) {
            Some(v) => v / i,
            None => return usize::MAX,
        };
    }
    acc
}

/// Per-degree outcome of [`hilbert_generators`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: u32,
    pub module_dim: usize,
    /// `None` when the determinant weight is not integral.
    pub target_weight: Option<u32>,
    /// `(r, s)` of the operator used.
    pub exponents: Option<(u32, u32)>,
    pub process_dim: usize,
    pub oracle_dim: usize,
    pub decomposable_dim: usize,
    pub generators: Vec<Polynomial>,
    pub agreement: bool,
}

/// Generators of the invariants of binary forms found degree by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub form_degree: u32,
    pub degree_bound: u32,
    pub coefficient_ring: Ring,
    pub degrees: Vec<DegreeReport>,
}

impl InvariantReport {
    /// True iff the process and the oracle agree in every degree.
    pub fn agreement(&self) -> bool {
        self.degrees.iter().all(|d| d.agreement)
    }

    pub fn generators(&self) -> impl Iterator<Item = (u32, &Polynomial)> + '_ {
        self.degrees.iter().flat_map(|d| d.generators.iter().map(move |g| (d.degree, g)))
    }
}

#[derive(Clone, Debug)]
pub struct HilbertOptions {
    pub degree_bound: u32,
    /// The `s` of `I_{r,s}`; `r = s + target weight`.
    pub twist: u32,
    pub dimension_cap: usize,
}

/// Searches for generators of the `SL_2`-invariants of binary forms of degree
/// `form_degree` up to `degree_bound`.
///
/// In degree `e` the invariants live in `S^e` of the coefficient functions as
/// `GL_2` semi-invariants of weight `det^k`. Their space is computed as the
/// image of `I_{k+s,s}`, compared with the linear oracle, and reduced modulo
/// products of generators of lower degree.
pub fn hilbert_generators<P: Process + ?Sized>(op: &P, form_degree: u32, options: &HilbertOptions) -> Result<InvariantReport> {
    if op.size() != 2 {
        return Err(Error::InvalidArgument("binary forms need n = 2".into()));
    }
    let coefficients = binary_form_coefficients(form_degree)?;
    // dimensions grow with the degree, so the top one decides
    let top_dim = symmetric_power_dim(coefficients.dim(), options.degree_bound);
    if top_dim > options.dimension_cap {
        return Err(Error::CapExceeded { dim: top_dim, cap: options.dimension_cap });
    }
    let coefficient_ring = Ring::form_coefficients(form_degree as usize);
    // span of products of generators, per degree, as polynomials
    let mut algebra: BTreeMap<u32, Vec<Polynomial>> = BTreeMap::new();
    algebra.insert(0, vec![Polynomial::one(&coefficient_ring)]);
    let mut generators: Vec<(u32, Polynomial)> = Vec::new();
    let mut degrees = Vec::new();
    for e in 1..=options.degree_bound {
        let module = coefficients.symmetric_power(e, options.dimension_cap)?;
        let basis: Vec<Polynomial> = module
            .labels()
            .iter()
            .map(|l| Polynomial::parse(l, &coefficient_ring))
            .collect::<Result<_>>()?;
        let index: BTreeMap<Monomial, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, p)| (p.leading_term().expect("basis monomials are nonzero").0.clone(), i))
            .collect();
        let dim = module.dim();

        let mut decomposables: Vec<Polynomial> = Vec::new();
        for (dg, g) in &generators {
            if let Some(rest) = algebra.get(&(e - dg)) {
                for h in rest {
                    decomposables.push(g.checked_mul(h)?);
                }
            }
        }
        let mut span = Span::new(dim);
        for p in &decomposables {
            span.insert(to_vector(p, &index, dim)?);
        }
        let decomposable_dim = span.dim();

        let mut report = DegreeReport {
            degree: e,
            module_dim: dim,
            target_weight: None,
            exponents: None,
            process_dim: 0,
            oracle_dim: 0,
            decomposable_dim,
            generators: Vec::new(),
            agreement: true,
        };
        match semisimple_lift(&module) {
            Err(_) => {
                // no integral weight: the oracle must be empty at the
                // neighbouring weights
                let degree = module.homogeneous_degree().unwrap_or(0);
                let below = degree / 2;
                let oracle_dim = semi_invariant_oracle(&module, below)?.len()
                    + semi_invariant_oracle(&module, below + 1)?.len();
                report.oracle_dim = oracle_dim;
                report.agreement = oracle_dim == 0 && decomposable_dim == 0;
            }
            Ok(k) => {
                let (r, s) = (k + options.twist, options.twist);
                report.target_weight = Some(k);
                report.exponents = Some((r, s));
                let c = cayley_constants(op, r.max(1))?.c(r.max(1)).cloned().unwrap_or_default();
                if c.is_zero() {
                    return Err(Error::NotProper(format!("c_{r} vanishes")));
                }
                let oracle = semi_invariant_oracle(&module, k)?;
                let oracle_span = Span::from_vectors(dim, oracle.iter().cloned());
                let process_span = if r == 0 {
                    Span::from_vectors(dim, oracle.iter().cloned())
                } else {
                    let matrix = second_rule_matrix(op, &module, r, s)?;
                    Span::from_vectors(dim, (0..dim).map(|j| matrix.iter().map(|row| row[j].clone() / &c).collect()))
                };
                report.process_dim = process_span.dim();
                report.oracle_dim = oracle_span.dim();
                report.agreement = process_span.is_subspace_of(&oracle_span)
                    && oracle_span.is_subspace_of(&process_span)
                    && span.is_subspace_of(&oracle_span);
                let mut invariants_here = decomposables.clone();
                for v in process_span.basis() {
                    if span.insert(v.clone()) {
                        let g = from_vector(v, &basis, &coefficient_ring).primitive_part();
                        report.generators.push(g.clone());
                        generators.push((e, g.clone()));
                        invariants_here.push(g);
                    }
                }
                algebra.insert(e, reduce_to_basis(&invariants_here, &index, &basis, &coefficient_ring, dim)?);
            }
        }
        degrees.push(report);
    }
    Ok(InvariantReport { form_degree, degree_bound: options.degree_bound, coefficient_ring, degrees })
}

fn to_vector(p: &Polynomial, index: &BTreeMap<Monomial, usize>, dim: usize) -> Result<Vector> {
    let mut v = vec![Rational::zero(); dim];
    for (m, c) in p.terms() {
        let i = index
            .get(m)
            .ok_or_else(|| Error::IdentityFailure(format!("{p} is not homogeneous of the expected degree")))?;
        v[*i] = c.clone();
    }
    Ok(v)
}

fn from_vector(v: &[Rational], basis: &[Polynomial], ring: &Ring) -> Polynomial {
    let mut out = Polynomial::zero(ring);
    for (c, b) in v.iter().zip(basis) {
        if !c.is_zero() {
            out = &out + &b.scale(c);
        }
    }
    out
}

fn reduce_to_basis(
    polys: &[Polynomial],
    index: &BTreeMap<Monomial, usize>,
    basis: &[Polynomial],
    ring: &Ring,
    dim: usize,
) -> Result<Vec<Polynomial>> {
    let mut span = Span::new(dim);
    for p in polys {
        span.insert(to_vector(p, index, dim)?);
    }
    Ok(span.basis().iter().map(|v| from_vector(v, basis, ring)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{determinant, rat};
    use crate::reps::{binary_forms_module, DEFAULT_DIMENSION_CAP};

    fn op2() -> OmegaOperator {
        OmegaOperator::new(2).unwrap()
    }

    #[test]
    fn i_rs_examples() {
        let op = op2();
        let triv = PolynomialComodule::trivial(2).unwrap();
        assert_eq!(i_rs(&op, &triv, &[rat(1)], 1, 1).unwrap(), vec![rat(2)]);
        let kdet = PolynomialComodule::k_det(2).unwrap();
        assert_eq!(i_rs(&op, &kdet, &[rat(1)], 1, 1).unwrap(), vec![rat(0)]);
    }

    #[test]
    fn discriminant_from_i_rs() {
        let op = op2();
        let s2 = binary_form_coefficients(2).unwrap().symmetric_power(2, DEFAULT_DIMENSION_CAP).unwrap();
        let m = second_rule_matrix(&op, &s2, 2, 0).unwrap();
        let oracle = semi_invariant_oracle(&s2, 2).unwrap();
        let span = Span::from_vectors(6, oracle);
        let mut nonzero = false;
        for j in 0..6 {
            let col: Vector = m.iter().map(|row| row[j].clone()).collect();
            assert!(span.contains(&col));
            nonzero |= col.iter().any(|c| !c.is_zero());
            assert!(second_rule_residual(&op, &s2, &col, 2, 0).unwrap().iter().all(Polynomial::is_zero));
        }
        assert!(nonzero);
        assert!(second_rule_is_morphism(&s2, &m).unwrap());
    }

    #[test]
    fn integral_examples() {
        let op = op2();
        let ring = Ring::matrix(2);
        assert_eq!(integral_j(&op, &Polynomial::one(&ring)).unwrap(), rat(1));
        let det = determinant(&ring, 2, b'x').unwrap();
        assert_eq!(integral_j(&op, &det).unwrap(), rat(0));
        let f = Polynomial::parse("x11*x22 + 3*x12^2*x21 - x22 + 5", &ring).unwrap();
        let (a, b) = integral_sweedler_residuals(&op, &f).unwrap();
        assert!(a.is_zero() && b.is_zero());
        assert!(integral_translation_residual(&op, &f).unwrap().is_zero());
    }

    #[test]
    fn reynolds_examples() {
        let op = op2();
        let triv = PolynomialComodule::trivial(2).unwrap();
        assert_eq!(reynolds(&op, &triv, &[rat(7)]).unwrap(), vec![rat(7)]);
        let kdet = PolynomialComodule::k_det(2).unwrap();
        assert_eq!(reynolds(&op, &kdet, &[rat(7)]).unwrap(), vec![rat(0)]);
        assert!(check_reynolds(&op, &binary_forms_module(2).unwrap()).unwrap().passed());
    }

    #[test]
    fn rational_reynolds_projects_onto_discriminant() {
        let op = op2();
        let s2 = binary_form_coefficients(2).unwrap().symmetric_power(2, DEFAULT_DIMENSION_CAP).unwrap();
        let twisted = RationalRep::from_polynomial(&s2).unwrap().twist(-2).unwrap();
        assert_eq!(twisted.minimal_twist_exponent(), 2);
        let m = reynolds_rational(&op, &twisted).unwrap();
        let check = check_projection(&m, &semi_invariant_oracle(&s2, 2).unwrap());
        assert!(check.passed());
        assert_eq!(check.invariant_dim, 1);
        let disc = [0, 0, -4, 1, 0, 0].map(rat);
        assert_eq!(mat_vec(&m, &disc), disc.to_vec());
    }

    #[test]
    fn lift_weights() {
        let quad2 = binary_form_coefficients(2).unwrap().symmetric_power(2, DEFAULT_DIMENSION_CAP).unwrap();
        assert_eq!(semisimple_lift(&quad2).unwrap(), 2);
        let quart2 = binary_form_coefficients(4).unwrap().symmetric_power(2, DEFAULT_DIMENSION_CAP).unwrap();
        assert_eq!(semisimple_lift(&quart2).unwrap(), 4);
        assert!(semisimple_lift(&binary_form_coefficients(3).unwrap()).is_err());
    }

    #[test]
    fn quadratic_generators() {
        let op = op2();
        let report = hilbert_generators(
            &op,
            2,
            &HilbertOptions { degree_bound: 4, twist: 0, dimension_cap: DEFAULT_DIMENSION_CAP },
        )
        .unwrap();
        assert!(report.agreement());
        let gens: Vec<_> = report.generators().collect();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].0, 2);
        assert_eq!(format!("{}", gens[0].1), "4*a*c - b^2");
        assert_eq!(report.degrees[3].oracle_dim, 1);
        assert_eq!(report.degrees[3].decomposable_dim, 1);
    }

    #[test]
    fn linear_form_has_no_invariants() {
        let op = op2();
        let report = hilbert_generators(
            &op,
            1,
            &HilbertOptions { degree_bound: 3, twist: 0, dimension_cap: DEFAULT_DIMENSION_CAP },
        )
        .unwrap();
        assert!(report.agreement());
        assert_eq!(report.generators().count(), 0);
    }
}
