//! The classical Cayley process on `M_n`, its powers and constants, and exact
//! checks of its equivariance properties.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polycore::{
    determinant, evaluate_at_identity, lower_right_minor, matrix_of_vars, matrix_product, permutations,
    substitute_matrix, Monomial, PolyMatrix, Polynomial, Rational, Ring, Var, VariableSet,
};
use crate::weightlattice::{is_matrix_polynomial_dominant, Weight};

/// A linear operator on polynomial rings containing the `x` block of `M_n`,
/// semi-equivariant against a character.
pub trait Process {
    fn size(&self) -> usize;

    /// The character, as a polynomial of `k[x11..xnn]`.
    fn character(&self) -> &Polynomial;

    /// Applies the operator to the `x` variables of `f`; all other variables
    /// are treated as constants.
    fn apply(&self, f: &Polynomial) -> Result<Polynomial>;

    /// `r`-fold iteration; `r = 0` is the identity.
    fn power(&self, f: &Polynomial, r: u32) -> Result<Polynomial> {
        let mut g = f.clone();
        for _ in 0..r {
            if g.is_zero() {
                break;
            }
            g = self.apply(&g)?;
        }
        Ok(g)
    }
}

/// `Ω = Σ_σ sg(σ) ∂ⁿ/∂x_{1σ(1)}…∂x_{nσ(n)}` with character `det`.
#[derive(Clone, Debug)]
pub struct OmegaOperator {
    n: usize,
    lambda: Polynomial,
}

impl OmegaOperator {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=9).contains(&n) {
            return Err(Error::InvalidArgument(format!("matrix size {n} outside 2..=9")));
        }
        let lambda = determinant(&Ring::matrix(n), n, b'x')?;
        Ok(OmegaOperator { n, lambda })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The weight `(1, ..., 1)` of `det`.
    pub fn character_weight(&self) -> Weight {
        Weight::det_power(self.n, 1)
    }

    /// Positions of the `x` coordinates of `ring`, row-major.
    fn x_positions(&self, ring: &Ring) -> Result<Vec<usize>> {
        if ring.matrix_size(b'x') != Some(self.n) {
            return Err(Error::WrongAmbient(format!(
                "process of size {} applied in {}",
                self.n,
                ring.describe()
            )));
        }
        let mut out = Vec::with_capacity(self.n * self.n);
        for i in 1..=self.n as u8 {
            for j in 1..=self.n as u8 {
                out.push(ring.require(Var::x(i, j))?);
            }
        }
        Ok(out)
    }
}

impl Process for OmegaOperator {
    fn size(&self) -> usize {
        self.n
    }

    fn character(&self) -> &Polynomial {
        &self.lambda
    }

    fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        let pos = self.x_positions(f.ring())?;
        let n = self.n;
        let chains: Vec<(Vec<usize>, Rational)> = permutations(n)
            .into_iter()
            .map(|(p, sign)| {
                let vars = p.iter().enumerate().map(|(i, &j)| pos[i * n + j]).collect();
                (vars, Rational::from_integer(sign.into()))
            })
            .collect();
        let mut out = Polynomial::zero(f.ring());
        for (m, c) in f.terms() {
            'chain: for (vars, sign) in &chains {
                let mut exps = m.exponents().to_vec();
                let mut factor: u64 = 1;
                for &v in vars {
                    if exps[v] == 0 {
                        continue 'chain;
                    }
                    factor *= u64::from(exps[v]);
                    exps[v] -= 1;
                }
                out.add_term(Monomial::from_exponents(exps), c * sign * Rational::from_integer(factor.into()));
            }
        }
        Ok(out)
    }
}

/// `α_s`, `α_{r,s}` and `c_s` of a process, each verified as an exact identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CayleyConstants {
    pub alphas: BTreeMap<u32, Rational>,
    pub alphas_rs: BTreeMap<(u32, u32), Rational>,
    pub cs: BTreeMap<u32, Rational>,
}

impl CayleyConstants {
    pub fn alpha(&self, s: u32) -> Option<&Rational> {
        self.alphas.get(&s)
    }

    pub fn c(&self, s: u32) -> Option<&Rational> {
        self.cs.get(&s)
    }

    /// All `α_s` nonzero.
    pub fn is_proper(&self) -> bool {
        self.alphas.values().all(|a| !a.is_zero())
    }
}

/// Computes the constants for `1 ≤ r ≤ s ≤ s_max`.
///
/// `Ω^r(λ^s)` is checked to equal `α_{r,s} λ^{s-r}` before the value is
/// recorded, and `c_s` (a product of the `α_t`) is checked against the
/// separately computed `α_{s,s}`.
pub fn cayley_constants<P: Process + ?Sized>(op: &P, s_max: u32) -> Result<CayleyConstants> {
    if s_max == 0 {
        return Err(Error::InvalidArgument("s_max must be at least 1".into()));
    }
    let lambda = op.character();
    let mut lambda_pows = vec![Polynomial::one(lambda.ring())];
    for s in 1..=s_max as usize {
        let next = lambda_pows[s - 1].checked_mul(lambda)?;
        lambda_pows.push(next);
    }
    let mut out = CayleyConstants::default();
    let mut running = Rational::one();
    for s in 1..=s_max {
        let mut h = lambda_pows[s as usize].clone();
        for r in 1..=s {
            h = op.apply(&h)?;
            let alpha = evaluate_at_identity(&h)?;
            let expected = lambda_pows[(s - r) as usize].scale(&alpha);
            if h != expected {
                return Err(Error::IdentityFailure(format!(
                    "Ω^{r}(det^{s}) is not a multiple of det^{}",
                    s - r
                )));
            }
            if r == 1 {
                out.alphas.insert(s, alpha.clone());
            }
            out.alphas_rs.insert((r, s), alpha);
        }
        running *= &out.alphas[&s];
        if running != out.alphas_rs[&(s, s)] {
            return Err(Error::IdentityFailure(format!("c_{s} differs from Ω^{s}(det^{s})")));
        }
        out.cs.insert(s, running.clone());
    }
    Ok(out)
}

/// `k[x, y]` for matrices of size `n`, with the generic matrix `Y`.
pub fn generic_matrix(n: usize) -> Result<(Ring, PolyMatrix)> {
    let ring = Ring::matrices(n, b"xy");
    let y = matrix_of_vars(&ring, n, b'y')?;
    Ok((ring, y))
}

fn translate(f: &Polynomial, m: &PolyMatrix, m_on_left: bool) -> Result<Polynomial> {
    let n = m.len();
    let target = m
        .first()
        .and_then(|row| row.first())
        .map(|p| p.ring().clone())
        .ok_or_else(|| Error::InvalidArgument("empty matrix".into()))?;
    let x = matrix_of_vars(&target, n, b'x')?;
    let prod = if m_on_left { matrix_product(m, &x)? } else { matrix_product(&x, m)? };
    substitute_matrix(f, b'x', &prod, &target)
}

/// `(f·Y)(X) = f(YX)`, in the ring of `Y`'s entries.
pub fn right_translate(f: &Polynomial, y: &PolyMatrix) -> Result<Polynomial> {
    translate(f, y, true)
}

/// `(Y·f)(X) = f(XY)`, in the ring of `Y`'s entries.
pub fn left_translate(f: &Polynomial, y: &PolyMatrix) -> Result<Polynomial> {
    translate(f, y, false)
}

/// Residuals of the equivariance identities for a generic `Y`; all zero on
/// success.
#[derive(Clone, Debug)]
pub struct FirstRuleReport {
    /// `Ω(f·Y) - λ(Y) Ω(f)·Y`
    pub right: Polynomial,
    /// `Ω(Y·f) - λ(Y) Y·Ω(f)`
    pub left: Polynomial,
    /// `Ω²(f·Y) - λ(Y)² Ω²(f)·Y`
    pub right_squared: Polynomial,
    /// `Ω²(Y·f) - λ(Y)² Y·Ω²(f)`
    pub left_squared: Polynomial,
}

impl FirstRuleReport {
    pub fn passed(&self) -> bool {
        self.right.is_zero() && self.left.is_zero() && self.right_squared.is_zero() && self.left_squared.is_zero()
    }

    /// The first nonzero residual, if any.
    pub fn residual(&self) -> Option<&Polynomial> {
        [&self.right, &self.left, &self.right_squared, &self.left_squared]
            .into_iter()
            .find(|p| !p.is_zero())
    }
}

pub fn first_rule_check<P: Process + ?Sized>(op: &P, f: &Polynomial) -> Result<FirstRuleReport> {
    let n = op.size();
    let (ring, y) = generic_matrix(n)?;
    let lambda_y = substitute_matrix(op.character(), b'x', &y, &ring)?;
    let lambda_y_sq = lambda_y.pow(2);

    let omega_f = op.apply(f)?;
    let omega2_f = op.apply(&omega_f)?;

    let residual = |lhs_input: Polynomial, rhs: Polynomial, factor: &Polynomial, r: u32| -> Result<Polynomial> {
        let lhs = op.power(&lhs_input, r)?;
        lhs.checked_sub(&factor.checked_mul(&rhs)?)
    };

    let f_y = right_translate(f, &y)?;
    let y_f = left_translate(f, &y)?;
    Ok(FirstRuleReport {
        right: residual(f_y.clone(), right_translate(&omega_f, &y)?, &lambda_y, 1)?,
        left: residual(y_f.clone(), left_translate(&omega_f, &y)?, &lambda_y, 1)?,
        right_squared: residual(f_y, right_translate(&omega2_f, &y)?, &lambda_y_sq, 2)?,
        left_squared: residual(y_f, left_translate(&omega2_f, &y)?, &lambda_y_sq, 2)?,
    })
}

/// A polynomial `f` of `k[M_n]` with `f(UXL) = μ̃(diag U) μ̃(diag L) f(X)` for
/// generic upper-triangular `U` and lower-triangular `L`, where `μ̃` is `μ`
/// read in reverse (`μ̃_i = μ_{n+1-i}`). With this convention the
/// lower-right `i x i` minor has weight `e_1 + ... + e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiInvariantWitness {
    f: Polynomial,
    mu: Weight,
}

impl SemiInvariantWitness {
    /// Builds a witness after checking the eigenvector identity exactly.
    pub fn new(f: Polynomial, mu: Weight) -> Result<Self> {
        let residual = borel_residual(&f, &mu)?;
        if !residual.is_zero() {
            return Err(Error::IdentityFailure(format!(
                "{f} is not a semi-invariant of weight {mu}; residual {residual}"
            )));
        }
        Ok(SemiInvariantWitness { f, mu })
    }

    /// `f_1^{r_1} ··· f_{n-1}^{r_{n-1}} det^r`, with `f_i` the lower-right
    /// `i x i` minor, of weight `Σ r_i ω_i + r(1, ..., 1)`.
    pub fn minor_product(n: usize, minor_exponents: &[u32], det_exponent: u32) -> Result<Self> {
        if minor_exponents.len() + 1 != n {
            return Err(Error::DimensionMismatch { expected: n - 1, found: minor_exponents.len() });
        }
        let ring = Ring::matrix(n);
        let mut f = determinant(&ring, n, b'x')?.pow(det_exponent);
        let mut mu = vec![i64::from(det_exponent); n];
        for (i, &r) in minor_exponents.iter().enumerate() {
            if r == 0 {
                continue;
            }
            f = f.checked_mul(&lower_right_minor(&ring, n, i + 1, b'x')?.pow(r))?;
            for c in mu.iter_mut().take(i + 1) {
                *c += i64::from(r);
            }
        }
        Self::new(f, Weight::new(mu))
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.f
    }

    pub fn weight(&self) -> &Weight {
        &self.mu
    }

    /// The character of the left (upper-triangular) factor, as exponents of
    /// its diagonal entries.
    pub fn left_exponents(&self) -> Vec<i64> {
        self.mu.coords().iter().rev().copied().collect()
    }

    /// The character of the right (lower-triangular) factor.
    pub fn right_exponents(&self) -> Vec<i64> {
        self.left_exponents()
    }
}

/// Generic triangular matrices for the eigenvector test: `U` upper with
/// diagonal `t_i`, strict part `u_k`; `L` lower with diagonal `s_i`, strict
/// part `l_k`.
fn borel_pair(n: usize) -> Result<(Ring, PolyMatrix, PolyMatrix)> {
    let strict = n * (n - 1) / 2;
    let ring = Ring::matrix(n).extend(vec![
        VariableSet::auxiliary(b't', n),
        VariableSet::auxiliary(b'u', strict),
        VariableSet::auxiliary(b's', n),
        VariableSet::auxiliary(b'l', strict),
    ])?;
    let aux = |tag: u8, k: usize| Polynomial::variable(&ring, Var::Aux { tag, index: k as u16 });
    let mut upper = vec![vec![Polynomial::zero(&ring); n]; n];
    let mut lower = vec![vec![Polynomial::zero(&ring); n]; n];
    let mut k = 0;
    for i in 0..n {
        upper[i][i] = aux(b't', i + 1)?;
        lower[i][i] = aux(b's', i + 1)?;
        for j in i + 1..n {
            k += 1;
            upper[i][j] = aux(b'u', k)?;
            lower[j][i] = aux(b'l', k)?;
        }
    }
    Ok((ring, upper, lower))
}

fn borel_residual(f: &Polynomial, mu: &Weight) -> Result<Polynomial> {
    let n = match f.ring().matrix_size(b'x') {
        Some(n) if *f.ring() == Ring::matrix(n) => n,
        _ => return Err(Error::WrongAmbient(format!("expected k[M_n], got {}", f.ring().describe()))),
    };
    if mu.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: mu.len() });
    }
    if mu.coords().iter().any(|&c| c < 0) {
        return Err(Error::InvalidArgument(format!("weight {mu} has a negative coordinate")));
    }
    let (ring, upper, lower) = borel_pair(n)?;
    let x = matrix_of_vars(&ring, n, b'x')?;
    let uxl = matrix_product(&matrix_product(&upper, &x)?, &lower)?;
    let moved = substitute_matrix(f, b'x', &uxl, &ring)?;
    let mut factor = Polynomial::one(&ring);
    for (i, &e) in mu.coords().iter().rev().enumerate() {
        let t = Polynomial::variable(&ring, Var::Aux { tag: b't', index: i as u16 + 1 })?;
        let s = Polynomial::variable(&ring, Var::Aux { tag: b's', index: i as u16 + 1 })?;
        factor = factor.checked_mul(&t.checked_mul(&s)?.pow(e as u32))?;
    }
    moved.checked_sub(&factor.checked_mul(&f.embed(&ring)?)?)
}

/// The image of a semi-invariant under `Ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OmegaImage {
    Zero,
    Witness(SemiInvariantWitness),
}

/// `Ω(f)` for a semi-invariant `f` of weight `μ`: zero, or a semi-invariant
/// of weight `μ - (1, ..., 1)`. When that shift is not polynomial dominant
/// the image must vanish; any other outcome is an error.
pub fn omega_on_semiinvariant(op: &OmegaOperator, w: &SemiInvariantWitness) -> Result<OmegaImage> {
    let g = op.apply(w.polynomial())?;
    let shifted = w.weight().checked_sub(&op.character_weight())?;
    if !is_matrix_polynomial_dominant(&shifted) {
        if g.is_zero() {
            return Ok(OmegaImage::Zero);
        }
        return Err(Error::IdentityFailure(format!(
            "Ω({}) is nonzero although {shifted} is not polynomial dominant",
            w.polynomial()
        )));
    }
    if g.is_zero() {
        return Ok(OmegaImage::Zero);
    }
    Ok(OmegaImage::Witness(SemiInvariantWitness::new(g, shifted)?))
}

/// The scalar `a` with `Ω(f) = a·f/det` for `f = f_1^{r_1} ··· det^r`,
/// `r ≥ 1`, verified as the exact identity `Ω(f)·det = a·f`.
pub fn a_omega_classical(op: &OmegaOperator, minor_exponents: &[u32], det_exponent: u32) -> Result<Rational> {
    if det_exponent == 0 {
        return Err(Error::InvalidArgument("the determinant exponent must be at least 1".into()));
    }
    let w = SemiInvariantWitness::minor_product(op.n(), minor_exponents, det_exponent)?;
    let g = op.apply(w.polynomial())?;
    let a = evaluate_at_identity(&g)?;
    if g.checked_mul(op.character())? != w.polynomial().scale(&a) {
        return Err(Error::IdentityFailure(format!("Ω({}) is not a multiple of it over det", w.polynomial())));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    fn parse(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, &Ring::matrix(n)).unwrap()
    }

    #[test]
    fn omega_examples_n2() {
        let op = OmegaOperator::new(2).unwrap();
        let det = op.character().clone();
        assert_eq!(op.apply(&det).unwrap(), Polynomial::constant(det.ring(), rat(2)));
        assert!(op.apply(&parse("1", 2)).unwrap().is_zero());
        assert_eq!(op.apply(&det.pow(2)).unwrap(), det.scale(&rat(6)));
        assert_eq!(op.power(&det.pow(2), 2).unwrap(), Polynomial::constant(det.ring(), rat(12)));
        assert!(op.power(&parse("x11", 2), 1).unwrap().is_zero());
        assert_eq!(op.power(&det, 0).unwrap(), det);
    }

    #[test]
    fn omega_det3_is_six() {
        let op = OmegaOperator::new(3).unwrap();
        assert_eq!(op.apply(op.character()).unwrap(), Polynomial::constant(&Ring::matrix(3), rat(6)));
    }

    #[test]
    fn wrong_size_is_rejected() {
        let op = OmegaOperator::new(3).unwrap();
        assert!(matches!(op.apply(&parse("x11", 2)), Err(Error::WrongAmbient(_))));
        assert!(OmegaOperator::new(1).is_err());
    }

    #[test]
    fn constants_n2() {
        let op = OmegaOperator::new(2).unwrap();
        let k = cayley_constants(&op, 3).unwrap();
        assert_eq!(k.alpha(1), Some(&rat(2)));
        assert_eq!(k.alpha(2), Some(&rat(6)));
        assert_eq!(k.alpha(3), Some(&rat(12)));
        assert_eq!(k.c(2), Some(&rat(12)));
        assert_eq!(k.alphas_rs[&(2, 2)], rat(12));
        assert!(k.is_proper());
        assert!(cayley_constants(&op, 0).is_err());
    }

    #[test]
    fn translations() {
        let (ring, y) = generic_matrix(2).unwrap();
        let x11 = parse("x11", 2);
        let fy = right_translate(&x11, &y).unwrap();
        assert_eq!(fy, Polynomial::parse("y11*x11 + y12*x21", &ring).unwrap());
        let yf = left_translate(&x11, &y).unwrap();
        assert_eq!(yf, Polynomial::parse("x11*y11 + x12*y21", &ring).unwrap());
        let det = determinant(&Ring::matrix(2), 2, b'x').unwrap();
        let det_y = substitute_matrix(&det, b'x', &y, &ring).unwrap();
        assert_eq!(right_translate(&det, &y).unwrap(), det_y.checked_mul(&det.embed(&ring).unwrap()).unwrap());
        let id = crate::polycore::identity_matrix(&Ring::matrix(2), 2);
        let f = parse("x11^2*x21 - 3*x22", 2);
        assert_eq!(right_translate(&f, &id).unwrap(), f);
    }

    #[test]
    fn first_rule_examples() {
        let op = OmegaOperator::new(2).unwrap();
        for s in ["x11*x22", "1", "x11*x22 - x12*x21", "x11^2*x22 + 2*x21*x12^3"] {
            let report = first_rule_check(&op, &parse(s, 2)).unwrap();
            assert!(report.passed(), "{s}: {:?}", report.residual());
        }
    }

    #[test]
    fn minor_witnesses() {
        let w = SemiInvariantWitness::minor_product(2, &[1], 1).unwrap();
        assert_eq!(w.weight(), &Weight::new(vec![2, 1]));
        assert_eq!(w.polynomial(), &parse("x11*x22^2 - x12*x21*x22", 2));
        let x22 = SemiInvariantWitness::new(parse("x22", 2), Weight::new(vec![1, 0])).unwrap();
        assert_eq!(x22.left_exponents(), vec![0, 1]);
        assert!(SemiInvariantWitness::new(parse("x11", 2), Weight::new(vec![1, 0])).is_err());
        assert!(SemiInvariantWitness::new(parse("x22", 2), Weight::new(vec![0, 1])).is_err());
        let w3 = SemiInvariantWitness::minor_product(3, &[1, 1], 0).unwrap();
        assert_eq!(w3.weight(), &Weight::new(vec![2, 1, 0]));
    }

    #[test]
    fn omega_on_semiinvariants_n2() {
        let op = OmegaOperator::new(2).unwrap();
        let x22 = SemiInvariantWitness::minor_product(2, &[1], 0).unwrap();
        assert_eq!(omega_on_semiinvariant(&op, &x22).unwrap(), OmegaImage::Zero);
        let det = SemiInvariantWitness::minor_product(2, &[0], 1).unwrap();
        match omega_on_semiinvariant(&op, &det).unwrap() {
            OmegaImage::Witness(w) => {
                assert_eq!(w.polynomial(), &Polynomial::constant(&Ring::matrix(2), rat(2)));
                assert_eq!(w.weight(), &Weight::zero(2));
            }
            OmegaImage::Zero => panic!("Ω(det) vanished"),
        }
        let mixed = SemiInvariantWitness::minor_product(2, &[1], 1).unwrap();
        match omega_on_semiinvariant(&op, &mixed).unwrap() {
            OmegaImage::Witness(w) => {
                assert_eq!(w.polynomial(), &parse("3*x22", 2));
                assert_eq!(w.weight(), &Weight::new(vec![1, 0]));
            }
            OmegaImage::Zero => panic!("Ω(x22 det) vanished"),
        }
    }

    #[test]
    fn a_omega_examples() {
        let op = OmegaOperator::new(2).unwrap();
        assert_eq!(a_omega_classical(&op, &[0], 1).unwrap(), rat(2));
        assert_eq!(a_omega_classical(&op, &[1], 1).unwrap(), rat(3));
        assert_eq!(a_omega_classical(&op, &[0], 2).unwrap(), rat(6));
        assert!(a_omega_classical(&op, &[1], 0).is_err());
    }
}
