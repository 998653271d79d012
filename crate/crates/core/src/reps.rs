//! Finite-dimensional polynomial and rational representations of `M_n`,
//! stored as explicit comodules.
//!
//! A module of dimension `N` is an `N x N` matrix `C` of polynomials in the
//! matrix coordinates. Column `j` is the image of the `j`-th basis vector, so
//! `m·e_j = Σ_i C_ij(m) e_i` and `C(XY) = C(X)C(Y)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{mat_mul, nullspace, Vector};
use crate::polycore::{
    adjugate, determinant, matrix_of_vars, matrix_product, substitute_matrix, Monomial, PolyMatrix, Polynomial,
    Rational, Ring, Var, VariableSet,
};

/// Default bound on the dimension of symmetric powers.
pub const DEFAULT_DIMENSION_CAP: usize = 200;

/// The character `det^k` of `GL_n`; polynomial on `M_n` when `k ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Character {
    pub power: i64,
}

impl Character {
    pub fn det_power(power: i64) -> Self {
        Character { power }
    }

    pub fn is_polynomial(&self) -> bool {
        self.power >= 0
    }

    pub fn polynomial(&self, n: usize) -> Result<Polynomial> {
        if self.power < 0 {
            return Err(Error::InvalidArgument(format!("det^{} is not polynomial", self.power)));
        }
        Ok(determinant(&Ring::matrix(n), n, b'x')?.pow(self.power as u32))
    }
}

/// A polynomial `M_n`-module given by its coefficient matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialComodule {
    n: usize,
    labels: Vec<String>,
    matrix: PolyMatrix,
    twist: i64,
}

impl PolynomialComodule {
    /// Builds and verifies a module: counit, idempotent `C(0)` and
    /// multiplicativity.
    pub fn new(n: usize, labels: Vec<String>, matrix: PolyMatrix, twist: i64) -> Result<Self> {
        let m = Self::from_parts(n, labels, matrix, twist)?;
        m.verify()?;
        Ok(m)
    }

    fn from_parts(n: usize, labels: Vec<String>, matrix: PolyMatrix, twist: i64) -> Result<Self> {
        let dim = labels.len();
        let ring = Ring::matrix(n);
        if matrix.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: matrix.len() });
        }
        for row in &matrix {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            if row.iter().any(|p| *p.ring() != ring) {
                return Err(Error::WrongAmbient(format!("module entries must lie in {}", ring.describe())));
            }
        }
        Ok(PolynomialComodule { n, labels, matrix, twist })
    }

    /// The one-dimensional trivial module.
    pub fn trivial(n: usize) -> Result<Self> {
        Self::character(n, 0)
    }

    /// The one-dimensional module `det^k`.
    pub fn character(n: usize, k: u32) -> Result<Self> {
        let c = Character::det_power(i64::from(k)).polynomial(n)?;
        Self::new(n, vec![String::from("1")], vec![vec![c]], 0)
    }

    /// `k_det`, the line on which `m` acts by `det(m)`.
    pub fn k_det(n: usize) -> Result<Self> {
        Self::character(n, 1)
    }

    /// `k^n` with `C(x) = x`, on the basis `e1, ..., en`.
    pub fn standard(n: usize) -> Result<Self> {
        let ring = Ring::matrix(n);
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        Self::new(n, labels, matrix_of_vars(&ring, n, b'x')?, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.matrix[row][col]
    }

    pub fn twist_exponent(&self) -> i64 {
        self.twist
    }

    pub fn ring(&self) -> Ring {
        Ring::matrix(self.n)
    }

    /// The common homogeneous degree of all nonzero entries, if any.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degree = None;
        for p in self.matrix.iter().flatten().filter(|p| !p.is_zero()) {
            let d = p.homogeneous_degree()?;
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        degree
    }

    /// `C(m)` at a numeric matrix.
    pub fn evaluate(&self, m: &[Vector]) -> Result<Vec<Vector>> {
        let n = self.n;
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: m.len() });
        }
        let mut point = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                point.insert(Var::x(i as u8 + 1, j as u8 + 1), m[i][j].clone());
            }
        }
        self.matrix
            .iter()
            .map(|row| row.iter().map(|p| p.evaluate(&point)).collect())
            .collect()
    }

    pub fn evaluate_at_identity(&self) -> Result<Vec<Vector>> {
        self.evaluate(&identity_numeric(self.n))
    }

    pub fn evaluate_at_zero(&self) -> Vec<Vector> {
        self.matrix.iter().map(|row| row.iter().map(Polynomial::constant_term).collect()).collect()
    }

    pub fn check_counit(&self) -> Result<bool> {
        Ok(self.evaluate_at_identity()? == identity_numeric(self.dim()))
    }

    /// `C(0)² = C(0)`, forced by multiplicativity at `0·0 = 0`.
    pub fn check_zero_idempotent(&self) -> bool {
        let z = self.evaluate_at_zero();
        mat_mul(&z, &z) == z
    }

    /// `C(x)·v` as a vector of polynomials.
    pub fn act(&self, v: &[Rational]) -> Result<Vec<Polynomial>> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
        }
        let ring = self.ring();
        Ok(self
            .matrix
            .iter()
            .map(|row| {
                let mut acc = Polynomial::zero(&ring);
                for (p, c) in row.iter().zip(v) {
                    if !c.is_zero() && !p.is_zero() {
                        acc = &acc + &p.scale(c);
                    }
                }
                acc
            })
            .collect())
    }

    /// First failing entry of `C(XY) - C(X)C(Y)` in two generic matrices.
    pub fn multiplicativity_residual_symbolic(&self) -> Result<Option<(usize, usize, Polynomial)>> {
        let n = self.n;
        let target = Ring::matrices(n, b"xy");
        let x = matrix_of_vars(&target, n, b'x')?;
        let y = matrix_of_vars(&target, n, b'y')?;
        let xy = matrix_product(&x, &y)?;
        let c_x: PolyMatrix = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|p| p.embed(&target)).collect())
            .collect::<Result<_>>()?;
        let c_y: PolyMatrix = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|p| substitute_matrix(p, b'x', &y, &target)).collect())
            .collect::<Result<_>>()?;
        let rhs = matrix_product(&c_x, &c_y)?;
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                let lhs = substitute_matrix(p, b'x', &xy, &target)?;
                let r = lhs.checked_sub(&rhs[i][j])?;
                if !r.is_zero() {
                    return Ok(Some((i, j, r)));
                }
            }
        }
        Ok(None)
    }

    /// Counit, idempotent `C(0)` and exact multiplicativity.
    pub fn verify(&self) -> Result<()> {
        if !self.check_counit()? {
            return Err(Error::IdentityFailure("C(Id) is not the identity".into()));
        }
        if !self.check_zero_idempotent() {
            return Err(Error::IdentityFailure("C(0) is not idempotent".into()));
        }
        if let Some((i, j, r)) = self.multiplicativity_residual_symbolic()? {
            return Err(Error::IdentityFailure(format!(
                "C(XY) != C(X)C(Y) at entry ({i}, {j}): residual {r}"
            )));
        }
        Ok(())
    }

    /// Every entry multiplied by `det^k`.
    pub fn twist(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(self.clone());
        }
        let d = Character::det_power(i64::from(k)).polynomial(self.n)?;
        let matrix = self.matrix.iter().map(|row| row.iter().map(|p| p * &d).collect()).collect();
        Self::from_parts(self.n, self.labels.clone(), matrix, self.twist + i64::from(k))
    }

    /// Coefficient functions on `self`, acting through `C*(X) = C(Xᵀ)ᵀ`.
    pub fn dual_action_module(&self) -> Result<Self> {
        let ring = self.ring();
        let xt: PolyMatrix = (0..self.n)
            .map(|i| (0..self.n).map(|j| Polynomial::variable(&ring, Var::x(j as u8 + 1, i as u8 + 1))).collect())
            .collect::<Result<_>>()?;
        let dim = self.dim();
        let mut matrix = vec![vec![Polynomial::zero(&ring); dim]; dim];
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                matrix[j][i] = substitute_matrix(p, b'x', &xt, &ring)?;
            }
        }
        let m = Self::from_parts(self.n, coefficient_labels(dim), matrix, self.twist)?;
        m.verify()?;
        Ok(m)
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        let (p, q) = (self.dim(), other.dim());
        let mut labels = Vec::with_capacity(p * q);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        let mut matrix = vec![vec![Polynomial::zero(&self.ring()); p * q]; p * q];
        for i in 0..p {
            for j in 0..p {
                if self.matrix[i][j].is_zero() {
                    continue;
                }
                for k in 0..q {
                    for l in 0..q {
                        matrix[i * q + k][j * q + l] = &self.matrix[i][j] * &other.matrix[k][l];
                    }
                }
            }
        }
        let m = Self::from_parts(self.n, labels, matrix, self.twist + other.twist)?;
        m.verify()?;
        Ok(m)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        let (p, q) = (self.dim(), other.dim());
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut matrix = vec![vec![Polynomial::zero(&self.ring()); p + q]; p + q];
        for i in 0..p {
            for j in 0..p {
                matrix[i][j] = self.matrix[i][j].clone();
            }
        }
        for i in 0..q {
            for j in 0..q {
                matrix[p + i][p + j] = other.matrix[i][j].clone();
            }
        }
        let twist = if self.twist == other.twist { self.twist } else { 0 };
        Self::from_parts(self.n, labels, matrix, twist)
    }

    /// `S^e(self)` on the monomial basis of degree `e` in the basis of
    /// `self`, listed from `v_1^e` downwards.
    pub fn symmetric_power(&self, e: u32, cap: usize) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidArgument("symmetric power exponent must be at least 1".into()));
        }
        let dim = self.dim();
        let basis = monomial_exponents(dim, e);
        if basis.len() > cap {
            return Err(Error::CapExceeded { dim: basis.len(), cap });
        }
        if e == 1 {
            return Ok(self.clone());
        }
        let base = self.ring();
        let wring = base.extend(vec![VariableSet::auxiliary(b'w', dim)])?;
        let wvars: Vec<Var> = (1..=dim as u16).map(|index| Var::Aux { tag: b'w', index }).collect();
        // images of the basis vectors as linear forms in the w's
        let mut linear = Vec::with_capacity(dim);
        for k in 0..dim {
            let mut form = Polynomial::zero(&wring);
            for (j, w) in wvars.iter().enumerate() {
                let c = &self.matrix[j][k];
                if !c.is_zero() {
                    form = &form + &(&c.embed(&wring)? * &Polynomial::variable(&wring, *w)?);
                }
            }
            linear.push(form);
        }
        let index: BTreeMap<Vec<u32>, usize> = basis.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
        let mut products: BTreeMap<Vec<u32>, Polynomial> = BTreeMap::new();
        products.insert(vec![0; dim], Polynomial::one(&wring));
        let mut matrix = vec![vec![Polynomial::zero(&base); basis.len()]; basis.len()];
        for (col, exps) in basis.iter().enumerate() {
            let image = product_of_forms(exps, &linear, &mut products);
            for (key, cofactor) in image.coefficients_in(&wvars)? {
                let row = *index
                    .get(&key)
                    .ok_or_else(|| Error::IdentityFailure("symmetric power image left the degree".into()))?;
                matrix[row][col] = cofactor.restrict(&base)?;
            }
        }
        let labels = basis.iter().map(|b| monomial_label(&self.labels, b)).collect();
        let m = Self::from_parts(self.n, labels, matrix, self.twist * i64::from(e))?;
        m.verify()?;
        Ok(m)
    }

    fn same_n(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.n, found: other.n })
        }
    }

    /// Whether `a` (rows: target basis, columns: source basis) intertwines
    /// the actions: `a C_self(x) = C_other(x) a`.
    pub fn is_morphism_to(&self, other: &Self, a: &[Vector]) -> Result<bool> {
        if a.len() != other.dim() || a.iter().any(|r| r.len() != self.dim()) {
            return Err(Error::DimensionMismatch { expected: other.dim(), found: a.len() });
        }
        let ring = self.ring();
        let constant: Vec<Vec<Polynomial>> = a
            .iter()
            .map(|row| row.iter().map(|c| Polynomial::constant(&ring, c.clone())).collect())
            .collect();
        Ok(matrix_product(&constant, &self.matrix)? == matrix_product(&other.matrix, &constant)?)
    }
}

fn identity_numeric(n: usize) -> Vec<Vector> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

/// `a, b, c, ...` for up to 26 coefficients, `c_1, c_2, ...` beyond.
pub fn coefficient_labels(dim: usize) -> Vec<String> {
    if dim <= 26 {
        (0..dim as u8).map(|k| Var::Coef(k).to_string()).collect()
    } else {
        (1..=dim).map(|k| format!("c_{k}")).collect()
    }
}

/// Exponent vectors of degree `e` in `dim` variables, lexicographically
/// decreasing.
pub fn monomial_exponents(dim: usize, e: u32) -> Vec<Vec<u32>> {
    fn go(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for k in (0..=left).rev() {
            cur[pos] = k;
            go(pos + 1, left - k, cur, out);
        }
    }
    let mut out = Vec::new();
    if dim > 0 {
        go(0, e, &mut vec![0; dim], &mut out);
    }
    out
}

fn monomial_label(labels: &[String], exps: &[u32]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .zip(labels)
        .filter(|(e, _)| **e > 0)
        .map(|(&e, l)| if e == 1 { l.clone() } else { format!("{l}^{e}") })
        .collect();
    parts.join("*")
}

fn product_of_forms(exps: &[u32], linear: &[Polynomial], memo: &mut BTreeMap<Vec<u32>, Polynomial>) -> Polynomial {
    if let Some(p) = memo.get(exps) {
        return p.clone();
    }
    let k = exps.iter().position(|&e| e > 0).expect("the zero exponent is memoized");
    let mut smaller = exps.to_vec();
    smaller[k] -= 1;
    let p = &product_of_forms(&smaller, linear, memo) * &linear[k];
    memo.insert(exps.to_vec(), p.clone());
    p
}

/// Binary forms of degree `d` with `(m·F)(u, v) = F((u, v)m)`, on the basis
/// `u^d, u^{d-1}v, ..., v^d`.
pub fn binary_forms_module(d: u32) -> Result<PolynomialComodule> {
    if d == 0 {
        return Err(Error::InvalidArgument("form degree must be at least 1".into()));
    }
    let ring = Ring::matrix(2);
    let x = |i, j| Polynomial::variable(&ring, Var::x(i, j));
    // (u, v)m = (x11 u + x21 v, x12 u + x22 v); track u and v as w_1, w_2
    let wring = ring.extend(vec![VariableSet::auxiliary(b'w', 2)])?;
    let u = Polynomial::variable(&wring, Var::Aux { tag: b'w', index: 1 })?;
    let v = Polynomial::variable(&wring, Var::Aux { tag: b'w', index: 2 })?;
    let first = &(&x(1, 1)?.embed(&wring)? * &u) + &(&x(2, 1)?.embed(&wring)? * &v);
    let second = &(&x(1, 2)?.embed(&wring)? * &u) + &(&x(2, 2)?.embed(&wring)? * &v);
    let dim = d as usize + 1;
    let mut matrix = vec![vec![Polynomial::zero(&ring); dim]; dim];
    for j in 0..dim {
        let image = &first.pow(d - j as u32) * &second.pow(j as u32);
        for (key, cofactor) in image.coefficients_in(&[Var::Aux { tag: b'w', index: 1 }, Var::Aux { tag: b'w', index: 2 }])? {
            matrix[key[1] as usize][j] = cofactor.restrict(&ring)?;
        }
    }
    let labels = (0..=d)
        .map(|j| {
            let a = d - j;
            let part = |name: &str, e: u32| match e {
                0 => None,
                1 => Some(name.to_string()),
                _ => Some(format!("{name}^{e}")),
            };
            [part("u", a), part("v", j)].into_iter().flatten().collect::<Vec<_>>().join("*")
        })
        .collect();
    PolynomialComodule::new(2, labels, matrix, 0)
}

/// Coefficient functions of binary forms of degree `d`: the dual of
/// [`binary_forms_module`], on the basis `a, b, c, ...`.
pub fn binary_form_coefficients(d: u32) -> Result<PolynomialComodule> {
    binary_forms_module(d)?.dual_action_module()
}

/// Basis of `{v : C(x)v = det(x)^k v}`, found by equating the coefficients of
/// every monomial in `x` and solving exactly. Each basis vector is checked
/// against the identity afterwards.
pub fn semi_invariant_oracle(module: &PolynomialComodule, k: u32) -> Result<Vec<Vector>> {
    let dim = module.dim();
    let detk = Character::det_power(i64::from(k)).polynomial(module.n())?;
    let mut equations: Vec<Vector> = Vec::new();
    for (j, row) in module.matrix().iter().enumerate() {
        let mut by_monomial: BTreeMap<Monomial, Vector> = BTreeMap::new();
        for (i, p) in row.iter().enumerate() {
            for (m, c) in p.terms() {
                by_monomial.entry(m.clone()).or_insert_with(|| vec![Rational::zero(); dim])[i] += c;
            }
        }
        for (m, c) in detk.terms() {
            by_monomial.entry(m.clone()).or_insert_with(|| vec![Rational::zero(); dim])[j] -= c;
        }
        equations.extend(by_monomial.into_values());
    }
    let basis = nullspace(&equations, dim);
    for v in &basis {
        let image = module.act(v)?;
        for (p, c) in image.iter().zip(v) {
            if *p != detk.scale(c) {
                return Err(Error::IdentityFailure("oracle solution fails C(x)v = det^k v".into()));
            }
        }
    }
    Ok(basis)
}

/// `numerator · det^det_exponent`, an element of `k[GL_n]`. Kept normalized:
/// the numerator is not divisible by `det` (zero has exponent 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedPolynomial {
    numerator: Polynomial,
    det_exponent: i64,
}

impl LocalizedPolynomial {
    pub fn new(numerator: Polynomial, det_exponent: i64, det: &Polynomial) -> Result<Self> {
        let mut out = LocalizedPolynomial { numerator, det_exponent };
        out.normalize(det)?;
        Ok(out)
    }

    fn normalize(&mut self, det: &Polynomial) -> Result<()> {
        if self.numerator.is_zero() {
            self.det_exponent = 0;
            return Ok(());
        }
        while let Some(q) = self.numerator.div_exact(det)? {
            self.numerator = q;
            self.det_exponent += 1;
        }
        Ok(())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn det_exponent(&self) -> i64 {
        self.det_exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn mul(&self, other: &Self, det: &Polynomial) -> Result<Self> {
        Self::new(&self.numerator * &other.numerator, self.det_exponent + other.det_exponent, det)
    }
}

/// A representation of `GL_n` whose coefficients may involve `det^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRep {
    n: usize,
    labels: Vec<String>,
    matrix: Vec<Vec<LocalizedPolynomial>>,
    det: Polynomial,
}

impl RationalRep {
    pub fn from_polynomial(module: &PolynomialComodule) -> Result<Self> {
        let det = determinant(&module.ring(), module.n(), b'x')?;
        let matrix = module
            .matrix()
            .iter()
            .map(|row| row.iter().map(|p| LocalizedPolynomial::new(p.clone(), 0, &det)).collect())
            .collect::<Result<_>>()?;
        Ok(RationalRep { n: module.n(), labels: module.labels().to_vec(), matrix, det })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn entry(&self, row: usize, col: usize) -> &LocalizedPolynomial {
        &self.matrix[row][col]
    }

    /// The least `k` with `det^k · C` polynomial; negative when every entry
    /// is divisible by a power of `det`.
    pub fn minimal_twist_exponent(&self) -> i64 {
        self.matrix
            .iter()
            .flatten()
            .filter(|e| !e.is_zero())
            .map(|e| -e.det_exponent)
            .max()
            .unwrap_or(0)
    }

    pub fn twist(&self, k: i64) -> Result<Self> {
        let matrix = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| LocalizedPolynomial::new(e.numerator.clone(), e.det_exponent + k, &self.det))
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(RationalRep { n: self.n, labels: self.labels.clone(), matrix, det: self.det.clone() })
    }

    /// `det^k · C` for `k = minimal_twist_exponent()`, as a verified
    /// polynomial module.
    pub fn polynomial_twist(&self) -> Result<PolynomialComodule> {
        let k = self.minimal_twist_exponent();
        let matrix = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        let shift = e.det_exponent + k;
                        if e.is_zero() {
                            e.numerator.clone()
                        } else {
                            &e.numerator * &self.det.pow(shift as u32)
                        }
                    })
                    .collect()
            })
            .collect();
        PolynomialComodule::new(self.n, self.labels.clone(), matrix, k)
    }

    /// Exact check: counit, and multiplicativity of the polynomial twist
    /// (equivalent, since `det` is multiplicative).
    pub fn verify(&self) -> Result<()> {
        self.polynomial_twist()?.verify()
    }

    /// The polynomial module itself, when no negative powers occur.
    pub fn to_polynomial(&self) -> Result<PolynomialComodule> {
        if self.matrix.iter().flatten().any(|e| e.det_exponent < 0) {
            return Err(Error::InvalidArgument("representation has det^-1 coefficients".into()));
        }
        let matrix = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|e| &e.numerator * &self.det.pow(e.det_exponent as u32)).collect())
            .collect();
        PolynomialComodule::new(self.n, self.labels.clone(), matrix, 0)
    }

    /// `C(X^{-1})ᵀ`, computed with `X^{-1} = adj(X)/det(X)`.
    pub fn contragredient(&self) -> Result<Self> {
        let ring = Ring::matrix(self.n);
        let adj = adjugate(&matrix_of_vars(&ring, self.n, b'x')?, &ring);
        let dim = self.dim();
        let zero = LocalizedPolynomial { numerator: Polynomial::zero(&ring), det_exponent: 0 };
        let mut matrix = vec![vec![zero; dim]; dim];
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                // f(adj/det) = Σ_d f_d(adj) det^{-d}; bring to the common power det^{-top}
                let top = e.numerator.degree().unwrap_or(0);
                let mut num = Polynomial::zero(&ring);
                for (m, c) in e.numerator.terms() {
                    let term = Polynomial::from_terms(&ring, [(m.clone(), c.clone())])?;
                    let moved = substitute_matrix(&term, b'x', &adj, &ring)?;
                    num = &num + &(&moved * &self.det.pow(top - m.degree()));
                }
                matrix[j][i] = LocalizedPolynomial::new(num, -(top as i64) - e.det_exponent, &self.det)?;
            }
        }
        let labels = self.labels.iter().map(|l| format!("{l}*")).collect();
        Ok(RationalRep { n: self.n, labels, matrix, det: self.det.clone() })
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        let (p, q) = (self.dim(), other.dim());
        let ring = Ring::matrix(self.n);
        let zero = LocalizedPolynomial { numerator: Polynomial::zero(&ring), det_exponent: 0 };
        let mut matrix = vec![vec![zero; p * q]; p * q];
        for i in 0..p {
            for j in 0..p {
                if self.matrix[i][j].is_zero() {
                    continue;
                }
                for k in 0..q {
                    for l in 0..q {
                        matrix[i * q + k][j * q + l] = self.matrix[i][j].mul(&other.matrix[k][l], &self.det)?;
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(p * q);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        Ok(RationalRep { n: self.n, labels, matrix, det: self.det.clone() })
    }
}
