//! Weights of `GL_n`, rational polyhedral cones and polynomial dominant weights.
//!
//! `X(T) = Z^n` with simple roots `e_i - e_{i+1}`; coroots are identified with
//! roots through the standard pairing. Every enumeration works inside an
//! explicit [`TruncationBox`] and claims nothing outside it.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{nullspace, primitive_integer_row, rank, Vector};
use crate::polycore::{rat, Rational};

/// An integral weight of the diagonal torus of `GL_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// `det^k`, i.e. `(k, ..., k)`.
    pub fn det_power(n: usize, k: i64) -> Self {
        Weight(vec![k; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    fn check_len(&self, other: &Weight) -> Result<()> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.len(), found: other.len() })
        }
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.check_len(other)?;
        Ok(Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.check_len(other)?;
        Ok(Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// `λ_1 ≥ λ_2 ≥ ... ≥ λ_n`.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_rational(&self) -> Vector {
        self.0.iter().map(|&c| rat(c)).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `λ ≤ μ` in the dominance order: `μ - λ` is a nonnegative integer
/// combination of simple roots, i.e. equal coordinate sums and nonnegative
/// partial sums of `μ - λ`.
pub fn dominance_leq(lambda: &Weight, mu: &Weight) -> Result<bool> {
    let diff = mu.checked_sub(lambda)?;
    let mut partial = 0i64;
    for (i, d) in diff.0.iter().enumerate() {
        partial += d;
        if i + 1 < diff.len() && partial < 0 {
            return Ok(false);
        }
    }
    Ok(partial == 0)
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
}

/// A finitely generated cone `{Σ c_i g_i : c_i ≥ 0}` in `Q^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCone {
    dim: usize,
    generators: Vec<Vector>,
}

impl RationalCone {
    pub fn new(dim: usize, generators: Vec<Vector>) -> Result<Self> {
        for g in &generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.len() });
            }
        }
        Ok(RationalCone { dim, generators })
    }

    pub fn from_integer_generators(dim: usize, generators: &[Vec<i64>]) -> Result<Self> {
        Self::new(dim, generators.iter().map(|g| g.iter().map(|&c| rat(c)).collect()).collect())
    }

    /// The cone `{0}`.
    pub fn trivial(dim: usize) -> Self {
        RationalCone { dim, generators: Vec::new() }
    }

    pub fn nonnegative_orthant(dim: usize) -> Self {
        let gens = (0..dim)
            .map(|i| (0..dim).map(|j| rat((i == j) as i64)).collect())
            .collect();
        RationalCone { dim, generators: gens }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    /// Whether `y` pairs nonnegatively with every generator, i.e. `y ∈ C^∨`.
    pub fn dual_contains(&self, y: &[Rational]) -> bool {
        self.generators.iter().all(|g| !dot(g, y).is_negative())
    }

    /// The dual cone, generated by its extreme rays and `±` a basis of its
    /// lineality space.
    pub fn dual(&self) -> RationalCone {
        let d = self.dim;
        let lineality = nullspace(&self.generators, d);
        let k = d - lineality.len();
        let mut rays: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        if k > 0 {
            let m = self.generators.len();
            for subset in subsets(m, k - 1) {
                let mut rows: Vec<Vector> = subset.iter().map(|&i| self.generators[i].clone()).collect();
                rows.extend(lineality.iter().cloned());
                let ns = nullspace(&rows, d);
                if ns.len() != 1 {
                    continue;
                }
                let r = &ns[0];
                let neg: Vector = r.iter().map(|c| -c.clone()).collect();
                for cand in [r.clone(), neg] {
                    if self.dual_contains(&cand) {
                        rays.insert(primitive_ray(&cand));
                    }
                }
            }
        }
        let mut gens: Vec<Vector> = rays
            .into_iter()
            .map(|r| r.into_iter().map(Rational::from_integer).collect())
            .collect();
        for b in lineality {
            gens.push(b.iter().map(|c| -c.clone()).collect());
            gens.push(b);
        }
        RationalCone { dim: d, generators: gens }
    }

    /// Exact membership `v ∈ C`, decided through the dual (`C = C^∨∨`).
    pub fn contains(&self, v: &[Rational]) -> bool {
        self.dual().dual_contains(v)
    }

    /// `C` contains no line, equivalently `C^∨` is full-dimensional.
    pub fn is_strictly_convex(&self) -> bool {
        rank(self.dual().generators(), self.dim) == self.dim
    }

    /// A vector pairing strictly positively with every nonzero generator.
    pub fn strict_convexity_certificate(&self) -> Result<Vector> {
        let dual = self.dual();
        if rank(dual.generators(), self.dim) != self.dim {
            return Err(Error::NotStrictlyConvex);
        }
        let mut y = vec![Rational::zero(); self.dim];
        for g in dual.generators() {
            for (a, b) in y.iter_mut().zip(g) {
                *a += b;
            }
        }
        for g in &self.generators {
            if g.iter().any(|c| !c.is_zero()) && !dot(g, &y).is_positive() {
                return Err(Error::IdentityFailure("interior dual vector is not strictly positive".into()));
            }
        }
        Ok(y)
    }
}

/// Primitive integer vector on the same ray as `v` (orientation kept).
fn primitive_ray(v: &[Rational]) -> Vec<BigInt> {
    let mut row = primitive_integer_row(v);
    let flipped = v.iter().zip(&row).any(|(a, b)| a.is_negative() != b.is_negative() && !b.is_zero());
    if flipped {
        for x in &mut row {
            *x = -core::mem::take(x);
        }
    }
    row
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= m {
        go(0, m, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Simple coroots `e_i - e_{i+1}` of `GL_n` under the standard pairing.
pub fn simple_coroots(n: usize) -> Vec<Vector> {
    (0..n.saturating_sub(1))
        .map(|i| (0..n).map(|j| rat((j == i) as i64 - (j == i + 1) as i64)).collect())
        .collect()
}

/// The cone of the matrix monoid `M_n`: the simple coroots together with
/// `e_n`. Its dual meets the dominant chamber in `λ_1 ≥ ... ≥ λ_n ≥ 0`.
pub fn matrix_monoid_cone(n: usize) -> RationalCone {
    let mut gens = simple_coroots(n);
    gens.push((0..n).map(|j| rat((j + 1 == n) as i64)).collect());
    RationalCone { dim: n, generators: gens }
}

/// Dominant and in `C^∨` for the matrix monoid.
pub fn is_matrix_polynomial_dominant(w: &Weight) -> bool {
    w.is_dominant() && matrix_monoid_cone(w.len()).dual_contains(&w.to_rational())
}

/// Coordinate-wise bounds `lo ≤ w_i ≤ hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationBox {
    pub lo: i64,
    pub hi: i64,
}

impl TruncationBox {
    pub fn new(lo: i64, hi: i64) -> Self {
        TruncationBox { lo, hi }
    }

    /// `[-b, b]` in every coordinate.
    pub fn symmetric(b: i64) -> Self {
        TruncationBox { lo: -b, hi: b }
    }

    pub fn contains(&self, w: &Weight) -> bool {
        w.0.iter().all(|&c| self.lo <= c && c <= self.hi)
    }

    /// All lattice points, lexicographically increasing.
    pub fn points(&self, n: usize) -> Vec<Weight> {
        if self.lo > self.hi {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = vec![self.lo; n];
        loop {
            out.push(Weight(cur.clone()));
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < self.hi {
                    cur[i] += 1;
                    for c in cur.iter_mut().skip(i + 1) {
                        *c = self.lo;
                    }
                    break;
                }
            }
        }
    }
}

/// `C^∨ ∩ X₊(T)` inside a box, remembering the cone so that membership of
/// weights outside the box can still be decided.
#[derive(Clone, Debug)]
pub struct PolynomialWeights {
    pub cone: RationalCone,
    pub bounds: TruncationBox,
    pub weights: Vec<Weight>,
}

impl PolynomialWeights {
    /// Untruncated membership test in `C^∨ ∩ X₊(T)`.
    pub fn is_polynomial_dominant(&self, w: &Weight) -> bool {
        w.len() == self.cone.dim() && w.is_dominant() && self.cone.dual_contains(&w.to_rational())
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.weights.binary_search(w).is_ok()
    }
}

pub fn polynomial_dominant_weights(cone: &RationalCone, n: usize, bounds: TruncationBox) -> Result<PolynomialWeights> {
    if cone.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: cone.dim() });
    }
    let weights = bounds
        .points(n)
        .into_iter()
        .filter(|w| w.is_dominant() && cone.dual_contains(&w.to_rational()))
        .collect();
    Ok(PolynomialWeights { cone: cone.clone(), bounds, weights })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `kλ` is in the set but `λ` is not.
    MultipleWithoutBase,
    /// `λ` is in the set but `kλ` (inside the box) is not.
    BaseWithoutMultiple,
    /// `μ` is in the set, `λ ≤ μ` is dominant, but `λ` is missing.
    NotAnIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub weight: Weight,
    pub witness: Weight,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl WeightReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Saturation on a window: for `λ` in the box and `2 ≤ k ≤ max_multiple`
/// with `kλ` in the box, `kλ ∈ S ⇔ λ ∈ S`.
pub fn saturation_check(set: &[Weight], n: usize, bounds: TruncationBox, max_multiple: i64) -> WeightReport {
    let members: BTreeSet<&Weight> = set.iter().collect();
    let mut report = WeightReport::default();
    for lambda in bounds.points(n) {
        for k in 2..=max_multiple {
            let multiple = lambda.scale(k);
            if !bounds.contains(&multiple) {
                continue;
            }
            report.checked += 1;
            let (base_in, mult_in) = (members.contains(&lambda), members.contains(&multiple));
            if mult_in && !base_in {
                report.violations.push(Violation {
                    kind: ViolationKind::MultipleWithoutBase,
                    weight: lambda.clone(),
                    witness: multiple,
                });
            } else if base_in && !mult_in {
                report.violations.push(Violation {
                    kind: ViolationKind::BaseWithoutMultiple,
                    weight: lambda.clone(),
                    witness: multiple,
                });
            }
        }
    }
    report
}

/// Ideal property: `μ ∈ S`, `λ` dominant in the box and `λ ≤ μ` imply `λ ∈ S`.
pub fn ideal_check(set: &[Weight], n: usize, bounds: TruncationBox) -> WeightReport {
    let members: BTreeSet<&Weight> = set.iter().collect();
    let dominant: Vec<Weight> = bounds.points(n).into_iter().filter(Weight::is_dominant).collect();
    let mut report = WeightReport::default();
    for mu in set {
        for lambda in &dominant {
            if lambda.len() != mu.len() || !dominance_leq(lambda, mu).unwrap_or(false) {
                continue;
            }
            report.checked += 1;
            if !members.contains(lambda) {
                report.violations.push(Violation {
                    kind: ViolationKind::NotAnIdeal,
                    weight: lambda.clone(),
                    witness: mu.clone(),
                });
            }
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientStatus {
    /// `μ - λ` is polynomial dominant; `a_μ` may take any value.
    Free,
    /// `μ - λ` is not polynomial dominant; `a_μ` must vanish.
    ForcedZero,
}

/// The admissible coefficients `a_μ` of processes attached to `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaCoefficientFamily {
    pub lambda: Weight,
    pub entries: BTreeMap<Weight, CoefficientStatus>,
}

impl OmegaCoefficientFamily {
    pub fn status(&self, mu: &Weight) -> Option<CoefficientStatus> {
        self.entries.get(mu).copied()
    }

    /// Every `a_{sλ}` inside the window is free, the necessary condition
    /// for a proper process.
    pub fn admits_proper(&self) -> bool {
        let mut s = 1;
        loop {
            match self.entries.get(&self.lambda.scale(s)) {
                Some(CoefficientStatus::Free) => s += 1,
                Some(CoefficientStatus::ForcedZero) => return false,
                None => return true,
            }
        }
    }
}

pub fn omega_coefficient_family(lambda: &Weight, weights: &PolynomialWeights) -> Result<OmegaCoefficientFamily> {
    if !weights.contains(lambda) {
        return Err(Error::InvalidArgument(alloc::format!(
            "character weight {lambda} is not among the polynomial dominant weights"
        )));
    }
    let mut entries = BTreeMap::new();
    for mu in &weights.weights {
        let shifted = mu.checked_sub(lambda)?;
        let status = if weights.is_polynomial_dominant(&shifted) {
            CoefficientStatus::Free
        } else {
            CoefficientStatus::ForcedZero
        };
        entries.insert(mu.clone(), status);
    }
    Ok(OmegaCoefficientFamily { lambda: lambda.clone(), entries })
}

/// A rational vector split into its component in the span of the roots
/// (coordinates summing to zero) and a central multiple of `(1, ..., 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitVector {
    pub semisimple: Vector,
    pub central: Rational,
}

impl SplitVector {
    pub fn split(v: &[Rational]) -> Self {
        let n = v.len();
        let central: Rational = v.iter().sum::<Rational>() / rat(n as i64);
        let semisimple = v.iter().map(|c| c - &central).collect();
        SplitVector { semisimple, central }
    }

    pub fn join(&self) -> Vector {
        self.semisimple.iter().map(|c| c + &self.central).collect()
    }
}

/// Fundamental weights projected to the semisimple part:
/// `ω_i = e_1 + ... + e_i - (i/n)(1, ..., 1)`.
pub fn fundamental_weights(n: usize) -> Vec<Vector> {
    (1..n)
        .map(|i| {
            let shift = Rational::new(BigInt::from(i as i64), BigInt::from(n as i64));
            (0..n).map(|j| rat((j < i) as i64) - &shift).collect()
        })
        .collect()
}

/// Half the sum of the positive roots `e_i - e_j`, `i < j`.
pub fn half_sum_positive_roots(n: usize) -> Vector {
    let mut v = vec![Rational::zero(); n];
    for i in 0..n {
        for j in i + 1..n {
            v[i] += rat(1);
            v[j] -= rat(1);
        }
    }
    v.into_iter().map(|c| c / rat(2)).collect()
}

fn character_level(n: usize, lambda: &Weight) -> Result<i64> {
    if n < 2 || lambda.len() != n {
        return Err(Error::InvalidArgument(alloc::format!("need n >= 2 and a weight of length {n}")));
    }
    let k = lambda.0[0];
    if lambda.0.iter().any(|&c| c != k) {
        return Err(Error::InvalidArgument(alloc::format!("{lambda} is not a character of GL_{n}")));
    }
    Ok(k)
}

/// Checks `(0, λ) = (-w, λ) + (ρ, 0)` with `w = Σ ω_i` and `ρ` the half sum
/// of positive roots, as an exact vector identity in split coordinates.
pub fn central_decomposition_holds(n: usize, lambda: &Weight) -> Result<bool> {
    let k = character_level(n, lambda)?;
    let w = sum_vectors(n, &fundamental_weights(n));
    let apex = SplitVector { semisimple: w.iter().map(|c| -c.clone()).collect(), central: rat(k) };
    let rho = SplitVector { semisimple: half_sum_positive_roots(n), central: Rational::zero() };
    let lhs = SplitVector { semisimple: vec![Rational::zero(); n], central: rat(k) };
    let sum = SplitVector {
        semisimple: apex.semisimple.iter().zip(&rho.semisimple).map(|(a, b)| a + b).collect(),
        central: &apex.central + &rho.central,
    };
    Ok(sum == lhs)
}

fn sum_vectors(n: usize, vs: &[Vector]) -> Vector {
    let mut out = vec![Rational::zero(); n];
    for v in vs {
        for (a, b) in out.iter_mut().zip(v) {
            *a += b;
        }
    }
    out
}

/// The cone generated by `(-w, λ)` and the coroots, with its exact
/// strict-convexity certificate.
#[derive(Clone, Debug)]
pub struct CharacterMonoidCone {
    pub cone: RationalCone,
    pub split_generators: Vec<SplitVector>,
    pub certificate: Vector,
}

pub fn monoid_cone_from_character(n: usize, lambda: &Weight) -> Result<CharacterMonoidCone> {
    let k = character_level(n, lambda)?;
    if !central_decomposition_holds(n, lambda)? {
        return Err(Error::IdentityFailure("(0, λ) = (-w, λ) + (ρ, 0)".into()));
    }
    let w = sum_vectors(n, &fundamental_weights(n));
    let mut split_generators = vec![SplitVector { semisimple: w.iter().map(|c| -c.clone()).collect(), central: rat(k) }];
    for c in simple_coroots(n) {
        split_generators.push(SplitVector::split(&c));
    }
    let cone = RationalCone::new(n, split_generators.iter().map(SplitVector::join).collect())?;
    let certificate = cone.strict_convexity_certificate()?;
    Ok(CharacterMonoidCone { cone, split_generators, certificate })
}
