use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{Ring, Var};
use super::Rational;
use crate::error::{Error, Result};

/// An exponent vector over the variables of a ring.
///
/// Ordered graded-lexicographically: higher total degree first, ties broken by
/// the exponent of the earliest variable in the ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }

    pub(crate) fn exponent_mut(&mut self, idx: usize) -> &mut u32 {
        &mut self.0[idx]
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial with exact rational coefficients.
///
/// Never stores a zero coefficient; every exponent vector has the arity of
/// the ambient ring.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(Monomial::one(ring.arity()), c);
        p
    }

    pub fn variable(ring: &Ring, v: Var) -> Result<Self> {
        let idx = ring.require(v)?;
        let mut m = Monomial::one(ring.arity());
        *m.exponent_mut(idx) = 1;
        let mut p = Self::zero(ring);
        p.add_term(m, Rational::one());
        Ok(p)
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, merging repeats.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            if m.arity() != ring.arity() {
                return Err(Error::DimensionMismatch { expected: ring.arity(), found: m.arity() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The coefficient of the unit monomial.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.ring.arity()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// The common degree of all terms, if the polynomial is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let first = self.terms.keys().next()?.degree();
        let last = self.terms.keys().next_back()?.degree();
        (first == last).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// The largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial_derivative(&self, v: Var) -> Result<Polynomial> {
        let idx = self.ring.require(v)?;
        Ok(self.derivative_at(idx))
    }

    pub(crate) fn derivative_at(&self, idx: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[idx];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            *dm.exponent_mut(idx) = e - 1;
            out.add_term(dm, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Replaces every variable of the ring by a polynomial of `target`.
    pub fn substitute(&self, map: &BTreeMap<Var, Polynomial>, target: &Ring) -> Result<Polynomial> {
        let mut images = Vec::with_capacity(self.ring.arity());
        for &v in self.ring.vars() {
            let img = map.get(&v).ok_or(Error::MissingSubstitution(v))?;
            if img.ring != *target {
                return Err(Error::AmbientMismatch);
            }
            images.push(img);
        }
        Ok(self.substitute_images(&images, target))
    }

    /// Substitution where `images[i]` replaces the `i`-th ring variable.
    pub(crate) fn substitute_images(&self, images: &[&Polynomial], target: &Ring) -> Polynomial {
        // powers[i][e] = images[i]^e, filled lazily
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|_| vec![Polynomial::one(target)]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * images[i];
                    powers[i].push(next);
                }
                acc = &acc * &powers[i][e as usize];
            }
            for (m2, c2) in acc.terms {
                out.add_term(m2, c2);
            }
        }
        out
    }

    /// Evaluates at a point; every ring variable must be assigned.
    pub fn evaluate(&self, point: &BTreeMap<Var, Rational>) -> Result<Rational> {
        let mut values = Vec::with_capacity(self.ring.arity());
        for &v in self.ring.vars() {
            values.push(point.get(&v).ok_or(Error::MissingSubstitution(v))?.clone());
        }
        Ok(self.evaluate_slice(&values))
    }

    pub(crate) fn evaluate_slice(&self, values: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(values[i].clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Sets the listed variables to zero, keeping the ring.
    pub fn zero_out(&self, vars: &[Var]) -> Result<Polynomial> {
        let idx: Vec<usize> = vars.iter().map(|&v| self.ring.require(v)).collect::<Result<_>>()?;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| idx.iter().all(|&i| m.exponents()[i] == 0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Views `self` inside a ring containing all of its variables.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial> {
        if *target == self.ring {
            return Ok(self.clone());
        }
        let positions: Vec<usize> =
            self.ring.vars().iter().map(|&v| target.require(v)).collect::<Result<_>>()?;
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.arity()];
            for (i, &p) in positions.iter().enumerate() {
                e[p] = m.exponents()[i];
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Moves `self` into a ring lacking some variables; every variable that
    /// actually occurs must exist in `target`.
    pub fn restrict(&self, target: &Ring) -> Result<Polynomial> {
        let positions: Vec<Option<usize>> = self.ring.vars().iter().map(|&v| target.index_of(v)).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.arity()];
            for (i, &k) in m.exponents().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let p = positions[i].ok_or(Error::UnknownVariable(self.ring.vars()[i]))?;
                e[p] = k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Renames variables (unmapped ones keep their name) into `target`.
    pub fn rename(&self, map: &BTreeMap<Var, Var>, target: &Ring) -> Result<Polynomial> {
        let positions: Vec<usize> = self
            .ring
            .vars()
            .iter()
            .map(|v| target.require(*map.get(v).unwrap_or(v)))
            .collect::<Result<_>>()?;
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.arity()];
            for (i, &p) in positions.iter().enumerate() {
                e[p] += m.exponents()[i];
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Groups terms by their exponents in `vars`.
    ///
    /// Returns `exponents-in-vars -> cofactor`, where the cofactor stays in
    /// the same ring with the exponents of `vars` cleared.
    pub fn coefficients_in(&self, vars: &[Var]) -> Result<BTreeMap<Vec<u32>, Polynomial>> {
        let idx: Vec<usize> = vars.iter().map(|&v| self.ring.require(v)).collect::<Result<_>>()?;
        let mut out: BTreeMap<Vec<u32>, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u32> = idx.iter().map(|&i| m.exponents()[i]).collect();
            let mut rest = m.clone();
            for &i in &idx {
                *rest.exponent_mut(i) = 0;
            }
            out.entry(key)
                .or_insert_with(|| Polynomial::zero(&self.ring))
                .add_term(rest, c.clone());
        }
        Ok(out)
    }

    /// Exact division: `Some(q)` with `self = q * divisor`, or `None`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(divisor)?;
        let Some((lm, lc)) = divisor.leading_term() else {
            return Err(Error::InvalidArgument("division by zero polynomial".into()));
        };
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quotient = Polynomial::zero(&self.ring);
        while let Some((m, c)) = rem.leading_term() {
            let Some(qm) = m.div(&lm) else {
                return Ok(None);
            };
            let qc = c / &lc;
            let mut step = Polynomial::zero(&self.ring);
            step.add_term(qm, qc);
            rem = &rem - &(&step * divisor);
            quotient = &quotient + &step;
        }
        Ok(Some(quotient))
    }

    /// Scales to coprime integer coefficients with a positive leading coefficient.
    pub fn primitive_part(&self) -> Polynomial {
        let Some((_, lead)) = self.leading_term() else {
            return self.clone();
        };
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut factor = Rational::new(den_lcm, num_gcd);
        if lead.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

fn mismatch() -> ! {
    panic!("polynomial arithmetic across different rings; use the checked_* methods")
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).unwrap_or_else(|_| mismatch())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).unwrap_or_else(|_| mismatch())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).unwrap_or_else(|_| mismatch())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
