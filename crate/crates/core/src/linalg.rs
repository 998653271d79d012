//! Exact linear algebra over the rationals.
//!
//! Kernels are computed with fraction-free (Bareiss) elimination on integer
//! rows; spans are kept in reduced row-echelon form so that bases are
//! canonical for a fixed coordinate order.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polycore::Rational;

/// A dense rational vector.
pub type Vector = Vec<Rational>;

/// Clears denominators and content; the first nonzero entry becomes positive.
pub fn primitive_integer_row(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in row {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = row.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if g.is_zero() {
        return ints;
    }
    let negative = ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative());
    if negative {
        g = -g;
    }
    for v in &mut ints {
        *v /= &g;
    }
    ints
}

/// Row-echelon form from fraction-free elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

/// Bareiss elimination. Every intermediate division is exact, so entries stay
/// integral (they are minors of the input).
pub fn fraction_free_echelon(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Echelon {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..m {
            for j in c + 1..ncols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&v % &prev).is_zero());
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

/// Basis of `{v : A v = 0}` in reduced row-echelon form.
///
/// Equations are deduplicated (after clearing denominators) before
/// elimination.
pub fn nullspace(equations: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut distinct: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for eq in equations {
        debug_assert_eq!(eq.len(), ncols);
        let row = primitive_integer_row(eq);
        if row.iter().any(|v| !v.is_zero()) {
            distinct.insert(row);
        }
    }
    let ech = fraction_free_echelon(distinct.into_iter().collect(), ncols);
    let pivot_set: BTreeSet<usize> = ech.pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
        let mut x = vec![Rational::zero(); ncols];
        x[free] = Rational::one();
        for (k, &pc) in ech.pivots.iter().enumerate().rev() {
            let row = &ech.rows[k];
            let mut s = Rational::zero();
            for j in pc + 1..ncols {
                if !row[j].is_zero() && !x[j].is_zero() {
                    s += Rational::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[pc] = -s / Rational::from_integer(row[pc].clone());
        }
        basis.push(x);
    }
    Span::from_vectors(ncols, basis).into_basis()
}

/// A subspace of `Q^dim`, stored as a reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Span { dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vector>>(dim: usize, vectors: I) -> Self {
        let mut s = Span::new(dim);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vector> {
        self.basis
    }

    /// `v` minus its reduction against the basis; zero iff `v` is in the span.
    fn reduce(&self, v: &[Rational]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (ri, bi) in r.iter_mut().zip(b) {
                if !bi.is_zero() {
                    *ri -= &f * bi;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.dim, "vector length must match the ambient dimension");
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let lead = r[p].clone();
        for c in &mut r {
            *c /= &lead;
        }
        for b in &mut self.basis {
            if b[p].is_zero() {
                continue;
            }
            let f = b[p].clone();
            for (bi, ri) in b.iter_mut().zip(&r) {
                if !ri.is_zero() {
                    *bi -= &f * ri;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }

    pub fn is_subspace_of(&self, other: &Span) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }
}

pub fn rank(vectors: &[Vector], dim: usize) -> usize {
    Span::from_vectors(dim, vectors.iter().cloned()).dim()
}

pub fn mat_vec(m: &[Vector], v: &[Rational]) -> Vector {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .map(|(a, b)| a * b)
                .sum()
        })
        .collect()
}

pub fn mat_mul(a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, brow)| !x.is_zero() && !brow[j].is_zero())
                        .map(|(x, brow)| x * &brow[j])
                        .sum()
                })
                .collect()
        })
        .collect()
}
