use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::polynomial::Polynomial;
use super::ring::{Ring, Var};
use crate::error::{Error, Result};

/// A dense matrix of polynomials over a common ring.
pub type PolyMatrix = Vec<Vec<Polynomial>>;

/// All permutations of `0..n` with their signs (`+1` / `-1`), in lexicographic order.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i8)>) {
        let n = used.len();
        if prefix.len() == n {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if prefix[i] > prefix[j] {
                        inversions += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                go(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut alloc::vec![false; n], &mut out);
    out
}

/// The symbolic matrix `(tag_ij)` as polynomials of `ring`.
pub fn matrix_of_vars(ring: &Ring, n: usize, tag: u8) -> Result<PolyMatrix> {
    (1..=n as u8)
        .map(|i| {
            (1..=n as u8)
                .map(|j| Polynomial::variable(ring, Var::entry(tag, i, j)))
                .collect()
        })
        .collect()
}

pub fn identity_matrix(ring: &Ring, n: usize) -> PolyMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Polynomial::one(ring) } else { Polynomial::zero(ring) })
                .collect()
        })
        .collect()
}

pub fn matrix_product(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix> {
    let inner = b.len();
    if a.iter().any(|row| row.len() != inner) {
        return Err(Error::DimensionMismatch { expected: inner, found: a.first().map_or(0, Vec::len) });
    }
    let cols = b.first().map_or(0, Vec::len);
    let mut out = Vec::with_capacity(a.len());
    for row in a {
        let mut out_row = Vec::with_capacity(cols);
        for j in 0..cols {
            let mut acc = Polynomial::zero(row[0].ring());
            for k in 0..inner {
                if row[k].is_zero() || b[k][j].is_zero() {
                    continue;
                }
                acc = acc.checked_add(&row[k].checked_mul(&b[k][j])?)?;
            }
            out_row.push(acc);
        }
        out.push(out_row);
    }
    Ok(out)
}

pub fn transpose(a: &PolyMatrix) -> PolyMatrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Leibniz expansion of the determinant of a square polynomial matrix.
pub fn det_of(a: &PolyMatrix, ring: &Ring) -> Polynomial {
    let n = a.len();
    let mut total = Polynomial::zero(ring);
    for (perm, sign) in permutations(n) {
        let mut term = Polynomial::one(ring);
        for (i, &j) in perm.iter().enumerate() {
            term = &term * &a[i][j];
            if term.is_zero() {
                break;
            }
        }
        total = if sign > 0 { &total + &term } else { &total - &term };
    }
    total
}

/// The adjugate, `adj(A)_ij = (-1)^{i+j} det(A with row j and column i removed)`.
pub fn adjugate(a: &PolyMatrix, ring: &Ring) -> PolyMatrix {
    let n = a.len();
    if n == 1 {
        return alloc::vec![alloc::vec![Polynomial::one(ring)]];
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let minor: PolyMatrix = (0..n)
                        .filter(|&r| r != j)
                        .map(|r| (0..n).filter(|&c| c != i).map(|c| a[r][c].clone()).collect())
                        .collect();
                    let d = det_of(&minor, ring);
                    if (i + j) % 2 == 0 {
                        d
                    } else {
                        -&d
                    }
                })
                .collect()
        })
        .collect()
}

/// `det(tag_ij)` for the `n x n` block tagged `tag`.
pub fn determinant(ring: &Ring, n: usize, tag: u8) -> Result<Polynomial> {
    Ok(det_of(&matrix_of_vars(ring, n, tag)?, ring))
}

/// Determinant of the lower-right `i x i` block of `(tag_jk)`.
pub fn lower_right_minor(ring: &Ring, n: usize, i: usize, tag: u8) -> Result<Polynomial> {
    if i == 0 || i > n {
        return Err(Error::InvalidArgument(alloc::format!("minor size {i} outside 1..={n}")));
    }
    let full = matrix_of_vars(ring, n, tag)?;
    let block: PolyMatrix = full[n - i..].iter().map(|row| row[n - i..].to_vec()).collect();
    Ok(det_of(&block, ring))
}

/// Replaces the `tag` block of `f` by the entries of `m` (polynomials of
/// `target`); every other variable of `f` is carried over unchanged.
pub fn substitute_matrix(f: &Polynomial, tag: u8, m: &PolyMatrix, target: &Ring) -> Result<Polynomial> {
    let mut map = BTreeMap::new();
    for &v in f.ring().vars() {
        let img = match v {
            Var::Matrix { tag: t, row, col } if t == tag => {
                let entry = m
                    .get(row as usize - 1)
                    .and_then(|r| r.get(col as usize - 1))
                    .ok_or(Error::DimensionMismatch { expected: row.max(col) as usize, found: m.len() })?;
                if entry.ring() != target {
                    return Err(Error::AmbientMismatch);
                }
                entry.clone()
            }
            other => Polynomial::variable(target, other)?,
        };
        map.insert(v, img);
    }
    f.substitute(&map, target)
}
