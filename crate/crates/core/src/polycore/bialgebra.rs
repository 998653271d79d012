use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::matrix::{matrix_of_vars, matrix_product};
use super::polynomial::{Monomial, Polynomial};
use super::ring::Ring;
use super::Rational;
use crate::error::{Error, Result};

/// The matrix size of `f`'s ring, which must be exactly `k[x11, ..., xnn]`.
fn matrix_ring_size(f: &Polynomial) -> Result<usize> {
    let ring = f.ring();
    match ring.matrix_size(b'x') {
        Some(n) if *ring == Ring::matrix(n) => Ok(n),
        _ => Err(Error::WrongAmbient(format!(
            "expected a matrix-coordinate ring k[x11..xnn], got {}",
            ring.describe()
        ))),
    }
}

/// `Δ(f)(Y, Z) = f(YZ)`, a polynomial in the `y` and `z` coordinates.
pub fn comultiply(f: &Polynomial) -> Result<Polynomial> {
    comultiply_with(f, b'y', b'z')
}

/// Comultiplication into two matrix copies with the given tags.
pub fn comultiply_with(f: &Polynomial, left: u8, right: u8) -> Result<Polynomial> {
    let n = matrix_ring_size(f)?;
    let target = Ring::matrices(n, &[left, right]);
    let l = matrix_of_vars(&target, n, left)?;
    let r = matrix_of_vars(&target, n, right)?;
    let prod = matrix_product(&l, &r)?;
    let mut map = BTreeMap::new();
    for (i, row) in prod.into_iter().enumerate() {
        for (j, entry) in row.into_iter().enumerate() {
            map.insert(crate::polycore::Var::x(i as u8 + 1, j as u8 + 1), entry);
        }
    }
    f.substitute(&map, &target)
}

/// The counit `ε(f) = f(Id)`.
pub fn evaluate_at_identity(f: &Polynomial) -> Result<Rational> {
    matrix_ring_size(f)?;
    let values: Vec<Rational> = f
        .ring()
        .vars()
        .iter()
        .map(|v| match v {
            crate::polycore::Var::Matrix { row, col, .. } if row == col => Rational::from_integer(1.into()),
            _ => Rational::from_integer(0.into()),
        })
        .collect();
    Ok(f.evaluate_slice(&values))
}

/// `ν(f) = f(0)`, the constant term.
pub fn evaluate_at_zero(f: &Polynomial) -> Result<Rational> {
    matrix_ring_size(f)?;
    Ok(f.constant_term())
}

/// `uν(f) = ν(f)·1`.
pub fn zero_evaluation_unit(f: &Polynomial) -> Result<Polynomial> {
    Ok(Polynomial::constant(f.ring(), evaluate_at_zero(f)?))
}

/// Convolution `(T ⋆ S)(f) = Σ T(f_1) S(f_2)`.
///
/// `t` and `s` must be linear on `k[M_n]`; they are only ever called on
/// monomials of degree at most `deg f`, and each monomial is evaluated once.
pub fn convolve<T, S>(mut t: T, mut s: S, f: &Polynomial) -> Result<Polynomial>
where
    T: FnMut(&Polynomial) -> Result<Polynomial>,
    S: FnMut(&Polynomial) -> Result<Polynomial>,
{
    let n = matrix_ring_size(f)?;
    let ring = f.ring().clone();
    let delta = comultiply(f)?;
    let nn = n * n;
    let mut t_cache: BTreeMap<Vec<u32>, Polynomial> = BTreeMap::new();
    let mut s_cache: BTreeMap<Vec<u32>, Polynomial> = BTreeMap::new();
    let mut out = Polynomial::zero(&ring);
    for (m, c) in delta.terms() {
        let (a, b) = m.exponents().split_at(nn);
        if !t_cache.contains_key(a) {
            let mono = Polynomial::from_terms(&ring, [(Monomial::from_exponents(a.to_vec()), Rational::from_integer(1.into()))])?;
            t_cache.insert(a.to_vec(), t(&mono)?);
        }
        if !s_cache.contains_key(b) {
            let mono = Polynomial::from_terms(&ring, [(Monomial::from_exponents(b.to_vec()), Rational::from_integer(1.into()))])?;
            s_cache.insert(b.to_vec(), s(&mono)?);
        }
        let ta = &t_cache[a];
        let sb = &s_cache[b];
        if ta.is_zero() || sb.is_zero() {
            continue;
        }
        out = out.checked_add(&ta.checked_mul(sb)?.scale(c))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{determinant, rat, Var};

    fn det2() -> Polynomial {
        determinant(&Ring::matrix(2), 2, b'x').unwrap()
    }

    #[test]
    fn comultiply_entry_is_matrix_product_entry() {
        let x11 = Polynomial::variable(&Ring::matrix(2), Var::x(1, 1)).unwrap();
        let d = comultiply(&x11).unwrap();
        assert_eq!(format!("{d}"), "y11*z11 + y12*z21");
    }

    #[test]
    fn comultiply_det_is_product_of_dets() {
        let d = comultiply(&det2()).unwrap();
        let ring = d.ring().clone();
        let expected = &determinant(&ring, 2, b'y').unwrap() * &determinant(&ring, 2, b'z').unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn comultiply_unit() {
        let d = comultiply(&Polynomial::one(&Ring::matrix(2))).unwrap();
        assert_eq!(d, Polynomial::one(&Ring::matrices(2, b"yz")));
    }

    #[test]
    fn counit_and_zero_evaluation() {
        assert_eq!(evaluate_at_identity(&det2()).unwrap(), rat(1));
        assert_eq!(evaluate_at_zero(&det2()).unwrap(), rat(0));
        let ring = Ring::matrix(2);
        let p = &Polynomial::constant(&ring, rat(3)) + &Polynomial::variable(&ring, Var::x(1, 1)).unwrap();
        assert_eq!(evaluate_at_zero(&p).unwrap(), rat(3));
    }

    #[test]
    fn wrong_ambient_is_rejected() {
        let p = Polynomial::one(&Ring::matrices(2, b"xy"));
        assert!(matches!(comultiply(&p), Err(Error::WrongAmbient(_))));
    }

    #[test]
    fn convolution_examples() {
        let ring = Ring::matrix(2);
        let id = |g: &Polynomial| Ok(g.clone());
        // uν ⋆ Id = uν
        let r = convolve(zero_evaluation_unit, id, &det2()).unwrap();
        assert!(r.is_zero());
        // Id ⋆ Id on x11 gives sum_k x1k xk1
        let x11 = Polynomial::variable(&ring, Var::x(1, 1)).unwrap();
        let r = convolve(id, id, &x11).unwrap();
        assert_eq!(format!("{r}"), "x11^2 + x12*x21");
        // counit law
        let x12 = Polynomial::variable(&ring, Var::x(1, 2)).unwrap();
        let eps = |g: &Polynomial| Ok(Polynomial::constant(g.ring(), evaluate_at_identity(g)?));
        assert_eq!(convolve(eps, id, &x12).unwrap(), x12);
    }
}
