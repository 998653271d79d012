//! Exact sparse polynomial arithmetic and the bialgebra structure of `k[M_n]`.
//!
//! Polynomials live in an explicit [`Ring`], an ordered list of variables
//! assembled from [`VariableSet`]s. Tensor products `k[M] ⊗ k[M]` are
//! polynomials in two disjoint copies of the matrix coordinates (`y` and
//! `z`), so `Δ(f)(Y, Z) = f(YZ)` is an ordinary polynomial.

mod bialgebra;
mod matrix;
mod polynomial;
mod ring;
mod text;

pub use text::parse_var;

pub use bialgebra::{
    comultiply, comultiply_with, convolve, evaluate_at_identity, evaluate_at_zero,
    zero_evaluation_unit,
};
pub use matrix::{
    adjugate, det_of, determinant, identity_matrix, lower_right_minor, matrix_of_vars, matrix_product, permutations,
    substitute_matrix, transpose, PolyMatrix,
};
pub use polynomial::{Monomial, Polynomial};
pub use ring::{Ring, SetKind, Var, VariableSet};

/// Exact rational coefficients (always reduced, positive denominator).
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
