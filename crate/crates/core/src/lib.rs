//! Exact Cayley Ω-processes on the matrix monoid `M_n`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is computed over
//! exact rationals:
//!
//! * [`polycore`] sparse multivariate polynomials, the bialgebra maps of
//!   `k[M_n]` (comultiplication, counit, zero evaluation, convolution) and a
//!   plain-text polynomial format.
//! * [`omega`] the classical Ω-process, its powers, the Cayley constants and
//!   the first-rule / semi-invariant checks.
//! * [`reps`] polynomial comodules (binary forms, duals, symmetric powers,
//!   twists, rational representations) and a brute-force semi-invariant oracle.
//! * [`invariantize`] the operators `I_{r,s}`, the normalized integral, the
//!   Reynolds operator and the degree-truncated generator search.
//! * [`weightlattice`] dominance order, rational cones, polynomial dominant
//!   weights and the coefficient families that classify processes.

#![cfg_attr(not(test), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod error;
pub mod invariantize;
pub mod linalg;
pub mod omega;
pub mod polycore;
pub mod reps;
pub mod weightlattice;

pub use error::{Error, Result};
pub use polycore::{Monomial, Polynomial, Rational, Ring, Var, VariableSet};
