//! Exact Hurwitz stability tests for real polynomials and real rational
//! functions.
//!
//! A polynomial is Hurwitz stable when all its zeroes lie in the open left
//! half-plane. A rational function `R = h/g` is a Hurwitz function when `h`
//! and `g(-z)` are both Hurwitz stable, i.e. zeroes on the left and poles on
//! the right. Both questions are decided here by sign tests on determinants
//! computed in exact rational arithmetic.

pub mod cli;
pub mod determinants;
pub mod error;
pub mod numeric;
pub mod selfcheck;
pub mod series;
pub mod stability;
pub mod testgen;

pub use error::{Error, Result};
pub use numeric::{Polynomial, Rational};
