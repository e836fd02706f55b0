//! Exact arithmetic: sparse multivariate polynomials over big integers in
//! the fixed variables α, β, q, x, and big rationals.

mod polynomial;
mod rational;

pub use polynomial::{Assignment, Exponents, Polynomial, Var};
pub use rational::{binomial, parse_rational, Rational};
