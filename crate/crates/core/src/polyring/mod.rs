//! Exact rational and univariate polynomial arithmetic.
//!
//! [`Rational`] is `num_rational::BigRational` (always reduced, positive
//! denominator). [`Poly`] is dense over the rationals; products, divisions
//! and gcds are computed on integer images to avoid fraction normalisation
//! in inner loops.

mod gcd;
mod poly;
mod ratfun;
pub mod zpoly;

use thiserror::Error;

pub use gcd::{gcd, is_coprime, is_squarefree, linear_power_detect, rational_roots, LinearPower};
pub(crate) use poly::fmt_rational;
pub use poly::{Degree, Poly};
pub use ratfun::RationalFunction;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("expected a nonconstant polynomial")]
    ConstantInput,
    #[error("zero denominator in rational function")]
    ZeroDenominator,
    #[error("the zero polynomial has every rational as a root")]
    RootsOfZero,
    #[error("rational root search needs to factor a coefficient beyond the trial-division bound")]
    RootSearchTooLarge,
}

/// Shorthand for `n/d` as a [`Rational`]; panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Renders a rational as `n` or `n/d`.
pub fn format_rational(c: &Rational) -> String {
    fmt_rational(c)
}
