//! Exact Selberg-type integrals, integrals over the matrix ball and
//! Crofton-measure certificates on real Grassmannians.

pub mod crofton;
pub mod grassmann;
pub mod matintegrals;
pub mod ratfun;
pub mod scalar;
pub mod selberg;
pub mod special;

pub use scalar::{q, qi, ExactScalar, Scalar};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;
/// Gaussian rationals.
pub type ComplexRational = num_complex::Complex<Rational>;
/// Polynomials in `s` with rational coefficients.
pub type Poly = ratfun::Polynomial<Rational>;
/// Rational functions in `s` with rational coefficients.
pub type RatFun = ratfun::RationalFunction<Rational>;
pub use ratfun::LaurentData;
