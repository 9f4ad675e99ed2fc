//! Exact univariate rational functions over the rationals.

mod laurent;
mod poly;
mod rational;

pub use laurent::LaurentData;
pub use poly::Polynomial;
pub use rational::RationalFunction;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RatFunError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole at s = {0}")]
    PoleAtPoint(String),
    #[error("the zero function has no Laurent expansion")]
    ZeroFunction,
}
