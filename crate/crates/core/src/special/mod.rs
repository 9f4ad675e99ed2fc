//! Gamma-type special functions: numeric Gamma/Beta, formal Gamma products
//! with exact pole counting, and the family `u(s, a, b)`.

mod gamma;
mod gamma_product;
mod partition;
pub mod quad;
mod ufunc;

pub use gamma::{beta, binomial, gamma, ln_gamma, sin_pi};
pub use gamma_product::{ExactValue, GammaFactor, GammaProduct, LeadingTerm};
pub use partition::Partition;
pub use ufunc::{
    odd_p_total, u_diag3, u_eval, u_exact_polynomial, u_quadrature, u_reduce, u_residue,
};

use thiserror::Error;

use crate::scalar::qi;
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecialError {
    #[error("parts must be weakly decreasing: {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("partition has more than {0} parts")]
    PartitionTooLong(usize),
    #[error("constant Gamma factor at a pole")]
    ConstantPole,
    #[error("pole of order {order}")]
    Pole { order: usize },
    #[error("Beta function at a pole of its Gamma continuation")]
    BetaPole,
    #[error("cannot reduce {0} to a convergent or closed-form case")]
    NotReducible(String),
    #[error("argument out of domain: {0}")]
    OutOfDomain(String),
}

/// `Gamma_N(x, kappa) = pi^{N(N-1)/4} prod_i Gamma(x + kappa_{i+1} - i/2)`.
pub fn gamma_n_kappa(n: usize, kappa: &Partition) -> Result<GammaProduct, SpecialError> {
    if kappa.length() > n {
        return Err(SpecialError::PartitionTooLong(n));
    }
    Ok(GammaProduct::multivariate(n, qi(1), qi(0), kappa.parts()))
}

/// Signed pole order of `g` at `x0` (positive for poles).
pub fn gamma_pole_order(g: &GammaProduct, x0: &Rational) -> i64 {
    g.pole_order_at(x0)
}
