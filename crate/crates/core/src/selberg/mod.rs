//! The integrals `f_n(e) = int_{1 >= x_1 >= ... >= x_n >= -1} det(x_i^{e_j - 1}) dx`
//! for integer and strict half-integer exponents, the signed Vandermonde
//! integrals `I^eps_n(s)`, and the residue identities behind their closed forms.
//!
//! For negative `x` and half-integer exponents the branch
//! `x^{(2k+1)/2} = (-1)^k |x|^{(2k+1)/2} i` is used throughout.

mod closed;
mod exponent;
mod integral;
mod oracle;
mod perm;
mod recursion;
mod residues;

pub use closed::{delta_n, delta_table, epsilon_n, f_closed};
pub use exponent::{ExponentVector, Regime};
pub use integral::{selberg_abs, selberg_i, selberg_mixed, selberg_sgn, SelbergValue, Shape};
pub use oracle::{
    f_oracle, f_oracle_product, monomial_integral_poly, monomial_integral_product,
    vandermonde_chamber_ratfun, vandermonde_power_oracle, Domain, ORACLE_MAX_N,
};
pub use perm::{permutations_with_sign, sign_of};
pub use recursion::f_recursive;
pub use residues::residue_identity_check;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SelbergError {
    #[error("invalid exponent vector: {0}")]
    InvalidExponents(String),
    #[error("brute-force oracle limited to n <= 6, got n = {0}; use the recursion")]
    DimensionTooLarge(usize),
    #[error("chamber ({positive}, {negative}) does not split n = {n}")]
    InvalidDomain { n: usize, positive: usize, negative: usize },
    #[error("repeated entries make a denominator vanish")]
    DegenerateInput,
    #[error("identity {which} is not defined for length {len}")]
    InvalidLength { which: u8, len: usize },
}

#[cfg(test)]
mod tests;
