//! Signed integrals of `|det X|^s` over the matrix ball `-I <= X <= I` of
//! real symmetric matrices, the multivariate Beta integral and its
//! Jack-weighted generalization.
//!
//! Lebesgue measure on `Sym_n` is `prod_{i<=j} dX_ij`. Pushing it forward to
//! ordered eigenvalues gives `c(n) prod_{i<j} |x_i - x_j| dx` with
//! `c(n) = n! pi^{n^2/2} / (2^n Gamma_n((n+2)/2))`, so
//! `D^eps_n(s) = c(n) I^eps_n(s)` with the chamber sums of [`crate::selberg`].

mod beta;
mod closed;
mod mc;

pub use beta::{constantine_ratio, d_plus_gamma, selberg_normalization};
pub use closed::{d_closed, d_mixed, spectral_constant, MatIntegralResult};
pub use mc::{d_mc_oracle, d_mc_oracle_many, McEstimate, MC_MAX_N};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Signature weights `eps(b)`, `b` the number of negative eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EpsilonKind {
    Abs,
    Sgn,
    Cos,
    Sin,
    /// Positive-definite part only.
    Plus,
}

impl EpsilonKind {
    pub const ALL: [EpsilonKind; 5] = [Self::Abs, Self::Sgn, Self::Cos, Self::Sin, Self::Plus];

    /// `eps(b)`; every value lies in `{-1, 0, 1}`.
    pub fn weight(self, b: usize) -> i64 {
        match self {
            Self::Abs => 1,
            Self::Sgn => {
                if b.is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            }
            Self::Cos => [1, 0, -1, 0][b % 4],
            Self::Sin => [0, 1, 0, -1][b % 4],
            Self::Plus => i64::from(b == 0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Abs => "abs",
            Self::Sgn => "sgn",
            Self::Cos => "cos",
            Self::Sin => "sin",
            Self::Plus => "plus",
        }
    }
}

impl std::str::FromStr for EpsilonKind {
    type Err = MatIntegralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| MatIntegralError::InvalidArgument(format!("unknown kind '{s}'")))
    }
}

impl std::fmt::Display for EpsilonKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MatIntegralError {
    #[error("matrix size must be at least 1")]
    ZeroDimension,
    #[error("Monte Carlo sampling supports n <= {max}, got n = {n}")]
    DimensionTooLarge { n: usize, max: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("acceptance rate {acceptance:.2e} below 1e-4; estimate {mean} +- {stderr} is unreliable")]
    ConvergenceWarning { acceptance: f64, mean: f64, stderr: f64 },
    #[error(transparent)]
    Selberg(#[from] crate::selberg::SelbergError),
}
