use num_traits::Zero;

use super::{beta::d_plus_gamma, EpsilonKind, MatIntegralError};
use crate::scalar::{q, qi};
use crate::selberg::{selberg_abs, selberg_mixed, selberg_sgn};
use crate::special::{ExactValue, GammaProduct};
use crate::{RatFun, Rational};

/// `c(n) = n! pi^{n^2/2} / (2^n Gamma_n((n+2)/2))`.
pub fn spectral_constant(n: usize) -> GammaProduct {
    let mut fact = qi(1);
    for i in 1..=n {
        fact *= qi(i as i64);
    }
    let two_n = (0..n).fold(qi(1), |acc, _| acc * qi(2));
    GammaProduct::constant(fact / two_n)
        .with_pi_power(q((n * n) as i64, 2))
        .times(&GammaProduct::multivariate(n, Rational::zero(), q(n as i64 + 2, 2), &[]).inverse())
}

/// `D^eps_n(s) = constant * exact(s)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatIntegralResult {
    pub n: usize,
    pub kind: EpsilonKind,
    pub exact: RatFun,
    pub constant: GammaProduct,
}

impl MatIntegralResult {
    pub fn is_identically_zero(&self) -> bool {
        self.exact.is_zero()
    }

    /// The constant as `rational * pi^k`.
    pub fn constant_exact(&self) -> ExactValue {
        self.constant
            .exact_leading(&Rational::zero())
            .expect("constants here have half-integral Gamma arguments")
    }

    pub fn eval(&self, s: f64) -> f64 {
        if self.is_identically_zero() {
            return 0.0;
        }
        self.constant_exact().to_f64() * self.exact.eval_f64(s)
    }

    /// Exact value at a rational point that is not a pole, as `rational * pi^k`.
    pub fn eval_exact(&self, s: &Rational) -> Option<ExactValue> {
        let c = self.constant_exact();
        let v = self.exact.eval(s).ok()?;
        Some(ExactValue {
            order: 0,
            rational: c.rational * v,
            pi_power: c.pi_power,
        })
    }
}

fn check_n(n: usize) -> Result<(), MatIntegralError> {
    if n == 0 {
        Err(MatIntegralError::ZeroDimension)
    } else {
        Ok(())
    }
}

/// Closed form of `D^eps_n(s)`. For `cos`/`sin` this is the real or
/// imaginary part of the combination `D^cos + i D^sin`.
pub fn d_closed(n: usize, kind: EpsilonKind) -> Result<MatIntegralResult, MatIntegralError> {
    check_n(n)?;
    let (exact, constant) = match kind {
        EpsilonKind::Abs => (selberg_abs(n), spectral_constant(n)),
        EpsilonKind::Sgn => (selberg_sgn(n), spectral_constant(n)),
        EpsilonKind::Cos => (selberg_mixed(n).0, spectral_constant(n)),
        EpsilonKind::Sin => (selberg_mixed(n).1, spectral_constant(n)),
        EpsilonKind::Plus => d_plus_gamma(n)
            .split_rational()
            .expect("Gamma_n shifts pair up with integer differences"),
    };
    Ok(MatIntegralResult {
        n,
        kind,
        exact,
        constant,
    })
}

/// `(D^cos_n, D^sin_n)`.
pub fn d_mixed(n: usize) -> Result<(MatIntegralResult, MatIntegralResult), MatIntegralError> {
    Ok((d_closed(n, EpsilonKind::Cos)?, d_closed(n, EpsilonKind::Sin)?))
}
