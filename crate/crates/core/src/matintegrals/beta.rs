use num_traits::Zero;

use super::MatIntegralError;
use crate::scalar::{q, qi};
use crate::special::{GammaProduct, Partition, SpecialError};
use crate::Rational;

fn constant_gamma_n(n: usize, x: Rational) -> GammaProduct {
    GammaProduct::multivariate(n, Rational::zero(), x, &[])
}

/// `int_{[0,1]^m} prod_{i<j} |mu_i - mu_j| prod mu_i^a (1 - mu_i)^b dmu
///  = 2^m Gamma_m(a + (m+1)/2) Gamma_m(b + (m+1)/2) Gamma_m(1 + m/2)
///    / (pi^{m^2/2} Gamma_m(a + b + m + 1))`.
pub fn selberg_normalization(
    m: usize,
    a: &Rational,
    b: &Rational,
) -> Result<GammaProduct, MatIntegralError> {
    if *a <= qi(-1) || *b <= qi(-1) {
        return Err(MatIntegralError::InvalidArgument(format!(
            "exponents must exceed -1, got a = {a}, b = {b}"
        )));
    }
    let two_m = (0..m).fold(qi(1), |acc, _| acc * qi(2));
    let half = q(m as i64 + 1, 2);
    Ok(GammaProduct::constant(two_m)
        .with_pi_power(-q((m * m) as i64, 2))
        .times(&constant_gamma_n(m, a + &half))
        .times(&constant_gamma_n(m, b + &half))
        .times(&constant_gamma_n(m, qi(1) + q(m as i64, 2)))
        .times(&constant_gamma_n(m, a + b + qi(m as i64 + 1)).inverse()))
}

/// `int_{0 <= X <= I} (det X)^s det(I - X)^alpha C*_kappa(X) dX
///  = Gamma_N(s + (N+1)/2, kappa) Gamma_N(alpha + (N+1)/2) / Gamma_N(s + alpha + N + 1, kappa)`
/// as a Gamma product in `s`.
pub fn constantine_ratio(
    n: usize,
    alpha: &Rational,
    kappa: &Partition,
) -> Result<GammaProduct, SpecialError> {
    if kappa.length() > n {
        return Err(SpecialError::PartitionTooLong(n));
    }
    let half = q(n as i64 + 1, 2);
    Ok(GammaProduct::multivariate(n, qi(1), half.clone(), kappa.parts())
        .times(&constant_gamma_n(n, alpha + &half))
        .times(
            &GammaProduct::multivariate(n, qi(1), alpha + qi(n as i64 + 1), kappa.parts()).inverse(),
        ))
}

/// `D^+_n(s) = Gamma_n(s + (n+1)/2) Gamma_n((n+1)/2) / Gamma_n(s + n + 1)`.
pub fn d_plus_gamma(n: usize) -> GammaProduct {
    constantine_ratio(n, &Rational::zero(), &Partition::zero(n)).expect("empty partition")
}
