//! Density of the ordered spectrum `1 >= lambda_1 >= ... >= lambda_N >= -1`,
//! proportional to
//! `prod_{i<j} (lambda_i - lambda_j) prod (1 - lambda_i)^alpha prod (1 + lambda_i)^beta`
//! with `alpha = (|q - k| - 1)/2`, `beta = (|p - k| - 1)/2`.
//!
//! Numerical integrals use `lambda = -cos(phi)`, under which
//! `(1 - lambda)^alpha (1 + lambda)^beta dlambda`
//! becomes `2^{alpha+beta+1} cos(phi/2)^{2 alpha + 1} sin(phi/2)^{2 beta + 1} dphi`
//! with non-negative integer exponents.

use num_traits::Zero;

use super::{GrassmannError, SignatureTriple};
use crate::matintegrals::selberg_normalization;
use crate::scalar::qi;
use crate::special::quad::integrate;
use crate::Rational;

/// Largest `N` for the nested-quadrature routines.
pub const DENSITY_MAX_N: usize = 3;
const TOL: f64 = 1e-10;

struct Exponents {
    alpha: Rational,
    beta: Rational,
}

fn exponents(sig: &SignatureTriple) -> Exponents {
    let half = |d: usize| (qi(d as i64) - qi(1)) / qi(2);
    Exponents {
        alpha: half(sig.q.abs_diff(sig.k)),
        beta: half(sig.p.abs_diff(sig.k)),
    }
}

fn to_f64(r: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap()
}

/// Integral of the unnormalized density over the ordered simplex, from the
/// Selberg integral after `mu = (1 + lambda)/2`.
fn normalization(sig: &SignatureTriple) -> f64 {
    let n = sig.big_n();
    if n == 0 {
        return 1.0;
    }
    let e = exponents(sig);
    let s = selberg_normalization(n, &e.beta, &e.alpha)
        .expect("exponents are at least -1/2")
        .value_at(&Rational::zero())
        .expect("finite");
    let nf = n as f64;
    let pow2 = nf * (nf - 1.0) / 2.0 + nf * (to_f64(&e.alpha) + to_f64(&e.beta) + 1.0);
    let fact: f64 = (1..=n).map(|i| i as f64).product();
    2f64.powf(pow2) * s / fact
}

/// Normalized density of the ordered spectrum at `lambda`.
pub fn angle_density(sig: &SignatureTriple, lambda: &[f64]) -> Result<f64, GrassmannError> {
    let n = sig.big_n();
    if lambda.len() != n {
        return Err(GrassmannError::DomainError(format!(
            "expected {n} eigenvalues, got {}",
            lambda.len()
        )));
    }
    if lambda.iter().any(|l| !(-1.0..=1.0).contains(l)) {
        return Err(GrassmannError::DomainError("eigenvalues must lie in [-1, 1]".into()));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(GrassmannError::DomainError("eigenvalues must be weakly decreasing".into()));
    }
    let e = exponents(sig);
    let (a, b) = (to_f64(&e.alpha), to_f64(&e.beta));
    let mut v = 1.0;
    for (i, li) in lambda.iter().enumerate() {
        v *= (1.0 - li).powf(a) * (1.0 + li).powf(b);
        for lj in &lambda[i + 1..] {
            v *= li - lj;
        }
    }
    Ok(v / normalization(sig))
}

struct Angular {
    a2: i32,
    b2: i32,
    c: f64,
}

impl Angular {
    fn new(sig: &SignatureTriple) -> Self {
        let e = exponents(sig);
        let (a, b) = (to_f64(&e.alpha), to_f64(&e.beta));
        Angular {
            a2: (2.0 * a + 1.0).round() as i32,
            b2: (2.0 * b + 1.0).round() as i32,
            c: 2f64.powf(a + b + 1.0),
        }
    }

    fn weight(&self, phi: f64) -> f64 {
        let h = 0.5 * phi;
        self.c * h.cos().powi(self.a2) * h.sin().powi(self.b2)
    }
}

/// `int` of the density over `pi >= phi_1 >= ... >= phi_N >= 0` with
/// `phi_i` in `bounds[i]`, where `lambda_i = -cos(phi_i)`.
fn ordered_integral(sig: &SignatureTriple, bounds: &[(f64, f64)]) -> Result<f64, GrassmannError> {
    let n = sig.big_n();
    if n > DENSITY_MAX_N {
        return Err(GrassmannError::DomainError(format!(
            "nested quadrature supports N <= {DENSITY_MAX_N}, got N = {n}"
        )));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let ang = Angular::new(sig);
    fn level(ang: &Angular, bounds: &[(f64, f64)], prev: &[f64], upper: f64) -> f64 {
        let i = prev.len();
        if i == bounds.len() {
            return 1.0;
        }
        let (lo, hi) = bounds[i];
        let hi = hi.min(upper);
        if hi <= lo {
            return 0.0;
        }
        integrate(
            |phi: f64| {
                let lam = -phi.cos();
                let mut v = ang.weight(phi);
                for &lp in prev {
                    v *= lp - lam;
                }
                if v == 0.0 {
                    return 0.0;
                }
                let mut next = prev.to_vec();
                next.push(lam);
                v * level(ang, bounds, &next, phi)
            },
            lo,
            hi,
            TOL,
        )
        .0
    }
    Ok(level(&ang, bounds, &[], std::f64::consts::PI) / normalization(sig))
}

/// Probability that exactly `b` of the `N` eigenvalues are negative.
pub fn chamber_probability(sig: &SignatureTriple, b: usize) -> Result<f64, GrassmannError> {
    let n = sig.big_n();
    if b > n {
        return Ok(0.0);
    }
    let half = std::f64::consts::FRAC_PI_2;
    let bounds: Vec<(f64, f64)> = (0..n)
        .map(|i| if i < n - b { (half, std::f64::consts::PI) } else { (0.0, half) })
        .collect();
    ordered_integral(sig, &bounds)
}

/// `(lambda, P(lambda_1 <= lambda))` at `points + 1` nodes equally spaced in
/// `phi_1 = arccos(-lambda_1)`, accumulated slab by slab.
pub fn lambda1_cdf_grid(sig: &SignatureTriple, points: usize) -> Result<Vec<(f64, f64)>, GrassmannError> {
    let n = sig.big_n();
    if n == 0 {
        return Err(GrassmannError::DomainError("no nontrivial eigenvalues".into()));
    }
    let pi = std::f64::consts::PI;
    let mut out = Vec::with_capacity(points + 1);
    out.push((-1.0, 0.0));
    let mut acc = 0.0;
    for j in 0..points {
        let (t0, t1) = (pi * j as f64 / points as f64, pi * (j + 1) as f64 / points as f64);
        let mut bounds = vec![(0.0, pi); n];
        bounds[0] = (t0, t1);
        acc += ordered_integral(sig, &bounds)?;
        out.push((-t1.cos(), acc));
    }
    Ok(out)
}

/// Upper bound for the Kolmogorov-Smirnov distance between the empirical
/// distribution of `samples` (values of `lambda_1`) and the exact one, using
/// monotonicity of both functions between nodes of a 2000-slab grid.
pub fn ks_distance_lambda1(sig: &SignatureTriple, samples: &[f64]) -> Result<f64, GrassmannError> {
    let grid = lambda1_cdf_grid(sig, 2000)?;
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let m = sorted.len() as f64;
    let emp = |x: f64| sorted.partition_point(|&s| s <= x) as f64 / m;
    let mut d: f64 = 0.0;
    for w in grid.windows(2) {
        let ((x0, f0), (x1, f1)) = (w[0], w[1]);
        let (e0, e1) = (emp(x0), emp(x1));
        d = d.max(e1 - f0).max(f1 - e0);
    }
    Ok(d)
}
