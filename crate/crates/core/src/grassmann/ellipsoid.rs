//! Orthogonal projections of the ellipsoid
//! `|y|^2/a^2 + |z|^2/b^2 <= 1`, `y` in `R^p`, `z` in `R^q`.

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use super::{GrassmannError, SubspaceSample};
use crate::special::gamma;

/// Volume of the unit ball in `R^k`.
pub fn unit_ball_volume(k: usize) -> f64 {
    let h = k as f64 / 2.0;
    std::f64::consts::PI.powf(h) / gamma(h + 1.0)
}

fn check_axes(a: f64, b: f64) -> Result<(), GrassmannError> {
    if a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite() {
        Ok(())
    } else {
        Err(GrassmannError::DomainError(format!(
            "semi-axes must be positive and finite, got a = {a}, b = {b}"
        )))
    }
}

/// `omega_k a^{N_q} b^{N_p} prod_j (A + B lambda_j)^{1/2}` with
/// `A = (a^2 + b^2)/2`, `B = (a^2 - b^2)/2`.
pub fn ellipsoid_projection_volume(e: &SubspaceSample, a: f64, b: f64) -> Result<f64, GrassmannError> {
    check_axes(a, b)?;
    let sig = e.signature();
    let (big_a, big_b) = ((a * a + b * b) / 2.0, (a * a - b * b) / 2.0);
    let prod: f64 = e
        .spectrum()
        .iter()
        .map(|l| (big_a + big_b * l).max(0.0).sqrt())
        .product();
    Ok(unit_ball_volume(sig.k) * a.powi(sig.n_q() as i32) * b.powi(sig.n_p() as i32) * prod)
}

fn axis_matrix(e: &SubspaceSample, a: f64, b: f64) -> DMatrix<f64> {
    // U D maps the unit ball onto the projection, written in the basis U.
    let p = e.signature().p;
    let mut ud = e.basis().clone();
    for (j, mut col) in ud.column_iter_mut().enumerate() {
        col *= if j < p { a } else { b };
    }
    ud
}

/// `omega_k sqrt(det(U D^2 U^T))`, the volume of the linear image of the
/// unit ball under `U D`.
pub fn ellipsoid_projection_gram(e: &SubspaceSample, a: f64, b: f64) -> Result<f64, GrassmannError> {
    check_axes(a, b)?;
    let ud = axis_matrix(e, a, b);
    let det = (&ud * ud.transpose()).determinant();
    Ok(unit_ball_volume(e.signature().k) * det.max(0.0).sqrt())
}

/// Monte Carlo volume of the projection from its support function
/// `h(u) = |D U^T u|` on the unit sphere of `E`: the polar body has volume
/// `omega_k E[h^{-k}]`, and for an ellipsoid `vol(K) vol(K°) = omega_k^2`.
/// Returns `(volume, stderr)`.
pub fn projection_mc_oracle(
    e: &SubspaceSample,
    a: f64,
    b: f64,
    samples: u64,
    seed: u64,
) -> Result<(f64, f64), GrassmannError> {
    check_axes(a, b)?;
    let k = e.signature().k;
    if k == 0 {
        return Ok((1.0, 0.0));
    }
    if samples < 2 {
        return Err(GrassmannError::DomainError("need at least 2 samples".into()));
    }
    let ud = axis_matrix(e, a, b);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut sum, mut sumsq) = (0.0, 0.0);
    for _ in 0..samples {
        let u: DVector<f64> = DVector::from_fn(k, |_, _| StandardNormal.sample(&mut rng));
        let u = &u / u.norm();
        let h = (ud.transpose() * u).norm();
        let v = h.powi(-(k as i32));
        sum += v;
        sumsq += v * v;
    }
    let nf = samples as f64;
    let mean = sum / nf;
    let var = (sumsq / nf - mean * mean).max(0.0) * nf / (nf - 1.0);
    let vol = unit_ball_volume(k) / mean;
    Ok((vol, vol * (var / nf).sqrt() / mean))
}

/// Which semi-axis degenerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ShortAxis {
    /// `a = eps` on `R^p`, `b = 1`.
    Positive,
    /// `b = eps` on `R^q`, `a = 1`.
    Negative,
}

/// `lim_{eps -> 0} eps^{-d} vol(pi_E(ellipsoid))`, with `d = N_q` for
/// [`ShortAxis::Positive`] and `d = N_p` for [`ShortAxis::Negative`]:
/// `omega_k 2^{-N/2} prod (1 -+ lambda_j)^{1/2}`.
pub fn degenerate_limit(e: &SubspaceSample, axis: ShortAxis) -> f64 {
    let sign = match axis {
        ShortAxis::Positive => -1.0,
        ShortAxis::Negative => 1.0,
    };
    let n = e.spectrum().len() as i32;
    let prod: f64 = e
        .spectrum()
        .iter()
        .map(|l| (1.0 + sign * l).max(0.0).sqrt())
        .product();
    unit_ball_volume(e.signature().k) * 2f64.powf(-0.5 * n as f64) * prod
}
