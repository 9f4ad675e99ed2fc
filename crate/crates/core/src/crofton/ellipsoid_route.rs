//! Pairing of `mu_abs(-2m)` with the shadow-volume function of a degenerate
//! ellipsoid, computed two ways: quadrature of the spectral density against
//! the grassmann closed form, and the exact Selberg-type rational function.

use nalgebra::DMatrix;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::CroftonError;
use crate::grassmann::{
    degenerate_limit, ellipsoid_projection_volume, unit_ball_volume, ShortAxis, SignatureTriple, SubspaceSample,
};
use crate::scalar::qi;
use crate::selberg::selberg_abs;
use crate::special::quad::gauss_legendre;

const NODES: usize = 12;
const EPS: f64 = 1e-5;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RoutePoint {
    pub s: u32,
    pub quadrature: f64,
    pub closed: f64,
    pub rel_err: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EllipsoidRouteReport {
    pub case: String,
    pub m: u32,
    pub signature: SignatureTriple,
    pub points: Vec<RoutePoint>,
    /// Largest relative gap between `vol(pi_F(ellipsoid))` at `b = 1e-5` and
    /// its limit, over the quadrature nodes.
    pub limit_gap: f64,
    pub s0: String,
    /// `int_{Delta_{2m-1}} prod |lambda_i|^{s0} prod_{i<j} (lambda_i - lambda_j)`,
    /// by analytic continuation.
    pub exact_value: String,
    pub max_rel_err: f64,
    pub certified: bool,
}

/// `E` in `R^{2m,2m-1}` of dimension `2m-1` with spectrum `lambda`.
fn subspace_with_spectrum(sig: SignatureTriple, lambda: &[f64]) -> Result<SubspaceSample, CroftonError> {
    let rows = DMatrix::from_fn(sig.k, sig.n(), |i, j| {
        let theta = 0.5 * lambda[i].clamp(-1.0, 1.0).acos();
        if j == i {
            theta.cos()
        } else if j == sig.p + i {
            theta.sin()
        } else {
            0.0
        }
    });
    Ok(SubspaceSample::from_basis(sig, &rows)?)
}

/// Nested Gauss-Legendre over `1 > lambda_1 > ... > lambda_N > -1`.
fn simplex_nodes(n: usize) -> Vec<(Vec<f64>, f64)> {
    let (x, w) = gauss_legendre(NODES);
    let mut out = vec![(Vec::new(), 1.0)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * NODES);
        for (pt, wt) in &out {
            let upper = pt.last().copied().unwrap_or(1.0);
            let h = 0.5 * (upper + 1.0);
            for (xi, wi) in x.iter().zip(&w) {
                let mut p = pt.clone();
                p.push(-1.0 + h * (xi + 1.0));
                next.push((p, wt * wi * h));
            }
        }
        out = next;
    }
    out
}

/// For `E` of signature `(2m, 2m-1, 2m-1)` the spectral density carries
/// `prod (1 - lambda_i)^{-1/2}`, and the projection of the ellipsoid with
/// semi-axes `(1, b)` to `E^perp` tends to
/// `omega_{2m} 2^{1/2-m} prod (1 - lambda_i(E))^{1/2}` as `b -> 0`. The
/// product cancels, leaving the bare Vandermonde integral.
pub fn degenerate_ellipsoid_route(m: u32) -> Result<EllipsoidRouteReport, CroftonError> {
    if !(1..=2).contains(&m) {
        return Err(CroftonError::OutOfRange(format!("m must be 1 or 2, got {m}")));
    }
    let n = 2 * m as usize - 1;
    let sig = SignatureTriple::new(2 * m as usize, n, n)?;
    let norm = unit_ball_volume(2 * m as usize) * 2f64.powf(-0.5 * n as f64);
    let nodes = simplex_nodes(n);
    let mut weights = Vec::with_capacity(nodes.len());
    let mut limit_gap: f64 = 0.0;
    for (lambda, w) in &nodes {
        let f = subspace_with_spectrum(sig, lambda)?.complement();
        let lim = degenerate_limit(&f, ShortAxis::Negative);
        let vol = ellipsoid_projection_volume(&f, 1.0, EPS)?;
        limit_gap = limit_gap.max((vol / lim - 1.0).abs());
        let density: f64 = lambda.iter().map(|l| (1.0 - l).powf(-0.5)).product();
        let mut vdm = 1.0;
        for i in 0..n {
            for j in i + 1..n {
                vdm *= lambda[i] - lambda[j];
            }
        }
        weights.push(w * vdm * density * lim / norm);
    }
    let closed_form = selberg_abs(n);
    let mut points = Vec::new();
    for s in [0u32, 2, 4] {
        let quad: f64 = nodes
            .iter()
            .zip(&weights)
            .map(|((lambda, _), w)| w * lambda.iter().map(|l| l.abs().powi(s as i32)).product::<f64>())
            .sum();
        let closed = closed_form.eval(&qi(s as i64)).expect("s >= 0 is regular").to_f64().unwrap();
        points.push(RoutePoint {
            s,
            quadrature: quad,
            closed,
            rel_err: (quad / closed - 1.0).abs(),
        });
    }
    let s0 = qi(-2 * m as i64);
    let v = closed_form
        .eval(&s0)
        .map_err(|_| CroftonError::NotCertified(format!("pole at s = {s0}")))?;
    let max_rel_err = points.iter().map(|p| p.rel_err).fold(0.0, f64::max);
    Ok(EllipsoidRouteReport {
        case: "degenerate_ellipsoid".into(),
        m,
        signature: sig,
        points,
        limit_gap,
        s0: s0.to_string(),
        exact_value: v.to_string(),
        max_rel_err,
        certified: max_rel_err <= 1e-6 && limit_gap <= 1e-6 && !num_traits::Zero::is_zero(&v),
    })
}

