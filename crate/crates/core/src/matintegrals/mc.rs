//! Monte Carlo oracle for `D^eps_n(s)`: uniform entries in `[-1, 1]`,
//! rejection to the ball `||X|| <= 1`, signature read off the spectrum.
//!
//! Samples are drawn in fixed-size blocks, block `k` from the ChaCha stream
//! `(seed, k)`, and block sums are merged in block order, so the estimate
//! does not depend on the number of worker threads.

use nalgebra::{Matrix2, Matrix3, Matrix4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{EpsilonKind, MatIntegralError};

pub const MC_MAX_N: usize = 4;
const BLOCK: u64 = 1 << 14;
const ZERO_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct McEstimate {
    pub kind: EpsilonKind,
    pub mean: f64,
    pub stderr: f64,
    pub samples: u64,
    pub accepted: u64,
}

impl McEstimate {
    pub fn acceptance(&self) -> f64 {
        self.accepted as f64 / self.samples as f64
    }
}

fn eigenvalues(n: usize, e: &[f64; 10]) -> [f64; 4] {
    let mut out = [0.0; 4];
    match n {
        1 => out[0] = e[0],
        2 => {
            let m = Matrix2::new(e[0], e[1], e[1], e[2]);
            out[..2].copy_from_slice(m.symmetric_eigenvalues().as_slice());
        }
        3 => {
            let m = Matrix3::new(e[0], e[1], e[2], e[1], e[3], e[4], e[2], e[4], e[5]);
            out[..3].copy_from_slice(m.symmetric_eigenvalues().as_slice());
        }
        _ => {
            let m = Matrix4::new(
                e[0], e[1], e[2], e[3], e[1], e[4], e[5], e[6], e[2], e[5], e[7], e[8], e[3], e[6],
                e[8], e[9],
            );
            out.copy_from_slice(m.symmetric_eigenvalues().as_slice());
        }
    }
    out
}

#[derive(Clone, Default)]
struct BlockSums {
    accepted: u64,
    sum: Vec<f64>,
    sumsq: Vec<f64>,
}

fn run_block(n: usize, kinds: &[EpsilonKind], s: f64, seed: u64, block: u64, count: u64) -> BlockSums {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    let dim = n * (n + 1) / 2;
    let mut out = BlockSums {
        accepted: 0,
        sum: vec![0.0; kinds.len()],
        sumsq: vec![0.0; kinds.len()],
    };
    let mut e = [0.0; 10];
    for _ in 0..count {
        for x in e.iter_mut().take(dim) {
            *x = rng.gen_range(-1.0..=1.0);
        }
        let lam = eigenvalues(n, &e);
        let lam = &lam[..n];
        if lam.iter().any(|l| l.abs() > 1.0 || l.abs() < ZERO_TOL) {
            continue;
        }
        out.accepted += 1;
        let b = lam.iter().filter(|&&l| l < 0.0).count();
        let det: f64 = lam.iter().map(|l| l.abs()).product();
        let v = det.powf(s);
        for (k, kind) in kinds.iter().enumerate() {
            let w = kind.weight(b) as f64 * v;
            out.sum[k] += w;
            out.sumsq[k] += w * w;
        }
    }
    out
}

/// Estimates of `D^eps_n(s)` for several kinds from one set of samples.
pub fn d_mc_oracle_many(
    n: usize,
    kinds: &[EpsilonKind],
    s: f64,
    samples: u64,
    seed: u64,
) -> Result<Vec<McEstimate>, MatIntegralError> {
    if n == 0 {
        return Err(MatIntegralError::ZeroDimension);
    }
    if n > MC_MAX_N {
        return Err(MatIntegralError::DimensionTooLarge { n, max: MC_MAX_N });
    }
    if !(s.is_finite() && s >= 0.0) {
        return Err(MatIntegralError::InvalidArgument(format!("need s >= 0, got {s}")));
    }
    if samples < 2 {
        return Err(MatIntegralError::InvalidArgument("need at least 2 samples".into()));
    }
    let blocks = samples.div_ceil(BLOCK);
    let parts: Vec<BlockSums> = (0..blocks)
        .into_par_iter()
        .map(|k| {
            let count = BLOCK.min(samples - k * BLOCK);
            run_block(n, kinds, s, seed, k, count)
        })
        .collect();
    let mut total = BlockSums {
        accepted: 0,
        sum: vec![0.0; kinds.len()],
        sumsq: vec![0.0; kinds.len()],
    };
    for p in &parts {
        total.accepted += p.accepted;
        for k in 0..kinds.len() {
            total.sum[k] += p.sum[k];
            total.sumsq[k] += p.sumsq[k];
        }
    }
    let box_volume = 2f64.powi((n * (n + 1) / 2) as i32);
    let nf = samples as f64;
    let est: Vec<McEstimate> = kinds
        .iter()
        .enumerate()
        .map(|(k, &kind)| {
            let mean = total.sum[k] / nf;
            let var = (total.sumsq[k] / nf - mean * mean).max(0.0) * nf / (nf - 1.0);
            McEstimate {
                kind,
                mean: box_volume * mean,
                stderr: box_volume * (var / nf).sqrt(),
                samples,
                accepted: total.accepted,
            }
        })
        .collect();
    let acceptance = total.accepted as f64 / nf;
    if acceptance < 1e-4 {
        return Err(MatIntegralError::ConvergenceWarning {
            acceptance,
            mean: est[0].mean,
            stderr: est[0].stderr,
        });
    }
    Ok(est)
}

/// Monte Carlo estimate of `D^eps_n(s)`; deterministic given `seed`.
pub fn d_mc_oracle(
    n: usize,
    kind: EpsilonKind,
    s: f64,
    samples: u64,
    seed: u64,
) -> Result<McEstimate, MatIntegralError> {
    Ok(d_mc_oracle_many(n, &[kind], s, samples, seed)?[0])
}
