//! Random subspaces of `R^{p,q} = R^p (+) R^q` with `Q = diag(I_p, -I_q)` and
//! Euclidean structure `P = I`, and the spectrum of `Q` restricted to them.
//!
//! For `E` of dimension `k` with orthonormal basis rows `U`, the Gram matrix
//! `U Q U^T = 2 U_+ U_+^T - I_k` has eigenvalues `+1` (`N_q` times, the part
//! of `E` inside `R^p`), `-1` (`N_p` times, inside `R^q`) and the `N`
//! nontrivial values `lambda_j = cos 2 theta_j`, `theta_j` the principal angles
//! with `R^p`.

mod density;
mod ellipsoid;

pub use density::{angle_density, chamber_probability, lambda1_cdf_grid, ks_distance_lambda1, DENSITY_MAX_N};
pub use ellipsoid::{
    degenerate_limit, ellipsoid_projection_gram, ellipsoid_projection_volume, projection_mc_oracle, unit_ball_volume,
    ShortAxis,
};

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

const ORTHO_TOL: f64 = 1e-12;
const SIGNATURE_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GrassmannError {
    #[error("invalid signature triple (p, q, k) = ({p}, {q}, {k}): need q <= p and k <= p + q")]
    InvalidSignature { p: usize, q: usize, k: usize },
    #[error("basis has shape {rows}x{cols}, expected {k}x{n}")]
    Shape { rows: usize, cols: usize, k: usize, n: usize },
    #[error("basis rows are linearly dependent")]
    RankDeficient,
    #[error("{0}")]
    DomainError(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignatureTriple {
    pub p: usize,
    pub q: usize,
    pub k: usize,
}

impl SignatureTriple {
    pub fn new(p: usize, q: usize, k: usize) -> Result<Self, GrassmannError> {
        if q > p || k > p + q {
            return Err(GrassmannError::InvalidSignature { p, q, k });
        }
        Ok(SignatureTriple { p, q, k })
    }

    /// Ambient dimension `p + q`.
    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// Number of nontrivial angles `min(q, k, n - k)`.
    pub fn big_n(&self) -> usize {
        self.q.min(self.k).min(self.n() - self.k)
    }

    /// `max(0, k - q)`: dimension of `E` inside `R^p` for generic `E`.
    pub fn n_q(&self) -> usize {
        self.k.saturating_sub(self.q)
    }

    /// `max(0, k - p)`.
    pub fn n_p(&self) -> usize {
        self.k.saturating_sub(self.p)
    }

    /// Triple of the orthogonal complement.
    pub fn complement(&self) -> Self {
        SignatureTriple {
            k: self.n() - self.k,
            ..*self
        }
    }
}

/// Signature `(a, b)` of `Q` on `E`; `near_degenerate` when some Gram
/// eigenvalue is within `1e-10` of zero (those are counted in neither).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitSignature {
    pub a: usize,
    pub b: usize,
    pub near_degenerate: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceSample {
    basis: DMatrix<f64>,
    sig: SignatureTriple,
    spectrum: Vec<f64>,
}

fn sym_eigenvalues_desc(m: DMatrix<f64>) -> Vec<f64> {
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

/// Orthonormal rows spanning the row space of `m`, with the first entry of
/// each row larger than `1e-14` in modulus made positive.
fn orthonormalize_rows(m: &DMatrix<f64>) -> Result<DMatrix<f64>, GrassmannError> {
    let k = m.nrows();
    if k == 0 {
        return Ok(m.clone());
    }
    let qr = m.transpose().qr();
    let r = qr.r();
    let scale = m.iter().fold(0.0f64, |acc, x| acc.max(x.abs())).max(1.0);
    if (0..k).any(|i| r[(i, i)].abs() < 1e-10 * scale) {
        return Err(GrassmannError::RankDeficient);
    }
    let mut u = qr.q().transpose();
    for mut row in u.row_iter_mut() {
        if let Some(first) = row.iter().copied().find(|x| x.abs() > 1e-14) {
            if first < 0.0 {
                row.neg_mut();
            }
        }
    }
    Ok(u)
}

impl SubspaceSample {
    /// Subspace spanned by the rows of `rows` (`k x n`, any basis).
    pub fn from_basis(sig: SignatureTriple, rows: &DMatrix<f64>) -> Result<Self, GrassmannError> {
        if rows.nrows() != sig.k || rows.ncols() != sig.n() {
            return Err(GrassmannError::Shape {
                rows: rows.nrows(),
                cols: rows.ncols(),
                k: sig.k,
                n: sig.n(),
            });
        }
        let basis = orthonormalize_rows(rows)?;
        let spectrum = Self::compute_spectrum(&basis, &sig);
        Ok(SubspaceSample { basis, sig, spectrum })
    }

    /// Row-major convenience constructor.
    pub fn from_rows(sig: SignatureTriple, rows: &[Vec<f64>]) -> Result<Self, GrassmannError> {
        let n = sig.n();
        if rows.iter().any(|r| r.len() != n) {
            return Err(GrassmannError::Shape {
                rows: rows.len(),
                cols: rows.first().map_or(0, |r| r.len()),
                k: sig.k,
                n,
            });
        }
        let m = DMatrix::from_fn(rows.len(), n, |i, j| rows[i][j]);
        Self::from_basis(sig, &m)
    }

    /// The `N` nontrivial eigenvalues of `2 U_+ U_+^T - I_k`: the full list
    /// sorted decreasingly with the `N_q` largest and `N_p` smallest removed.
    fn compute_spectrum(basis: &DMatrix<f64>, sig: &SignatureTriple) -> Vec<f64> {
        let k = sig.k;
        if k == 0 {
            return Vec::new();
        }
        let up = basis.columns(0, sig.p);
        let g = (up * up.transpose()) * 2.0 - DMatrix::<f64>::identity(k, k);
        let ev = sym_eigenvalues_desc(g);
        ev[sig.n_q()..k - sig.n_p()].to_vec()
    }

    pub fn basis(&self) -> &DMatrix<f64> {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<f64>> {
        self.basis.row_iter().map(|r| r.iter().copied().collect()).collect()
    }

    pub fn signature(&self) -> SignatureTriple {
        self.sig
    }

    /// `lambda_1 >= ... >= lambda_N`.
    pub fn spectrum(&self) -> &[f64] {
        &self.spectrum
    }

    /// Principal angles `theta_j` with `lambda_j = cos 2 theta_j`.
    pub fn angles(&self) -> Vec<f64> {
        self.spectrum.iter().map(|l| 0.5 * l.clamp(-1.0, 1.0).acos()).collect()
    }

    /// Largest deviation of `U U^T` from the identity.
    pub fn orthonormality_defect(&self) -> f64 {
        let k = self.sig.k;
        let g = &self.basis * self.basis.transpose() - DMatrix::<f64>::identity(k, k);
        g.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    /// The orthogonal complement `E^P`: columns of the projector `I - U^T U`,
    /// orthonormalized by Gram-Schmidt with largest-residual pivoting.
    pub fn complement(&self) -> SubspaceSample {
        let n = self.sig.n();
        let csig = self.sig.complement();
        let mut cols: Vec<DVector<f64>> = (0..n)
            .map(|j| {
                let mut e = DVector::zeros(n);
                e[j] = 1.0;
                let c = &self.basis * &e;
                e - self.basis.transpose() * c
            })
            .collect();
        let mut picked: Vec<DVector<f64>> = Vec::with_capacity(csig.k);
        for _ in 0..csig.k {
            let (j, _) = cols
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
                .expect("complement is nonempty");
            let mut v = cols.swap_remove(j);
            // Second pass against E and earlier picks restores orthogonality.
            v -= self.basis.transpose() * (&self.basis * &v);
            for w in &picked {
                v -= w * w.dot(&v);
            }
            v /= v.norm();
            for c in cols.iter_mut() {
                let d = v.dot(c);
                *c -= &v * d;
            }
            picked.push(v);
        }
        let rows = DMatrix::from_fn(csig.k, n, |r, c| picked[r][c]);
        SubspaceSample::from_basis(csig, &rows).expect("pivoted Gram-Schmidt output is independent")
    }

    /// Spectrum of `E^P` computed from scratch.
    pub fn complement_spectrum(&self) -> Vec<f64> {
        self.complement().spectrum
    }

    pub fn orbit_signature(&self) -> OrbitSignature {
        let p = self.sig.p;
        let mut g = &self.basis * self.basis.transpose();
        let uq = self.basis.columns(p, self.sig.q);
        g -= (uq * uq.transpose()) * 2.0;
        let ev = sym_eigenvalues_desc(g);
        OrbitSignature {
            a: ev.iter().filter(|&&x| x > SIGNATURE_TOL).count(),
            b: ev.iter().filter(|&&x| x < -SIGNATURE_TOL).count(),
            near_degenerate: ev.iter().any(|x| x.abs() <= SIGNATURE_TOL),
        }
    }
}

fn sample_with(sig: SignatureTriple, rng: &mut ChaCha8Rng) -> SubspaceSample {
    loop {
        let g = DMatrix::from_fn(sig.k, sig.n(), |_, _| StandardNormal.sample(rng));
        if let Ok(s) = SubspaceSample::from_basis(sig, &g) {
            debug_assert!(s.orthonormality_defect() < ORTHO_TOL * 100.0);
            return s;
        }
    }
}

/// Haar-distributed `k`-plane: Gaussian `k x n` matrix, orthonormalized.
pub fn haar_sample(sig: SignatureTriple, seed: u64) -> SubspaceSample {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_with(sig, &mut rng)
}

/// `count` independent samples; sample `i` uses the ChaCha stream `(seed, i)`,
/// so the batch does not depend on the thread count.
pub fn haar_batch(sig: SignatureTriple, count: usize, seed: u64) -> Vec<SubspaceSample> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64 + 1);
            sample_with(sig, &mut rng)
        })
        .collect()
}

/// Spectra of `count` independent samples, as [`haar_batch`].
pub fn haar_spectra(sig: SignatureTriple, count: usize, seed: u64) -> Vec<Vec<f64>> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64 + 1);
            sample_with(sig, &mut rng).spectrum
        })
        .collect()
}

#[cfg(test)]
mod tests;
