use serde::Serialize;

use super::CroftonError;
use crate::matintegrals::constantine_ratio;
use crate::scalar::{q, qi, ExactScalar};
use crate::special::{GammaProduct, Partition, SpecialError};
use crate::Rational;

/// Pole orders of the Constantine ratio at `s0` for one partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KappaPoles {
    pub kappa: Vec<u32>,
    pub numerator: i64,
    pub denominator: i64,
    pub net: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MuCReport {
    pub case: String,
    pub m: u32,
    pub n: usize,
    pub alpha: String,
    pub s0: String,
    /// Order of the Laurent coefficient the pairing extracts.
    pub laurent_order: u32,
    /// Largest first part enumerated; counts are constant for `kappa_1 > m`.
    pub max_first: u32,
    pub pole_orders: Vec<KappaPoles>,
    pub max_net: i64,
    pub certified: bool,
}

/// `(numerator, denominator)` pole orders at `x0`, counting each variable
/// factor by the sign of its exponent.
fn split_pole_orders(g: &GammaProduct, x0: &Rational) -> Result<(i64, i64), SpecialError> {
    let (mut num, mut den) = (0, 0);
    for f in &g.factors {
        let arg = &f.scale * x0 + &f.shift;
        if !arg.is_nonpositive_integer() {
            continue;
        }
        if num_traits::Zero::is_zero(&f.scale) {
            if f.exponent > 0 {
                return Err(SpecialError::ConstantPole);
            }
            continue;
        }
        if f.exponent > 0 {
            num += f.exponent as i64;
        } else {
            den -= f.exponent as i64;
        }
    }
    Ok((num, den))
}

pub fn mu_c_vanishing(m: u32) -> Result<MuCReport, CroftonError> {
    mu_c_vanishing_up_to(m, 2 * m + 1)
}

/// Net pole order of `Gamma_N(s + (N+1)/2, kappa) Gamma_N(alpha + (N+1)/2) /
/// Gamma_N(s + alpha + N + 1, kappa)` at `s0 = -2m` for `N = 2m - 1`,
/// `alpha = -1/2` and every `kappa` with `kappa_2 <= 1`, `kappa_1 <= max_first`.
pub fn mu_c_vanishing_up_to(m: u32, max_first: u32) -> Result<MuCReport, CroftonError> {
    if !(2..=5).contains(&m) {
        return Err(CroftonError::OutOfRange(format!("m must lie in 2..=5, got {m}")));
    }
    let n = 2 * m as usize - 1;
    let alpha = q(-1, 2);
    let s0 = qi(-2 * m as i64);
    let mut rows = Vec::new();
    for kappa in Partition::second_part_at_most_one(n, max_first) {
        let g = constantine_ratio(n, &alpha, &kappa)?;
        let (num, den) = split_pole_orders(&g, &s0)?;
        rows.push(KappaPoles {
            kappa: (0..n).map(|i| kappa.part(i)).collect(),
            numerator: num,
            denominator: den,
            net: num - den,
        });
    }
    let max_net = rows.iter().map(|r| r.net).max().unwrap_or(0);
    Ok(MuCReport {
        case: "mu_c".into(),
        m,
        n,
        alpha: alpha.to_string(),
        s0: s0.to_string(),
        laurent_order: m,
        max_first,
        pole_orders: rows,
        max_net,
        certified: max_net <= 1 && 1 < m as i64,
    })
}
