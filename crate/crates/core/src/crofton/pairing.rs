use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::CroftonError;
use crate::matintegrals::{d_closed, EpsilonKind, MatIntegralResult};
use crate::scalar::{q, qi};
use crate::Rational;

/// The four universal families, each paired with the ball (or, for the
/// `abs`/`sgn` families, with the degenerate ellipsoid).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum UniversalCase {
    /// `mu_abs(-2m)` on `AGr_{2m-1}(R^{2m,2m-1})`.
    Abs2m { m: u32 },
    /// `mu_sgn(-2m-1)` on `AGr_{2m}(R^{2m+1,2m})`.
    Sgn2m1 { m: u32 },
    /// `mu_cos(-(2p+1)/2)` on `AGr_{p-1}(R^{p,p})`.
    CosPp { p: u32 },
    /// `mu_sin(-(2p+1)/2)` on `AGr_{p-1}(R^{p,p})`.
    SinPp { p: u32 },
}

impl UniversalCase {
    /// `(p, q, k)` of the ambient space and Grassmannian.
    pub fn ambient(&self) -> (u32, u32, u32) {
        match *self {
            UniversalCase::Abs2m { m } => (2 * m, 2 * m - 1, 2 * m - 1),
            UniversalCase::Sgn2m1 { m } => (2 * m + 1, 2 * m, 2 * m),
            UniversalCase::CosPp { p } | UniversalCase::SinPp { p } => (p, p, p - 1),
        }
    }

    pub fn s0(&self) -> Rational {
        match *self {
            UniversalCase::Abs2m { m } => qi(-2 * m as i64),
            UniversalCase::Sgn2m1 { m } => qi(-2 * m as i64 - 1),
            UniversalCase::CosPp { p } | UniversalCase::SinPp { p } => q(-(2 * p as i64 + 1), 2),
        }
    }

    pub fn kind(&self) -> EpsilonKind {
        match self {
            UniversalCase::Abs2m { .. } => EpsilonKind::Abs,
            UniversalCase::Sgn2m1 { .. } => EpsilonKind::Sgn,
            UniversalCase::CosPp { .. } => EpsilonKind::Cos,
            UniversalCase::SinPp { .. } => EpsilonKind::Sin,
        }
    }

    /// Number of variables of the matrix integral `D^eps_n`.
    pub fn dimension(&self) -> usize {
        match *self {
            UniversalCase::Abs2m { m } => 2 * m as usize - 1,
            UniversalCase::Sgn2m1 { m } => 2 * m as usize,
            UniversalCase::CosPp { p } | UniversalCase::SinPp { p } => p as usize - 1,
        }
    }

    fn validate(&self) -> Result<(), CroftonError> {
        match *self {
            UniversalCase::Abs2m { m } | UniversalCase::Sgn2m1 { m } if m == 0 => {
                Err(CroftonError::OutOfRange("m must be at least 1".into()))
            }
            UniversalCase::CosPp { p } | UniversalCase::SinPp { p } if p < 2 => Err(CroftonError::OutOfRange(
                format!("p = {p} gives k = p - 1 < 1"),
            )),
            UniversalCase::CosPp { p } if p % 4 == 3 => Err(CroftonError::InadmissibleCase(format!(
                "cos family needs p != 3 mod 4, got p = {p}"
            ))),
            UniversalCase::SinPp { p } if p % 4 == 1 => Err(CroftonError::InadmissibleCase(format!(
                "sin family needs p != 1 mod 4, got p = {p}"
            ))),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairingInputs {
    pub p: u32,
    pub q: u32,
    pub k: u32,
    pub n: usize,
    pub kind: EpsilonKind,
    pub s0: String,
}

/// `D^eps_n(s0) = constant * exact_value`; the pairing is a positive
/// multiple of it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairingReport {
    pub case: UniversalCase,
    pub inputs: PairingInputs,
    pub exact_value: String,
    pub constant: String,
    pub value: f64,
    pub certified: bool,
}

fn rational_at(res: &MatIntegralResult, s0: &Rational) -> Result<Rational, CroftonError> {
    res.exact
        .eval(s0)
        .map_err(|_| CroftonError::NotCertified(format!("D^{}_{} has a pole at s = {s0}", res.kind, res.n)))
}

pub fn universal_pairing(case: UniversalCase) -> Result<PairingReport, CroftonError> {
    case.validate()?;
    let (p, qq, k) = case.ambient();
    let n = case.dimension();
    let s0 = case.s0();
    let res = d_closed(n, case.kind())?;
    let v = rational_at(&res, &s0)?;
    let c = res.constant_exact();
    Ok(PairingReport {
        case,
        inputs: PairingInputs {
            p,
            q: qq,
            k,
            n,
            kind: case.kind(),
            s0: s0.to_string(),
        },
        exact_value: v.to_string(),
        constant: c.to_string(),
        value: c.to_f64() * v.to_f64().unwrap(),
        certified: !v.is_zero(),
    })
}

/// Ball pairing behind the centro-affine surface area in `R^{p,p}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CentroAffineReport {
    pub case: String,
    pub inputs: CentroAffineInputs,
    /// `I^cos_{p-1}(s0)`.
    pub cos_value: String,
    /// `I^sin_{p-1}(s0)`, absent when it does not enter.
    pub sin_value: Option<String>,
    /// Coefficient of the sin part in the combination.
    pub sin_coefficient: i64,
    /// `I^cos + sin_coefficient * I^sin`.
    pub exact_value: String,
    pub constant: String,
    /// `(D^cos_{p-1}(s0), sin_coefficient * D^sin_{p-1}(s0))`.
    pub values: (f64, f64),
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CentroAffineInputs {
    pub p: u32,
    pub n: usize,
    pub s0: String,
}

/// `D^cos_{p-1}(s0) - (-1)^{p/2} D^sin_{p-1}(s0)` for even `p` and
/// `D^cos_{p-1}(s0)` for `p = 1 mod 4`, `s0 = -(2p+1)/2`.
pub fn centroaffine_pairing(p: u32) -> Result<CentroAffineReport, CroftonError> {
    if p < 2 {
        return Err(CroftonError::OutOfRange(format!("p must be at least 2, got {p}")));
    }
    if p % 4 == 3 {
        return Err(CroftonError::InadmissibleCase(format!("p = {p} is 3 mod 4")));
    }
    let n = p as usize - 1;
    let s0 = q(-(2 * p as i64 + 1), 2);
    let cos = d_closed(n, EpsilonKind::Cos)?;
    let sin = d_closed(n, EpsilonKind::Sin)?;
    let vc = rational_at(&cos, &s0)?;
    let (sin_value, coef) = if p.is_multiple_of(2) {
        let sign = if (p / 2).is_multiple_of(2) { -1 } else { 1 };
        (Some(rational_at(&sin, &s0)?), sign)
    } else {
        (None, 0)
    };
    let total = match &sin_value {
        Some(vs) => &vc + qi(coef) * vs,
        None => vc.clone(),
    };
    let c = cos.constant_exact();
    let cf = c.to_f64();
    Ok(CentroAffineReport {
        case: if p.is_multiple_of(2) { "even_p" } else { "p_1_mod_4" }.into(),
        inputs: CentroAffineInputs {
            p,
            n,
            s0: s0.to_string(),
        },
        cos_value: vc.to_string(),
        sin_value: sin_value.as_ref().map(|v| v.to_string()),
        sin_coefficient: coef,
        exact_value: total.to_string(),
        constant: c.to_string(),
        values: (
            cf * vc.to_f64().unwrap(),
            cf * coef as f64 * sin_value.map_or(0.0, |v| v.to_f64().unwrap()),
        ),
        certified: !total.is_zero(),
    })
}
