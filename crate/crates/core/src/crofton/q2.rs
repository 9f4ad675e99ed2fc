//! The `O(p,2)` basis table: restrictions of the Crofton distributions to
//! `L^0_k = {E : e_n in E}` and `L^{pi/2}_k = Gr_k(e_n^perp)`.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::CroftonError;
use crate::scalar::q;
use crate::special::{odd_p_total, u_diag3, u_residue};
use crate::Rational;

/// Smallest modulus accepted for an entry that must not vanish.
pub const AMBIGUITY_GATE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Angle {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "pi/2")]
    HalfPi,
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Angle::Zero => "0",
            Angle::HalfPi => "pi/2",
        })
    }
}

impl FromStr for Angle {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "0" | "zero" => Ok(Angle::Zero),
            "pi/2" | "halfpi" | "half-pi" => Ok(Angle::HalfPi),
            _ => Err(format!("unknown angle {s:?}, expected 0 or pi/2")),
        }
    }
}

/// `int_{L^alpha} |sigma|^s_{k-b,b}` up to a positive constant. Parameters
/// are stored doubled, `u(s, a2/2, b2/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum RestrictionValue {
    StructuralZero,
    U { a2: i64, b2: i64 },
}

impl RestrictionValue {
    fn u(a2: i64, b2: i64) -> Self {
        RestrictionValue::U { a2, b2 }
    }

    /// `(a, b)` of the `u` function, if any.
    pub fn params(&self) -> Option<(Rational, Rational)> {
        match *self {
            RestrictionValue::StructuralZero => None,
            RestrictionValue::U { a2, b2 } => Some((q(a2, 2), q(b2, 2))),
        }
    }
}

impl fmt::Display for RestrictionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.params() {
            None => f.write_str("0"),
            Some((a, b)) => write!(f, "u(s, {a}, {b})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionRow {
    pub alpha: Angle,
    pub b: u32,
    pub value: RestrictionValue,
}

fn check_pk(p: u32, k: u32) -> Result<(), CroftonError> {
    if k < 2 || k > p {
        return Err(CroftonError::OutOfRange(format!("need 2 <= k <= p, got (p, k) = ({p}, {k})")));
    }
    Ok(())
}

fn restriction(p: i64, k: i64, alpha: Angle, b: u32) -> RestrictionValue {
    match (alpha, b) {
        (Angle::Zero, 0) | (Angle::HalfPi, 2) => RestrictionValue::StructuralZero,
        (Angle::Zero, 1) => RestrictionValue::u(p - k, k - 3),
        (Angle::Zero, _) => RestrictionValue::u(k - 3, p - k),
        (Angle::HalfPi, 0) => RestrictionValue::u(p - k - 1, k - 2),
        (Angle::HalfPi, _) => RestrictionValue::u(k - 2, p - k - 1),
    }
}

/// Rows `b = 0, 1, 2` for `|sigma|^s_{k-b,b}` restricted to `L^alpha_k`.
pub fn restriction_table(p: u32, k: u32, alpha: Angle) -> Result<Vec<RestrictionRow>, CroftonError> {
    check_pk(p, k)?;
    Ok((0..=2)
        .map(|b| RestrictionRow {
            alpha,
            b,
            value: restriction(p as i64, k as i64, alpha, b),
        })
        .collect())
}

/// How an entry was obtained.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum EntryMethod {
    /// Disjoint support; not computed.
    StructuralZero,
    /// `Res_{s0} u(s, a, b)`, exact.
    Residue { a: String, b: String },
    /// `lim_{s -> s0} w_a u(s, a, b) + w_b u(s, b, a)` through `odd_p_total`.
    OddPTotal { a: String, b: String, weights: (i64, i64) },
    /// `sign * u(s0, a, b)` through `u_diag3`.
    Diag3 { a: String, b: String, sign: i64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Q2Entry {
    pub functional: String,
    pub angle: Angle,
    pub method: EntryMethod,
    pub value: f64,
    pub exact: Option<String>,
    pub required_nonzero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Q2Strategy {
    /// Invertibility of the `2 x 2` matrix of restrictions to `L^0`, `L^{pi/2}`.
    Matrix,
    /// `int_{L^0}` of the first functional is nonzero, that of the second
    /// vanishes; the second is nontrivial by an embedding argument.
    LZeroColumn,
    /// Certified through the Fourier-dual degree `k' = p + 2 - k`.
    Dual { k: u32 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Q2Certificate {
    pub case: String,
    pub p: u32,
    pub k: u32,
    pub s0: String,
    /// Row of the classification table, 1 to 4.
    pub row: u8,
    pub functionals: [String; 2],
    pub strategy: Q2Strategy,
    pub entries: Vec<Q2Entry>,
    pub determinant: Option<f64>,
    pub certified: bool,
}

impl Q2Certificate {
    /// First required entry below the gate.
    pub fn failing_entry(&self) -> Option<&Q2Entry> {
        self.entries
            .iter()
            .find(|e| e.required_nonzero && !(e.value.abs() >= AMBIGUITY_GATE))
    }
}

fn half(x2: i64) -> Rational {
    q(x2, 2)
}

/// `Res_{s0} u(s, a2/2, b2/2)` with `s0 = -(p+3)/2`.
fn residue_entry(p: i64, functional: &str, angle: Angle, a2: i64, b2: i64) -> Result<Q2Entry, CroftonError> {
    let (a, b) = (half(a2), half(b2));
    let r = u_residue(((p + 3) / 2) as usize, &a, &b)?;
    Ok(Q2Entry {
        functional: functional.into(),
        angle,
        method: EntryMethod::Residue {
            a: a.to_string(),
            b: b.to_string(),
        },
        value: r.to_f64().unwrap(),
        exact: Some(r.to_string()),
        required_nonzero: true,
    })
}

/// `lim w_a u(s, A, B) + w_b u(s, B, A)` at `s0 = -A-B-3`, which is
/// `odd_p_total` up to sign when `w_b / w_a = (-1)^{|A-B|+1}`.
fn total_entry(functional: &str, angle: Angle, a2: i64, b2: i64, wa: i64, wb: i64) -> Result<Q2Entry, CroftonError> {
    let m2 = (a2 - b2).abs();
    if m2 % 2 != 0 {
        return Err(CroftonError::NotCertified(format!(
            "u-parameters {}/2, {}/2 do not differ by an integer",
            a2, b2
        )));
    }
    let m = (m2 / 2) as u32;
    let sign = if m.is_multiple_of(2) { -1 } else { 1 };
    if wa * wb != sign {
        return Err(CroftonError::NotCertified(format!(
            "weights ({wa}, {wb}) do not cancel the poles of u(s, {}, {})",
            half(a2),
            half(b2)
        )));
    }
    let (low2, lead) = if a2 >= b2 { (b2, wa) } else { (a2, wb) };
    let v = lead as f64 * odd_p_total(&half(low2), m)?;
    Ok(Q2Entry {
        functional: functional.into(),
        angle,
        method: EntryMethod::OddPTotal {
            a: half(a2).to_string(),
            b: half(b2).to_string(),
            weights: (wa, wb),
        },
        value: v,
        exact: None,
        required_nonzero: true,
    })
}

fn diag3_entry(functional: &str, a2: i64, b2: i64, sign: i64) -> Result<Q2Entry, CroftonError> {
    let (a, b) = (half(a2), half(b2));
    let v = sign as f64 * u_diag3(&a, &b)?;
    Ok(Q2Entry {
        functional: functional.into(),
        angle: Angle::Zero,
        method: EntryMethod::Diag3 {
            a: a.to_string(),
            b: b.to_string(),
            sign,
        },
        value: v,
        exact: None,
        required_nonzero: true,
    })
}

fn structural(functional: &str, angle: Angle) -> Q2Entry {
    Q2Entry {
        functional: functional.into(),
        angle,
        method: EntryMethod::StructuralZero,
        value: 0.0,
        exact: Some("0".into()),
        required_nonzero: false,
    }
}

fn params(v: RestrictionValue) -> (i64, i64) {
    match v {
        RestrictionValue::U { a2, b2 } => (a2, b2),
        RestrictionValue::StructuralZero => unreachable!("structural zeros carry no parameters"),
    }
}

fn row_of(p: u32, k: u32) -> u8 {
    match (p % 4, k % 2) {
        (0 | 2, 0) => 1,
        (0 | 2, _) => 2,
        (1, _) => 3,
        _ => 4,
    }
}

fn functionals(p: u32, k: u32) -> [String; 2] {
    match row_of(p, k) {
        1 => ["|sigma|_{k,0} - |sigma|_{k-2,2}".into(), "mu_c".into()],
        2 => ["|sigma|_{k-1,1}".into(), "mu_c".into()],
        r => [
            if r == 3 { "|sigma|" } else { "sign(sigma)|sigma|" }.into(),
            if k % 2 == 1 { "mu_{k-1,0}" } else { "mu_{k-2,1}" }.into(),
        ],
    }
}

/// Evaluates the entries the non-vanishing argument needs, without
/// turning a failure into an error.
pub fn q2_report(p: u32, k: u32) -> Result<Q2Certificate, CroftonError> {
    check_pk(p, k)?;
    let (pi, ki) = (p as i64, k as i64);
    let row = row_of(p, k);
    let names = functionals(p, k);
    let (f1, f2) = (names[0].as_str(), names[1].as_str());
    let r = |alpha, b| restriction(pi, ki, alpha, b);
    let mut determinant = None;
    let (strategy, entries) = if p.is_multiple_of(2) {
        let first = if k.is_multiple_of(2) {
            // |sigma|_{k,0} restricts to 0 on L^0.
            let (a2, b2) = params(r(Angle::Zero, 2));
            diag3_entry(f1, a2, b2, -1)?
        } else {
            let (a2, b2) = params(r(Angle::Zero, 1));
            diag3_entry(f1, a2, b2, 1)?
        };
        (Q2Strategy::LZeroColumn, vec![first, structural(f2, Angle::Zero)])
    } else if p % 4 == 1 && 2 * k == p + 3 {
        let mut dual = q2_report(p, p + 2 - k)?;
        dual.k = k;
        dual.row = row;
        dual.functionals = names;
        dual.strategy = Q2Strategy::Dual { k: p + 2 - k };
        return Ok(finish(dual));
    } else {
        let w = |b: u32| if p % 4 == 3 && b % 2 == 1 { -1 } else { 1 };
        if p % 4 == 1 && 2 * k == p + 1 {
            let (a2, b2) = params(r(Angle::Zero, 1));
            let a0 = total_entry(f1, Angle::Zero, a2, b2, w(1), w(2))?;
            (Q2Strategy::LZeroColumn, vec![a0, structural(f2, Angle::Zero)])
        } else if k.is_multiple_of(2) {
            // mu_{k-2,1} is the residue of |sigma|_{k-2,2}.
            let (a2, b2) = params(r(Angle::HalfPi, 0));
            let a1 = total_entry(f1, Angle::HalfPi, a2, b2, w(0), w(1))?;
            let (c2, d2) = params(r(Angle::Zero, 2));
            let r0 = residue_entry(pi, f2, Angle::Zero, c2, d2)?;
            determinant = Some(-r0.value * a1.value);
            (Q2Strategy::Matrix, vec![a1, r0, structural(f2, Angle::HalfPi)])
        } else {
            // mu_{k-1,0} is the residue of |sigma|_{k,0}.
            let (a2, b2) = params(r(Angle::Zero, 1));
            let a0 = total_entry(f1, Angle::Zero, a2, b2, w(1), w(2))?;
            let (c2, d2) = params(r(Angle::HalfPi, 0));
            let r1 = residue_entry(pi, f2, Angle::HalfPi, c2, d2)?;
            determinant = Some(a0.value * r1.value);
            (Q2Strategy::Matrix, vec![a0, r1, structural(f2, Angle::Zero)])
        }
    };
    Ok(finish(Q2Certificate {
        case: "q2_basis".into(),
        p,
        k,
        s0: q(-(pi + 3), 2).to_string(),
        row,
        functionals: names,
        strategy,
        entries,
        determinant,
        certified: false,
    }))
}

fn finish(mut c: Q2Certificate) -> Q2Certificate {
    c.certified = c.failing_entry().is_none() && c.entries.iter().any(|e| e.required_nonzero);
    c
}

/// Certificate that the two distributions of the classification row for
/// `(p, k)` give linearly independent valuations, `s0 = -(p+3)/2`.
pub fn q2_basis_certificate(p: u32, k: u32) -> Result<Q2Certificate, CroftonError> {
    let c = q2_report(p, k)?;
    if let Some(e) = c.failing_entry() {
        return Err(CroftonError::NumericallyAmbiguous {
            p,
            k,
            entry: format!("int_{{L^{}}} {}", e.angle, e.functional),
            value: e.value,
        });
    }
    Ok(c)
}
