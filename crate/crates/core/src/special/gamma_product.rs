//! Formal products of Gamma factors with exact pole bookkeeping.

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::gamma::gamma;
use super::SpecialError;
use crate::ratfun::{Polynomial, RationalFunction};
use crate::scalar::ExactScalar;
use crate::Rational;

/// `Gamma(scale * x + shift)^exponent`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GammaFactor<T = Rational> {
    pub scale: T,
    pub shift: T,
    pub exponent: i32,
}

/// `prefactor * pi^pi_power * prod Gamma(scale_i x + shift_i)^{e_i}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GammaProduct<T = Rational> {
    pub prefactor: T,
    pub pi_power: T,
    pub factors: Vec<GammaFactor<T>>,
}

/// Leading behaviour `coefficient * (x - x0)^{-order}` near a point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LeadingTerm {
    /// Pole order; negative values are zeros.
    pub order: i64,
    pub coefficient: f64,
}

/// `rational * pi^pi_power`, exact.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExactValue<T = Rational> {
    pub order: i64,
    pub rational: T,
    pub pi_power: T,
}

impl<T: ExactScalar> ExactValue<T> {
    pub fn to_f64(&self) -> f64 {
        self.rational.to_f64().unwrap() * std::f64::consts::PI.powf(self.pi_power.to_f64().unwrap())
    }
}

impl<T: ExactScalar + std::fmt::Display> std::fmt::Display for ExactValue<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.pi_power.is_zero() || self.rational.is_zero() {
            write!(f, "{}", self.rational)
        } else if self.pi_power.is_one() {
            write!(f, "{}*pi", self.rational)
        } else {
            write!(f, "{}*pi^({})", self.rational, self.pi_power)
        }
    }
}

fn factorial<T: ExactScalar>(k: u64) -> T {
    (1..=k).fold(T::one(), |acc, i| acc * T::from_u64(i).unwrap())
}

impl<T: ExactScalar> GammaProduct<T> {
    pub fn constant(prefactor: T) -> Self {
        GammaProduct {
            prefactor,
            pi_power: T::zero(),
            factors: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn with_pi_power(mut self, r: T) -> Self {
        self.pi_power = self.pi_power + r;
        self
    }

    pub fn push(&mut self, scale: T, shift: T, exponent: i32) {
        self.factors.push(GammaFactor {
            scale,
            shift,
            exponent,
        });
    }

    /// Product `self * other`.
    pub fn times(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.prefactor = out.prefactor * other.prefactor.clone();
        out.pi_power = out.pi_power + other.pi_power.clone();
        out.factors.extend(other.factors.iter().cloned());
        out
    }

    /// Reciprocal; the prefactor must be nonzero.
    pub fn inverse(&self) -> Self {
        GammaProduct {
            prefactor: T::one() / self.prefactor.clone(),
            pi_power: -self.pi_power.clone(),
            factors: self
                .factors
                .iter()
                .map(|f| GammaFactor {
                    scale: f.scale.clone(),
                    shift: f.shift.clone(),
                    exponent: -f.exponent,
                })
                .collect(),
        }
    }

    /// `Gamma_N(scale x + shift, kappa)`; `kappa = 0` gives `Gamma_N`.
    pub fn multivariate(n: usize, scale: T, shift: T, kappa: &[u32]) -> Self {
        let mut g = Self::one().with_pi_power(T::from_usize(n * n.saturating_sub(1)).unwrap() / T::from_u32(4).unwrap());
        for i in 0..n {
            let k = T::from_u32(kappa.get(i).copied().unwrap_or(0)).unwrap();
            let half_i = T::from_usize(i).unwrap() / T::from_u32(2).unwrap();
            g.push(scale.clone(), shift.clone() + k - half_i, 1);
        }
        g
    }

    fn argument(f: &GammaFactor<T>, x0: &T) -> T {
        f.scale.clone() * x0.clone() + f.shift.clone()
    }

    /// Net pole order at `x0` (negative for zeros).
    pub fn pole_order_at(&self, x0: &T) -> i64 {
        self.factors
            .iter()
            .filter(|f| Self::argument(f, x0).is_nonpositive_integer())
            .map(|f| f.exponent as i64)
            .sum()
    }

    /// True when a constant factor `1/Gamma(-k)` makes the product vanish.
    pub fn is_identically_zero(&self) -> bool {
        self.prefactor.is_zero()
            || self.factors.iter().any(|f| {
                f.scale.is_zero() && f.exponent < 0 && f.shift.is_nonpositive_integer()
            })
    }

    fn check_constant_poles(&self) -> Result<(), SpecialError> {
        if self
            .factors
            .iter()
            .any(|f| f.scale.is_zero() && f.exponent > 0 && f.shift.is_nonpositive_integer())
        {
            return Err(SpecialError::ConstantPole);
        }
        Ok(())
    }

    /// Leading Laurent term at `x0` in floating point.
    ///
    /// Near a pole `-k` of `Gamma`, `Gamma(-k + a h) ~ (-1)^k / (k! a h)`.
    pub fn leading_term(&self, x0: &T) -> Result<LeadingTerm, SpecialError> {
        self.check_constant_poles()?;
        if self.is_identically_zero() {
            return Ok(LeadingTerm {
                order: i64::MIN,
                coefficient: 0.0,
            });
        }
        let mut order = 0_i64;
        let mut log_abs = self.prefactor.to_f64().unwrap().abs().ln()
            + self.pi_power.to_f64().unwrap() * std::f64::consts::PI.ln();
        let mut sign = if self.prefactor.is_negative() { -1.0 } else { 1.0 };
        for f in &self.factors {
            let arg = Self::argument(f, x0);
            let (v_abs_ln, v_sign) = if arg.is_nonpositive_integer() {
                order += f.exponent as i64;
                let k = (-arg).as_i64().unwrap();
                let a = f.scale.to_f64().unwrap();
                let lnk: f64 = (1..=k).map(|i| (i as f64).ln()).sum();
                let s = if k % 2 == 0 { 1.0 } else { -1.0 } * a.signum();
                (-(lnk + a.abs().ln()), s)
            } else {
                let g = gamma(arg.to_f64().unwrap());
                (g.abs().ln(), g.signum())
            };
            log_abs += f.exponent as f64 * v_abs_ln;
            if v_sign < 0.0 && f.exponent % 2 != 0 {
                sign = -sign;
            }
        }
        Ok(LeadingTerm {
            order,
            coefficient: sign * log_abs.exp(),
        })
    }

    /// Value at a point where the net order is not a pole (0 at zeros).
    pub fn value_at(&self, x0: &T) -> Result<f64, SpecialError> {
        let lt = self.leading_term(x0)?;
        match lt.order {
            0 => Ok(lt.coefficient),
            o if o < 0 => Ok(0.0),
            o => Err(SpecialError::Pole { order: o as usize }),
        }
    }

    /// Exact leading term when every regular argument lies in `Z/2`.
    pub fn exact_leading(&self, x0: &T) -> Option<ExactValue<T>> {
        if self.check_constant_poles().is_err() {
            return None;
        }
        let two = T::from_u32(2).unwrap();
        let mut order = 0_i64;
        let mut r = self.prefactor.clone();
        let mut pi = self.pi_power.clone();
        for f in &self.factors {
            let arg = Self::argument(f, x0);
            let (v, half_pi) = if arg.is_nonpositive_integer() {
                order += f.exponent as i64;
                let k = (-arg).as_i64()? as u64;
                let sgn = if k.is_multiple_of(2) { T::one() } else { -T::one() };
                (sgn / (factorial::<T>(k) * f.scale.clone()), false)
            } else if arg.is_integral() {
                (factorial::<T>((arg.as_i64()? - 1) as u64), false)
            } else if arg.is_half_integral() {
                // Gamma(j + 1/2) = sqrt(pi) * prod_{i<j} (i + 1/2), continued downward.
                let j = (arg.clone() - T::one() / two.clone()).floor_i64()?;
                let mut v = T::one();
                if j >= 0 {
                    for i in 0..j {
                        v = v * (T::from_i64(i).unwrap() + T::one() / two.clone());
                    }
                } else {
                    for i in j..0 {
                        v = v / (T::from_i64(i).unwrap() + T::one() / two.clone());
                    }
                }
                (v, true)
            } else {
                return None;
            };
            if v.is_zero() {
                return None;
            }
            let e = f.exponent;
            let pw = if e >= 0 {
                (0..e).fold(T::one(), |acc, _| acc * v.clone())
            } else {
                (0..-e).fold(T::one(), |acc, _| acc / v.clone())
            };
            r = r * pw;
            if half_pi {
                pi = pi + T::from_i32(e).unwrap() / two.clone();
            }
        }
        Some(ExactValue {
            order,
            rational: r,
            pi_power: pi,
        })
    }

    /// Splits into `R(x) * C` with `R` rational and `C` free of `x`, when
    /// the `x`-dependent factors pair up with integer shift differences.
    pub fn split_rational(&self) -> Option<(RationalFunction<T>, GammaProduct<T>)> {
        let mut constant = GammaProduct {
            prefactor: self.prefactor.clone(),
            pi_power: self.pi_power.clone(),
            factors: Vec::new(),
        };
        let mut num: Vec<(T, T)> = Vec::new();
        let mut den: Vec<(T, T)> = Vec::new();
        for f in &self.factors {
            if f.scale.is_zero() {
                constant.factors.push(f.clone());
                continue;
            }
            let list = if f.exponent > 0 { &mut num } else { &mut den };
            for _ in 0..f.exponent.unsigned_abs() {
                list.push((f.scale.clone(), f.shift.clone()));
            }
        }
        let mut r = RationalFunction::one();
        for (a, b) in num {
            let idx = den.iter().position(|(a2, b2)| {
                *a2 == a && (b2.clone() - b.clone()).is_integral()
            })?;
            let (_, b2) = den.swap_remove(idx);
            // Gamma(a x + b) / Gamma(a x + b2)
            let d = (b2.clone() - b.clone()).as_i64()?;
            let (lo, count, up) = if d >= 0 { (b, d, false) } else { (b2, -d, true) };
            let mut p = Polynomial::one();
            for j in 0..count {
                let lin = Polynomial::linear(a.clone(), lo.clone() + T::from_i64(j).unwrap());
                p = &p * &lin;
            }
            let pr = RationalFunction::from_poly(p);
            r = if up { &r * &pr } else { &r / &pr };
        }
        if !den.is_empty() {
            return None;
        }
        Some((r, constant))
    }
}

trait FloorI64 {
    fn floor_i64(&self) -> Option<i64>;
}

impl<T: ExactScalar> FloorI64 for T {
    fn floor_i64(&self) -> Option<i64> {
        let (n, d) = (self.numer_big(), self.denom_big());
        let q = num_integer::Integer::div_floor(&n, &d);
        q.to_i64()
    }
}

impl GammaProduct<Rational> {
    /// Constant `Gamma(c)^e` factor.
    pub fn gamma_const(c: Rational, exponent: i32) -> Self {
        let mut g = Self::one();
        g.push(Rational::zero(), c, exponent);
        g
    }
}

impl<T: ExactScalar> Default for GammaProduct<T> {
    fn default() -> Self {
        Self::one()
    }
}
