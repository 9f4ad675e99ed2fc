//! The family `u(s, a, b) = int_0^1 x^s (1+x)^a (1-x)^b dx` and its
//! continuation in `s`.

use num_traits::{Float, FloatConst, One, Signed, ToPrimitive, Zero};

use super::gamma::{beta, binomial};
use super::gamma_product::GammaProduct;
use super::quad::integrate;
use super::SpecialError;
use crate::scalar::{qi, ExactScalar};
use crate::Rational;

fn c<F: Float>(x: f64) -> F {
    F::from(x).unwrap()
}

fn is_int<F: Float>(x: F) -> bool {
    x == x.round()
}

const MAX_TERMS: usize = 400;

/// `sum_j coef_j 2^{-(e+j+1)} / (e+j+1)`, the integral of
/// `x^e sum_j coef_j x^j` over `[0, 1/2]`, continued in `e`.
fn half_interval_series<F: Float>(e: F, coef: &dyn Fn(usize) -> F) -> Result<F, SpecialError> {
    let half = c::<F>(0.5);
    let mut sum = F::zero();
    let mut scale = F::zero();
    let mut small = 0;
    for j in 0..MAX_TERMS {
        let g = coef(j);
        scale = scale.max(g.abs());
        let d = e + c(j as f64) + F::one();
        if d == F::zero() {
            if g.abs() <= c::<F>(1e-13) * scale.max(F::one()) {
                continue;
            }
            return Err(SpecialError::Pole { order: 1 });
        }
        let term = g * half.powf(d) / d;
        sum = sum + term;
        if term.abs() <= F::epsilon() * c(0.01) * sum.abs() {
            small += 1;
            if small > 3 {
                break;
            }
        } else {
            small = 0;
        }
    }
    Ok(sum)
}

fn series_coeffs<F: Float>(p: F, q: F, q_scale: F, n: usize) -> Vec<F> {
    // Taylor coefficients of (1+x)^p (1 - q_scale x)^q.
    let bp: Vec<F> = (0..n).map(|i| binomial(p, i)).collect();
    let bq: Vec<F> = (0..n)
        .map(|i| binomial(q, i) * (-q_scale).powi(i as i32))
        .collect();
    (0..n)
        .map(|j| (0..=j).fold(F::zero(), |acc, i| acc + bp[i] * bq[j - i]))
        .collect()
}

/// `u(s, a, b)` for all `s` off its poles, by splitting at `1/2` and
/// integrating the two convergent power series term by term.
pub fn u_eval<F: Float + FloatConst>(s: F, a: F, b: F) -> Result<F, SpecialError> {
    let g = series_coeffs(a, b, F::one(), MAX_TERMS);
    let left = half_interval_series(s, &|j| g[j])?;
    // Near x = 1 with t = 1 - x: x^s (1+x)^a = 2^a (1-t)^s (1 - t/2)^a.
    let h0 = series_coeffs(-F::zero(), s, F::one(), MAX_TERMS);
    let h1: Vec<F> = (0..MAX_TERMS)
        .map(|i| binomial(a, i) * c::<F>(-0.5).powi(i as i32))
        .collect();
    let h: Vec<F> = (0..MAX_TERMS)
        .map(|j| (0..=j).fold(F::zero(), |acc, i| acc + h0[i] * h1[j - i]))
        .collect();
    let two_a = c::<F>(2.0).powf(a);
    let right = half_interval_series(b, &|j| two_a * h[j])?;
    Ok(left + right)
}

/// Direct adaptive quadrature; requires `s > -1` and `b > -1`.
///
/// Each half of `[0, 1]` is mapped by `x = t^{1/(e+1)}` so the endpoint
/// power becomes a bounded integrand.
pub fn u_quadrature<F: Float + FloatConst>(s: F, a: F, b: F) -> Result<F, SpecialError> {
    if !(s > -F::one() && b > -F::one()) {
        return Err(SpecialError::OutOfDomain(format!(
            "quadrature needs s > -1 and b > -1 (s = {:?}, b = {:?})",
            s.to_f64(),
            b.to_f64()
        )));
    }
    let half = c::<F>(0.5);
    let tol = c::<F>(1e-13);
    let p = F::one() / (s + F::one());
    let (left, _) = integrate(
        |t: F| {
            let x = t.powf(p);
            (F::one() + x).powf(a) * (F::one() - x).powf(b)
        },
        F::zero(),
        half.powf(s + F::one()),
        tol,
    );
    let pb = F::one() / (b + F::one());
    let (right, _) = integrate(
        |t: F| {
            let y = t.powf(pb);
            (F::one() - y).powf(s) * (c::<F>(2.0) - y).powf(a)
        },
        F::zero(),
        half.powf(b + F::one()),
        tol,
    );
    Ok(left * p + right * pb)
}

/// `u(s, a, 0)` by the `s`-raising recurrence down to quadrature.
fn u_raise<F: Float + FloatConst>(s: F, a: F) -> Result<F, SpecialError> {
    if s > -F::one() {
        return u_quadrature(s, a, F::zero());
    }
    let d = s + F::one();
    if d == F::zero() {
        return Err(SpecialError::Pole { order: 1 });
    }
    let next = u_raise(s + F::one(), a)?;
    Ok(c::<F>(2.0).powf(a + F::one()) / d - (F::one() + (a + F::one()) / d) * next)
}

/// Evaluates `u` by the recurrences and closed forms, falling back to
/// quadrature only on convergent base cases.
pub fn u_reduce<F: Float + FloatConst>(s: F, a: F, b: F) -> Result<F, SpecialError> {
    if is_int(a) && a >= F::zero() {
        let m = a.to_usize().unwrap();
        let mut acc = F::zero();
        for j in 0..=m {
            let x = s + c((j + 1) as f64);
            if x <= F::zero() && is_int(x) {
                return Err(SpecialError::Pole { order: 1 });
            }
            acc = acc + binomial(a, j) * beta(x, b + F::one());
        }
        return Ok(acc);
    }
    if a == b {
        return Ok(c::<F>(0.5) * beta((s + F::one()) * c(0.5), a + F::one()));
    }
    if is_int(b) && b >= F::zero() {
        let m = b.to_usize().unwrap();
        let mut acc = F::zero();
        for j in 0..=m {
            let sign = if j % 2 == 0 { F::one() } else { -F::one() };
            acc = acc + sign * binomial(b, j) * u_raise(s + c(j as f64), a)?;
        }
        return Ok(acc);
    }
    if s > -F::one() && b > -F::one() {
        return u_quadrature(s, a, b);
    }
    Err(SpecialError::NotReducible(format!(
        "u({:?}, {:?}, {:?})",
        s.to_f64(),
        a.to_f64(),
        b.to_f64()
    )))
}

fn binom_q(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (a - qi(i as i64)) / qi(i as i64 + 1);
    }
    acc
}

/// `Res_{s=-m} u(s, a, b)`: the coefficient of `x^{m-1}` in
/// `(1+x)^a (1-x)^b`.
pub fn u_residue(m: usize, a: &Rational, b: &Rational) -> Result<Rational, SpecialError> {
    if m == 0 {
        return Err(SpecialError::OutOfDomain("residue index m must be >= 1".into()));
    }
    let k = m - 1;
    let mut acc = Rational::zero();
    for j in 0..=k {
        let t = binom_q(a, k - j) * binom_q(b, j);
        acc = if j % 2 == 0 { acc + t } else { acc - t };
    }
    Ok(acc)
}

/// `u(-a-b-3, a, b) = 2^{a+b+1} (a-b)/(a+1) B(-a-b-2, b+1)`.
///
/// The identity is only valid when `a + b` is not an integer; otherwise
/// `-a-b-2` is a Gamma pole and `BetaPole` is returned. The diagonal
/// `a = b` is evaluated through `u(s, a, a) = B((s+1)/2, a+1)/2` instead,
/// which vanishes for strict half-integers.
pub fn u_diag3(a: &Rational, b: &Rational) -> Result<f64, SpecialError> {
    let mhalf = Rational::new((-1).into(), 2.into());
    if *a < mhalf || *b < mhalf {
        return Err(SpecialError::OutOfDomain("u_diag3 needs a, b >= -1/2".into()));
    }
    let half = Rational::new(1.into(), 2.into());
    if a == b {
        let s0 = -qi(2) * a - qi(3);
        let mut g = GammaProduct::<Rational>::constant(half.clone());
        g.push(half.clone(), half.clone(), 1);
        g.push(Rational::zero(), a + qi(1), 1);
        g.push(half.clone(), a + qi(3) * &half, -1);
        return g.value_at(&s0);
    }
    if (a + b).is_integral() {
        return Err(SpecialError::BetaPole);
    }
    let mut g = GammaProduct::<Rational>::one();
    g.push(-Rational::one(), -b - qi(2), 1);
    g.push(Rational::zero(), b + qi(1), 1);
    g.push(-Rational::one(), qi(-1), -1);
    let beta = match g.value_at(a) {
        Ok(v) => v,
        Err(SpecialError::Pole { .. }) => return Err(SpecialError::BetaPole),
        Err(e) => return Err(e),
    };
    let ab = (a + b + qi(1)).to_f64().unwrap();
    let ratio = ((a - b) / (a + qi(1))).to_f64().unwrap();
    Ok(2f64.powf(ab) * ratio * beta)
}

/// `lim_{s -> -a-b-3} u(s, a+m, a) + (-1)^{m+1} u(s, a, a+m)` with
/// `b = a + m`, through the reduction to `B((s+j+1)/2, a+1)`.
pub fn odd_p_total(a: &Rational, m: u32) -> Result<f64, SpecialError> {
    if a.is_negative() || !a.is_half_integral() {
        return Err(SpecialError::OutOfDomain("a must be a half-integer >= 0".into()));
    }
    let s0 = -qi(2) * a - qi(m as i64 + 3);
    let half = Rational::new(1.into(), 2.into());
    let mut finite = 0.0;
    let mut top: Option<(i64, f64)> = None;
    for j in 0..=m {
        if (j + m).is_multiple_of(2) {
            continue;
        }
        // C(m,j) * B((s+j+1)/2, a+1), the 1/2 absorbed by the factor 2.
        let mut g = GammaProduct::<Rational>::constant(binom_q(&qi(m as i64), j as usize));
        g.push(Rational::zero(), a + qi(1), 1);
        g.push(half.clone(), qi(j as i64 + 1) * &half, 1);
        g.push(half.clone(), qi(j as i64 + 3) * &half + a, -1);
        let lt = g.leading_term(&s0)?;
        if lt.order == 0 {
            finite += lt.coefficient;
        } else if lt.order > 0 {
            top = match top {
                Some((o, v)) if o == lt.order => Some((o, v + lt.coefficient)),
                Some((o, v)) if o > lt.order => Some((o, v)),
                _ => Some((lt.order, lt.coefficient)),
            };
        }
    }
    if let Some((order, v)) = top {
        if v.abs() > 1e-12 {
            return Err(SpecialError::Pole {
                order: order as usize,
            });
        }
    }
    Ok(finite)
}

/// Exact `u` for non-negative integer `a` and `b`, at rational `s`
/// with `s + j + 1` never zero: a finite sum of `1/(s+j+1)`.
pub fn u_exact_polynomial(s: &Rational, a: u32, b: u32) -> Result<Rational, SpecialError> {
    let mut acc = Rational::zero();
    for (j, gj) in poly_coeffs(a, b).into_iter().enumerate() {
        if gj.is_zero() {
            continue;
        }
        let d = s + qi(j as i64 + 1);
        if d.is_zero() {
            return Err(SpecialError::Pole { order: 1 });
        }
        acc += gj / d;
    }
    Ok(acc)
}

fn poly_coeffs(a: u32, b: u32) -> Vec<Rational> {
    let n = (a + b) as usize + 1;
    let mut out = vec![Rational::zero(); n];
    for i in 0..=a as usize {
        for j in 0..=b as usize {
            let t = binom_q(&qi(a as i64), i) * binom_q(&qi(b as i64), j);
            if j % 2 == 0 {
                out[i + j] += t;
            } else {
                out[i + j] -= t;
            }
        }
    }
    out
}
