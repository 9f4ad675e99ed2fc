//! Closed forms of the signed Vandermonde integrals
//! `I^eps_n(s) = sum_b eps(b) int_{Delta_{n-b,b}} prod_{i<j}(x_i - x_j) prod |x_i|^s`.

use num_traits::Zero;
use serde::Serialize;

use super::closed::delta_n;
use crate::ratfun::Polynomial;
use crate::scalar::qi;
use crate::{Poly, RatFun, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Shape {
    /// weight 1
    Abs,
    /// weight (-1)^b
    Sgn,
    /// weights cos(pi b/2) and sin(pi b/2), returned as one complex value
    Mixed,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SelbergValue {
    Real(RatFun),
    Complex { re: RatFun, im: RatFun },
}

fn lin(a: i64, b: i64) -> Poly {
    Polynomial::linear(qi(a), qi(b))
}

/// `prod_{i<j<=n, i = j mod 2} (j - i)`.
fn same_parity_gaps(n: usize) -> Rational {
    let mut c = qi(1);
    for i in 1..=n {
        for j in (i + 2..=n).step_by(2) {
            c *= qi((j - i) as i64);
        }
    }
    c
}

/// `prod_{i<j<=n, i != j mod 2} (2s + i + j)`.
fn mixed_pairs(n: usize) -> Poly {
    let mut p = Poly::one();
    for i in 1..=n {
        for j in (i + 1..=n).step_by(2) {
            p = &p * &lin(2, (i + j) as i64);
        }
    }
    p
}

/// `I_n(s) = 2^n prod_{i<j, i=j} (j-i) / (prod_{odd i} (s+i) prod_{i<j, i!=j} (2s+i+j))`.
pub fn selberg_abs(n: usize) -> RatFun {
    let mut c = same_parity_gaps(n);
    for _ in 0..n {
        c *= qi(2);
    }
    let mut den = mixed_pairs(n);
    for i in (1..=n).step_by(2) {
        den = &den * &lin(1, i as i64);
    }
    RatFun::new(Poly::constant(c), den).unwrap()
}

/// Sign-weighted integral; zero for odd `n`, and for `n = 2m`
/// `(-1)^m 2^{2m} prod_{i=j} (j-i) / (prod_{i<=m} (s+2i) prod_{i!=j} (2s+i+j))`.
pub fn selberg_sgn(n: usize) -> RatFun {
    if n % 2 == 1 {
        return RatFun::zero();
    }
    let m = n / 2;
    let mut c = same_parity_gaps(n);
    for _ in 0..n {
        c *= qi(2);
    }
    if m % 2 == 1 {
        c = -c;
    }
    let mut den = mixed_pairs(n);
    for i in 1..=m {
        den = &den * &lin(1, 2 * i as i64);
    }
    RatFun::new(Poly::constant(c), den).unwrap()
}

/// `(I^cos, I^sin)` from
/// `I^cos + i I^sin = (-1)^{C(n-m,2)} delta_n(m) prod_j 1/(s+j) prod_{i<j, i=j} (j-i)/(2s+i+j)`,
/// `m = floor(n/2)`.
pub fn selberg_mixed(n: usize) -> (RatFun, RatFun) {
    let m = n / 2;
    let mut c = same_parity_gaps(n);
    let k = n - m;
    if (k * k.saturating_sub(1) / 2) % 2 == 1 {
        c = -c;
    }
    let mut den = Poly::one();
    for j in 1..=n {
        den = &den * &lin(1, j as i64);
    }
    for i in 1..=n {
        for j in (i + 2..=n).step_by(2) {
            den = &den * &lin(2, (i + j) as i64);
        }
    }
    let d = delta_n(n, m);
    let part = |x: Rational| {
        if x.is_zero() {
            RatFun::zero()
        } else {
            RatFun::new(Poly::constant(x * &c), den.clone()).unwrap()
        }
    };
    (part(d.re), part(d.im))
}

pub fn selberg_i(n: usize, shape: Shape) -> SelbergValue {
    match shape {
        Shape::Abs => SelbergValue::Real(selberg_abs(n)),
        Shape::Sgn => SelbergValue::Real(selberg_sgn(n)),
        Shape::Mixed => {
            let (re, im) = selberg_mixed(n);
            SelbergValue::Complex { re, im }
        }
    }
}
