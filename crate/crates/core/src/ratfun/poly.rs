//! Dense univariate polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::scalar::{ExactScalar, Scalar};

/// Polynomial with coefficients stored lowest degree first.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has an
/// empty coefficient vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `a*s + b`.
    pub fn linear(a: T, b: T) -> Self {
        Self::new(vec![b, a])
    }

    /// `s^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![T::zero(); k + 1];
        c[k] = T::one();
        Polynomial { coeffs: c }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        Self::new(self.coeffs.iter().map(|a| a.clone() / lc.clone()).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut qc = vec![T::zero(); r.len() - dd];
        for k in (0..qc.len()).rev() {
            let c = r[k + dd].clone() / lc.clone();
            if !c.is_zero() {
                for (i, di) in d.coeffs.iter().enumerate() {
                    r[k + i] = r[k + i].clone() - c.clone() * di.clone();
                }
            }
            qc[k] = c;
        }
        r.truncate(dd);
        (Self::new(qc), Self::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self
    where
        T: FromPrimitive,
    {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_usize(k).unwrap())
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self
    where
        T: FromPrimitive,
    {
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(T::zero());
        for (k, a) in self.coeffs.iter().enumerate() {
            c.push(a.clone() / T::from_usize(k + 1).unwrap());
        }
        Self::new(c)
    }

    /// Coefficients of `p(x0 + h)` as a polynomial in `h`.
    pub fn taylor_shift(&self, x0: &T) -> Self {
        let shift = Self::linear(T::one(), x0.clone());
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &shift) + &Self::constant(c.clone());
        }
        acc
    }

    /// Multiplicity of `x0` as a root (0 for the zero polynomial by convention).
    pub fn root_multiplicity(&self, x0: &T) -> usize {
        if self.is_zero() {
            return 0;
        }
        let shifted = self.taylor_shift(x0);
        shifted.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl<T: ExactScalar> Polynomial<T> {
    /// Rational roots with multiplicity, largest root first.
    ///
    /// Candidates `p/q` are limited to denominators `q <= 64` dividing the
    /// leading coefficient of the primitive integer form; this covers every
    /// polynomial the crate produces and is only used for display.
    pub fn rational_roots(&self) -> (Vec<(T, usize)>, Self) {
        let mut rest = self.clone();
        let mut roots = Vec::new();
        if rest.degree().unwrap_or(0) == 0 {
            return (roots, rest);
        }
        let zero_mult = rest.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zero_mult > 0 {
            roots.push((T::zero(), zero_mult));
            rest = Self::new(rest.coeffs[zero_mult..].to_vec());
        }
        let ints = integer_form(&rest);
        if ints.len() > 1 {
            let lead = ints.last().unwrap().abs();
            let fl: Vec<f64> = ints.iter().map(|c| c.to_f64().unwrap_or(f64::MAX)).collect();
            let lf = fl.last().unwrap().abs();
            let bound = fl[..fl.len() - 1]
                .iter()
                .map(|c| c.abs() / lf)
                .fold(0.0_f64, f64::max)
                .min(4096.0)
                + 1.0;
            let mut cand: Vec<(i64, i64)> = Vec::new();
            for qd in 1..=64_i64 {
                if !(lead.clone() % BigInt::from(qd)).is_zero() {
                    continue;
                }
                let pmax = (bound * qd as f64).ceil() as i64;
                for p in -pmax..=pmax {
                    if p != 0 && p.gcd(&qd) == 1 {
                        cand.push((p, qd));
                    }
                }
            }
            for (p, qd) in cand {
                if rest.degree().unwrap_or(0) == 0 {
                    break;
                }
                let r = p as f64 / qd as f64;
                let cur: Vec<f64> = rest.coeffs.iter().map(|c| c.to_f64().unwrap_or(0.0)).collect();
                let (mut v, mut mag) = (0.0_f64, 0.0_f64);
                for c in cur.iter().rev() {
                    v = v * r + c;
                    mag = mag * r.abs() + c.abs();
                }
                if v.abs() > 1e-6 * mag {
                    continue;
                }
                let root = T::from_big(BigInt::from(p), BigInt::from(qd));
                let lin = Self::linear(T::one(), -root.clone());
                let mut mult = 0;
                loop {
                    let (qq, rr) = rest.div_rem(&lin);
                    if !rr.is_zero() {
                        break;
                    }
                    rest = qq;
                    mult += 1;
                }
                if mult > 0 {
                    roots.push((root, mult));
                }
            }
        }
        roots.sort_by(|a, b| b.0.cmp(&a.0));
        (roots, rest)
    }
}

/// Primitive integer polynomial proportional to `p`, positive leading term.
fn integer_form<T: ExactScalar>(p: &Polynomial<T>) -> Vec<BigInt> {
    let l = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.denom_big()));
    let mut ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| c.numer_big() * (l.clone() / c.denom_big()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() {
        for c in ints.iter_mut() {
            *c = c.clone() / g.clone();
        }
    }
    if ints.last().is_some_and(|c| c.is_negative()) {
        for c in ints.iter_mut() {
            *c = -c.clone();
        }
    }
    ints
}

impl<'a, T: Scalar> Add<&'a Polynomial<T>> for &'a Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a, T: Scalar> Sub<&'a Polynomial<T>> for &'a Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a, T: Scalar> Mul<&'a Polynomial<T>> for &'a Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut c = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(c)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Polynomial<T>) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

impl<T: Scalar + fmt::Display + Signed> fmt::Display for Polynomial<T> {
    /// Writes the polynomial in the variable `s`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "s")?,
                _ => write!(f, "s^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};
    use num_rational::BigRational;

    type P = Polynomial<BigRational>;

    fn p(c: &[i64]) -> P {
        P::new(c.iter().map(|&x| qi(x)).collect())
    }

    #[test]
    fn division_roundtrip() {
        let a = p(&[1, 0, -3, 2, 5]);
        let b = p(&[2, 1, 1]);
        let (qq, r) = a.div_rem(&b);
        assert_eq!(&(&qq * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn gcd_of_products() {
        let f = p(&[1, 1]);
        let g = p(&[3, 2]);
        let h = p(&[-1, 1]);
        let a = &(&f * &g) * &h;
        let b = &(&f * &f) * &g;
        assert_eq!(a.gcd(&b), (&f * &g).monic());
    }

    #[test]
    fn shift_and_multiplicity() {
        let a = &p(&[1, 1]).pow(3) * &p(&[2, 1]);
        assert_eq!(a.root_multiplicity(&qi(-1)), 3);
        assert_eq!(a.root_multiplicity(&qi(-2)), 1);
        assert_eq!(a.root_multiplicity(&qi(0)), 0);
        assert_eq!(a.taylor_shift(&qi(2)).eval(&qi(-3)), a.eval(&qi(-1)));
    }

    #[test]
    fn calculus() {
        let a = p(&[4, 0, 3]);
        assert_eq!(a.antiderivative().derivative(), a);
        assert_eq!(a.antiderivative().eval(&qi(1)), qi(5));
    }

    #[test]
    fn roots_and_display() {
        let a = &(&p(&[1, 1]) * &p(&[3, 2])) * &p(&[0, 1]);
        let (roots, rest) = a.rational_roots();
        assert!(rest.is_constant());
        assert_eq!(roots, vec![(qi(0), 1), (qi(-1), 1), (q(-3, 2), 1)]);
        assert_eq!(p(&[3, -1, 2]).to_string(), "2s^2-s+3");
        assert_eq!(P::new(vec![q(1, 2)]).to_string(), "1/2");
    }
}
