//! Reduced rational functions in one variable `s`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentData;
use super::poly::Polynomial;
use super::RatFunError;
use crate::scalar::{ExactScalar, Scalar};

/// `num/den` with `gcd(num, den) = 1` and monic `den`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<T> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<T: Scalar> RationalFunction<T> {
    pub fn new(num: Polynomial<T>, den: Polynomial<T>) -> Result<Self, RatFunError> {
        if den.is_zero() {
            return Err(RatFunError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial<T>, den: Polynomial<T>) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num,
                den: Polynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let (n, _) = num.div_rem(&g);
        let (d, _) = den.div_rem(&g);
        let lc = d.leading();
        RationalFunction {
            num: n.scale(&(T::one() / lc.clone())),
            den: d.monic(),
        }
    }

    pub fn from_poly(p: Polynomial<T>) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// `1/(a*s + b)`.
    pub fn inv_linear(a: T, b: T) -> Self {
        Self::reduce(Polynomial::one(), Polynomial::linear(a, b))
    }

    pub fn numerator(&self) -> &Polynomial<T> {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator_is_constant(&self) -> bool {
        self.num.is_constant()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self, RatFunError> {
        if self.is_zero() {
            return Err(RatFunError::ZeroDenominator);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn powi(&self, k: i32) -> Result<Self, RatFunError> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Value at `s0`; fails at a pole.
    pub fn eval(&self, s0: &T) -> Result<T, RatFunError> {
        let d = self.den.eval(s0);
        if d.is_zero() {
            return Err(RatFunError::PoleAtPoint(format!("{s0:?}")));
        }
        Ok(self.num.eval(s0) / d)
    }

    /// Order of vanishing at `s0`: positive for zeros, negative for poles.
    pub fn valuation(&self, s0: &T) -> i64 {
        if self.is_zero() {
            return i64::MAX;
        }
        self.num.root_multiplicity(s0) as i64 - self.den.root_multiplicity(s0) as i64
    }

    /// Pole order at `s0`, clamped at 0.
    pub fn pole_order(&self, s0: &T) -> usize {
        self.den.root_multiplicity(s0)
    }

    /// Laurent expansion at `s0` with `terms` coefficients from the leading one.
    pub fn laurent(&self, s0: &T, terms: usize) -> Result<LaurentData<T>, RatFunError> {
        if self.is_zero() {
            return Err(RatFunError::ZeroFunction);
        }
        let n = self.num.taylor_shift(s0);
        let d = self.den.taylor_shift(s0);
        let z = n.coeffs().iter().take_while(|c| c.is_zero()).count();
        let p = d.coeffs().iter().take_while(|c| c.is_zero()).count();
        let nc = &n.coeffs()[z..];
        let dc = &d.coeffs()[p..];
        let d0 = dc[0].clone();
        let mut c: Vec<T> = Vec::with_capacity(terms);
        for j in 0..terms {
            let mut acc = nc.get(j).cloned().unwrap_or_else(T::zero);
            for i in 1..=j.min(dc.len() - 1) {
                acc = acc - dc[i].clone() * c[j - i].clone();
            }
            c.push(acc / d0.clone());
        }
        Ok(LaurentData::new(s0.clone(), z as i64 - p as i64, c))
    }
}

impl<T: ExactScalar> RationalFunction<T> {
    /// Floating-point value at `s0` (infinite at a pole).
    pub fn eval_f64(&self, s0: f64) -> f64 {
        let horner = |p: &Polynomial<T>| {
            p.coeffs()
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * s0 + c.to_f64().unwrap())
        };
        horner(&self.num) / horner(&self.den)
    }

    /// Human-readable factored form such as `4/((s+1)(2s+3))`.
    pub fn to_factored_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let (nroots, nrest) = self.num.rational_roots();
        let (droots, drest) = self.den.rational_roots();
        // Constant collected from the leading coefficients and the
        // denominators of each linear factor (s - p/q) = (q s - p)/q.
        let mut k = nrest.leading() / drest.leading();
        let nrest = nrest.monic();
        let drest = drest.monic();
        for (r, m) in &nroots {
            k = k / pow_t(&T::from_big(r.denom_big(), BigInt::one()), *m);
        }
        for (r, m) in &droots {
            k = k * pow_t(&T::from_big(r.denom_big(), BigInt::one()), *m);
        }
        let (nrest_s, nk) = integral_poly_string(&nrest);
        let (drest_s, dk) = integral_poly_string(&drest);
        k = k * nk / dk;
        let neg = k.is_negative();
        let k = k.abs();
        let (kn, kd) = (k.numer_big(), k.denom_big());

        let mut nf: Vec<String> = nroots.iter().map(|(r, m)| factor_string(r, *m)).collect();
        if let Some(s) = nrest_s {
            nf.push(s);
        }
        let mut df: Vec<String> = droots.iter().map(|(r, m)| factor_string(r, *m)).collect();
        if let Some(s) = drest_s {
            df.push(s);
        }
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        if nf.is_empty() {
            out.push_str(&kn.to_string());
        } else {
            if !kn.is_one() {
                out.push_str(&kn.to_string());
            }
            out.push_str(&nf.concat());
        }
        let dcount = df.len() + usize::from(!kd.is_one());
        if dcount > 0 {
            out.push('/');
            let mut body = String::new();
            if !kd.is_one() {
                body.push_str(&kd.to_string());
            }
            body.push_str(&df.concat());
            if dcount > 1 || (df.len() == 1 && df[0].contains('^')) {
                out.push('(');
                out.push_str(&body);
                out.push(')');
            } else {
                out.push_str(&body);
            }
        }
        out
    }
}

fn pow_t<T: Scalar>(x: &T, m: usize) -> T {
    (0..m).fold(T::one(), |acc, _| acc * x.clone())
}

/// `(q s - p)` written with integer coefficients.
fn factor_string<T: ExactScalar>(r: &T, m: usize) -> String {
    let (p, qd) = (r.numer_big(), r.denom_big());
    let body = if p.is_zero() {
        "s".to_string()
    } else {
        let lead = if qd.is_one() { String::new() } else { qd.to_string() };
        let sign = if p.is_negative() { "+" } else { "-" };
        format!("({lead}s{sign}{})", p.abs())
    };
    if m == 1 {
        body
    } else {
        format!("{body}^{m}")
    }
}

/// Integer multiple of a monic polynomial and the scale used.
fn integral_poly_string<T: ExactScalar>(p: &Polynomial<T>) -> (Option<String>, T) {
    if p.is_constant() {
        return (None, T::one());
    }
    let l = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.denom_big()));
    let lt = T::from_big(l, BigInt::one());
    (Some(format!("({})", p.scale(&lt))), lt)
}

impl<'a, T: Scalar> Add<&'a RationalFunction<T>> for &'a RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn add(self, rhs: &RationalFunction<T>) -> RationalFunction<T> {
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a, T: Scalar> Sub<&'a RationalFunction<T>> for &'a RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn sub(self, rhs: &RationalFunction<T>) -> RationalFunction<T> {
        self + &(-rhs)
    }
}

impl<'a, T: Scalar> Mul<&'a RationalFunction<T>> for &'a RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn mul(self, rhs: &RationalFunction<T>) -> RationalFunction<T> {
        RationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a, T: Scalar> Div<&'a RationalFunction<T>> for &'a RationalFunction<T> {
    type Output = RationalFunction<T>;
    /// Panics on division by the zero function.
    fn div(self, rhs: &RationalFunction<T>) -> RationalFunction<T> {
        self * &rhs.recip().expect("division by zero rational function")
    }
}

impl<T: Scalar> Neg for &RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn neg(self) -> RationalFunction<T> {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for RationalFunction<T> {
            type Output = RationalFunction<T>;
            fn $m(self, rhs: RationalFunction<T>) -> RationalFunction<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl<T: Scalar> Neg for RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn neg(self) -> RationalFunction<T> {
        -&self
    }
}

impl<T: ExactScalar> fmt::Display for RationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_factored_string())
    }
}

#[cfg(test)]
mod tests {
    use crate::scalar::{q, qi};
    use crate::{Poly, RatFun};

    fn lin(a: i64, b: i64) -> RatFun {
        RatFun::from_poly(Poly::linear(qi(a), qi(b)))
    }

    #[test]
    fn reduction_is_canonical() {
        let a = &lin(1, 1) * &lin(2, 3);
        let b = &a / &lin(1, 1);
        assert_eq!(b, lin(2, 3));
        assert!(b.denominator().is_constant());
        let c = &lin(1, 0) - &lin(1, 0);
        assert!(c.is_zero());
    }

    #[test]
    fn factored_display() {
        let f = &RatFun::constant(qi(4)) / &(&lin(1, 1) * &lin(2, 3));
        assert_eq!(f.to_string(), "4/((s+1)(2s+3))");
        let g = &RatFun::constant(qi(-4)) / &(&lin(1, 2) * &lin(2, 3));
        assert_eq!(g.to_string(), "-4/((2s+3)(s+2))");
        let h = &RatFun::constant(q(1, 3)) / &lin(1, 1).powi(2).unwrap();
        assert_eq!(h.to_string(), "1/(3(s+1)^2)");
        let z = &lin(1, 0) / &lin(1, -1);
        assert_eq!(z.to_string(), "s/(s-1)");
        let irreducible = RatFun::from_poly(Poly::new(vec![qi(1), qi(0), qi(1)]));
        assert_eq!(irreducible.to_string(), "(s^2+1)");
    }

    #[test]
    fn eval_and_poles() {
        let f = &RatFun::one() / &(&lin(1, 1).powi(2).unwrap() * &lin(1, 2));
        assert_eq!(f.pole_order(&qi(-1)), 2);
        assert_eq!(f.valuation(&qi(-1)), -2);
        assert!(f.eval(&qi(-2)).is_err());
        assert_eq!(f.eval(&qi(0)).unwrap(), q(1, 2));
    }

    #[test]
    fn laurent_of_simple_pole() {
        // 1/(s(s+1)) at 0: 1/s - 1 + s - ...
        let f = &RatFun::one() / &(&lin(1, 0) * &lin(1, 1));
        let l = f.laurent(&qi(0), 3).unwrap();
        assert_eq!(l.pole_order(), 1);
        assert_eq!(l.residue(), qi(1));
        assert_eq!(l.coefficient(0), Some(qi(-1)));
        assert_eq!(l.coefficient(1), Some(qi(1)));
        assert_eq!(l.coefficient(2), None);
    }
}
