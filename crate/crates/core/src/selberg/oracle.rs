//! Brute-force evaluation of the `f_n` integrals and of the signed
//! Vandermonde integrals, by expanding determinants into monomials.
//!
//! Two independent routes are provided. The polynomial route integrates
//! each monomial one variable at a time (antiderivative, then substitute the
//! limits), innermost variable first. The product route uses the closed
//! form of a monomial over an ordered chain,
//! `int_{1 >= x_1 >= ... >= x_a >= 0} prod x_i^{r_i} = prod_j 1/sum_{i>=j}(r_i+1)`,
//! which also works for half-integer and symbolic exponents.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use super::exponent::{ExponentVector, Regime};
use super::perm::permutations_with_sign;
use super::SelbergError;
use crate::ratfun::Polynomial;
use crate::scalar::qi;
use crate::{ComplexRational, RatFun, Rational};

/// Largest `n` accepted by the brute-force oracles.
pub const ORACLE_MAX_N: usize = 6;

/// Integration domain: the whole chain `1 >= x_1 >= ... >= x_n >= -1`, or the
/// part with `positive` nonnegative and `negative` nonpositive coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Domain {
    Full,
    Chamber { positive: usize, negative: usize },
}

/// `i^q`.
pub(crate) fn quarter_turn(q: u32) -> ComplexRational {
    match q % 4 {
        0 => ComplexRational::new(qi(1), qi(0)),
        1 => ComplexRational::new(qi(0), qi(1)),
        2 => ComplexRational::new(qi(-1), qi(0)),
        _ => ComplexRational::new(qi(0), qi(-1)),
    }
}

#[derive(Clone, Copy)]
enum Upper {
    Var,
    Const(i64),
}

/// Limits of variable `i` (1-based) for a chain of length `n`.
fn limits(i: usize, domain: Domain) -> (i64, Upper) {
    match domain {
        Domain::Full => (-1, if i >= 2 { Upper::Var } else { Upper::Const(1) }),
        Domain::Chamber { positive: a, .. } => {
            if i > a {
                (-1, if i > a + 1 { Upper::Var } else { Upper::Const(0) })
            } else {
                (0, if i >= 2 { Upper::Var } else { Upper::Const(1) })
            }
        }
    }
}

fn ipow(x: i64, k: u32) -> i64 {
    if x == 0 {
        return if k == 0 { 1 } else { 0 };
    }
    if x == 1 || k.is_multiple_of(2) {
        x.abs()
    } else {
        -1
    }
}

/// Integral of `prod x_i^{r_i}` (non-negative integer exponents) over the
/// domain, one antiderivative at a time.
pub fn monomial_integral_poly(r: &[u32], domain: Domain) -> Rational {
    let n = r.len();
    // Sparse polynomial in the current variable.
    let mut state: BTreeMap<u32, Rational> = BTreeMap::new();
    state.insert(0, Rational::one());
    for i in (1..=n).rev() {
        let (lo, hi) = limits(i, domain);
        let mut next: BTreeMap<u32, Rational> = BTreeMap::new();
        for (p, c) in state {
            let p1 = p + r[i - 1] + 1;
            let c = c / qi(p1 as i64);
            let lo_val = ipow(lo, p1);
            match hi {
                Upper::Var => {
                    *next.entry(p1).or_insert_with(Rational::zero) += &c;
                    if lo_val != 0 {
                        *next.entry(0).or_insert_with(Rational::zero) -= c * qi(lo_val);
                    }
                }
                Upper::Const(h) => {
                    let v = ipow(h, p1) - lo_val;
                    *next.entry(0).or_insert_with(Rational::zero) += c * qi(v);
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        state = next;
    }
    state.get(&0).cloned().unwrap_or_else(Rational::zero)
}

/// Integral of `prod x_i^{r_i}` over the chamber with `a` positive
/// coordinates, `r_i = doubled[i]/2 - 1`, branch convention on negatives.
pub fn monomial_integral_product(doubled: &[u32], a: usize) -> ComplexRational {
    let n = doubled.len();
    let mut den = Rational::one();
    let mut sum: u64 = 0;
    for j in (0..a).rev() {
        sum += doubled[j] as u64;
        den *= Rational::new(sum.into(), 2.into());
    }
    sum = 0;
    let mut q = 0u32;
    for d in doubled.iter().take(n).skip(a) {
        sum += *d as u64;
        den *= Rational::new(sum.into(), 2.into());
        q += (d + 2) % 4;
    }
    let z = quarter_turn(q);
    ComplexRational::new(z.re / &den, z.im / &den)
}

fn check_dim(n: usize) -> Result<(), SelbergError> {
    if n > ORACLE_MAX_N {
        return Err(SelbergError::DimensionTooLarge(n));
    }
    Ok(())
}

fn chambers(n: usize, domain: Domain) -> Result<Vec<usize>, SelbergError> {
    match domain {
        Domain::Full => Ok((0..=n).collect()),
        Domain::Chamber { positive, negative } => {
            if positive + negative != n {
                return Err(SelbergError::InvalidDomain { n, positive, negative });
            }
            Ok(vec![positive])
        }
    }
}

/// `f(e)` over the domain by brute force: the polynomial route for integer
/// exponents, the product route otherwise.
pub fn f_oracle(e: &ExponentVector, domain: Domain) -> Result<ComplexRational, SelbergError> {
    let n = e.len();
    check_dim(n)?;
    match e.regime() {
        Regime::Integer => {
            chambers(n, domain)?;
            let ints = e.integers().unwrap();
            let mut acc = Rational::zero();
            for (perm, sign) in permutations_with_sign(n) {
                let r: Vec<u32> = perm.iter().map(|&j| ints[j] - 1).collect();
                let v = monomial_integral_poly(&r, domain);
                if sign > 0 {
                    acc += v;
                } else {
                    acc -= v;
                }
            }
            Ok(ComplexRational::new(acc, Rational::zero()))
        }
        Regime::HalfInteger => f_oracle_product(e, domain),
    }
}

/// `f(e)` over the domain by the product route (any regime).
pub fn f_oracle_product(e: &ExponentVector, domain: Domain) -> Result<ComplexRational, SelbergError> {
    let n = e.len();
    check_dim(n)?;
    let mut acc = ComplexRational::new(Rational::zero(), Rational::zero());
    let d = e.doubled();
    for a in chambers(n, domain)? {
        for (perm, sign) in permutations_with_sign(n) {
            let dp: Vec<u32> = perm.iter().map(|&j| d[j]).collect();
            let v = monomial_integral_product(&dp, a);
            if sign > 0 {
                acc += v;
            } else {
                acc -= v;
            }
        }
    }
    Ok(acc)
}

/// `sum_b w(b) int_{Delta_{n-b,b}} prod_{i<j}(x_i - x_j) prod |x_i|^s` at a
/// non-negative integer `s`, by the polynomial route.
pub fn vandermonde_power_oracle(
    n: usize,
    s: u32,
    weight: &dyn Fn(usize) -> i64,
) -> Result<Rational, SelbergError> {
    check_dim(n)?;
    let mut acc = Rational::zero();
    for b in 0..=n {
        let w = weight(b) * if (s as usize * b).is_multiple_of(2) { 1 } else { -1 };
        if w == 0 {
            continue;
        }
        let dom = Domain::Chamber { positive: n - b, negative: b };
        let mut part = Rational::zero();
        for (perm, sign) in permutations_with_sign(n) {
            let r: Vec<u32> = perm.iter().map(|&j| (n - 1 - j) as u32 + s).collect();
            let v = monomial_integral_poly(&r, dom);
            if sign > 0 {
                part += v;
            } else {
                part -= v;
            }
        }
        acc += part * qi(w);
    }
    Ok(acc)
}

/// The same signed sum as a rational function of `s`, by the product route
/// with exponents `s + k`.
pub fn vandermonde_chamber_ratfun(
    n: usize,
    weight: &dyn Fn(usize) -> i64,
) -> Result<RatFun, SelbergError> {
    check_dim(n)?;
    // Each term is +-1 / prod (c s + K); group by the multiset of factors.
    let mut groups: HashMap<Vec<(u32, u32)>, i64> = HashMap::new();
    let perms = permutations_with_sign(n);
    for b in 0..=n {
        let w = weight(b);
        if w == 0 {
            continue;
        }
        let a = n - b;
        for (perm, sign) in &perms {
            let k: Vec<u32> = perm.iter().map(|&j| (n - 1 - j) as u32).collect();
            let mut key = Vec::with_capacity(n);
            let mut sgn = *sign * w;
            let mut kk = 0;
            for j in (0..a).rev() {
                kk += k[j] + 1;
                key.push(((a - j) as u32, kk));
            }
            kk = 0;
            for (t, &ki) in k.iter().enumerate().skip(a) {
                kk += ki + 1;
                key.push(((t + 1 - a) as u32, kk));
                if ki % 2 == 1 {
                    sgn = -sgn;
                }
            }
            key.sort_unstable();
            *groups.entry(key).or_insert(0) += sgn;
        }
    }
    groups.retain(|_, c| *c != 0);
    // Common denominator from the largest multiplicity of each factor.
    let mut maxmult: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for key in groups.keys() {
        let mut local: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        for f in key {
            *local.entry(*f).or_insert(0) += 1;
        }
        for (f, m) in local {
            let e = maxmult.entry(f).or_insert(0);
            *e = (*e).max(m);
        }
    }
    let lin = |f: &(u32, u32)| Polynomial::linear(qi(f.0 as i64), qi(f.1 as i64));
    let mut den = Polynomial::one();
    for (f, m) in &maxmult {
        den = &den * &lin(f).pow(*m as u32);
    }
    let mut num = Polynomial::zero();
    for (key, c) in &groups {
        let mut local: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        for f in key {
            *local.entry(*f).or_insert(0) += 1;
        }
        let mut t = Polynomial::constant(qi(*c));
        for (f, m) in &maxmult {
            let used = local.get(f).copied().unwrap_or(0);
            t = &t * &lin(f).pow((m - used) as u32);
        }
        num = &num + &t;
    }
    Ok(RatFun::new(num, den).expect("nonzero denominator"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn small_values() {
        let f = |e: &[u32]| f_oracle(&ExponentVector::from_integers(e).unwrap(), Domain::Full).unwrap();
        assert_eq!(f(&[1]).re, qi(2));
        assert_eq!(f(&[2]).re, qi(0));
        assert_eq!(f(&[1, 2]).re, q(-4, 3));
        assert_eq!(f(&[3, 4]).re, q(-4, 21));
    }

    #[test]
    fn routes_agree_on_integer_exponents() {
        for e in [[1u32, 2, 3], [2, 5, 1], [1, 4, 6], [3, 3, 2]] {
            let v = ExponentVector::from_integers(&e).unwrap();
            for a in 0..=3 {
                let d = Domain::Chamber { positive: a, negative: 3 - a };
                assert_eq!(f_oracle(&v, d).unwrap(), f_oracle_product(&v, d).unwrap());
            }
            assert_eq!(f_oracle(&v, Domain::Full).unwrap(), f_oracle_product(&v, Domain::Full).unwrap());
        }
    }

    #[test]
    fn half_integer_one_dimensional() {
        // int_{-1}^{1} x^{-1/2} = 2 - 2i with x^{-1/2} = -i |x|^{-1/2} on x < 0.
        let v = ExponentVector::from_doubled(vec![1]).unwrap();
        assert_eq!(f_oracle(&v, Domain::Full).unwrap(), ComplexRational::new(qi(2), qi(-2)));
    }

    #[test]
    fn vandermonde_routes_agree() {
        let abs = |_: usize| 1;
        let sgn = |b: usize| if b.is_multiple_of(2) { 1 } else { -1 };
        for n in 1..=4 {
            for w in [&abs as &dyn Fn(usize) -> i64, &sgn] {
                let r = vandermonde_chamber_ratfun(n, w).unwrap();
                for s in 0..4 {
                    assert_eq!(r.eval(&qi(s as i64)).unwrap(), vandermonde_power_oracle(n, s, w).unwrap());
                }
            }
        }
        assert_eq!(vandermonde_chamber_ratfun(2, &abs).unwrap().to_string(), "4/((s+1)(2s+3))");
    }

    #[test]
    fn too_large() {
        let v = ExponentVector::from_integers(&[1, 2, 3, 4, 5, 6, 7]).unwrap();
        assert!(matches!(f_oracle(&v, Domain::Full), Err(SelbergError::DimensionTooLarge(7))));
    }
}
