//! Closed forms of `f_n(e)` for integer and strict half-integer exponents.

use num_traits::{One, Zero};

use super::exponent::{ExponentVector, Regime};
use super::perm::sign_of;
use crate::scalar::qi;
use crate::{ComplexRational, Rational};

/// `eps_1 = 1`, `eps_{2m} = (-1)^m eps_{2m-1}`, `eps_{2m+1} = eps_{2m}`.
pub fn epsilon_n(n: usize) -> i64 {
    assert!(n >= 1);
    let mut eps = 1;
    for k in 2..=n {
        if k % 2 == 0 && (k / 2) % 2 == 1 {
            eps = -eps;
        }
    }
    eps
}

/// `delta_n(m)` generated from `delta_0(0) = 1` by
/// `delta_n(m) = delta_{n-1}(m-1) (1 + (-1)^n i)` for `m >= 1` and
/// `delta_n(0) = delta_{n-1}(0) (1 - (-1)^n i)`.
pub fn delta_n(n: usize, m: usize) -> ComplexRational {
    assert!(m <= n);
    let sgn = |k: usize| if k.is_multiple_of(2) { qi(1) } else { qi(-1) };
    let mut v = ComplexRational::new(qi(1), qi(0));
    let zeros = n - m;
    // Apply the m-lowering steps at the top levels and the m = 0 steps below.
    for k in 1..=zeros {
        v *= ComplexRational::new(qi(1), -sgn(k));
    }
    for k in zeros + 1..=n {
        v *= ComplexRational::new(qi(1), sgn(k));
    }
    v
}

/// `delta_n(m)` from the three-case table: `2^{n/2}` times `1`, `i` or
/// `e^{(-1)^m i pi/4}` (n odd).
pub fn delta_table(n: usize, m: usize) -> ComplexRational {
    let pow2 = |k: usize| (0..k).fold(Rational::one(), |acc, _| acc * qi(2));
    if n.is_multiple_of(2) {
        let r = pow2(n / 2);
        if m.is_multiple_of(2) {
            ComplexRational::new(r, Rational::zero())
        } else {
            ComplexRational::new(Rational::zero(), r)
        }
    } else {
        let r = pow2((n - 1) / 2);
        let im = if m.is_multiple_of(2) { r.clone() } else { -r.clone() };
        ComplexRational::new(r, im)
    }
}

/// Stable reordering putting the indices satisfying `first` in front.
fn split_order(d: &[u32], first: impl Fn(u32) -> bool) -> (Vec<usize>, usize) {
    let mut order: Vec<usize> = (0..d.len()).filter(|&i| first(d[i])).collect();
    let m = order.len();
    order.extend((0..d.len()).filter(|&i| !first(d[i])));
    (order, m)
}

/// Closed-form `f_n(e)`.
pub fn f_closed(e: &ExponentVector) -> ComplexRational {
    let n = e.len();
    let zero = ComplexRational::new(Rational::zero(), Rational::zero());
    match e.regime() {
        Regime::Integer => {
            let nm = e.n_minus() as i64;
            let np = e.n_plus() as i64;
            if !(nm - np == 0 || nm - np == 1) {
                return zero;
            }
            let d = e.doubled();
            let (order, m) = split_order(d, |x| x % 4 == 2);
            let v: Vec<Rational> = order.iter().map(|&i| e.value(i)).collect();
            let mut num = qi(sign_of(&order) * epsilon_n(n));
            for _ in 0..n {
                num *= qi(2);
            }
            let mut den = Rational::one();
            for i in 0..m {
                den *= &v[i];
                for j in i + 1..m {
                    num *= &v[i] - &v[j];
                }
                for k in m..n {
                    den *= &v[i] + &v[k];
                }
            }
            for k in m..n {
                for l in k + 1..n {
                    num *= &v[k] - &v[l];
                }
            }
            ComplexRational::new(num / den, Rational::zero())
        }
        Regime::HalfInteger => {
            let d = e.doubled();
            let (order, m) = split_order(d, |x| x % 4 == 1);
            let v: Vec<Rational> = order.iter().map(|&i| e.value(i)).collect();
            let mut r = qi(sign_of(&order));
            for i in 0..n {
                r /= &v[i];
                for j in i + 1..n {
                    if (i < m) == (j < m) {
                        r *= (&v[i] - &v[j]) / (&v[i] + &v[j]);
                    }
                }
            }
            let dl = delta_n(n, m);
            ComplexRational::new(dl.re * &r, dl.im * r)
        }
    }
}
