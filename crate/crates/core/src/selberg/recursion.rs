//! The recursion obtained by splitting the chain at the coordinate of
//! largest absolute value.

use std::collections::HashMap;

use num_traits::Zero;

use super::exponent::ExponentVector;
use super::oracle::quarter_turn;
use crate::scalar::qi;
use crate::{ComplexRational, Rational};

/// `f_n(e)` by
/// `f_n(e) = (sum e)^{-1} sum_j ((-1)^{j+1} + (-1)^{n+j} psi(e_j - 1)) f_{n-1}(e without e_j)`,
/// where `psi(r)` is the value of `(-1)^r` under the branch convention
/// (`(-1)^{(2k+1)/2} = (-1)^k i`), with `f_0 = 1`.
pub fn f_recursive(e: &ExponentVector) -> ComplexRational {
    let d = e.doubled().to_vec();
    let mut memo = HashMap::new();
    rec((1u64 << d.len()) - 1, &d, &mut memo)
}

fn rec(mask: u64, d: &[u32], memo: &mut HashMap<u64, ComplexRational>) -> ComplexRational {
    if mask == 0 {
        return ComplexRational::new(qi(1), qi(0));
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let idx: Vec<usize> = (0..d.len()).filter(|i| mask >> i & 1 == 1).collect();
    let n = idx.len();
    let total: u64 = idx.iter().map(|&i| d[i] as u64).sum();
    let mut acc = ComplexRational::new(Rational::zero(), Rational::zero());
    for (pos, &i) in idx.iter().enumerate() {
        let j = pos + 1;
        let first = if (j + 1) % 2 == 0 { 1 } else { -1 };
        let twist = quarter_turn((d[i] + 2) % 4 + if (n + j).is_multiple_of(2) { 0 } else { 2 });
        let coef = ComplexRational::new(qi(first), qi(0)) + twist;
        if coef.re.is_zero() && coef.im.is_zero() {
            continue;
        }
        acc += coef * rec(mask & !(1 << i), d, memo);
    }
    let inv = Rational::new(2.into(), total.into());
    let v = ComplexRational::new(acc.re * &inv, acc.im * &inv);
    memo.insert(mask, v.clone());
    v
}
