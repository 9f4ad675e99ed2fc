//! Three rational identities obtained by summing residues.

use num_traits::{One, Zero};

use super::SelbergError;
use crate::Rational;

fn nz(x: Rational) -> Result<Rational, SelbergError> {
    if x.is_zero() {
        Err(SelbergError::DegenerateInput)
    } else {
        Ok(x)
    }
}

/// Both sides of identity `which`:
///
/// 1. `sum_j a_j prod_{i!=j} (a_i+a_j)/(a_i-a_j) = (-1)^{n-1} sum a`;
/// 2. (`n = 2m`) `sum_{j>m} prod_{i<=m}(a_j+a_i) / prod_{k>m,k!=j}(a_j-a_k) = sum a`;
/// 3. (`n = 2m-1`) `sum_{j<=m} a_j prod_{k>m}(a_j+a_k) / prod_{i<=m,i!=j}(a_j-a_i) = sum a`.
pub fn residue_identity_check(a: &[Rational], which: u8) -> Result<(Rational, Rational), SelbergError> {
    let n = a.len();
    let total: Rational = a.iter().fold(Rational::zero(), |s, x| s + x);
    if n == 0 {
        return Err(SelbergError::InvalidLength { which, len: n });
    }
    match which {
        1 => {
            let mut lhs = Rational::zero();
            for j in 0..n {
                let mut t = a[j].clone();
                for i in 0..n {
                    if i != j {
                        t = t * (&a[i] + &a[j]) / nz(&a[i] - &a[j])?;
                    }
                }
                lhs += t;
            }
            let rhs = if n % 2 == 1 { total } else { -total };
            Ok((lhs, rhs))
        }
        2 => {
            if !n.is_multiple_of(2) {
                return Err(SelbergError::InvalidLength { which, len: n });
            }
            let m = n / 2;
            let mut lhs = Rational::zero();
            for j in m..n {
                let mut t = Rational::one();
                for i in 0..m {
                    t *= &a[j] + &a[i];
                }
                for k in m..n {
                    if k != j {
                        t /= nz(&a[j] - &a[k])?;
                    }
                }
                lhs += t;
            }
            Ok((lhs, total))
        }
        3 => {
            if n % 2 != 1 {
                return Err(SelbergError::InvalidLength { which, len: n });
            }
            let m = n.div_ceil(2);
            let mut lhs = Rational::zero();
            for j in 0..m {
                let mut t = a[j].clone();
                for k in m..n {
                    t *= &a[j] + &a[k];
                }
                for i in 0..m {
                    if i != j {
                        t /= nz(&a[j] - &a[i])?;
                    }
                }
                lhs += t;
            }
            Ok((lhs, total))
        }
        _ => Err(SelbergError::InvalidLength { which, len: n }),
    }
}
