//! Truncated Laurent expansions.

use serde::Serialize;

use crate::scalar::Scalar;

/// `sum_k c_k (s - center)^k` for `k` from `order` upward, truncated.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LaurentData<T> {
    pub center: T,
    /// Exponent of the first stored coefficient; negative at a pole.
    pub order: i64,
    pub coefficients: Vec<T>,
}

impl<T: Scalar> LaurentData<T> {
    pub fn new(center: T, order: i64, coefficients: Vec<T>) -> Self {
        LaurentData {
            center,
            order,
            coefficients,
        }
    }

    pub fn pole_order(&self) -> usize {
        if self.order < 0 {
            (-self.order) as usize
        } else {
            0
        }
    }

    /// Coefficient of `(s - center)^k`, `None` past the truncation point.
    pub fn coefficient(&self, k: i64) -> Option<T> {
        if k < self.order {
            return Some(T::zero());
        }
        self.coefficients.get((k - self.order) as usize).cloned()
    }

    pub fn leading(&self) -> T {
        self.coefficients[0].clone()
    }

    /// Coefficient of `(s - center)^{-1}` (zero when the truncation is too short).
    pub fn residue(&self) -> T {
        self.coefficient(-1).unwrap_or_else(T::zero)
    }
}
