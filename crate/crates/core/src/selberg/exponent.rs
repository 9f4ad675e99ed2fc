//! Exponent vectors stored as doubled integers.

use num_bigint::BigInt;
use serde::Serialize;

use super::SelbergError;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    Integer,
    HalfInteger,
}

/// `e = (e_1, ..., e_n)` with every `2 e_j` a positive integer of one parity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentVector {
    doubled: Vec<u32>,
}

impl ExponentVector {
    pub fn from_doubled(doubled: Vec<u32>) -> Result<Self, SelbergError> {
        if doubled.is_empty() {
            return Err(SelbergError::InvalidExponents("empty exponent vector".into()));
        }
        if doubled.contains(&0) {
            return Err(SelbergError::InvalidExponents("exponents must be positive".into()));
        }
        let p = doubled[0] % 2;
        if doubled.iter().any(|d| d % 2 != p) {
            return Err(SelbergError::InvalidExponents(
                "mixed integer and half-integer exponents".into(),
            ));
        }
        Ok(ExponentVector { doubled })
    }

    pub fn from_integers(e: &[u32]) -> Result<Self, SelbergError> {
        Self::from_doubled(e.iter().map(|x| 2 * x).collect())
    }

    pub fn doubled(&self) -> &[u32] {
        &self.doubled
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    pub fn regime(&self) -> Regime {
        if self.doubled[0].is_multiple_of(2) {
            Regime::Integer
        } else {
            Regime::HalfInteger
        }
    }

    pub fn value(&self, i: usize) -> Rational {
        Rational::new(BigInt::from(self.doubled[i]), BigInt::from(2))
    }

    /// Integer entries (integer regime only).
    pub fn integers(&self) -> Option<Vec<u32>> {
        (self.regime() == Regime::Integer).then(|| self.doubled.iter().map(|d| d / 2).collect())
    }

    /// Number of even entries (integer regime).
    pub fn n_plus(&self) -> usize {
        self.doubled.iter().filter(|&&d| d % 4 == 0).count()
    }

    /// Number of odd entries (integer regime).
    pub fn n_minus(&self) -> usize {
        self.doubled.iter().filter(|&&d| d % 4 == 2).count()
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        ExponentVector {
            doubled: perm.iter().map(|&i| self.doubled[i]).collect(),
        }
    }
}

impl std::fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = (0..self.len()).map(|i| self.value(i).to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
