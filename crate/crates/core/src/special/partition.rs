//! Integer partitions indexing irreducible representations.

use serde::Serialize;

use super::SpecialError;

/// Weakly decreasing list of non-negative parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, SpecialError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SpecialError::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn zero(len: usize) -> Self {
        Partition(vec![0; len])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().take_while(|&&p| p > 0).count()
    }

    /// Part `i` (0-based), zero beyond the stored parts.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Partitions with at most `n` parts and second part at most 1, with
    /// first part at most `max_first`.
    pub fn second_part_at_most_one(n: usize, max_first: u32) -> Vec<Partition> {
        let mut out = vec![Partition::zero(n)];
        for k1 in 1..=max_first {
            for ones in 0..n {
                let mut parts = vec![0; n];
                parts[0] = k1;
                for p in parts.iter_mut().skip(1).take(ones) {
                    *p = 1;
                }
                out.push(Partition(parts));
            }
        }
        out
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}
