//! Per-element nonnegative integer weights.

use crate::element::{ElementId, ElementSet};
use crate::error::{Error, Result};

/// Weight function on the ground set. Totals are accumulated in `u128`, wide
/// enough for any `u64` weights over a `u32`-indexed ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMap {
    weights: Vec<u64>,
}

impl WeightMap {
    pub fn new(weights: Vec<u64>) -> Self {
        WeightMap { weights }
    }

    /// Unit weights: minimum weight coincides with minimum size.
    pub fn unit(n: usize) -> Self {
        WeightMap {
            weights: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, id: ElementId) -> u64 {
        self.weights[id.index()]
    }

    pub fn total(&self, set: &ElementSet) -> u128 {
        set.iter().map(|id| self.get(id) as u128).sum()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.weights
    }

    /// Checks the map covers a ground set of size `n`.
    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.weights.len() != n {
            return Err(Error::Input(format!(
                "weight map has {} entries for a ground set of {}",
                self.weights.len(),
                n
            )));
        }
        Ok(())
    }

    /// Restricts the map to the ids kept by a deletion view, in view order.
    pub fn restrict_to(&self, kept: &ElementSet) -> WeightMap {
        WeightMap {
            weights: kept.iter().map(|id| self.get(id)).collect(),
        }
    }
}

impl From<Vec<u64>> for WeightMap {
    fn from(weights: Vec<u64>) -> Self {
        WeightMap::new(weights)
    }
}
