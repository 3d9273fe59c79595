//! Partition matroid: blocks with per-block capacities.

use crate::element::ElementSet;
use crate::error::{Error, Result};
use crate::oracle::{Matroid, QueryCounter};

/// Partition matroid over blocks `P_1, ..., P_d` with positive capacities:
/// a set is independent iff it takes at most `c_i` elements from each `P_i`.
#[derive(Debug, Clone)]
pub struct PartitionMatroid {
    blocks: Vec<Vec<u32>>,
    capacities: Vec<usize>,
    /// Element id -> block index.
    block_of: Vec<u32>,
    calls: QueryCounter,
}

impl PartitionMatroid {
    pub fn new(blocks: Vec<Vec<u32>>, capacities: Vec<usize>) -> Result<Self> {
        if blocks.len() != capacities.len() {
            return Err(Error::Input(format!(
                "{} blocks but {} capacities",
                blocks.len(),
                capacities.len()
            )));
        }
        if let Some(i) = capacities.iter().position(|&c| c == 0) {
            return Err(Error::Input(format!("capacity {} is zero; capacities must be positive", i)));
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut block_of = vec![u32::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &e in block {
                let idx = e as usize;
                if idx >= n {
                    return Err(Error::Input(format!(
                        "block {} contains element {} but the ground set has {} elements",
                        b, e, n
                    )));
                }
                if block_of[idx] != u32::MAX {
                    return Err(Error::Input(format!(
                        "element {} appears in blocks {} and {}",
                        e, block_of[idx], b
                    )));
                }
                block_of[idx] = b as u32;
            }
        }
        // Disjointness plus total size n forces full coverage, but report the
        // first gap precisely if the input is inconsistent.
        if let Some(e) = block_of.iter().position(|&b| b == u32::MAX) {
            return Err(Error::Input(format!("element {} is not covered by any block", e)));
        }
        Ok(PartitionMatroid {
            blocks,
            capacities,
            block_of,
            calls: QueryCounter::new(),
        })
    }

    /// Unit-capacity partition matroid.
    pub fn with_unit_capacities(blocks: Vec<Vec<u32>>) -> Result<Self> {
        let caps = vec![1; blocks.len()];
        PartitionMatroid::new(blocks, caps)
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn capacities(&self) -> &[usize] {
        &self.capacities
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn has_unit_capacities(&self) -> bool {
        self.capacities.iter().all(|&c| c == 1)
    }

    /// Block index of an element.
    pub fn block_of(&self, element: u32) -> usize {
        self.block_of[element as usize] as usize
    }
}

impl Matroid for PartitionMatroid {
    fn ground_size(&self) -> usize {
        self.block_of.len()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        self.calls.bump();
        let mut counts = vec![0usize; self.blocks.len()];
        for id in set.iter() {
            let b = self.block_of[id.index()] as usize;
            counts[b] += 1;
            if counts[b] > self.capacities[b] {
                return false;
            }
        }
        true
    }

    fn oracle_calls(&self) -> u64 {
        self.calls.get()
    }
}
