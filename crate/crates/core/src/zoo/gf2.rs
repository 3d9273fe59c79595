//! Linear matroid over GF(2), columns stored as machine-word bitsets.

use crate::element::ElementSet;
use crate::error::{Error, Result};
use crate::oracle::{Matroid, QueryCounter};

/// Column vector over GF(2), little-endian words over the dimension.
type BitColumn = Vec<u64>;

fn words_for(dim: usize) -> usize {
    dim.div_ceil(64)
}

/// Linear matroid represented by GF(2) column vectors.
#[derive(Debug, Clone)]
pub struct LinearGf2Matroid {
    dim: usize,
    columns: Vec<BitColumn>,
    calls: QueryCounter,
}

impl LinearGf2Matroid {
    /// Builds from bit rows: `columns[j][i]` is the entry of column `j` in
    /// dimension `i` (`true` = 1).
    pub fn new(dim: usize, columns: Vec<Vec<bool>>) -> Result<Self> {
        let mut packed = Vec::with_capacity(columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != dim {
                return Err(Error::Input(format!(
                    "column {} has dimension {}, expected {}",
                    j,
                    col.len(),
                    dim
                )));
            }
            let mut words = vec![0u64; words_for(dim)];
            for (i, &bit) in col.iter().enumerate() {
                if bit {
                    words[i / 64] |= 1 << (i % 64);
                }
            }
            packed.push(words);
        }
        Ok(LinearGf2Matroid {
            dim,
            columns: packed,
            calls: QueryCounter::new(),
        })
    }

    /// Builds from strings like `"101"`: character `i` is the entry in
    /// dimension `i`.
    pub fn from_bit_strings<S: AsRef<str>>(dim: usize, columns: &[S]) -> Result<Self> {
        let mut rows = Vec::with_capacity(columns.len());
        for (j, s) in columns.iter().enumerate() {
            let s = s.as_ref();
            let mut col = Vec::with_capacity(s.len());
            for (i, c) in s.chars().enumerate() {
                match c {
                    '0' => col.push(false),
                    '1' => col.push(true),
                    other => {
                        return Err(Error::Input(format!(
                            "column {}: invalid bit character {:?} at position {}",
                            j, other, i
                        )))
                    }
                }
            }
            rows.push(col);
        }
        LinearGf2Matroid::new(dim, rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Column `j` rendered back to a bit string.
    pub fn column_bits(&self, j: usize) -> String {
        (0..self.dim)
            .map(|i| {
                if self.columns[j][i / 64] >> (i % 64) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    fn rank_of(&self, set: &ElementSet) -> usize {
        gf2_rank_packed(&self.columns, set)
    }
}

impl Matroid for LinearGf2Matroid {
    fn ground_size(&self) -> usize {
        self.columns.len()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        self.calls.bump();
        self.rank_of(set) == set.len()
    }

    fn oracle_calls(&self) -> u64 {
        self.calls.get()
    }
}

fn gf2_rank_packed(columns: &[BitColumn], set: &ElementSet) -> usize {
    // Incremental elimination: keep reduced pivots, one per leading bit.
    let mut pivots: Vec<BitColumn> = Vec::new();
    let mut rank = 0;
    for id in set.iter() {
        let mut v = columns[id.index()].clone();
        for p in &pivots {
            let lead = leading_bit(p).expect("pivots are nonzero");
            if v[lead / 64] >> (lead % 64) & 1 == 1 {
                xor_into(&mut v, p);
            }
        }
        if leading_bit(&v).is_some() {
            pivots.push(v);
            rank += 1;
        }
    }
    rank
}

fn leading_bit(v: &[u64]) -> Option<usize> {
    for (w, &word) in v.iter().enumerate() {
        if word != 0 {
            return Some(w * 64 + word.trailing_zeros() as usize);
        }
    }
    None
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Rank of the selected GF(2) columns; the fast path behind the oracle.
pub fn gf2_rank(columns: &[Vec<bool>], set: &ElementSet) -> usize {
    let dim = columns.first().map_or(0, Vec::len);
    let packed: Vec<BitColumn> = columns
        .iter()
        .map(|col| {
            let mut words = vec![0u64; words_for(dim)];
            for (i, &bit) in col.iter().enumerate() {
                if bit {
                    words[i / 64] |= 1 << (i % 64);
                }
            }
            words
        })
        .collect();
    gf2_rank_packed(&packed, set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        let cols = vec![vec![true, false], vec![false, true], vec![true, true]];
        assert_eq!(gf2_rank(&cols, &ElementSet::full(3)), 2);
        assert_eq!(gf2_rank(&cols, &ElementSet::new()), 0);
    }

    #[test]
    fn independence_via_oracle() {
        let m = LinearGf2Matroid::from_bit_strings(2, &["10", "01", "11"]).unwrap();
        assert!(m.is_independent(&ElementSet::from_ids([0u32, 1])));
        assert!(!m.is_independent(&ElementSet::full(3)));
        assert_eq!(m.oracle_calls(), 2);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        assert!(LinearGf2Matroid::from_bit_strings(3, &["101", "11"]).is_err());
        assert!(LinearGf2Matroid::from_bit_strings(2, &["1x"]).is_err());
    }

    #[test]
    fn wide_dimension() {
        // One-hot columns across the 64-bit word boundary.
        let cols: Vec<Vec<bool>> = (0..4)
            .map(|j| (0..130).map(|i| i == 60 + j * 4).collect())
            .collect();
        assert_eq!(gf2_rank(&cols, &ElementSet::full(4)), 4);
    }
}
