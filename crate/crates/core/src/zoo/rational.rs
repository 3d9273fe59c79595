//! Linear matroid over the exact rationals.
//!
//! Columns are normalized to primitive integer vectors (scaling a column
//! never changes which subsets are independent), and rank is computed by
//! integer row reduction with content normalization. No floating point
//! touches any independence decision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::element::ElementSet;
use crate::error::{Error, Result};
use crate::oracle::{Matroid, QueryCounter};

/// Linear matroid represented by exact rational column vectors.
#[derive(Debug, Clone)]
pub struct LinearRationalMatroid {
    dim: usize,
    /// Primitive integer representatives of the columns; zero columns are
    /// loops.
    columns: Vec<Vec<BigInt>>,
    calls: QueryCounter,
}

impl LinearRationalMatroid {
    /// Builds from integer columns given as rows of the representation
    /// matrix: `rows[j]` is column `j`.
    pub fn from_integer_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = rows.first().map_or(0, Vec::len);
        for (j, col) in rows.iter().enumerate() {
            if col.len() != dim {
                return Err(Error::Input(format!(
                    "column {} has dimension {}, expected {}",
                    j,
                    col.len(),
                    dim
                )));
            }
        }
        let columns = rows.into_iter().map(make_primitive).collect();
        Ok(LinearRationalMatroid {
            dim,
            columns,
            calls: QueryCounter::new(),
        })
    }

    /// Builds from rational strings: each entry is `"n"` or `"n/d"` with
    /// arbitrary-precision integers.
    pub fn from_rational_strings<S: AsRef<str>>(columns: &[Vec<S>]) -> Result<Self> {
        let dim = columns.first().map_or(0, Vec::len);
        let mut rows = Vec::with_capacity(columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != dim {
                return Err(Error::Input(format!(
                    "column {} has dimension {}, expected {}",
                    j,
                    col.len(),
                    dim
                )));
            }
            let mut numerators = Vec::with_capacity(dim);
            let mut denominators = Vec::with_capacity(dim);
            for (i, entry) in col.iter().enumerate() {
                let (n, d) = parse_rational(entry.as_ref()).map_err(|msg| {
                    Error::Input(format!("column {} entry {}: {}", j, i, msg))
                })?;
                numerators.push(n);
                denominators.push(d);
            }
            // Clear denominators: multiply the column by their lcm.
            let lcm = denominators
                .iter()
                .fold(BigInt::from(1), |acc, d| acc.lcm(d));
            let ints: Vec<BigInt> = numerators
                .into_iter()
                .zip(&denominators)
                .map(|(n, d)| n * (&lcm / d))
                .collect();
            rows.push(ints);
        }
        LinearRationalMatroid::from_integer_rows(rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Column `j` as decimal strings of its primitive integer representative.
    pub fn column_strings(&self, j: usize) -> Vec<String> {
        self.columns[j].iter().map(BigInt::to_string).collect()
    }
}

fn parse_rational(s: &str) -> std::result::Result<(BigInt, BigInt), String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("invalid integer {:?}", num))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("invalid integer {:?}", den))?;
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok((n, d))
}

/// Divides a vector by the gcd of its entries (zero vectors stay zero).
fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in &v {
        g = g.gcd(x);
    }
    if !g.is_zero() && g.abs() != BigInt::from(1) {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

impl Matroid for LinearRationalMatroid {
    fn ground_size(&self) -> usize {
        self.columns.len()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        self.calls.bump();
        rank_of_columns(&self.columns, set) == set.len()
    }

    fn oracle_calls(&self) -> u64 {
        self.calls.get()
    }
}

fn rank_of_columns(columns: &[Vec<BigInt>], set: &ElementSet) -> usize {
    // Row-echelon over the integers. Each selected column becomes a row;
    // rows are reduced against existing pivots by cross-multiplication and
    // re-normalized to primitive form to keep entries small.
    let mut pivots: Vec<(usize, Vec<BigInt>)> = Vec::new(); // (pivot position, row)
    let mut rank = 0;
    for id in set.iter() {
        let mut row = columns[id.index()].clone();
        for (pos, pivot) in &pivots {
            if row[*pos].is_zero() {
                continue;
            }
            let factor_row = pivot[*pos].clone();
            let factor_pivot = row[*pos].clone();
            for (r, p) in row.iter_mut().zip(pivot) {
                *r = &*r * &factor_row - p * &factor_pivot;
            }
        }
        if let Some(pos) = row.iter().position(|x| !x.is_zero()) {
            let row = make_primitive(row);
            pivots.push((pos, row));
            pivots.sort_by_key(|(p, _)| *p);
            rank += 1;
        }
    }
    rank
}

/// Rank of the selected rational columns (given as integer representatives);
/// the fast path behind the oracle.
pub fn rational_rank(columns: &[Vec<BigInt>], set: &ElementSet) -> usize {
    rank_of_columns(columns, set)
}
