//! Streaming lexicographic combination enumeration.

use num_bigint::BigUint;
use num_traits::One;

/// Enumerates `k`-subsets of `0..n` as sorted index arrays, in lexicographic
/// order, reusing one buffer. Not a std `Iterator` (it lends its buffer);
/// drive it with `while let Some(c) = it.next()`.
pub struct Combinations {
    n: usize,
    k: usize,
    /// Leftmost position allowed to advance; 1 when the first index is pinned.
    lo: usize,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            k,
            lo: 0,
            idx: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    /// Restricts enumeration to combinations whose smallest index is exactly
    /// `first`. Requires `k >= 1`. Lets workers split the space by prefix
    /// without coordination.
    pub fn with_fixed_first(n: usize, k: usize, first: usize) -> Self {
        assert!(k >= 1);
        Combinations {
            n,
            k,
            lo: 1,
            idx: (first..first + k).collect(),
            started: false,
            done: first + k > n,
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        let mut i = self.k;
        loop {
            if i <= self.lo {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.idx[i] < self.n - (self.k - i) {
                self.idx[i] += 1;
                for j in i + 1..self.k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}
