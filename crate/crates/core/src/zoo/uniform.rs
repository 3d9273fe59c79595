//! Uniform matroid `U_{r,n}`.

use crate::element::ElementSet;
use crate::oracle::{Matroid, QueryCounter};

/// Uniform matroid: a set is independent iff it has at most `r` elements.
#[derive(Debug, Clone)]
pub struct UniformMatroid {
    n: usize,
    r: usize,
    calls: QueryCounter,
}

impl UniformMatroid {
    pub fn new(n: usize, r: usize) -> Self {
        UniformMatroid {
            n,
            r,
            calls: QueryCounter::new(),
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }
}

impl Matroid for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        self.calls.bump();
        set.len() <= self.r
    }

    fn oracle_calls(&self) -> u64 {
        self.calls.get()
    }
}
