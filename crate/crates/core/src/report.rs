//! Solver output and search configuration.

use crate::element::ElementSet;

/// Result of an exact solve: either a verified minimum solution or the
/// decision that none exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub exists: bool,
    /// Solution in base-matroid ids; `None` iff `exists` is false.
    pub solution: Option<ElementSet>,
    pub size: Option<usize>,
    /// Total weight; present only for weighted solves.
    pub weight: Option<u128>,
    /// Candidate subsets (or, for sweep solvers, work units) examined.
    pub subsets_examined: u64,
    /// Independence queries issued to the base oracle during the solve.
    pub oracle_calls: u64,
}

impl SolveReport {
    pub fn not_found(subsets_examined: u64, oracle_calls: u64) -> Self {
        SolveReport {
            exists: false,
            solution: None,
            size: None,
            weight: None,
            subsets_examined,
            oracle_calls,
        }
    }

    pub fn found(
        solution: ElementSet,
        weight: Option<u128>,
        subsets_examined: u64,
        oracle_calls: u64,
    ) -> Self {
        SolveReport {
            exists: true,
            size: Some(solution.len()),
            solution: Some(solution),
            weight,
            subsets_examined,
            oracle_calls,
        }
    }
}

/// Knobs shared by the enumerating solvers.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Hard cap on examined candidate subsets; exceeding it is an error, not
    /// a truncated answer.
    pub budget: u64,
    /// Worker threads for candidate verification; 1 keeps timings and
    /// examined-subset counts reproducible.
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: 1 << 24,
            threads: 1,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions {
            budget,
            ..Default::default()
        }
    }
}
