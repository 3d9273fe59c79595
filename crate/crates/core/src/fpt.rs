//! The fixed-parameter solver: greedy uniform-set growth, the recursive
//! important-element procedure, and candidate enumeration over the resulting
//! core set.
//!
//! The driver finds a bounded set `W` of important elements such that some
//! minimum `k`-fault-tolerant basis lies entirely inside `W` whenever one
//! exists at all, then searches subsets of `W` by increasing size.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::combinatorics::Combinations;
use crate::element::{ElementId, ElementSet};
use crate::error::{Error, Result};
use crate::exact::WindowSearch;
use crate::ops::{closure, delete, find_basis, rank_profile, size_bounds};
use crate::oracle::{Deletion, Matroid};
use crate::report::{SearchOptions, SolveReport};

/// Parameters of the important-element recursion.
#[derive(Debug, Clone)]
pub struct ImportantConfig {
    pub k: usize,
    pub r: usize,
    /// Cache recursion results by their (sorted) argument set. Sibling
    /// branches re-derive the same subsets constantly; the output depends
    /// only on the argument, so deduplication is sound.
    pub memoize: bool,
}

impl ImportantConfig {
    pub fn new(k: usize, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::input("important-element search requires rank >= 1"));
        }
        Ok(ImportantConfig {
            k,
            r,
            memoize: true,
        })
    }

    fn base(&self) -> BigUint {
        BigUint::from(self.k + 1) * BigUint::from(self.r)
    }

    /// Growth cap for `h`-uniform sets: `(h-1)·((k+1)r)^(r-1) + (k+1)r`.
    /// Arbitrary precision: this overflows 64 bits already for modest ranks.
    pub fn threshold(&self, h: usize) -> BigUint {
        let base = self.base();
        BigUint::from(h - 1) * base.pow(self.r as u32 - 1) + base
    }

    /// Bound on the output of the recursion at level `h`:
    /// `h^(h²)·((k+1)r)^(r·h²)`.
    pub fn output_bound(&self, h: usize) -> BigUint {
        let h_big = BigUint::from(h);
        let hh = (h * h) as u32;
        h_big.pow(hh) * self.base().pow(self.r as u32 * hh)
    }

    /// Bound on the final important set: `r^(r²)·((k+1)r)^(r³)`.
    pub fn w_bound(&self) -> BigUint {
        self.output_bound(self.r)
    }
}

/// How one recursion node produced its output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BranchOutcome {
    /// The closure was already within the size threshold and was returned
    /// whole (at `h = 1`, possibly cut down to the `(k+1)r` lowest ids).
    ClosureSmall,
    /// The greedy procedure grew a full-threshold `h`-uniform set.
    FullUniform,
    /// The greedy set was inclusion-maximal below the threshold; the node
    /// recursed over its `(h-1)`-subsets.
    Recursed,
}

/// Recursion tree of the important-element computation, for debugging.
#[derive(Debug, Clone, Serialize)]
pub struct ImportantTrace {
    pub x: ElementSet,
    pub h: usize,
    pub outcome: BranchOutcome,
    pub y_size: usize,
    /// True when the result came from the memo table; children are omitted.
    pub memoized: bool,
    pub children: Vec<ImportantTrace>,
}

/// Grows an `h`-uniform superset of `x` inside `closure(x)`.
///
/// `x` must be independent with exactly `h` elements. Candidates are scanned
/// in ascending id; testing `z + x` for `h`-uniformity only needs the
/// `h`-subsets containing the newcomer, because the rest are certified by
/// `z` and the rank stays `h` inside the closure. Returns either a set of
/// size `cap` or an inclusion-maximal `h`-uniform set smaller than `cap`.
pub fn greedy_uniform<M: Matroid + ?Sized>(
    m: &M,
    x: &ElementSet,
    h: usize,
    cap: usize,
) -> Result<ElementSet> {
    if h == 0 || x.len() != h {
        return Err(Error::Input(format!(
            "greedy_uniform requires |x| = h >= 1, got |x| = {}, h = {}",
            x.len(),
            h
        )));
    }
    if cap < h {
        return Err(Error::Input(format!(
            "greedy_uniform cap {} is below the seed size {}",
            cap, h
        )));
    }
    if !m.is_independent(x) {
        return Err(Error::input("greedy_uniform seed set is dependent"));
    }
    let cl = closure(m, x)?;
    Ok(grow_uniform(m, x, h, cap, &cl))
}

fn grow_uniform<M: Matroid + ?Sized>(
    m: &M,
    x: &ElementSet,
    h: usize,
    cap: usize,
    cl: &ElementSet,
) -> ElementSet {
    let mut z = x.clone();
    for candidate in cl.iter() {
        if z.len() >= cap {
            break;
        }
        if z.contains(candidate) {
            continue;
        }
        if joins_uniform(m, &z, h, candidate) {
            z.insert(candidate);
        }
    }
    z
}

/// Every `(h-1)`-subset of `z` stays independent with `candidate` added.
/// A candidate that fails keeps failing as `z` grows, so one ascending pass
/// over the closure is enough to reach an inclusion-maximal set.
fn joins_uniform<M: Matroid + ?Sized>(
    m: &M,
    z: &ElementSet,
    h: usize,
    candidate: ElementId,
) -> bool {
    let ids = z.as_slice();
    let mut subsets = Combinations::new(ids.len(), h - 1);
    while let Some(positions) = subsets.next() {
        let mut probe: ElementSet =
            ElementSet::from_sorted_unchecked(positions.iter().map(|&p| ids[p]).collect());
        probe.insert(candidate);
        if !m.is_independent(&probe) {
            return false;
        }
    }
    true
}

/// Computes the important-element set for a non-empty independent `x` in a
/// loop-free matroid: a subset of `closure(x)` that can replace it in any
/// minimum fault-tolerant basis.
pub fn important<M: Matroid + ?Sized>(
    m: &M,
    x: &ElementSet,
    cfg: &ImportantConfig,
) -> Result<ElementSet> {
    important_traced(m, x, cfg).map(|(y, _)| y)
}

/// [`important`] plus its recursion trace.
pub fn important_traced<M: Matroid + ?Sized>(
    m: &M,
    x: &ElementSet,
    cfg: &ImportantConfig,
) -> Result<(ElementSet, ImportantTrace)> {
    if x.is_empty() {
        return Err(Error::input("important requires a non-empty set"));
    }
    if !x.in_range(m.ground_size()) {
        return Err(Error::input("important set contains out-of-range elements"));
    }
    if !m.is_independent(x) {
        return Err(Error::input("important requires an independent set"));
    }
    let mut memo = Memo::new(cfg.memoize);
    Ok(important_rec(m, x, cfg, &mut memo))
}

struct Memo {
    enabled: bool,
    table: HashMap<ElementSet, (ElementSet, BranchOutcome)>,
}

impl Memo {
    fn new(enabled: bool) -> Self {
        Memo {
            enabled,
            table: HashMap::new(),
        }
    }
}

fn important_rec<M: Matroid + ?Sized>(
    m: &M,
    x: &ElementSet,
    cfg: &ImportantConfig,
    memo: &mut Memo,
) -> (ElementSet, ImportantTrace) {
    if memo.enabled {
        if let Some((y, outcome)) = memo.table.get(x) {
            let trace = ImportantTrace {
                x: x.clone(),
                h: x.len(),
                outcome: *outcome,
                y_size: y.len(),
                memoized: true,
                children: Vec::new(),
            };
            return (y.clone(), trace);
        }
    }
    let h = x.len();
    let cl = closure(m, x).expect("argument sets are in range");
    let mut children = Vec::new();

    let (y, outcome) = if h == 1 {
        // Loop-free, so every non-empty subset of the closure is 1-uniform;
        // the first (k+1)·r elements serve as the "arbitrary" choice.
        let quota = (cfg.k as u128 + 1) * cfg.r as u128;
        if (cl.len() as u128) < quota {
            (cl, BranchOutcome::ClosureSmall)
        } else {
            let quota = quota as usize;
            let cut: ElementSet = cl.iter().take(quota).collect();
            (cut, BranchOutcome::FullUniform)
        }
    } else {
        let threshold = cfg.threshold(h);
        if BigUint::from(cl.len()) <= threshold {
            (cl, BranchOutcome::ClosureSmall)
        } else {
            // threshold < |cl| <= usize::MAX here, so the cap fits.
            let cap = threshold.to_usize().expect("threshold below closure size");
            let z = grow_uniform(m, x, h, cap, &cl);
            if z.len() == cap {
                (z, BranchOutcome::FullUniform)
            } else {
                // z is inclusion-maximal below the threshold: every element
                // of the closure is spanned by some (h-1)-subset of z, so
                // recurse on all of them and take the union.
                let ids = z.as_slice();
                let mut union = ElementSet::new();
                let mut subsets = Combinations::new(ids.len(), h - 1);
                while let Some(positions) = subsets.next() {
                    let s = ElementSet::from_sorted_unchecked(
                        positions.iter().map(|&p| ids[p]).collect(),
                    );
                    let (y_s, child) = important_rec(m, &s, cfg, memo);
                    union = union.union(&y_s);
                    children.push(child);
                }
                (union, BranchOutcome::Recursed)
            }
        }
    };

    if memo.enabled {
        memo.table.insert(x.clone(), (y.clone(), outcome));
    }
    let trace = ImportantTrace {
        x: x.clone(),
        h,
        outcome,
        y_size: y.len(),
        memoized: false,
        children,
    };
    (y, trace)
}

/// Options for [`solve_fpt`].
#[derive(Debug, Clone, Default)]
pub struct FptOptions {
    pub search: SearchOptions,
    /// Disable recursion memoization (for debugging; the answer is the same).
    pub no_memoize: bool,
    pub capture_trace: bool,
}

/// Outcome of [`solve_fpt`]: the report plus the important set and optional
/// recursion trace.
#[derive(Debug, Clone)]
pub struct FptOutcome {
    pub report: SolveReport,
    /// The important-element set `W`, in base-matroid ids.
    pub w: ElementSet,
    pub trace: Option<ImportantTrace>,
}

/// The fixed-parameter solve: strip loops, compute the important set from a
/// greedy basis, then enumerate candidate subsets of it by increasing size
/// within `[r + k, (k+1)·r]`. Existence and minimum size always agree with
/// [`crate::exact::solve_bruteforce`].
pub fn solve_fpt<M: Matroid + ?Sized>(m: &M, k: usize, opts: &FptOptions) -> Result<FptOutcome> {
    let calls_before = m.oracle_calls();
    let profile = rank_profile(m);
    let r = profile.full_rank;
    if r == 0 {
        return Ok(FptOutcome {
            report: SolveReport::found(ElementSet::new(), None, 0, m.oracle_calls() - calls_before),
            w: ElementSet::new(),
            trace: None,
        });
    }
    let view = delete(m, &profile.loops);
    let basis = find_basis(&view);
    debug_assert_eq!(basis.len(), r);

    let mut cfg = ImportantConfig::new(k, r)?;
    cfg.memoize = !opts.no_memoize;
    let mut memo = Memo::new(cfg.memoize);
    let (w_view, trace) = important_rec(&view, &basis, &cfg, &mut memo);
    debug_assert!(BigUint::from(w_view.len()) <= cfg.w_bound());

    let (lo, hi) = size_bounds(r, k)?;
    let hi = hi.min(w_view.len());
    let mut search = WindowSearch::new(&view, &w_view, k, r, None, &opts.search);
    let found = if lo <= hi { search.run(lo..=hi)? } else { None };

    let examined = search.examined();
    let calls = m.oracle_calls() - calls_before;
    let report = match found {
        Some((solution, _)) => {
            SolveReport::found(view.to_base_set(&solution), None, examined, calls)
        }
        None => SolveReport::not_found(examined, calls),
    };
    Ok(FptOutcome {
        report,
        w: view.to_base_set(&w_view),
        trace: opts.capture_trace.then_some(trace),
    })
}

/// Remaps a trace produced inside a deletion view back to base ids.
pub fn remap_trace<M: Matroid>(trace: &ImportantTrace, view: &Deletion<M>) -> ImportantTrace {
    ImportantTrace {
        x: view.to_base_set(&trace.x),
        h: trace.h,
        outcome: trace.outcome,
        y_size: trace.y_size,
        memoized: trace.memoized,
        children: trace.children.iter().map(|c| remap_trace(c, view)).collect(),
    }
}
