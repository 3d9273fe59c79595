//! Polynomial-time weighted solvers: unit-capacity partition matroids (and
//! their truncations to a target rank), arbitrary-capacity partition
//! matroids at full rank, and general matroids of rank at most two via
//! collinearity classes.

use crate::element::{ElementId, ElementSet};
use crate::error::{Error, Result};
use crate::ops::{closure, delete, rank_profile};
use crate::oracle::Matroid;
use crate::report::SolveReport;
use crate::weights::WeightMap;
use crate::zoo::PartitionMatroid;

/// One feasible value of the sweep parameter `s`: picking
/// `s·(r-1) + k + 1` elements with at most `s` per block guarantees rank at
/// least `r` after any `k` failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibleS {
    pub s: usize,
    pub required_size: usize,
    /// Per-block effective capacities `min(s, |P_i|)`.
    pub capped_capacities: Vec<usize>,
}

impl FeasibleS {
    /// Checks feasibility of `s`: the capped supply must cover the required
    /// size. Returns `None` when infeasible.
    pub fn evaluate(block_sizes: &[usize], r: usize, k: usize, s: usize) -> Option<FeasibleS> {
        assert!(r >= 1 && s >= 1);
        let required_size = s * (r - 1) + k + 1;
        let capped: Vec<usize> = block_sizes.iter().map(|&len| len.min(s)).collect();
        let supply: usize = capped.iter().sum();
        (supply >= required_size).then_some(FeasibleS {
            s,
            required_size,
            capped_capacities: capped,
        })
    }
}

/// Minimum-weight set `X` in a unit-capacity partition matroid such that
/// `rank(X \ F) >= target_rank` for every failure set `F` of size at most
/// `k`.
///
/// `target_rank` is a target, decoupled from the matroid's own rank: the
/// routine solves the truncation case as well. The sweep tries every
/// `s` up to the largest block, greedily picking the cheapest elements under
/// the per-block cap `min(s, |P_i|)`; ties go to lower ids, and across
/// feasible `s` the minimum is taken by (weight, s).
pub fn solve_partition_unit(
    m: &PartitionMatroid,
    weights: &WeightMap,
    target_rank: usize,
    k: usize,
) -> Result<SolveReport> {
    if !m.has_unit_capacities() {
        return Err(Error::input(
            "solve_partition_unit requires unit capacities; use solve_partition_general",
        ));
    }
    weights.check_len(m.ground_size())?;
    if target_rank == 0 {
        return Ok(SolveReport::found(ElementSet::new(), Some(0), 0, 0));
    }
    let n = m.ground_size();
    let block_sizes: Vec<usize> = m.blocks().iter().map(Vec::len).collect();
    let max_block = block_sizes.iter().copied().max().unwrap_or(0);

    // One shared sort; every sweep iteration reads it in order.
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_by_key(|&e| (weights.get(ElementId(e)), e));

    // Per-s greedy under the caps min(s, |P_i|). The sweep only needs each
    // candidate's weight; the winning set is materialized once afterwards.
    let mut taken = vec![0usize; block_sizes.len()];
    let mut greedy = |feasible: &FeasibleS, sink: Option<&mut Vec<ElementId>>| -> (u128, u64) {
        taken.fill(0);
        let mut sink = sink;
        let mut total: u128 = 0;
        let mut count = 0usize;
        let mut scanned = 0u64;
        for &e in &order {
            if count == feasible.required_size {
                break;
            }
            scanned += 1;
            let b = m.block_of(e);
            if taken[b] == feasible.capped_capacities[b] {
                continue;
            }
            taken[b] += 1;
            total += weights.get(ElementId(e)) as u128;
            count += 1;
            if let Some(out) = sink.as_deref_mut() {
                out.push(ElementId(e));
            }
        }
        debug_assert_eq!(count, feasible.required_size);
        (total, scanned)
    };

    let mut best: Option<(u128, usize)> = None;
    let mut work_units: u64 = 0;
    for s in 1..=max_block {
        let required = s * (target_rank - 1) + k + 1;
        // Supply is concave in s but never exceeds n, so once the required
        // size passes n no later s can be feasible.
        if required > n {
            break;
        }
        work_units += block_sizes.len() as u64;
        let Some(feasible) = FeasibleS::evaluate(&block_sizes, target_rank, k, s) else {
            continue;
        };
        let (total, scanned) = greedy(&feasible, None);
        work_units += scanned;
        let better = match &best {
            None => true,
            Some((w, s_prev)) => (total, s) < (*w, *s_prev),
        };
        if better {
            best = Some((total, s));
        }
    }

    Ok(match best {
        Some((weight, s)) => {
            let feasible = FeasibleS::evaluate(&block_sizes, target_rank, k, s)
                .expect("the winning s was feasible during the sweep");
            let mut picked = Vec::with_capacity(feasible.required_size);
            let (total, _) = greedy(&feasible, Some(&mut picked));
            debug_assert_eq!(total, weight);
            SolveReport::found(ElementSet::from_ids(picked), Some(weight), work_units, 0)
        }
        None => SolveReport::not_found(work_units, 0),
    })
}

/// Minimum-weight `k`-fault-tolerant basis of a partition matroid with
/// arbitrary capacities, at its full rank: `c_i + k` cheapest elements from
/// every block. A block with fewer than `c_i + k` elements cannot survive
/// `k` failures concentrated on it, so the instance is infeasible.
pub fn solve_partition_general(
    m: &PartitionMatroid,
    weights: &WeightMap,
    k: usize,
) -> Result<SolveReport> {
    weights.check_len(m.ground_size())?;
    let mut picked: Vec<ElementId> = Vec::new();
    let mut total: u128 = 0;
    for (b, block) in m.blocks().iter().enumerate() {
        let need = m.capacities()[b] + k;
        if block.len() < need {
            return Ok(SolveReport::not_found(0, 0));
        }
        let mut sorted = block.clone();
        sorted.sort_by_key(|&e| (weights.get(ElementId(e)), e));
        for &e in sorted.iter().take(need) {
            total += weights.get(ElementId(e)) as u128;
            picked.push(ElementId(e));
        }
    }
    Ok(SolveReport::found(
        ElementSet::from_ids(picked),
        Some(total),
        0,
        0,
    ))
}

/// Partitions a loop-free matroid into collinearity classes: `x` and `y`
/// share a class iff `y` is in the closure of `{x}`. Each class is the
/// closure of its lowest-id representative; one closure per unassigned
/// element gives an O(n²) oracle-query bound.
pub fn collinearity_classes<M: Matroid + ?Sized>(m: &M) -> Vec<ElementSet> {
    let n = m.ground_size();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for e in 0..n {
        if assigned[e] {
            continue;
        }
        let rep = ElementSet::from_ids([e as u32]);
        assert!(
            m.is_independent(&rep),
            "collinearity_classes requires a loop-free matroid; element {e} is a loop"
        );
        let class = closure(m, &rep).expect("singleton is in range");
        for member in class.iter() {
            debug_assert!(!assigned[member.index()], "collinearity is not transitive here");
            assigned[member.index()] = true;
        }
        classes.push(class);
    }
    classes
}

/// Minimum-weight `k`-fault-tolerant basis of a matroid of rank at most two.
///
/// Rank 0: empty. Rank 1: the `k + 1` cheapest non-loops. Rank 2: non-loops
/// split into collinearity classes, which behave exactly like the blocks of
/// a unit-capacity partition matroid; delegate to the sweep with target rank
/// two.
pub fn solve_rank_le2<M: Matroid + ?Sized>(
    m: &M,
    weights: &WeightMap,
    k: usize,
) -> Result<SolveReport> {
    weights.check_len(m.ground_size())?;
    let calls_before = m.oracle_calls();
    let profile = rank_profile(m);
    let r = profile.full_rank;
    if r > 2 {
        return Err(Error::Input(format!(
            "solve_rank_le2 requires rank <= 2, but the matroid has rank {}",
            r
        )));
    }
    if r == 0 {
        return Ok(SolveReport::found(
            ElementSet::new(),
            Some(0),
            0,
            m.oracle_calls() - calls_before,
        ));
    }
    let view = delete(m, &profile.loops);
    let survivors = ElementSet::full(view.ground_size());
    let view_weights = weights.restrict_to(&view.to_base_set(&survivors));

    if r == 1 {
        if view.ground_size() < k + 1 {
            return Ok(SolveReport::not_found(0, m.oracle_calls() - calls_before));
        }
        let mut order: Vec<u32> = (0..view.ground_size() as u32).collect();
        order.sort_by_key(|&e| (view_weights.get(ElementId(e)), e));
        let picked: ElementSet = order[..k + 1].iter().copied().collect();
        let weight = view_weights.total(&picked);
        return Ok(SolveReport::found(
            view.to_base_set(&picked),
            Some(weight),
            0,
            m.oracle_calls() - calls_before,
        ));
    }

    let classes = collinearity_classes(&view);
    let blocks: Vec<Vec<u32>> = classes
        .iter()
        .map(|c| c.iter().map(|id| id.0).collect())
        .collect();
    let partition =
        PartitionMatroid::with_unit_capacities(blocks).expect("classes partition the view");
    let inner = solve_partition_unit(&partition, &view_weights, 2, k)?;
    let calls = m.oracle_calls() - calls_before;
    Ok(match inner.solution {
        Some(sol) => SolveReport::found(
            view.to_base_set(&sol),
            inner.weight,
            inner.subsets_examined,
            calls,
        ),
        None => SolveReport::not_found(inner.subsets_examined, calls),
    })
}
