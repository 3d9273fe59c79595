//! Generic matroid operations over an independence oracle.
//!
//! Everything here is a pure function of (oracle, inputs). Greedy scans visit
//! elements in ascending id; that tie-breaking rule is the determinism
//! contract for the whole crate.

use crate::combinatorics::Combinations;
use crate::element::{ElementId, ElementSet};
use crate::error::{Error, Result};
use crate::oracle::{Deletion, Matroid, Truncation};

/// Rank of the whole matroid together with its loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    pub full_rank: usize,
    pub loops: ElementSet,
}

fn check_range<M: Matroid + ?Sized>(m: &M, set: &ElementSet) -> Result<()> {
    match set.max_id() {
        Some(id) if id.index() >= m.ground_size() => Err(Error::Input(format!(
            "element {} out of range (ground size {})",
            id,
            m.ground_size()
        ))),
        _ => Ok(()),
    }
}

/// Greedy maximal independent subset of the ids yielded by `candidates`,
/// which must arrive in ascending order.
fn greedy_independent<M, I>(m: &M, candidates: I) -> ElementSet
where
    M: Matroid + ?Sized,
    I: IntoIterator<Item = ElementId>,
{
    let mut acc = ElementSet::new();
    for id in candidates {
        acc.push_largest(id);
        if !m.is_independent(&acc) {
            acc.pop_largest();
        }
    }
    acc
}

/// Rank of `A`: the size of a greedy maximal independent subset, scanning `A`
/// in ascending id. The exchange axiom makes any maximal independent subset
/// maximum, so the scan order only affects which witness is found.
pub fn rank<M: Matroid + ?Sized>(m: &M, a: &ElementSet) -> Result<usize> {
    check_range(m, a)?;
    Ok(greedy_independent(m, a.iter()).len())
}

/// Rank of the whole ground set.
pub fn full_rank<M: Matroid + ?Sized>(m: &M) -> usize {
    find_basis(m).len()
}

/// Greedy (ascending-id) basis of the matroid.
pub fn find_basis<M: Matroid + ?Sized>(m: &M) -> ElementSet {
    greedy_independent(m, (0..m.ground_size()).map(ElementId::from))
}

/// Closure of `A`: all elements spanned by `A`.
///
/// One greedy pass certifies a maximal independent subset `I` of `A`; an
/// element `x` outside `A` is spanned iff `I + x` is dependent, so each
/// candidate costs a single oracle query.
pub fn closure<M: Matroid + ?Sized>(m: &M, a: &ElementSet) -> Result<ElementSet> {
    check_range(m, a)?;
    let witness = greedy_independent(m, a.iter());
    let mut out = a.clone();
    let mut probe = witness.clone();
    for idx in 0..m.ground_size() {
        let x = ElementId::from(idx);
        if out.contains(x) {
            continue;
        }
        probe.insert(x);
        if !m.is_independent(&probe) {
            out.insert(x);
        }
        probe.remove(x);
    }
    Ok(out)
}

/// Full rank and loop set in one scan.
pub fn rank_profile<M: Matroid + ?Sized>(m: &M) -> RankProfile {
    let mut loops = ElementSet::new();
    for idx in 0..m.ground_size() {
        let id = ElementId::from(idx);
        if !m.is_independent(&ElementSet::from_ids([id])) {
            loops.insert(id);
        }
    }
    RankProfile {
        full_rank: full_rank(m),
        loops,
    }
}

/// Deletes the loops of `m`, returning the loop-free view and the loop set
/// (in base ids). Loops sit in every closure and in no fault-tolerant basis,
/// so solvers strip them up front.
pub fn remove_loops<M: Matroid>(m: M) -> (Deletion<M>, ElementSet) {
    let mut loops = ElementSet::new();
    for idx in 0..m.ground_size() {
        let id = ElementId::from(idx);
        if !m.is_independent(&ElementSet::from_ids([id])) {
            loops.insert(id);
        }
    }
    let view = Deletion::new(m, &loops);
    (view, loops)
}

/// Deletion view `m - s`. `s` must be within range.
pub fn delete<M: Matroid>(m: M, s: &ElementSet) -> Deletion<M> {
    assert!(
        s.in_range(m.ground_size()),
        "deleted set contains out-of-range elements"
    );
    Deletion::new(m, s)
}

/// `r`-truncation view of `m`.
pub fn truncate<M: Matroid>(m: M, r: usize) -> Truncation<M> {
    Truncation::new(m, r)
}

/// Whether `b` keeps full rank after removal of any at most `k` of its
/// elements.
///
/// Only failure sets of size exactly `min(k, |b|)` are enumerated: rank is
/// monotone, so a smaller failure set can never be worse than some superset
/// of size `min(k, |b|)`.
pub fn is_fault_tolerant<M: Matroid + ?Sized>(m: &M, b: &ElementSet, k: usize) -> bool {
    is_fault_tolerant_with_rank(m, b, k, full_rank(m))
}

/// [`is_fault_tolerant`] for callers that already know `rank(M)`; avoids the
/// repeated full-rank scan inside enumeration loops.
pub fn is_fault_tolerant_with_rank<M: Matroid + ?Sized>(
    m: &M,
    b: &ElementSet,
    k: usize,
    full_rank: usize,
) -> bool {
    assert!(b.in_range(m.ground_size()), "b contains out-of-range elements");
    if full_rank == 0 {
        return true;
    }
    // Cheap reject: the whole set must span.
    if rank_reaches(m, b.as_slice(), &|_| false, full_rank) < full_rank {
        return false;
    }
    let f_size = k.min(b.len());
    if f_size == 0 {
        return true;
    }
    let ids = b.as_slice();
    let mut failures = Combinations::new(ids.len(), f_size);
    while let Some(f) = failures.next() {
        let mut in_f = vec![false; ids.len()];
        for &pos in f {
            in_f[pos] = true;
        }
        let survives = rank_reaches(m, ids, &|pos| in_f[pos], full_rank);
        if survives < full_rank {
            return false;
        }
    }
    true
}

/// Greedy rank of `ids` minus the positions flagged by `skip`, stopping early
/// once `target` is reached.
fn rank_reaches<M: Matroid + ?Sized>(
    m: &M,
    ids: &[ElementId],
    skip: &dyn Fn(usize) -> bool,
    target: usize,
) -> usize {
    let mut acc = ElementSet::with_capacity(target);
    for (pos, &id) in ids.iter().enumerate() {
        if skip(pos) {
            continue;
        }
        acc.push_largest(id);
        if !m.is_independent(&acc) {
            acc.pop_largest();
        } else if acc.len() == target {
            return target;
        }
    }
    acc.len()
}

/// Finds one failure set `F ⊆ b`, `|F| <= k`, with `rank(b \ F) < rank(M)`,
/// if any exists. Enumerates by ascending size then lexicographic order, so
/// the witness is deterministic.
pub fn fault_witness<M: Matroid + ?Sized>(m: &M, b: &ElementSet, k: usize) -> Option<ElementSet> {
    assert!(b.in_range(m.ground_size()), "b contains out-of-range elements");
    let full = full_rank(m);
    if full == 0 {
        return None;
    }
    let ids = b.as_slice();
    for f_size in 0..=k.min(b.len()) {
        let mut failures = Combinations::new(ids.len(), f_size);
        while let Some(f) = failures.next() {
            let mut in_f = vec![false; ids.len()];
            for &pos in f {
                in_f[pos] = true;
            }
            if rank_reaches(m, ids, &|pos| in_f[pos], full) < full {
                return Some(ElementSet::from_ids(f.iter().map(|&pos| ids[pos])));
            }
        }
    }
    None
}

/// Whether `x` has rank `h` and every `h`-subset of `x` has rank `h`.
///
/// An `h`-subset has rank `h` iff it is independent, so each subset costs one
/// query; enumeration is lexicographic and short-circuits on the first
/// failing subset.
pub fn is_h_uniform<M: Matroid + ?Sized>(m: &M, x: &ElementSet, h: usize) -> bool {
    assert!(h >= 1, "h-uniformity requires h >= 1");
    assert!(x.in_range(m.ground_size()), "x contains out-of-range elements");
    if rank(m, x).expect("range checked above") != h {
        return false;
    }
    let ids = x.as_slice();
    let mut subsets = Combinations::new(ids.len(), h);
    while let Some(s) = subsets.next() {
        let candidate = ElementSet::from_sorted_unchecked(s.iter().map(|&pos| ids[pos]).collect());
        if !m.is_independent(&candidate) {
            return false;
        }
    }
    true
}

/// Size window `[r + k, (k+1)·r]` every minimum `k`-fault-tolerant basis of a
/// rank-`r` matroid falls into. `r = 0` is an error: the empty set is the
/// unique solution and callers special-case it before invoking.
pub fn size_bounds(r: usize, k: usize) -> Result<(usize, usize)> {
    if r == 0 {
        return Err(Error::input(
            "size_bounds requires rank >= 1; at rank 0 the empty set is the unique solution",
        ));
    }
    Ok((r + k, (k + 1) * r))
}
