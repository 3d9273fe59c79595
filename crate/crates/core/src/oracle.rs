//! The independence-oracle abstraction and lazy oracle views.
//!
//! All solvers are generic over [`Matroid`]: a finite ground set plus a pure
//! independence query. Oracles must be immutable after construction; the
//! query counter is the only mutable state and is atomic, so concurrent
//! queries are safe and answers are deterministic regardless of schedule.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::element::{ElementId, ElementSet};

/// Independence oracle over a ground set `{0, ..., ground_size()-1}`.
///
/// Implementations must satisfy the independence axioms: the empty set is
/// independent, subsets of independent sets are independent, and a larger
/// independent set can always extend a smaller one by some element. The
/// axioms are sampled by [`crate::axioms`].
pub trait Matroid: Sync {
    /// Number of ground-set elements.
    fn ground_size(&self) -> usize;

    /// Whether `set` is independent. `set` must be within range.
    ///
    /// Repeated identical queries return identical answers.
    fn is_independent(&self, set: &ElementSet) -> bool;

    /// Cumulative number of independence queries answered by the underlying
    /// (inner-most) oracle. Views delegate to the oracle they wrap, so a
    /// solver working through a stack of views still reads one base counter.
    fn oracle_calls(&self) -> u64;
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn is_independent(&self, set: &ElementSet) -> bool {
        (**self).is_independent(set)
    }
    fn oracle_calls(&self) -> u64 {
        (**self).oracle_calls()
    }
}

impl Matroid for Box<dyn Matroid> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn is_independent(&self, set: &ElementSet) -> bool {
        (**self).is_independent(set)
    }
    fn oracle_calls(&self) -> u64 {
        (**self).oracle_calls()
    }
}

/// Monotone query counter shared by the concrete oracle implementations.
#[derive(Debug, Default)]
pub struct QueryCounter(AtomicU64);

impl QueryCounter {
    pub fn new() -> Self {
        QueryCounter(AtomicU64::new(0))
    }

    #[inline]
    pub fn bump(&self) {
        self.0.fetch_add(1, Ordering::Relaxed);
    }

    pub fn get(&self) -> u64 {
        self.0.load(Ordering::Relaxed)
    }
}

impl Clone for QueryCounter {
    fn clone(&self) -> Self {
        QueryCounter(AtomicU64::new(self.get()))
    }
}

/// Deletion view `M - S`: the matroid on `E \ S` whose independent sets are
/// the independent sets of `M` avoiding `S`.
///
/// Elements are re-indexed densely; [`Deletion::to_base`] and
/// [`Deletion::to_base_set`] translate back. The view is lazy: queries are
/// translated and forwarded, nothing is materialized.
pub struct Deletion<M> {
    inner: M,
    /// View id -> base id, ascending. Ascending order makes the translation
    /// monotone, so sortedness and lexicographic order survive it.
    kept: Vec<ElementId>,
}

impl<M: Matroid> Deletion<M> {
    pub fn new(inner: M, removed: &ElementSet) -> Self {
        let kept = (0..inner.ground_size())
            .map(ElementId::from)
            .filter(|id| !removed.contains(*id))
            .collect();
        Deletion { inner, kept }
    }

    /// Translates a view id to the id in the base matroid.
    pub fn to_base(&self, id: ElementId) -> ElementId {
        self.kept[id.index()]
    }

    pub fn to_base_set(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_sorted_unchecked(set.iter().map(|id| self.to_base(id)).collect())
    }

    /// Translates a base id to its view id, if the element survived.
    pub fn to_view(&self, base: ElementId) -> Option<ElementId> {
        self.kept.binary_search(&base).ok().map(ElementId::from)
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }
}

impl<M: Matroid> Matroid for Deletion<M> {
    fn ground_size(&self) -> usize {
        self.kept.len()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        self.inner.is_independent(&self.to_base_set(set))
    }

    fn oracle_calls(&self) -> u64 {
        self.inner.oracle_calls()
    }
}

/// `r`-truncation view: independent iff independent in the base matroid and
/// of size at most `r`.
pub struct Truncation<M> {
    inner: M,
    limit: usize,
}

impl<M: Matroid> Truncation<M> {
    pub fn new(inner: M, limit: usize) -> Self {
        Truncation { inner, limit }
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }
}

impl<M: Matroid> Matroid for Truncation<M> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        // The cardinality short-circuit costs no base-oracle query.
        set.len() <= self.limit && self.inner.is_independent(set)
    }

    fn oracle_calls(&self) -> u64 {
        self.inner.oracle_calls()
    }
}
