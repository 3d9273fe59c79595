//! Ground-set elements and element sets.
//!
//! Every matroid here is defined over the ground set `{0, 1, ..., n-1}`.
//! [`ElementSet`] is the one set representation used across the crate: a
//! sorted, duplicate-free vector of ids. Keeping a single canonical order
//! makes greedy scans, lexicographic enumeration, and memoization keys
//! deterministic.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Identifier of a ground-set element, an index into `0..n`.
#[derive(
    Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize, Debug,
)]
#[serde(transparent)]
pub struct ElementId(pub u32);

impl ElementId {
    /// The id as a `usize` index.
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for ElementId {
    fn from(id: u32) -> Self {
        ElementId(id)
    }
}

impl From<usize> for ElementId {
    fn from(id: usize) -> Self {
        ElementId(u32::try_from(id).expect("element id exceeds u32"))
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite set of element ids, stored sorted ascending without duplicates.
///
/// Iteration order is ascending id; this is a determinism contract relied on
/// by every greedy scan and every lexicographic enumeration in the solvers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct ElementSet {
    ids: Vec<ElementId>,
}

impl ElementSet {
    /// The empty set.
    pub fn new() -> Self {
        ElementSet { ids: Vec::new() }
    }

    pub fn with_capacity(cap: usize) -> Self {
        ElementSet {
            ids: Vec::with_capacity(cap),
        }
    }

    /// The full ground set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        ElementSet {
            ids: (0..n).map(ElementId::from).collect(),
        }
    }

    /// Builds a set from ids, sorting and removing duplicates.
    pub fn from_ids<I>(ids: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<ElementId>,
    {
        let mut ids: Vec<ElementId> = ids.into_iter().map(Into::into).collect();
        ids.sort_unstable();
        ids.dedup();
        ElementSet { ids }
    }

    /// Wraps a vector already sorted ascending and duplicate-free.
    pub(crate) fn from_sorted_unchecked(ids: Vec<ElementId>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        ElementSet { ids }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    /// Inserts an element; returns `true` if it was not already present.
    pub fn insert(&mut self, id: ElementId) -> bool {
        match self.ids.binary_search(&id) {
            Ok(_) => false,
            Err(pos) => {
                self.ids.insert(pos, id);
                true
            }
        }
    }

    /// Removes an element; returns `true` if it was present.
    pub fn remove(&mut self, id: ElementId) -> bool {
        match self.ids.binary_search(&id) {
            Ok(pos) => {
                self.ids.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// Appends an id strictly larger than every current member.
    ///
    /// Used by greedy scans that visit ids in ascending order; pairs with
    /// [`ElementSet::pop_largest`] for push/query/pop probing.
    pub(crate) fn push_largest(&mut self, id: ElementId) {
        debug_assert!(self.ids.last().is_none_or(|&last| last < id));
        self.ids.push(id);
    }

    pub(crate) fn pop_largest(&mut self) -> Option<ElementId> {
        self.ids.pop()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.ids.iter().copied()
    }

    pub fn as_slice(&self) -> &[ElementId] {
        &self.ids
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.ids.iter().peekable(), other.ids.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x < y {
                        out.push(x);
                        a.next();
                    } else if y < x {
                        out.push(y);
                        b.next();
                    } else {
                        out.push(x);
                        a.next();
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    out.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    out.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        ElementSet { ids: out }
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            ids: self
                .ids
                .iter()
                .copied()
                .filter(|id| !other.contains(*id))
                .collect(),
        }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            ids: self
                .ids
                .iter()
                .copied()
                .filter(|id| other.contains(*id))
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.ids.iter().all(|&id| other.contains(id))
    }

    /// Largest id in the set, if non-empty.
    pub fn max_id(&self) -> Option<ElementId> {
        self.ids.last().copied()
    }

    /// All ids are below `n`.
    pub fn in_range(&self, n: usize) -> bool {
        self.max_id().is_none_or(|id| id.index() < n)
    }
}

impl From<Vec<u32>> for ElementSet {
    fn from(ids: Vec<u32>) -> Self {
        ElementSet::from_ids(ids)
    }
}

impl From<ElementSet> for Vec<u32> {
    fn from(set: ElementSet) -> Self {
        set.ids.into_iter().map(|id| id.0).collect()
    }
}

impl FromIterator<ElementId> for ElementSet {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        ElementSet::from_ids(iter)
    }
}

impl FromIterator<u32> for ElementSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        ElementSet::from_ids(iter)
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = ElementId;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, ElementId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.ids.iter().copied()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.ids.iter().map(|id| id.0)).finish()
    }
}
